#include "fcl/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace fcl {

using nlohmann::json;

namespace {

// ---- shared pieces ---------------------------------------------------------

Degree parse_cell(const json& cell, const std::string& where) {
  if (cell.is_string()) {
    try {
      return Degree::parse(cell.get<std::string>());
    } catch (const std::exception& e) {
      throw std::runtime_error(where + ": " + e.what());
    }
  }
  if (cell.is_number_integer()) {
    auto v = cell.get<std::int64_t>();
    if (v == 0) return Degree::zero();
    if (v == 1) return Degree::one();
    throw std::runtime_error(where + ": integer cell " + std::to_string(v) +
                             " is outside [0,1]");
  }
  if (cell.is_number())
    throw std::runtime_error(where + ": non-integral numeric cell " + cell.dump() +
                             " would pass through binary floating point; write the "
                             "degree as a string, e.g. \"3/10\" or \"0.3\"");
  throw std::runtime_error(where + ": cell must be a degree string or 0/1, got " +
                           cell.dump());
}

std::vector<std::string> parse_names(const json& j, const std::string& key) {
  if (!j.contains(key) || !j.at(key).is_array())
    throw std::runtime_error("context needs an array \"" + key + "\"");
  std::vector<std::string> out;
  for (const json& item : j.at(key)) {
    if (!item.is_string())
      throw std::runtime_error("\"" + key + "\" entries must be names, got " + item.dump());
    out.push_back(item.get<std::string>());
  }
  return out;
}

std::vector<std::vector<Degree>> parse_rows(const json& rows, const std::string& what) {
  if (!rows.is_array()) throw std::runtime_error(what + " must be an array of rows");
  std::vector<std::vector<Degree>> out;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const json& row = rows[r];
    if (!row.is_array())
      throw std::runtime_error(what + " row " + std::to_string(r + 1) + " is not an array");
    std::vector<Degree> cells;
    for (std::size_t c = 0; c < row.size(); ++c)
      cells.push_back(parse_cell(row[c], what + " row " + std::to_string(r + 1) +
                                             ", column " + std::to_string(c + 1)));
    out.push_back(std::move(cells));
  }
  return out;
}

void check_keys(const json& j, std::initializer_list<const char*> allowed) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* k : allowed) ok = ok || it.key() == k;
    if (!ok) throw std::runtime_error("unknown key \"" + it.key() + "\" in context file");
  }
}

AnyContext context_from_json(const json& j) {
  if (!j.is_object()) throw std::runtime_error("context file must be a JSON object");
  check_keys(j, {"objects", "attributes", "incidence", "relations", "valuation"});
  auto objects = parse_names(j, "objects");
  auto attributes = parse_names(j, "attributes");
  bool plain = j.contains("incidence"), multi = j.contains("relations");
  if (plain == multi)
    throw std::runtime_error(
        "context needs exactly one of \"incidence\" (single relation) or "
        "\"relations\" (named relations)");
  try {
    if (plain)
      return FuzzyContext(objects, attributes, parse_rows(j.at("incidence"), "incidence"));
    MultiContext mc(objects, attributes);
    if (!j.at("relations").is_object())
      throw std::runtime_error("\"relations\" must map names to row arrays");
    for (auto it = j.at("relations").begin(); it != j.at("relations").end(); ++it)
      mc.add_relation(it.key(), parse_rows(it.value(), "relation \"" + it.key() + "\""));
    return mc;
  } catch (const std::invalid_argument& e) {  // shape/name errors from the constructors
    throw std::runtime_error(e.what());
  }
}

template <class Ctx>
std::map<std::string, CrispSet> parse_valuation_side(const json& side, Sort s, const Ctx& ctx) {
  std::map<std::string, CrispSet> out;
  if (!side.is_object())
    throw std::runtime_error(std::string("valuation \"") + sort_name(s) +
                             "\" must map atoms to member-name arrays");
  for (auto it = side.begin(); it != side.end(); ++it) {
    CrispSet set(s, ctx.universe_size(s));
    if (!it.value().is_array())
      throw std::runtime_error("valuation of \"" + it.key() + "\" must be a name array");
    for (const json& member : it.value()) {
      if (!member.is_string())
        throw std::runtime_error("valuation of \"" + it.key() + "\" lists a non-name: " +
                                 member.dump());
      const auto& names = ctx.names(s);
      auto pos = std::find(names.begin(), names.end(), member.get<std::string>());
      if (pos == names.end())
        throw std::runtime_error("valuation of \"" + it.key() + "\" names unknown " +
                                 sort_name(s) + " \"" + member.get<std::string>() + "\"");
      set.add(static_cast<std::size_t>(pos - names.begin()));
    }
    out.emplace(it.key(), std::move(set));
  }
  return out;
}

template <class Ctx, class Mdl>
Mdl attach_valuation(Ctx ctx, const json& j) {
  Mdl m{std::move(ctx), {}, {}};
  if (!j.contains("valuation")) return m;
  const json& v = j.at("valuation");
  if (!v.is_object())
    throw std::runtime_error("\"valuation\" must be an object with sort blocks");
  for (auto it = v.begin(); it != v.end(); ++it)
    if (it.key() != "object" && it.key() != "property")
      throw std::runtime_error("unknown valuation block \"" + it.key() +
                               "\" (expected \"object\" or \"property\")");
  if (v.contains("object"))
    m.v_obj = parse_valuation_side(v.at("object"), Sort::object, m.ctx);
  if (v.contains("property"))
    m.v_prop = parse_valuation_side(v.at("property"), Sort::property, m.ctx);
  return m;
}

json rows_json(const FuzzyContext& ctx) {
  json rows = json::array();
  for (std::size_t g = 0; g < ctx.n_objects(); ++g) {
    json row = json::array();
    for (std::size_t m = 0; m < ctx.n_attributes(); ++m) row.push_back(ctx.at(g, m).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

json context_json(const FuzzyContext& ctx) {
  json j;
  j["objects"] = ctx.names(Sort::object);
  j["attributes"] = ctx.names(Sort::property);
  j["incidence"] = rows_json(ctx);
  return j;
}

json context_json(const MultiContext& ctx) {
  json j;
  j["objects"] = ctx.names(Sort::object);
  j["attributes"] = ctx.names(Sort::property);
  json rels = json::object();
  for (const std::string& name : ctx.relation_names())
    rels[name] = rows_json(ctx.derived(IndexTerm::prim(name)));
  j["relations"] = std::move(rels);
  return j;
}

template <class Ctx>
json valuation_json(const Ctx& ctx, const std::map<std::string, CrispSet>& side, Sort s) {
  json block = json::object();
  for (const auto& [atom, set] : side) {
    json members = json::array();
    for (std::size_t i = 0; i < set.universe_size(); ++i)
      if (set.contains(i)) members.push_back(ctx.names(s)[i]);
    block[atom] = std::move(members);
  }
  return block;
}

template <class Mdl>
json model_json(const Mdl& m) {
  json j = context_json(m.ctx);
  json v = json::object();
  v["object"] = valuation_json(m.ctx, m.v_obj, Sort::object);
  v["property"] = valuation_json(m.ctx, m.v_prop, Sort::property);
  j["valuation"] = std::move(v);
  return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// ---- CSV -------------------------------------------------------------------

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  return s.substr(a, s.find_last_not_of(" \t\r") - a + 1);
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t comma = line.find(',', start);
    out.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string::npos) return out;
    start = comma + 1;
  }
}

FuzzyContext csv_context(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> attributes;
  std::vector<std::string> objects;
  std::vector<std::vector<Degree>> rows;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    auto cells = split_csv_line(line);
    if (attributes.empty()) {
      if (!cells[0].empty())
        throw std::runtime_error("csv line 1: header must start with an empty cell "
                                 "(the object-name column has no heading)");
      attributes.assign(cells.begin() + 1, cells.end());
      if (attributes.empty()) throw std::runtime_error("csv line 1: no attribute names");
      continue;
    }
    if (cells.size() != attributes.size() + 1)
      throw std::runtime_error("csv line " + std::to_string(lineno) + ": expected " +
                               std::to_string(attributes.size() + 1) + " cells, found " +
                               std::to_string(cells.size()));
    objects.push_back(cells[0]);
    std::vector<Degree> row;
    for (std::size_t c = 1; c < cells.size(); ++c) {
      try {
        row.push_back(Degree::parse(cells[c]));
      } catch (const std::exception& e) {
        throw std::runtime_error("csv line " + std::to_string(lineno) + ", cell " +
                                 std::to_string(c + 1) + ": " + e.what());
      }
    }
    rows.push_back(std::move(row));
  }
  if (attributes.empty()) throw std::runtime_error("csv input is empty");
  try {
    return FuzzyContext(std::move(objects), std::move(attributes), std::move(rows));
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(e.what());
  }
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(std::string("invalid JSON: ") + e.what());
  }
}

bool looks_like_json(const std::string& text) {
  std::size_t i = text.find_first_not_of(" \t\r\n");
  return i != std::string::npos && text[i] == '{';
}

}  // namespace

// ---- public API ------------------------------------------------------------

AnyContext parse_context(const std::string& text) {
  if (looks_like_json(text)) return context_from_json(parse_json(text));
  return csv_context(text);
}

AnyModel parse_model(const std::string& text) {
  if (!looks_like_json(text))
    throw std::runtime_error("model files are JSON (CSV carries no valuation)");
  json j = parse_json(text);
  AnyContext ctx = context_from_json(j);
  if (auto* plain = std::get_if<FuzzyContext>(&ctx))
    return attach_valuation<FuzzyContext, Model>(std::move(*plain), j);
  return attach_valuation<MultiContext, MultiModel>(std::move(std::get<MultiContext>(ctx)), j);
}

AnyContext load_context(const std::string& path) { return parse_context(read_file(path)); }
AnyModel load_model(const std::string& path) { return parse_model(read_file(path)); }

std::string to_json(const AnyContext& ctx) {
  return dump(std::visit([](const auto& c) { return context_json(c); }, ctx));
}

std::string to_json(const AnyModel& m) {
  return dump(std::visit([](const auto& mm) { return model_json(mm); }, m));
}

std::string to_csv(const FuzzyContext& ctx) {
  std::string out;
  for (const std::string& m : ctx.names(Sort::property)) out += "," + m;
  out += "\n";
  for (std::size_t g = 0; g < ctx.n_objects(); ++g) {
    out += ctx.names(Sort::object)[g];
    for (std::size_t m = 0; m < ctx.n_attributes(); ++m) out += "," + ctx.at(g, m).str();
    out += "\n";
  }
  return out;
}

std::string lattice_dot(const ConceptLattice& lat, const FuzzyContext& ctx) {
  auto set_label = [&](const CrispSet& s, Sort sort) {
    std::string out = "{";
    bool first = true;
    for (std::size_t i = 0; i < s.universe_size(); ++i)
      if (s.contains(i)) {
        if (!first) out += ", ";
        out += ctx.names(sort)[i];
        first = false;
      }
    return out + "}";
  };
  std::ostringstream out;
  out << "digraph lattice {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < lat.size(); ++i)
    out << "  c" << i << " [label=\"" << set_label(lat.concepts[i].extent, Sort::object)
        << "\\n" << set_label(lat.concepts[i].intent, Sort::property) << "\"];\n";
  // cover edges: i < j with nothing strictly between
  for (std::size_t i = 0; i < lat.size(); ++i)
    for (std::size_t j = 0; j < lat.size(); ++j) {
      if (i == j || !lat.leq[i][j]) continue;
      bool cover = true;
      for (std::size_t k = 0; k < lat.size() && cover; ++k)
        cover = k == i || k == j || !(lat.leq[i][k] && lat.leq[k][j]);
      if (cover) out << "  c" << i << " -> c" << j << ";\n";
    }
  out << "}\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << text;
}

}  // namespace fcl
