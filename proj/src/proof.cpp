#include "fcl/proof.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "fcl/multirel.hpp"

namespace fcl {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

[[noreturn]] void bad_line(std::size_t lineno, const std::string& msg) {
  throw std::runtime_error("proof script line " + std::to_string(lineno) + ": " + msg);
}

// Weight syntax in axiom bindings: a plain degree, optionally followed by `+`.
// The `+` is only meaningful where the mark itself is a schema parameter.
std::pair<Degree, bool> parse_weight(const std::string& text, std::size_t lineno) {
  std::string t = trim(text);
  bool strict = false;
  if (!t.empty() && t.back() == '+') {
    strict = true;
    t = trim(t.substr(0, t.size() - 1));
  }
  try {
    return {Degree::parse(t), strict};
  } catch (const std::exception& e) {
    bad_line(lineno, std::string("bad weight '") + trim(text) + "': " + e.what());
  }
}

std::size_t parse_ref(const std::string& tok, std::size_t lineno) {
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(tok, &pos);
  } catch (const std::exception&) {
    bad_line(lineno, "expected a step number, found '" + tok + "'");
  }
  if (pos != tok.size() || v == 0)
    bad_line(lineno, "expected a step number, found '" + tok + "'");
  return static_cast<std::size_t>(v);
}

// Binding keys recognized after `ax <NAME>`.  Values run to the next key or
// the end of the line; none of the value languages (weights, index terms,
// formulas) contains `=`, so a boundary-preceded `key=` cannot occur inside
// a value.
struct KeyHit {
  std::size_t pos;     // offset of the key name
  std::size_t vstart;  // offset just past the '='
  std::string key;
};

std::vector<KeyHit> scan_bindings(const std::string& rest, std::size_t lineno) {
  static const char* kKeys[] = {"c", "d", "i", "j", "idx", "phi", "psi"};
  std::vector<KeyHit> hits;
  for (const char* key : kKeys) {
    const std::string pat = std::string(key) + "=";
    std::size_t from = 0;
    while (true) {
      std::size_t p = rest.find(pat, from);
      if (p == std::string::npos) break;
      from = p + 1;
      if (p > 0 && !std::isspace(static_cast<unsigned char>(rest[p - 1]))) continue;
      hits.push_back({p, p + pat.size(), key});
    }
  }
  std::sort(hits.begin(), hits.end(),
            [](const KeyHit& a, const KeyHit& b) { return a.pos < b.pos; });
  for (std::size_t k = 1; k < hits.size(); ++k)
    if (hits[k].key == hits[k - 1].key)
      bad_line(lineno, "duplicate binding '" + hits[k].key + "='");
  return hits;
}

Justification parse_just(const std::string& text, SymbolTable& symbols, std::size_t lineno) {
  const std::string t = trim(text);
  if (t.empty()) bad_line(lineno, "missing justification after ';'");
  std::istringstream in(t);
  std::string kw;
  in >> kw;

  Justification j;
  if (kw == "premise" || kw == "taut") {
    std::string extra;
    if (in >> extra) bad_line(lineno, "unexpected text after '" + kw + "'");
    j.kind = kw == "premise" ? Justification::Kind::premise : Justification::Kind::taut;
    return j;
  }
  if (kw == "mp" || kw == "ug-nec" || kw == "ug-suff") {
    std::vector<std::string> refs;
    std::string tok;
    while (in >> tok) refs.push_back(tok);
    const std::size_t want = kw == "mp" ? 2 : 1;
    if (refs.size() != want)
      bad_line(lineno, "'" + kw + "' cites " + std::to_string(want) +
                           (want == 1 ? " step" : " steps"));
    j.kind = kw == "mp"       ? Justification::Kind::mp
             : kw == "ug-nec" ? Justification::Kind::ug_nec
                              : Justification::Kind::ug_suff;
    j.ref1 = parse_ref(refs[0], lineno);
    if (want == 2) j.ref2 = parse_ref(refs[1], lineno);
    return j;
  }
  if (kw == "eq") {
    j.kind = Justification::Kind::eq;
    std::string rest = trim(t.substr(2));
    std::size_t eqpos = rest.find('=');
    if (eqpos == std::string::npos)
      bad_line(lineno, "'eq' expects two index terms separated by '='");
    try {
      j.eq_lhs = parse_index_term(trim(rest.substr(0, eqpos)));
      j.eq_rhs = parse_index_term(trim(rest.substr(eqpos + 1)));
    } catch (const ParseError& e) {
      bad_line(lineno, std::string("index term: ") + e.what());
    }
    return j;
  }
  if (kw == "ax") {
    j.kind = Justification::Kind::axiom;
    std::string name;
    if (!(in >> name)) bad_line(lineno, "'ax' needs a schema name");
    auto id = axiom_by_name(name);
    if (!id) bad_line(lineno, "unknown axiom schema '" + name + "'");
    j.axiom = *id;
    const bool def_schema = j.axiom == AxiomId::def_u || j.axiom == AxiomId::def_i ||
                            j.axiom == AxiomId::def_c;

    std::string rest;
    std::getline(in, rest);
    auto hits = scan_bindings(rest, lineno);
    const std::size_t lead_end = hits.empty() ? rest.size() : hits.front().pos;
    if (!trim(rest.substr(0, lead_end)).empty())
      bad_line(lineno, "unrecognized text before the first binding: '" +
                           trim(rest.substr(0, lead_end)) + "'");
    for (std::size_t k = 0; k < hits.size(); ++k) {
      const std::size_t vend = k + 1 < hits.size() ? hits[k + 1].pos : rest.size();
      const std::string value = trim(rest.substr(hits[k].vstart, vend - hits[k].vstart));
      if (value.empty()) bad_line(lineno, "empty value for '" + hits[k].key + "='");
      const std::string& key = hits[k].key;
      try {
        if (key == "c") {
          auto [deg, strict] = parse_weight(value, lineno);
          if (strict && !def_schema)
            bad_line(lineno, "strictness of '" + name +
                                 "' is part of the schema name; drop the '+'");
          j.args.c = deg;
          j.args.strict_mark = strict;
        } else if (key == "d") {
          auto [deg, strict] = parse_weight(value, lineno);
          if (strict) bad_line(lineno, "the weakening bound 'd' takes a plain weight");
          j.args.d = deg;
        } else if (key == "i") {
          j.args.i = parse_index_term(value);
        } else if (key == "j") {
          j.args.j = parse_index_term(value);
        } else if (key == "idx") {
          j.args.index = parse_index_term(value);
        } else if (key == "phi") {
          j.args.phi = parse_formula(value, symbols);
        } else {  // psi
          j.args.psi = parse_formula(value, symbols);
        }
      } catch (const ParseError& e) {
        bad_line(lineno, "in '" + key + "=" + value + "': " + e.what());
      }
    }
    return j;
  }
  bad_line(lineno, "unknown justification '" + kw + "'");
}

}  // namespace

ProofScript parse_proof_script(const std::string& text) {
  ProofScript script;
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;

    // sort-declaration headers
    if (line.rfind("obj", 0) == 0 || line.rfind("prop", 0) == 0) {
      const bool is_obj = line[0] == 'o';
      const std::size_t kwlen = is_obj ? 3 : 4;
      if (line.size() == kwlen || std::isspace(static_cast<unsigned char>(line[kwlen]))) {
        auto names = split_ws(line.substr(kwlen));
        if (names.empty()) bad_line(lineno, "expected at least one atom name");
        for (const auto& n : names) {
          try {
            script.symbols.declare(n, is_obj ? Sort::object : Sort::property);
          } catch (const std::invalid_argument& e) {
            bad_line(lineno, e.what());
          }
        }
        continue;
      }
    }

    // numbered step: `<n>. <formula> ; <justification>`
    std::size_t p = 0;
    while (p < line.size() && std::isdigit(static_cast<unsigned char>(line[p]))) ++p;
    if (p == 0 || p >= line.size() || line[p] != '.')
      bad_line(lineno, "expected 'obj', 'prop', or a numbered step");
    const std::size_t step = std::stoul(line.substr(0, p));
    if (step != script.lines.size() + 1)
      bad_line(lineno, "expected step " + std::to_string(script.lines.size() + 1) +
                           ", found " + std::to_string(step));
    const std::size_t semi = line.find(';', p + 1);
    if (semi == std::string::npos)
      bad_line(lineno, "missing ';' between formula and justification");

    ProofLine pl;
    pl.text = line;
    const std::string ftext = trim(line.substr(p + 1, semi - p - 1));
    if (ftext.empty()) bad_line(lineno, "missing formula before ';'");
    try {
      pl.formula = parse_formula(ftext, script.symbols);
    } catch (const ParseError& e) {
      bad_line(lineno, std::string("formula: ") + e.what());
    }
    pl.just = parse_just(line.substr(semi + 1), script.symbols, lineno);
    script.lines.push_back(std::move(pl));
  }
  return script;
}

std::string render_proof_script(const ProofScript& script) {
  std::string obj_names, prop_names;
  for (const auto& [name, sort] : script.symbols.sorts)
    (sort == Sort::object ? obj_names : prop_names) += " " + name;
  std::string out;
  if (!obj_names.empty()) out += "obj" + obj_names + "\n";
  if (!prop_names.empty()) out += "prop" + prop_names + "\n";
  for (const ProofLine& line : script.lines) out += line.text + "\n";
  return out;
}

namespace {

// Our canonical AST represents A -> B as !(A & !B); every negated
// conjunction therefore decomposes as an implication in exactly one way
// (the double-negation-cancelling constructor recovers B from !B).
std::optional<std::pair<Fptr, Fptr>> match_implication(const Fptr& f) {
  if (f->node != Formula::Node::neg) return std::nullopt;
  const Fptr& inner = f->left;
  if (inner->node != Formula::Node::conj) return std::nullopt;
  return std::make_pair(inner->left, neg(inner->right));
}

// A <-> B is the conjunction of the two implications.
std::optional<std::pair<Fptr, Fptr>> match_iff(const Fptr& f) {
  if (f->node != Formula::Node::conj) return std::nullopt;
  auto fwd = match_implication(f->left);
  auto bwd = match_implication(f->right);
  if (!fwd || !bwd) return std::nullopt;
  if (!formula_equal(fwd->first, bwd->second) || !formula_equal(fwd->second, bwd->first))
    return std::nullopt;
  return std::make_pair(fwd->first, fwd->second);
}

/* Propositional-tautology test with modal subformulas treated as opaque
 * units: the component set is the maximal non-(neg/conj) subformulas, and the
 * formula must evaluate true under every boolean assignment to them.
 */
constexpr std::size_t kMaxComponents = 16;

bool propositional_tautology(const Fptr& f, std::string& why) {
  std::vector<Fptr> components;
  std::unordered_map<const Formula*, std::size_t> slot;

  auto collect = [&](auto&& self, const Fptr& g) -> void {
    if (g->node == Formula::Node::neg) {
      self(self, g->left);
      return;
    }
    if (g->node == Formula::Node::conj) {
      self(self, g->left);
      self(self, g->right);
      return;
    }
    if (slot.count(g.get())) return;
    std::size_t idx = components.size();
    for (std::size_t k = 0; k < components.size(); ++k)
      if (formula_equal(components[k], g)) {
        idx = k;
        break;
      }
    if (idx == components.size()) components.push_back(g);
    slot[g.get()] = idx;
  };
  collect(collect, f);

  if (components.size() > kMaxComponents) {
    why = "tautology check supports at most " + std::to_string(kMaxComponents) +
          " distinct components, found " + std::to_string(components.size());
    return false;
  }

  auto eval = [&](auto&& self, const Fptr& g, unsigned mask) -> bool {
    switch (g->node) {
      case Formula::Node::neg:
        return !self(self, g->left, mask);
      case Formula::Node::conj:
        return self(self, g->left, mask) && self(self, g->right, mask);
      default:
        return (mask >> slot.at(g.get())) & 1u;
    }
  };
  const unsigned long total = 1ul << components.size();
  for (unsigned long mask = 0; mask < total; ++mask) {
    if (!eval(eval, f, static_cast<unsigned>(mask))) {
      why = "not a propositional tautology over its modal-atomic components";
      return false;
    }
  }
  return true;
}

bool in_language(System s, const Fptr& f, std::string& why) {
  if (s != System::bml && uses_index(f)) {
    why = std::string("indexed modalities are not part of ") + system_name(s);
    return false;
  }
  if (s == System::wkb && uses_suff(f)) {
    why = "sufficiency modalities are outside the language of 2WKB";
    return false;
  }
  if (s == System::wkf && uses_nec(f)) {
    why = "necessity modalities are outside the language of 2WKF";
    return false;
  }
  return true;
}

}  // namespace

ProofVerdict check_proof(const ProofScript& script, System system) {
  ProofVerdict v;
  if (script.lines.empty()) {
    v.reason = "script has no steps";
    return v;
  }
  std::vector<char> dep(script.lines.size(), 0);  // line depends on premises
  bool used_global = false;

  for (std::size_t idx = 0; idx < script.lines.size(); ++idx) {
    const ProofLine& ln = script.lines[idx];
    const std::size_t step = idx + 1;
    auto fail = [&](std::string reason) {
      v.accepted = false;
      v.failed_line = step;
      v.reason = std::move(reason);
      return v;
    };
    auto cited = [&](std::size_t r) { return r >= 1 && r < step; };

    std::string why;
    if (!in_language(system, ln.formula, why)) return fail(why);

    switch (ln.just.kind) {
      case Justification::Kind::premise:
        v.premise_lines.push_back(step);
        dep[idx] = 1;
        break;

      case Justification::Kind::axiom: {
        if (!system_has_axiom(system, ln.just.axiom))
          return fail(std::string(axiom_name(ln.just.axiom)) + " is not an axiom of " +
                      system_name(system));
        Fptr inst;
        try {
          inst = instantiate_axiom(ln.just.axiom, ln.just.args);
        } catch (const std::invalid_argument& e) {
          return fail(e.what());
        }
        if (!formula_equal(inst, ln.formula))
          return fail("stated bindings do not produce this line's formula");
        break;
      }

      case Justification::Kind::taut:
        if (!propositional_tautology(ln.formula, why)) return fail(why);
        break;

      case Justification::Kind::mp: {
        if (!cited(ln.just.ref1) || !cited(ln.just.ref2))
          return fail("cited steps must precede this line");
        bool ok = false;
        for (auto [major, minor] : {std::pair{ln.just.ref1, ln.just.ref2},
                                    std::pair{ln.just.ref2, ln.just.ref1}}) {
          auto imp = match_implication(script.lines[major - 1].formula);
          if (imp && formula_equal(imp->first, script.lines[minor - 1].formula) &&
              formula_equal(imp->second, ln.formula)) {
            ok = true;
            dep[idx] = dep[major - 1] || dep[minor - 1];
            break;
          }
        }
        if (!ok) return fail("modus ponens does not apply to the cited lines");
        break;
      }

      case Justification::Kind::ug_nec: {
        if (!system_has_rule(system, RuleId::ug_nec))
          return fail(std::string("rule ug-nec is not part of ") + system_name(system));
        if (!cited(ln.just.ref1)) return fail("cited step must precede this line");
        if (ln.formula->node != Formula::Node::nec || ln.formula->mark.strict ||
            !ln.formula->mark.degree.is_one())
          return fail("ug-nec derives a weight-1 necessity modality");
        if (!formula_equal(ln.formula->left, script.lines[ln.just.ref1 - 1].formula))
          return fail("cited line is not the argument of this modality");
        if (dep[ln.just.ref1 - 1]) used_global = true;
        dep[idx] = dep[ln.just.ref1 - 1];
        break;
      }

      case Justification::Kind::ug_suff: {
        if (!system_has_rule(system, RuleId::ug_suff))
          return fail(std::string("rule ug-suff is not part of ") + system_name(system));
        if (!cited(ln.just.ref1)) return fail("cited step must precede this line");
        if (ln.formula->node != Formula::Node::suff || ln.formula->mark.strict ||
            !ln.formula->mark.degree.is_one())
          return fail("ug-suff derives a weight-1 sufficiency modality");
        if (!formula_equal(script.lines[ln.just.ref1 - 1].formula, neg(ln.formula->left)))
          return fail("cited line must be the negation of this modality's argument");
        if (dep[ln.just.ref1 - 1]) used_global = true;
        dep[idx] = dep[ln.just.ref1 - 1];
        break;
      }

      case Justification::Kind::eq: {
        if (!system_has_rule(system, RuleId::eq))
          return fail(std::string("the index-equality rule is not part of ") +
                      system_name(system));
        auto sides = match_iff(ln.formula);
        if (!sides) return fail("an eq line must be a biconditional of two modalities");
        const Fptr& a = sides->first;
        const Fptr& b = sides->second;
        if (a->node != b->node ||
            (a->node != Formula::Node::nec && a->node != Formula::Node::suff))
          return fail("eq relates two modalities of the same kind");
        if (!(a->mark == b->mark)) return fail("eq requires identical weight marks");
        if (!formula_equal(a->left, b->left))
          return fail("eq requires identical modality arguments");
        if (!a->index || !b->index) return fail("eq applies to indexed modalities only");
        if (!iterm_equal(a->index, ln.just.eq_lhs) || !iterm_equal(b->index, ln.just.eq_rhs))
          return fail("stated index terms do not match the line");
        if (!za_equal(ln.just.eq_lhs, ln.just.eq_rhs))
          return fail("index terms are not equal in the index algebra");
        break;
      }
    }
  }

  v.accepted = true;
  v.failed_line = 0;
  v.kind = used_global ? ConsequenceKind::global : ConsequenceKind::local;
  v.conclusion = script.lines.back().formula;
  return v;
}

ProofVerdict check_proof(const ProofScript& script, const std::vector<Fptr>& premises,
                         System system) {
  ProofVerdict v = check_proof(script, system);
  if (!v.accepted) return v;
  if (v.premise_lines.size() != premises.size()) {
    v.accepted = false;
    v.failed_line = 0;
    v.reason = "script uses " + std::to_string(v.premise_lines.size()) +
               " premise line(s) but " + std::to_string(premises.size()) + " were supplied";
    return v;
  }
  for (std::size_t k = 0; k < premises.size(); ++k) {
    const std::size_t step = v.premise_lines[k];
    if (!formula_equal(script.lines[step - 1].formula, premises[k])) {
      v.accepted = false;
      v.failed_line = step;
      v.reason = "premise line does not match the supplied premise list";
      return v;
    }
  }
  return v;
}

namespace {

std::string render_just(const Justification& j) {
  switch (j.kind) {
    case Justification::Kind::premise:
      return "premise";
    case Justification::Kind::taut:
      return "taut";
    case Justification::Kind::mp:
      return "mp " + std::to_string(j.ref1) + " " + std::to_string(j.ref2);
    case Justification::Kind::ug_nec:
      return "ug-nec " + std::to_string(j.ref1);
    case Justification::Kind::ug_suff:
      return "ug-suff " + std::to_string(j.ref1);
    case Justification::Kind::eq:
      return "eq " + print_index_term(j.eq_lhs) + " = " + print_index_term(j.eq_rhs);
    case Justification::Kind::axiom: {
      std::string out = std::string("ax ") + axiom_name(j.axiom);
      if (j.args.c) {
        out += " c=" + j.args.c->str();
        if (j.args.strict_mark) out += "+";
      }
      if (j.args.d) out += " d=" + j.args.d->str();
      if (j.args.i) out += " i=" + print_index_term(j.args.i);
      if (j.args.j) out += " j=" + print_index_term(j.args.j);
      if (j.args.index) out += " idx=" + print_index_term(j.args.index);
      if (j.args.phi) out += " phi=" + print_formula(j.args.phi);
      if (j.args.psi) out += " psi=" + print_formula(j.args.psi);
      return out;
    }
  }
  return "";
}

[[noreturn]] void no_counterpart(const std::string& what) {
  throw std::invalid_argument("translate_proof: " + what +
                              " has no counterpart across the fragment translation");
}

/* Schema-for-schema mapping under the fragment translation.  The K and B
 * pairs swap with the formula binding translated; the bookkeeping schemas
 * swap with the binding additionally negated, because e.g. the image of
 * [[c]]a -> [[d+]]a is [c]!Ta -> [d+]!Ta, a weakening instance at !Ta.
 */
AxiomId map_axiom(AxiomId id, RhoDirection dir, bool& negate_phi) {
  negate_phi = false;
  const bool to_nec = dir == RhoDirection::suff_to_nec;
  switch (id) {
    case AxiomId::k_suff:
      if (to_nec) return AxiomId::k_nec;
      break;
    case AxiomId::k_suff_strict:
      if (to_nec) return AxiomId::k_nec_strict;
      break;
    case AxiomId::b_suff:
      if (to_nec) return AxiomId::b_nec;
      break;
    case AxiomId::b_suff_strict:
      if (to_nec) return AxiomId::b_nec_strict;
      break;
    case AxiomId::bk_ii:
      if (to_nec) {
        negate_phi = true;
        return AxiomId::bk_i;
      }
      break;
    case AxiomId::bk_iv:
      if (to_nec) {
        negate_phi = true;
        return AxiomId::bk_iii;
      }
      break;
    case AxiomId::bk_vi_a:
      if (to_nec) {
        negate_phi = true;
        return AxiomId::bk_v_a;
      }
      break;
    case AxiomId::bk_vi_b:
      if (to_nec) {
        negate_phi = true;
        return AxiomId::bk_v_b;
      }
      break;
    case AxiomId::k_nec:
      if (!to_nec) return AxiomId::k_suff;
      break;
    case AxiomId::k_nec_strict:
      if (!to_nec) return AxiomId::k_suff_strict;
      break;
    case AxiomId::b_nec:
      if (!to_nec) return AxiomId::b_suff;
      break;
    case AxiomId::b_nec_strict:
      if (!to_nec) return AxiomId::b_suff_strict;
      break;
    case AxiomId::bk_i:
      if (!to_nec) {
        negate_phi = true;
        return AxiomId::bk_ii;
      }
      break;
    case AxiomId::bk_iii:
      if (!to_nec) {
        negate_phi = true;
        return AxiomId::bk_iv;
      }
      break;
    case AxiomId::bk_v_a:
      if (!to_nec) {
        negate_phi = true;
        return AxiomId::bk_vi_a;
      }
      break;
    case AxiomId::bk_v_b:
      if (!to_nec) {
        negate_phi = true;
        return AxiomId::bk_vi_b;
      }
      break;
    default:
      break;
  }
  no_counterpart(std::string("axiom ") + axiom_name(id));
}

}  // namespace

ProofScript translate_proof(const ProofScript& script, RhoDirection dir) {
  ProofScript out;
  out.symbols = script.symbols;
  for (std::size_t idx = 0; idx < script.lines.size(); ++idx) {
    const ProofLine& ln = script.lines[idx];
    ProofLine nl;
    nl.formula = translate_rho(ln.formula, dir);
    nl.just = ln.just;
    switch (ln.just.kind) {
      case Justification::Kind::premise:
      case Justification::Kind::taut:
      case Justification::Kind::mp:
        break;
      case Justification::Kind::ug_nec:
        nl.just.kind = Justification::Kind::ug_suff;
        break;
      case Justification::Kind::ug_suff:
        nl.just.kind = Justification::Kind::ug_nec;
        break;
      case Justification::Kind::eq:
        no_counterpart("the index-equality rule");
      case Justification::Kind::axiom: {
        bool negate_phi = false;
        nl.just.axiom = map_axiom(ln.just.axiom, dir, negate_phi);
        if (ln.just.args.index) no_counterpart("an index-threaded schema instance");
        if (ln.just.args.phi) {
          Fptr t = translate_rho(ln.just.args.phi, dir);
          nl.just.args.phi = negate_phi ? neg(std::move(t)) : t;
        }
        if (ln.just.args.psi) nl.just.args.psi = translate_rho(ln.just.args.psi, dir);
        break;
      }
    }
    nl.text = std::to_string(idx + 1) + ". " + print_formula(nl.formula) + " ; " +
              render_just(nl.just);
    out.lines.push_back(std::move(nl));
  }
  return out;
}

}  // namespace fcl
