// Command-line front end.  Every subcommand prints a human-readable summary
// by default or a machine-readable report with --format json, and exits with
//   0  holds / accepted / found / equal / clean
//   1  fails / rejected / exhausted / not equal / counterexample found
//   2  usage, file, or parse problems
// so the tool composes in shell pipelines and CI.

#include <algorithm>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fcl/axioms.hpp"
#include "fcl/concepts.hpp"
#include "fcl/fuzz.hpp"
#include "fcl/io.hpp"
#include "fcl/model.hpp"
#include "fcl/multirel.hpp"
#include "fcl/parser.hpp"
#include "fcl/proof.hpp"
#include "fcl/sat.hpp"

using namespace fcl;
using nlohmann::json;

namespace {

constexpr int kYes = 0, kNo = 1, kUsage = 2;

struct Opts {
  bool as_json = false;
  std::string context_path, model_path, script_path;
  std::string flavor = "formal", cut = "1", sort = "o", world, formula, dir, kind = "local";
  std::string system = "2WML";
  bool dot = false, corrupt = false;
  std::vector<std::string> premises, formulas, obj_atoms, prop_atoms, schemas;
  std::size_t max_g = 2, max_m = 2, trials = 1000, max_domain = 4;
  std::uint64_t seed = 0;
  std::string za_lhs, za_rhs;
};

void emit(const Opts& o, const json& report, const std::string& text) {
  if (o.as_json)
    std::cout << report.dump(2) << "\n";
  else
    std::cout << text;
}

Sort parse_sort(const std::string& s) {
  if (s == "o" || s == "object") return Sort::object;
  if (s == "p" || s == "property") return Sort::property;
  throw std::runtime_error("unknown sort '" + s + "' (use o or p)");
}

// ---- helpers over either model representation ------------------------------

const std::vector<std::string>& world_names(const AnyModel& m, Sort s) {
  return std::visit(
      [&](const auto& mm) -> const std::vector<std::string>& { return mm.ctx.names(s); }, m);
}

std::size_t world_index(const AnyModel& m, Sort s, const std::string& name) {
  const auto& names = world_names(m, s);
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end())
    throw std::runtime_error("unknown " + std::string(sort_name(s)) + " '" + name + "'");
  return static_cast<std::size_t>(it - names.begin());
}

SymbolTable model_symbols(const AnyModel& m) {
  SymbolTable t;
  std::visit(
      [&](const auto& mm) {
        for (const auto& [name, set] : mm.v_obj) t.declare(name, Sort::object);
        for (const auto& [name, set] : mm.v_prop) t.declare(name, Sort::property);
      },
      m);
  return t;
}

// Atoms the model does not value denote the empty set, so a formula like
// [0]_p q can be checked against any model.
void ensure_atoms(AnyModel& m, const Fptr& f) {
  std::map<std::string, Sort> atoms;
  collect_atoms(f, atoms);
  std::visit(
      [&](auto& mm) {
        for (const auto& [name, s] : atoms) {
          auto& table = s == Sort::object ? mm.v_obj : mm.v_prop;
          if (!table.count(name)) table.emplace(name, CrispSet(s, mm.ctx.universe_size(s)));
        }
      },
      m);
}

bool model_satisfies(const AnyModel& m, Sort s, std::size_t w, const Fptr& f) {
  return std::visit([&](const auto& mm) { return satisfies(mm, s, w, f); }, m);
}

std::string set_text(const CrispSet& set, const std::vector<std::string>& names) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < set.universe_size(); ++i)
    if (set.contains(i)) {
      if (!first) out += ", ";
      out += names[i];
      first = false;
    }
  return out + "}";
}

json set_json(const CrispSet& set, const std::vector<std::string>& names) {
  json out = json::array();
  for (std::size_t i = 0; i < set.universe_size(); ++i)
    if (set.contains(i)) out.push_back(names[i]);
  return out;
}

json model_report(const Model& m) { return json::parse(to_json(AnyModel{m})); }

SymbolTable declared_symbols(const Opts& o) {
  SymbolTable t;
  for (const std::string& name : o.obj_atoms) t.declare(name, Sort::object);
  for (const std::string& name : o.prop_atoms) t.declare(name, Sort::property);
  return t;
}

// ---- subcommands -----------------------------------------------------------

int cmd_concepts(const Opts& o) {
  AnyContext any = load_context(o.context_path);
  auto* ctx = std::get_if<FuzzyContext>(&any);
  if (!ctx)
    throw std::runtime_error("concept enumeration works on single-relation contexts; "
                             "pick one relation out of the multi-relational file");
  ConceptFlavor flavor;
  if (o.flavor == "formal") flavor = ConceptFlavor::formal;
  else if (o.flavor == "oo") flavor = ConceptFlavor::object_oriented;
  else if (o.flavor == "po") flavor = ConceptFlavor::property_oriented;
  else throw std::runtime_error("unknown flavor '" + o.flavor + "' (formal, oo, po)");
  ConceptLattice lat = enumerate_concepts(*ctx, flavor, Degree::parse(o.cut));

  if (o.dot) {
    std::cout << lattice_dot(lat, *ctx);
    return kYes;
  }
  const auto& gn = ctx->names(Sort::object);
  const auto& mn = ctx->names(Sort::property);
  json concepts = json::array();
  std::string text = std::to_string(lat.size()) + " " + flavor_name(flavor) +
                     " concept(s) at cut " + Degree::parse(o.cut).str() + "\n";
  for (const CutConcept& cc : lat.concepts) {
    concepts.push_back({{"extent", set_json(cc.extent, gn)}, {"intent", set_json(cc.intent, mn)}});
    text += "  " + set_text(cc.extent, gn) + " / " + set_text(cc.intent, mn) + "\n";
  }
  emit(o, json{{"command", "concepts"},
               {"flavor", flavor_name(flavor)},
               {"cut", Degree::parse(o.cut).str()},
               {"count", lat.size()},
               {"concepts", concepts}},
       text);
  return kYes;
}

int cmd_check(const Opts& o) {
  AnyModel m = load_model(o.model_path);
  Sort s = parse_sort(o.sort);
  SymbolTable t = model_symbols(m);
  Fptr f = parse_formula(o.formula, t, s);
  ensure_atoms(m, f);
  std::size_t w = world_index(m, s, o.world);
  bool holds = model_satisfies(m, s, w, f);
  emit(o, json{{"command", "check"},
               {"formula", print_formula(f)},
               {"sort", sort_name(s)},
               {"world", o.world},
               {"holds", holds}},
       print_formula(f) + (holds ? " holds" : " fails") + " at " + sort_name(s) + " world " +
           o.world + "\n");
  return holds ? kYes : kNo;
}

int cmd_consequence(const Opts& o) {
  AnyModel m = load_model(o.model_path);
  Sort s = parse_sort(o.sort);
  SymbolTable t = model_symbols(m);
  std::vector<Fptr> gamma;
  for (const std::string& p : o.premises) gamma.push_back(parse_formula(p, t, s));
  Fptr conclusion = parse_formula(o.formula, t, s);
  for (const Fptr& f : gamma) ensure_atoms(m, f);
  ensure_atoms(m, conclusion);

  const auto& names = world_names(m, s);
  bool global = o.kind == "global";
  if (!global && o.kind != "local")
    throw std::runtime_error("unknown consequence kind '" + o.kind + "' (local, global)");

  auto all_premises_at = [&](std::size_t w) {
    for (const Fptr& f : gamma)
      if (!model_satisfies(m, s, w, f)) return false;
    return true;
  };

  bool holds = true, vacuous = false;
  std::optional<std::string> counterexample;
  if (global) {
    bool everywhere = true;
    for (std::size_t w = 0; w < names.size(); ++w) everywhere = everywhere && all_premises_at(w);
    if (!everywhere) {
      vacuous = true;  // premises not globally true: nothing to discharge
    } else {
      for (std::size_t w = 0; w < names.size() && holds; ++w)
        if (!model_satisfies(m, s, w, conclusion)) {
          holds = false;
          counterexample = names[w];
        }
    }
  } else {
    for (std::size_t w = 0; w < names.size() && holds; ++w)
      if (all_premises_at(w) && !model_satisfies(m, s, w, conclusion)) {
        holds = false;
        counterexample = names[w];
      }
  }

  json premise_names = json::array();
  for (const Fptr& f : gamma) premise_names.push_back(print_formula(f));
  json report{{"command", "consequence"}, {"kind", o.kind},
              {"premises", premise_names}, {"conclusion", print_formula(conclusion)},
              {"holds", holds}};
  if (vacuous) report["vacuous"] = true;
  if (counterexample) report["counterexample_world"] = *counterexample;

  std::string text = o.kind + " consequence " + (holds ? "holds" : "fails") + " in this model";
  if (vacuous) text += " (vacuously: the premises do not hold at every world)";
  if (counterexample) text += "; counterexample at " + std::string(sort_name(s)) + " world " +
                              *counterexample;
  emit(o, report, text + "\n");
  return holds ? kYes : kNo;
}

int cmd_prove(const Opts& o) {
  ProofScript script = parse_proof_script(read_file(o.script_path));
  auto system = system_by_name(o.system);
  if (!system)
    throw std::runtime_error("unknown system '" + o.system + "' (2WML, 2WKB, 2WKF, 2WBML)");
  ProofVerdict v;
  if (o.premises.empty()) {
    v = check_proof(script, *system);
  } else {
    std::vector<Fptr> given;
    for (const std::string& p : o.premises) given.push_back(parse_formula(p, script.symbols));
    v = check_proof(script, given, *system);
  }

  json report{{"command", "prove"}, {"system", system_name(*system)}, {"accepted", v.accepted}};
  std::string text;
  if (v.accepted) {
    report["kind"] = v.kind == ConsequenceKind::global ? "global" : "local";
    report["premise_lines"] = v.premise_lines;
    report["conclusion"] = print_formula(v.conclusion);
    text = "accepted (" + std::string(v.kind == ConsequenceKind::global ? "global" : "local") +
           " consequence): " + print_formula(v.conclusion) + "\n";
  } else {
    report["failed_line"] = v.failed_line;
    report["reason"] = v.reason;
    text = "rejected at line " + std::to_string(v.failed_line) + ": " + v.reason + "\n";
  }
  emit(o, report, text);
  return v.accepted ? kYes : kNo;
}

int cmd_translate(const Opts& o) {
  RhoDirection dir;
  if (o.dir == "suff2nec") dir = RhoDirection::suff_to_nec;
  else if (o.dir == "nec2suff") dir = RhoDirection::nec_to_suff;
  else throw std::runtime_error("unknown direction '" + o.dir + "' (suff2nec, nec2suff)");
  if (o.formula.empty() == o.script_path.empty())
    throw std::runtime_error("translate needs exactly one of --formula or --script");

  try {
    if (!o.formula.empty()) {
      SymbolTable t = declared_symbols(o);
      Fptr in = parse_formula(o.formula, t);
      Fptr out = translate_rho(in, dir);
      emit(o, json{{"command", "translate"}, {"direction", o.dir},
                   {"input", print_formula(in)}, {"formula", print_formula(out)}},
           print_formula(out) + "\n");
      return kYes;
    }
    ProofScript script = translate_proof(parse_proof_script(read_file(o.script_path)), dir);
    std::string text = render_proof_script(script);
    emit(o, json{{"command", "translate"}, {"direction", o.dir}, {"script", text}}, text);
    return kYes;
  } catch (const std::invalid_argument& e) {
    // the input parsed but lies outside the translatable fragment
    std::cerr << "not translatable: " << e.what() << "\n";
    return kNo;
  }
}

int cmd_sat(const Opts& o) {
  Sort s = parse_sort(o.sort);
  SymbolTable t = declared_symbols(o);
  std::vector<Fptr> gamma;
  for (const std::string& f : o.formulas) gamma.push_back(parse_formula(f, t, s));
  SatResult res = bounded_sat(gamma, s, o.max_g, o.max_m);

  json report{{"command", "sat"}, {"found", res.found},
              {"models_enumerated", res.models_enumerated},
              {"max_g", o.max_g}, {"max_m", o.max_m}};
  if (res.found) {
    AnyModel witness{*res.model};
    report["sort"] = sort_name(s);
    report["world"] = world_names(witness, s)[res.world];
    report["model"] = json::parse(to_json(witness));
    emit(o, report,
         "witness found at " + std::string(sort_name(s)) + " world " +
             world_names(witness, s)[res.world] + " (" + std::to_string(res.models_enumerated) +
             " model(s) enumerated)\n" + to_json(witness));
    return kYes;
  }
  emit(o, report,
       "bounded space exhausted: no witness within " + std::to_string(o.max_g) + "x" +
           std::to_string(o.max_m) + " (" + std::to_string(res.models_enumerated) +
           " model(s) enumerated)\n");
  return kNo;
}

int cmd_fuzz(const Opts& o) {
  FuzzConfig cfg;
  cfg.seed = o.seed;
  cfg.trials = o.trials;
  cfg.max_domain = o.max_domain;
  if (o.corrupt) cfg.mutation = SchemaMutation::drop_con1_guard;
  for (const std::string& name : o.schemas) {
    auto id = axiom_by_name(name);
    if (!id) throw std::runtime_error("unknown schema '" + name + "'");
    if (*id == AxiomId::def_u || *id == AxiomId::def_i || *id == AxiomId::def_c ||
        *id == AxiomId::def_0)
      throw std::runtime_error("schema '" + name +
                               "' needs indexed models; the fuzzer covers the core schemas");
    cfg.schema_filter.insert(*id);
  }

  FuzzReport rep = soundness_fuzz(cfg);
  json cexs = json::array();
  std::string text;
  for (const FuzzCounterexample& cx : rep.counterexamples) {
    json entry{{"schema", cx.schema},
               {"sort", sort_name(cx.world_sort)},
               {"world", cx.model.ctx.names(cx.world_sort)[cx.world]},
               {"instance", print_formula(cx.instance)},
               {"model", model_report(cx.model)}};
    if (cx.args.c) entry["c"] = cx.args.c->str();
    if (cx.args.d) entry["d"] = cx.args.d->str();
    cexs.push_back(entry);
    text += "counterexample for " + cx.schema + " at " + sort_name(cx.world_sort) + " world " +
            cx.model.ctx.names(cx.world_sort)[cx.world] + ":\n  " + print_formula(cx.instance) +
            "\n" + to_json(AnyModel{cx.model});
  }
  json report{{"command", "fuzz"}, {"seed", rep.seed}, {"trials", rep.trials},
              {"instances_checked", rep.instances_checked}, {"clean", rep.clean()},
              {"counterexamples", cexs}};
  if (rep.clean())
    text = "clean: " + std::to_string(rep.instances_checked) + " instance(s) over " +
           std::to_string(rep.trials) + " trial(s), seed " + std::to_string(rep.seed) + "\n";
  emit(o, report, text);
  return rep.clean() ? kYes : kNo;
}

int cmd_za_eq(const Opts& o) {
  ITerm lhs = parse_index_term(o.za_lhs);
  ITerm rhs = parse_index_term(o.za_rhs);
  ZaVerdict v = za_compare(lhs, rhs);
  std::string text = print_index_term(lhs) + " = " + print_index_term(rhs) + ": " +
                     (v.kleene ? "equal" : "not equal") + " in the index algebra\n";
  if (!v.agree())
    text += "note: the four-element De Morgan check disagrees (the equation holds over "
            "chains only)\n";
  emit(o, json{{"command", "za-eq"}, {"lhs", print_index_term(lhs)},
               {"rhs", print_index_term(rhs)}, {"equal", v.kleene},
               {"kleene", v.kleene}, {"de_morgan", v.de_morgan}},
       text);
  return v.kleene ? kYes : kNo;
}

}  // namespace

int main(int argc, char** argv) {
  Opts o;
  CLI::App app{"reasoning tools for fuzzy contexts, cut concepts, and weighted modal logic"};
  app.require_subcommand(1);

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.as_json, "output format")
        ->transform(CLI::CheckedTransformer(std::map<std::string, bool>{{"text", false},
                                                                        {"json", true}}));
  };

  CLI::App* concepts = app.add_subcommand("concepts", "enumerate the cut concept lattice");
  concepts->add_option("--context", o.context_path, "context file (JSON or CSV)")->required();
  concepts->add_option("--flavor", o.flavor, "formal, oo, or po");
  concepts->add_option("--cut", o.cut, "threshold degree");
  concepts->add_flag("--dot", o.dot, "emit the Hasse diagram as DOT instead of a listing");
  add_format(concepts);

  CLI::App* check = app.add_subcommand("check", "evaluate a formula at one world of a model");
  check->add_option("--model", o.model_path, "model file (JSON)")->required();
  check->add_option("--sort", o.sort, "world sort: o or p");
  check->add_option("--world", o.world, "world name")->required();
  check->add_option("--formula", o.formula, "formula over the model's atoms")->required();
  add_format(check);

  CLI::App* consequence =
      app.add_subcommand("consequence", "premises-to-conclusion check over one model");
  consequence->add_option("--model", o.model_path, "model file (JSON)")->required();
  consequence->add_option("--sort", o.sort, "world sort: o or p");
  consequence->add_option("--premise", o.premises, "premise formula (repeatable)");
  consequence->add_option("--formula", o.formula, "conclusion")->required();
  consequence->add_option("--kind", o.kind, "local or global");
  add_format(consequence);

  CLI::App* prove = app.add_subcommand("prove", "check a Hilbert-style proof script");
  prove->add_option("--script", o.script_path, "proof script file")->required();
  prove->add_option("--system", o.system, "2WML, 2WKB, 2WKF, or 2WBML");
  prove->add_option("--premise", o.premises,
                    "formula the script's premise lines must match (repeatable, in order)");
  add_format(prove);

  CLI::App* translate =
      app.add_subcommand("translate", "map formulas or whole proofs across the fragments");
  translate->add_option("--dir", o.dir, "suff2nec or nec2suff")->required();
  translate->add_option("--formula", o.formula, "formula to translate");
  translate->add_option("--script", o.script_path, "proof script to translate line by line");
  translate->add_option("--obj", o.obj_atoms, "object-sorted atom names");
  translate->add_option("--prop", o.prop_atoms, "property-sorted atom names");
  add_format(translate);

  CLI::App* sat = app.add_subcommand("sat", "bounded satisfiability search");
  sat->add_option("--formula", o.formulas, "formula to satisfy jointly (repeatable)");
  sat->add_option("--sort", o.sort, "sort of the world the formulas hold at: o or p");
  sat->add_option("--max-g", o.max_g, "largest object universe to try");
  sat->add_option("--max-m", o.max_m, "largest property universe to try");
  sat->add_option("--obj", o.obj_atoms, "object-sorted atom names");
  sat->add_option("--prop", o.prop_atoms, "property-sorted atom names");
  add_format(sat);

  CLI::App* fuzz = app.add_subcommand("fuzz", "randomized soundness sweep of the axiom schemas");
  fuzz->add_option("--trials", o.trials, "number of random models");
  fuzz->add_option("--seed", o.seed, "RNG seed")->envname("FCL_SEED");
  fuzz->add_option("--max-domain", o.max_domain, "largest universe side");
  fuzz->add_option("--schema", o.schemas, "restrict to named schemas (repeatable)");
  fuzz->add_flag("--corrupt", o.corrupt,
                 "drop the consistency axiom's guard to demonstrate a counterexample");
  add_format(fuzz);

  CLI::App* za = app.add_subcommand("za-eq", "decide equality of two relation index terms");
  za->add_option("lhs", o.za_lhs, "first index term")->required();
  za->add_option("rhs", o.za_rhs, "second index term")->required();
  add_format(za);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;  // --help exits 0; everything else is a usage error
  }

  try {
    if (concepts->parsed()) return cmd_concepts(o);
    if (check->parsed()) return cmd_check(o);
    if (consequence->parsed()) return cmd_consequence(o);
    if (prove->parsed()) return cmd_prove(o);
    if (translate->parsed()) return cmd_translate(o);
    if (sat->parsed()) return cmd_sat(o);
    if (fuzz->parsed()) return cmd_fuzz(o);
    if (za->parsed()) return cmd_za_eq(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
