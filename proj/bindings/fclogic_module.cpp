// Python face of the toolkit.  Thin, string-oriented wrappers over the same
// operations the command-line tool exposes: contexts and models travel as
// JSON (or CSV) text, formulas and index terms in their concrete syntax,
// crisp sets as lists of element names.  Structured results come back as
// plain dicts/lists; parse and sort problems surface as ValueError or
// RuntimeError through the standard exception translation.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fcl/axioms.hpp"
#include "fcl/concepts.hpp"
#include "fcl/fuzz.hpp"
#include "fcl/io.hpp"
#include "fcl/model.hpp"
#include "fcl/multirel.hpp"
#include "fcl/parser.hpp"
#include "fcl/proof.hpp"
#include "fcl/sat.hpp"

namespace py = pybind11;
using namespace fcl;

namespace {

Sort parse_sort_arg(const std::string& s) {
  if (s == "o" || s == "object") return Sort::object;
  if (s == "p" || s == "property") return Sort::property;
  throw std::invalid_argument("unknown sort '" + s + "' (use o or p)");
}

ConceptFlavor parse_flavor(const std::string& name) {
  if (name == "formal") return ConceptFlavor::formal;
  if (name == "oo") return ConceptFlavor::object_oriented;
  if (name == "po") return ConceptFlavor::property_oriented;
  throw std::invalid_argument("unknown flavor '" + name + "' (formal, oo, po)");
}

RhoDirection parse_direction(const std::string& name) {
  if (name == "suff2nec") return RhoDirection::suff_to_nec;
  if (name == "nec2suff") return RhoDirection::nec_to_suff;
  throw std::invalid_argument("unknown direction '" + name + "' (suff2nec, nec2suff)");
}

System parse_system(const std::string& name) {
  auto s = system_by_name(name);
  if (!s) throw std::invalid_argument("unknown system '" + name + "' (2WML, 2WKB, 2WKF, 2WBML)");
  return *s;
}

SymbolTable declared_symbols(const std::vector<std::string>& obj,
                             const std::vector<std::string>& prop) {
  SymbolTable t;
  for (const std::string& name : obj) t.declare(name, Sort::object);
  for (const std::string& name : prop) t.declare(name, Sort::property);
  return t;
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
    throw std::invalid_argument("unknown " + std::string(sort_name(s)) + " '" + name + "'");
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

// Atoms the model does not value denote the empty set, so any formula can be
// checked against any model of the right shape.
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

py::list name_list(const CrispSet& set, const std::vector<std::string>& names) {
  py::list out;
  for (std::size_t i = 0; i < set.universe_size(); ++i)
    if (set.contains(i)) out.append(names[i]);
  return out;
}

// Parses a formula against the model's valuation.  An explicit sort pins the
// formula (and world) sort; otherwise the parser infers it.
Fptr parse_against(AnyModel& m, SymbolTable& t, const std::string& text,
                   const std::string& sort) {
  std::optional<Sort> expected;
  if (!sort.empty()) expected = parse_sort_arg(sort);
  Fptr f = parse_formula(text, t, expected);
  ensure_atoms(m, f);
  return f;
}

// ---- module functions ------------------------------------------------------

py::list concepts_fn(const std::string& context, const std::string& flavor,
                     const std::string& cut) {
  AnyContext any = parse_context(context);
  auto* ctx = std::get_if<FuzzyContext>(&any);
  if (!ctx)
    throw std::invalid_argument("concept enumeration works on single-relation contexts; "
                                "pick one relation out of the multi-relational file");
  ConceptLattice lat = enumerate_concepts(*ctx, parse_flavor(flavor), Degree::parse(cut));
  py::list out;
  for (const CutConcept& cc : lat.concepts) {
    py::dict entry;
    entry["extent"] = name_list(cc.extent, ctx->names(Sort::object));
    entry["intent"] = name_list(cc.intent, ctx->names(Sort::property));
    out.append(entry);
  }
  return out;
}

std::string lattice_dot_fn(const std::string& context, const std::string& flavor,
                           const std::string& cut) {
  AnyContext any = parse_context(context);
  auto* ctx = std::get_if<FuzzyContext>(&any);
  if (!ctx) throw std::invalid_argument("the lattice drawing needs a single-relation context");
  return lattice_dot(enumerate_concepts(*ctx, parse_flavor(flavor), Degree::parse(cut)), *ctx);
}

bool check_fn(const std::string& model, const std::string& formula, const std::string& world,
              const std::string& sort) {
  AnyModel m = parse_model(model);
  SymbolTable t = model_symbols(m);
  Fptr f = parse_against(m, t, formula, sort);
  return model_satisfies(m, f->sort, world_index(m, f->sort, world), f);
}

py::list truth_set_fn(const std::string& model, const std::string& formula,
                      const std::string& sort) {
  AnyModel m = parse_model(model);
  SymbolTable t = model_symbols(m);
  Fptr f = parse_against(m, t, formula, sort);
  return std::visit(
      [&](const auto& mm) { return name_list(truth_set(mm, f), mm.ctx.names(f->sort)); }, m);
}

py::dict consequence_fn(const std::string& model, const std::vector<std::string>& premises,
                        const std::string& conclusion, const std::string& sort,
                        const std::string& kind) {
  AnyModel m = parse_model(model);
  Sort s = parse_sort_arg(sort);
  SymbolTable t = model_symbols(m);
  std::vector<Fptr> gamma;
  for (const std::string& p : premises) gamma.push_back(parse_formula(p, t, s));
  Fptr phi = parse_formula(conclusion, t, s);
  for (const Fptr& f : gamma) ensure_atoms(m, f);
  ensure_atoms(m, phi);

  bool global = kind == "global";
  if (!global && kind != "local")
    throw std::invalid_argument("unknown consequence kind '" + kind + "' (local, global)");

  const auto& names = world_names(m, s);
  auto all_premises_at = [&](std::size_t w) {
    for (const Fptr& f : gamma)
      if (!model_satisfies(m, s, w, f)) return false;
    return true;
  };

  py::dict out;
  out["kind"] = kind;
  bool holds = true;
  if (global) {
    bool everywhere = true;
    for (std::size_t w = 0; w < names.size(); ++w) everywhere = everywhere && all_premises_at(w);
    if (!everywhere) {
      out["vacuous"] = true;  // premises not globally true: nothing to discharge
    } else {
      for (std::size_t w = 0; w < names.size() && holds; ++w)
        if (!model_satisfies(m, s, w, phi)) {
          holds = false;
          out["counterexample_world"] = names[w];
        }
    }
  } else {
    for (std::size_t w = 0; w < names.size() && holds; ++w)
      if (all_premises_at(w) && !model_satisfies(m, s, w, phi)) {
        holds = false;
        out["counterexample_world"] = names[w];
      }
  }
  out["holds"] = holds;
  return out;
}

py::dict prove_fn(const std::string& script, const std::string& system,
                  const std::vector<std::string>& premises) {
  ProofScript parsed = parse_proof_script(script);
  System sys = parse_system(system);
  ProofVerdict v;
  if (premises.empty()) {
    v = check_proof(parsed, sys);
  } else {
    std::vector<Fptr> given;
    for (const std::string& p : premises) given.push_back(parse_formula(p, parsed.symbols));
    v = check_proof(parsed, given, sys);
  }
  py::dict out;
  out["accepted"] = v.accepted;
  out["system"] = system_name(sys);
  if (v.accepted) {
    out["kind"] = v.kind == ConsequenceKind::global ? "global" : "local";
    out["premise_lines"] = v.premise_lines;
    out["conclusion"] = print_formula(v.conclusion);
  } else {
    out["failed_line"] = v.failed_line;
    out["reason"] = v.reason;
  }
  return out;
}

std::string translate_fn(const std::string& formula, const std::string& direction,
                         const std::vector<std::string>& obj,
                         const std::vector<std::string>& prop) {
  SymbolTable t = declared_symbols(obj, prop);
  return print_formula(translate_rho(parse_formula(formula, t), parse_direction(direction)));
}

std::string translate_script_fn(const std::string& script, const std::string& direction) {
  return render_proof_script(
      translate_proof(parse_proof_script(script), parse_direction(direction)));
}

py::object sat_fn(const std::vector<std::string>& formulas, const std::string& sort,
                  std::size_t max_g, std::size_t max_m, const std::vector<std::string>& obj,
                  const std::vector<std::string>& prop) {
  Sort s = parse_sort_arg(sort);
  SymbolTable t = declared_symbols(obj, prop);
  std::vector<Fptr> gamma;
  for (const std::string& f : formulas) gamma.push_back(parse_formula(f, t, s));
  SatResult res = bounded_sat(gamma, s, max_g, max_m);
  if (!res.found) return py::none();
  py::dict out;
  out["sort"] = sort_name(s);
  out["world"] = res.model->ctx.names(s)[res.world];
  out["models_enumerated"] = res.models_enumerated;
  out["model"] = to_json(AnyModel{*res.model});
  return out;
}

py::dict fuzz_fn(std::size_t trials, std::uint64_t seed, std::size_t max_domain,
                 const std::vector<std::string>& schemas, bool corrupt) {
  FuzzConfig cfg;
  cfg.seed = seed;
  cfg.trials = trials;
  cfg.max_domain = max_domain;
  if (corrupt) cfg.mutation = SchemaMutation::drop_con1_guard;
  for (const std::string& name : schemas) {
    auto id = axiom_by_name(name);
    if (!id) throw std::invalid_argument("unknown schema '" + name + "'");
    if (*id == AxiomId::def_u || *id == AxiomId::def_i || *id == AxiomId::def_c ||
        *id == AxiomId::def_0)
      throw std::invalid_argument("schema '" + name +
                                  "' needs indexed models; the fuzzer covers the core schemas");
    cfg.schema_filter.insert(*id);
  }
  FuzzReport rep = soundness_fuzz(cfg);
  py::dict out;
  out["clean"] = rep.clean();
  out["seed"] = rep.seed;
  out["trials"] = rep.trials;
  out["instances_checked"] = rep.instances_checked;
  py::list cexs;
  for (const FuzzCounterexample& cx : rep.counterexamples) {
    py::dict entry;
    entry["schema"] = cx.schema;
    entry["sort"] = sort_name(cx.world_sort);
    entry["world"] = cx.model.ctx.names(cx.world_sort)[cx.world];
    entry["instance"] = print_formula(cx.instance);
    entry["model"] = to_json(AnyModel{cx.model});
    cexs.append(entry);
  }
  out["counterexamples"] = cexs;
  return out;
}

bool za_equal_fn(const std::string& lhs, const std::string& rhs) {
  return za_equal(parse_index_term(lhs), parse_index_term(rhs));
}

py::dict za_compare_fn(const std::string& lhs, const std::string& rhs) {
  ZaVerdict v = za_compare(parse_index_term(lhs), parse_index_term(rhs));
  py::dict out;
  out["equal"] = v.kleene;
  out["kleene"] = v.kleene;
  out["de_morgan"] = v.de_morgan;
  return out;
}

std::string quantize_fn(const std::string& context, const std::vector<std::string>& degrees) {
  AnyContext any = parse_context(context);
  auto* ctx = std::get_if<FuzzyContext>(&any);
  if (!ctx) throw std::invalid_argument("quantization works on single-relation contexts");
  std::set<Degree> dset;
  for (const std::string& s : degrees) dset.insert(Degree::parse(s));
  return to_json(AnyContext{quantize_context(*ctx, dset)});
}

}  // namespace

PYBIND11_MODULE(fclogic, m) {
  m.doc() = "Fuzzy formal contexts, cut concept lattices, and two-sorted weighted modal "
            "logic: concept enumeration, model checking, proof checking, fragment "
            "translation, bounded satisfiability, and soundness fuzzing.";

  m.def("concepts", &concepts_fn, py::arg("context"), py::arg("flavor") = "formal",
        py::arg("cut") = "1",
        "Concept lattice of a context (JSON or CSV text) as extent/intent name lists, "
        "in canonical order.");
  m.def("lattice_dot", &lattice_dot_fn, py::arg("context"), py::arg("flavor") = "formal",
        py::arg("cut") = "1", "Hasse diagram of the concept lattice in DOT syntax.");
  m.def("check", &check_fn, py::arg("model"), py::arg("formula"), py::arg("world"),
        py::arg("sort") = "",
        "Does the formula hold at the named world of this model?  An empty sort lets "
        "the parser infer it.");
  m.def("truth_set", &truth_set_fn, py::arg("model"), py::arg("formula"), py::arg("sort") = "",
        "Names of the worlds where the formula holds.");
  m.def("consequence", &consequence_fn, py::arg("model"), py::arg("premises"),
        py::arg("conclusion"), py::arg("sort") = "o", py::arg("kind") = "local",
        "Local or global semantic consequence within one model; reports a counterexample "
        "world when it fails.");
  m.def("prove", &prove_fn, py::arg("script"), py::arg("system") = "2WML",
        py::arg("premises") = std::vector<std::string>{},
        "Checks a proof script (text, not a path) against the named system; optional "
        "expected premise list.");
  m.def("translate", &translate_fn, py::arg("formula"), py::arg("direction") = "suff2nec",
        py::arg("obj") = std::vector<std::string>{},
        py::arg("prop") = std::vector<std::string>{},
        "Fragment translation of one formula; atom sorts may be pre-declared via obj/prop.");
  m.def("translate_script", &translate_script_fn, py::arg("script"),
        py::arg("direction") = "suff2nec",
        "Fragment translation of a whole proof script; returns the translated script text.");
  m.def("sat", &sat_fn, py::arg("formulas"), py::arg("sort") = "o", py::arg("max_g") = 2,
        py::arg("max_m") = 2, py::arg("obj") = std::vector<std::string>{},
        py::arg("prop") = std::vector<std::string>{},
        "Bounded satisfiability search; a witness dict with the model as JSON text, or "
        "None when the bounded space is exhausted.");
  m.def("fuzz", &fuzz_fn, py::arg("trials") = 1000, py::arg("seed") = 0,
        py::arg("max_domain") = 4, py::arg("schemas") = std::vector<std::string>{},
        py::arg("corrupt") = false,
        "Randomized soundness check of the axiom schemas; corrupt=True plants a known "
        "unsound mutation that the fuzzer must catch.");
  m.def("za_equal", &za_equal_fn, py::arg("lhs"), py::arg("rhs"),
        "Equality of two index terms as derived-relation identities.");
  m.def("za_compare", &za_compare_fn, py::arg("lhs"), py::arg("rhs"),
        "Index-term equality with both the chain verdict and the stricter De Morgan-"
        "lattice verdict.");
  m.def("quantize", &quantize_fn, py::arg("context"), py::arg("degrees"),
        "Quantizes every incidence degree to its class representative in the grid of "
        "the given weight set; returns canonical context JSON.");
}
