#include "fcl/model.hpp"

#include <stdexcept>

namespace fcl {

void validate_model(const Model& m) {
  for (const auto& [name, set] : m.v_obj) {
    if (set.sort != Sort::object || set.bits.size() != m.ctx.n_objects())
      throw std::invalid_argument("valuation of '" + name + "' does not fit the object domain");
  }
  for (const auto& [name, set] : m.v_prop) {
    if (set.sort != Sort::property || set.bits.size() != m.ctx.n_attributes())
      throw std::invalid_argument("valuation of '" + name + "' does not fit the property domain");
  }
}

Evaluator::Evaluator(const Model& m) : model_(m) {}

Evaluator::Evaluator(const Model& m, RelationLookup lookup)
    : model_(m), lookup_(std::move(lookup)) {}

const CrispSet& Evaluator::truth(const Fptr& f) {
  if (!f) throw std::invalid_argument("truth: null formula");
  auto it = memo_.find(f);
  if (it != memo_.end()) return it->second;

  CrispSet result(f->sort, model_.ctx.universe_size(f->sort));
  switch (f->node) {
    case Formula::Node::atom: {
      const auto& table = f->sort == Sort::object ? model_.v_obj : model_.v_prop;
      auto entry = table.find(f->symbol);
      if (entry == table.end())
        throw std::invalid_argument("no valuation for " + std::string(sort_name(f->sort)) +
                                    " symbol '" + f->symbol + "'");
      if (entry->second.bits.size() != result.bits.size())
        throw std::invalid_argument("valuation of '" + f->symbol + "' has the wrong domain size");
      result = entry->second;
      break;
    }
    case Formula::Node::neg:
      result = truth(f->left).complement();
      break;
    case Formula::Node::conj:
      result = truth(f->left).intersect(truth(f->right));
      break;
    case Formula::Node::nec:
    case Formula::Node::suff: {
      const CrispSet& arg = truth(f->left);
      const FuzzyContext& rel = [&]() -> const FuzzyContext& {
        if (lookup_) return lookup_(f->index.get());
        if (f->index)
          throw std::invalid_argument("indexed modality requires a multi-relational model");
        return model_.ctx;
      }();
      bool want_nec = f->node == Formula::Node::nec;
      for (std::size_t w = 0; w < result.bits.size(); ++w) {
        PossMeasures pm = measures(rel, f->sort, w, arg);
        const Degree& value = want_nec ? pm.necessity : pm.guaranteed;
        bool sat = f->mark.strict ? value > f->mark.degree : value >= f->mark.degree;
        if (sat) result.add(w);
      }
      break;
    }
  }
  return memo_.emplace(f, std::move(result)).first->second;
}

bool Evaluator::satisfies(std::size_t world, const Fptr& f) {
  const CrispSet& t = truth(f);
  if (world >= t.bits.size()) throw std::out_of_range("world index out of range");
  return t.contains(world);
}

bool satisfies(const Model& m, Sort world_sort, std::size_t world, const Fptr& f) {
  if (f->sort != world_sort)
    throw std::invalid_argument("formula sort does not match the world's sort");
  Evaluator ev(m);
  return ev.satisfies(world, f);
}

CrispSet truth_set(const Model& m, const Fptr& f) {
  Evaluator ev(m);
  return ev.truth(f);
}

bool consequence(const std::vector<Model>& models, Sort s, const std::vector<Fptr>& gamma,
                 const Fptr& phi) {
  if (phi->sort != s) throw std::invalid_argument("conclusion has the wrong sort");
  for (const auto& g : gamma)
    if (g->sort != s) throw std::invalid_argument("premise has the wrong sort");
  for (const auto& m : models) {
    Evaluator ev(m);
    std::size_t n = m.ctx.universe_size(s);
    for (std::size_t w = 0; w < n; ++w) {
      bool all = true;
      for (const auto& g : gamma)
        if (!ev.satisfies(w, g)) {
          all = false;
          break;
        }
      if (all && !ev.satisfies(w, phi)) return false;
    }
  }
  return true;
}

Prop2Report check_prop2(const Model& m, const Fptr& phi, const Degree& c) {
  Evaluator ev(m);
  const CrispSet base = ev.truth(phi);
  bool is_obj = phi->sort == Sort::object;
  DeriveOp sharp = is_obj ? DeriveOp::plus : DeriveOp::minus;
  const char* sharp_name = is_obj ? "plus" : "minus";

  Prop2Report report;
  auto add = [&](std::string name, const CrispSet& lhs, const Fptr& rhs) {
    report.items.push_back({std::move(name), lhs == ev.truth(rhs)});
  };

  add(std::string(sharp_name) + "_gt", cut(derive(m.ctx, base, sharp), c, true),
      suff({c, true}, phi));
  add(std::string(sharp_name) + "_geq", cut(derive(m.ctx, base, sharp), c),
      suff({c, false}, phi));
  add("box_gt", cut(derive(m.ctx, base, DeriveOp::box), c, true), nec({c, true}, phi));
  add("box_geq", cut(derive(m.ctx, base, DeriveOp::box), c), nec({c, false}, phi));
  add("diamond_gt", cut(derive(m.ctx, base, DeriveOp::diamond), c, true),
      expand_derived(DerivedKind::pos_strict, c, phi));
  add("diamond_geq", cut(derive(m.ctx, base, DeriveOp::diamond), c),
      expand_derived(DerivedKind::pos, c, phi));

  report.all_hold = true;
  for (const auto& item : report.items) report.all_hold = report.all_hold && item.holds;
  return report;
}

bool check_concept_pair(const Model& m, const Fptr& phi, const Fptr& psi, const Degree& c,
                        ConceptFlavor flavor) {
  if (phi->sort != Sort::object || psi->sort != Sort::property)
    throw std::invalid_argument("concept pair needs an object formula and a property formula");
  Evaluator ev(m);
  auto same = [&](const Fptr& a, const Fptr& b) { return ev.truth(a) == ev.truth(b); };
  switch (flavor) {
    case ConceptFlavor::formal:
      return same(phi, suff({c, false}, psi)) && same(suff({c, false}, phi), psi);
    case ConceptFlavor::object_oriented:
      return same(phi, expand_derived(DerivedKind::pos_strict, c.complement(), psi)) &&
             same(nec({c, false}, phi), psi);
    case ConceptFlavor::property_oriented:
      return same(phi, nec({c, false}, psi)) &&
             same(expand_derived(DerivedKind::pos_strict, c.complement(), phi), psi);
  }
  throw std::logic_error("check_concept_pair: unreachable");
}

}  // namespace fcl
