#include "fcl/axioms.hpp"

#include <stdexcept>

namespace fcl {

namespace {

struct NameEntry {
  AxiomId id;
  const char* name;
};

// Order doubles as the catalog order.
constexpr NameEntry kNames[] = {
    {AxiomId::k_nec, "K[c]"},
    {AxiomId::k_nec_strict, "K[c+]"},
    {AxiomId::b_nec, "B[c]"},
    {AxiomId::b_nec_strict, "B[c+]"},
    {AxiomId::k_suff, "K[[c]]"},
    {AxiomId::k_suff_strict, "K[[c+]]"},
    {AxiomId::b_suff, "B[[c]]"},
    {AxiomId::b_suff_strict, "B[[c+]]"},
    {AxiomId::con1, "CON1"},
    {AxiomId::con2, "CON2"},
    {AxiomId::bk_i, "BKi"},
    {AxiomId::bk_ii, "BKii"},
    {AxiomId::bk_iii, "BKiii"},
    {AxiomId::bk_iv, "BKiv"},
    {AxiomId::bk_v_a, "BKva"},
    {AxiomId::bk_v_b, "BKvb"},
    {AxiomId::bk_vi_a, "BKvia"},
    {AxiomId::bk_vi_b, "BKvib"},
    {AxiomId::def_u, "DefU"},
    {AxiomId::def_i, "DefI"},
    {AxiomId::def_c, "DefC"},
    {AxiomId::def_0, "Def0"},
};

bool is_def_schema(AxiomId id) {
  return id == AxiomId::def_u || id == AxiomId::def_i || id == AxiomId::def_c ||
         id == AxiomId::def_0;
}

[[noreturn]] void bail(AxiomId id, const std::string& what) {
  throw std::invalid_argument(std::string(axiom_name(id)) + ": " + what);
}

}  // namespace

const char* axiom_name(AxiomId id) {
  for (const auto& e : kNames)
    if (e.id == id) return e.name;
  return "?";
}

std::optional<AxiomId> axiom_by_name(const std::string& name) {
  for (const auto& e : kNames)
    if (name == e.name) return e.id;
  return std::nullopt;
}

const std::vector<AxiomId>& axiom_catalog() {
  static const std::vector<AxiomId> all = [] {
    std::vector<AxiomId> v;
    for (const auto& e : kNames) v.push_back(e.id);
    return v;
  }();
  return all;
}

Fptr instantiate_axiom(AxiomId id, const AxiomArgs& a) {
  auto need_phi = [&]() -> const Fptr& {
    if (!a.phi) bail(id, "missing phi binding");
    return a.phi;
  };
  auto need_psi = [&]() -> const Fptr& {
    if (!a.psi) bail(id, "missing psi binding");
    return a.psi;
  };
  auto need_c = [&]() -> const Degree& {
    if (!a.c) bail(id, "missing weight binding c");
    return *a.c;
  };
  auto need_i = [&]() -> const ITerm& {
    if (!a.i) bail(id, "missing index binding i");
    return a.i;
  };
  auto need_j = [&]() -> const ITerm& {
    if (!a.j) bail(id, "missing index binding j");
    return a.j;
  };

  // Reject bindings the schema has no slot for; silent extras would mask
  // script typos.
  const bool takes_d = id == AxiomId::bk_i || id == AxiomId::bk_ii;
  const bool takes_psi = id == AxiomId::k_nec || id == AxiomId::k_nec_strict ||
                         id == AxiomId::k_suff || id == AxiomId::k_suff_strict;
  const bool takes_c = !(id == AxiomId::bk_v_a || id == AxiomId::bk_v_b ||
                         id == AxiomId::bk_vi_a || id == AxiomId::bk_vi_b ||
                         id == AxiomId::def_0);
  const bool takes_ij = id == AxiomId::def_u || id == AxiomId::def_i;
  const bool takes_i_only = id == AxiomId::def_c;
  if (a.d && !takes_d) bail(id, "schema has no weight parameter d");
  if (a.psi && !takes_psi) bail(id, "schema has no metavariable psi");
  if (a.c && !takes_c) bail(id, "schema has a fixed weight; drop the c binding");
  if (a.i && !(takes_ij || takes_i_only)) bail(id, "schema has no index metavariable i");
  if (a.j && !takes_ij) bail(id, "schema has no index metavariable j");
  if (a.index && is_def_schema(id))
    bail(id, "definition schemas bind i/j; idx applies to core schemas only");
  if (a.strict_mark && !is_def_schema(id))
    bail(id, "core schemas encode strictness in the schema name, not a '+' on c");

  const ITerm& x = a.index;  // nullptr for the plain, single-relation reading

  switch (id) {
    case AxiomId::k_nec:
    case AxiomId::k_nec_strict: {
      const Fptr &p = need_phi(), &q = need_psi();
      if (p->sort != q->sort) bail(id, "phi and psi must share a sort");
      WeightMark m{need_c(), id == AxiomId::k_nec_strict};
      return implies(nec(m, implies(p, q), x), implies(nec(m, p, x), nec(m, q, x)));
    }
    case AxiomId::b_nec: {
      const Fptr& p = need_phi();
      const Degree& c = need_c();
      // a -> [c]<(1-c)+>a, with the diamond spelled out: a -> [c]![c]!a
      return implies(p, nec({c, false}, expand_derived(DerivedKind::pos_strict, c.complement(), p, x), x));
    }
    case AxiomId::b_nec_strict: {
      const Fptr& p = need_phi();
      const Degree& c = need_c();
      // The strict mark at weight 1 is unsatisfiable (no degree exceeds 1),
      // so this schema is only sound for c < 1; at c = 1 it would contradict
      // the ![1+]a bookkeeping axiom outright.
      if (c.is_one()) bail(id, "side condition c < 1 violated (strict mark at 1 is unsatisfiable)");
      // a -> [c+]<1-c>a  ==  a -> [c+]![c+]!a
      return implies(p, nec({c, true}, expand_derived(DerivedKind::pos, c.complement(), p, x), x));
    }
    case AxiomId::k_suff:
    case AxiomId::k_suff_strict: {
      const Fptr &p = need_phi(), &q = need_psi();
      if (p->sort != q->sort) bail(id, "phi and psi must share a sort");
      WeightMark m{need_c(), id == AxiomId::k_suff_strict};
      return implies(suff(m, conj(p, neg(q)), x),
                     implies(suff(m, neg(p), x), suff(m, neg(q), x)));
    }
    case AxiomId::b_suff:
    case AxiomId::b_suff_strict: {
      const Fptr& p = need_phi();
      WeightMark m{need_c(), id == AxiomId::b_suff_strict};
      if (m.strict && m.degree.is_one())
        bail(id, "side condition c < 1 violated (strict mark at 1 is unsatisfiable)");
      return implies(p, suff(m, suff(m, p, x), x));
    }
    case AxiomId::con1:
    case AxiomId::con2: {
      // The guard rules out the vacuous-world case (no related elements at
      // all), where necessity of !a and guaranteed possibility of a are both
      // trivially 1 and the weight comparison below would be unsound.
      const Fptr& p = need_phi();
      const Degree& c = need_c();
      Fptr guard = neg(conj(nec({Degree::one(), false}, neg(p), x),
                            suff({Degree::one(), false}, p, x)));
      bool strict_nec = id == AxiomId::con2;   // [(1-c)+] vs [1-c]
      bool strict_suff = id == AxiomId::con1;  // [[c+]]   vs [[c]]
      return implies(guard, implies(nec({c.complement(), strict_nec}, neg(p), x),
                                    neg(suff({c, strict_suff}, p, x))));
    }
    case AxiomId::bk_i:
    case AxiomId::bk_ii: {
      const Fptr& p = need_phi();
      const Degree& c = need_c();
      if (!a.d) bail(id, "missing weight binding d");
      const Degree& d = *a.d;
      if (!(d < c)) bail(id, "side condition c > d violated (" + c.str() + " <= " + d.str() + ")");
      if (id == AxiomId::bk_i) return implies(nec({c, false}, p, x), nec({d, true}, p, x));
      return implies(suff({c, false}, p, x), suff({d, true}, p, x));
    }
    case AxiomId::bk_iii:
      return implies(nec({need_c(), true}, need_phi(), x), nec({*a.c, false}, a.phi, x));
    case AxiomId::bk_iv:
      return implies(suff({need_c(), true}, need_phi(), x), suff({*a.c, false}, a.phi, x));
    case AxiomId::bk_v_a:
      return neg(nec({Degree::one(), true}, need_phi(), x));
    case AxiomId::bk_v_b:
      return nec({Degree::zero(), false}, need_phi(), x);
    case AxiomId::bk_vi_a:
      return neg(suff({Degree::one(), true}, need_phi(), x));
    case AxiomId::bk_vi_b:
      return suff({Degree::zero(), false}, need_phi(), x);
    case AxiomId::def_u: {
      WeightMark m{need_c(), a.strict_mark};
      const Fptr& p = need_phi();
      return iff(nec(m, p, IndexTerm::join_of(need_i(), need_j())),
                 conj(nec(m, p, a.i), nec(m, p, a.j)));
    }
    case AxiomId::def_i: {
      WeightMark m{need_c(), a.strict_mark};
      const Fptr& p = need_phi();
      return iff(suff(m, p, IndexTerm::meet_of(need_i(), need_j())),
                 conj(suff(m, p, a.i), suff(m, p, a.j)));
    }
    case AxiomId::def_c: {
      WeightMark m{need_c(), a.strict_mark};
      const Fptr& p = need_phi();
      return iff(nec(m, p, IndexTerm::compl_of(need_i())), suff(m, neg(p), a.i));
    }
    case AxiomId::def_0:
      return nec({Degree::one(), false}, need_phi(), IndexTerm::zero());
  }
  bail(id, "unknown schema");
}

const char* system_name(System s) {
  switch (s) {
    case System::wml: return "2WML";
    case System::wkb: return "2WKB";
    case System::wkf: return "2WKF";
    case System::bml: return "2WBML";
  }
  return "?";
}

std::optional<System> system_by_name(const std::string& name) {
  if (name == "2WML") return System::wml;
  if (name == "2WKB") return System::wkb;
  if (name == "2WKF") return System::wkf;
  if (name == "2WBML") return System::bml;
  return std::nullopt;
}

bool system_has_axiom(System s, AxiomId id) {
  switch (s) {
    case System::bml:
      return true;
    case System::wml:
      return !is_def_schema(id);
    case System::wkb:
      return id == AxiomId::k_nec || id == AxiomId::k_nec_strict || id == AxiomId::b_nec ||
             id == AxiomId::b_nec_strict || id == AxiomId::bk_i || id == AxiomId::bk_iii ||
             id == AxiomId::bk_v_a || id == AxiomId::bk_v_b;
    case System::wkf:
      return id == AxiomId::k_suff || id == AxiomId::k_suff_strict || id == AxiomId::b_suff ||
             id == AxiomId::b_suff_strict || id == AxiomId::bk_ii || id == AxiomId::bk_iv ||
             id == AxiomId::bk_vi_a || id == AxiomId::bk_vi_b;
  }
  return false;
}

bool system_has_rule(System s, RuleId r) {
  switch (s) {
    case System::bml:
      return true;
    case System::wml:
      return r != RuleId::eq;
    case System::wkb:
      return r == RuleId::mp || r == RuleId::ug_nec || r == RuleId::taut;
    case System::wkf:
      return r == RuleId::mp || r == RuleId::ug_suff || r == RuleId::taut;
  }
  return false;
}

}  // namespace fcl
