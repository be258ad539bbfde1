#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "fcl/context.hpp"
#include "fcl/degree.hpp"
#include "fcl/index_term.hpp"

namespace fcl {

// Weight annotation on a modality: [c] / [c+] (and the sufficiency pair).
// `strict` selects the > reading instead of >=.
struct WeightMark {
  Degree degree;
  bool strict = false;

  bool operator==(const WeightMark& o) const { return degree == o.degree && strict == o.strict; }
};

struct Formula;
using Fptr = std::shared_ptr<const Formula>;

/* Two-sorted modal formulas.  The primitive connectives are atoms, negation,
 * conjunction, and the two weighted modalities (necessity [c], sufficiency
 * [[c]]).  Everything else — disjunction, implication, biconditional, and the
 * four diamond-style modalities — is desugared through the constructors
 * below, so downstream code only ever sees the five primitive node kinds.
 *
 * Nodes are immutable and shared.  `sort` is the sort of the formula itself;
 * a modality's argument always has the opposite sort (its printed _p/_o tag
 * names the argument's sort).  `hash` is structural and precomputed.
 */
struct Formula {
  enum class Node { atom, neg, conj, nec, suff };

  Node node;
  Sort sort;
  std::string symbol;  // atom only
  Fptr left, right;    // neg/nec/suff use left only
  WeightMark mark{Degree::zero(), false};
  ITerm index;         // optional relation index (multi-relational formulas)
  std::size_t hash = 0;
};

// Smart constructors.  conj requires both children of the same sort; neg
// cancels a double negation (so !(!(f)) is f itself).  That cancellation is
// load-bearing: it makes the desugared derived modalities line up with axiom
// shapes the way the calculus expects.
Fptr atom(std::string name, Sort s);
Fptr neg(Fptr f);
Fptr conj(Fptr a, Fptr b);
Fptr nec(WeightMark m, Fptr arg, ITerm index = nullptr);
Fptr suff(WeightMark m, Fptr arg, ITerm index = nullptr);

// Desugared connectives: a->b is !(a & !b), a|b is !(!a & !b), <-> conjoins
// the two implications.
Fptr implies(Fptr a, Fptr b);
Fptr or_(Fptr a, Fptr b);
Fptr iff(Fptr a, Fptr b);

// The four derived diamond modalities and their definitional expansions:
//   pos              <c>a   = ![(1-c)+] !a
//   pos_strict       <c+>a  = ![1-c] !a
//   suff_dual        <<c>>a = ![[(1-c)+]] !a
//   suff_dual_strict <<c+>>a= ![[1-c]] !a
enum class DerivedKind { pos, pos_strict, suff_dual, suff_dual_strict };

Fptr expand_derived(DerivedKind kind, const Degree& c, Fptr arg, ITerm index = nullptr);

bool formula_equal(const Fptr& a, const Fptr& b);

// Canonical concrete syntax (primitive connectives only); parsing the output
// reproduces the AST exactly.
std::string print_formula(const Fptr& f);

// The weight closure of a formula: {0,1} plus, for every mark degree d
// occurring in it, both d and 1-d.
std::set<Degree> deg_of(const Fptr& f);
std::set<Degree> deg_of(const std::vector<Fptr>& fs);

bool uses_nec(const Fptr& f);
bool uses_suff(const Fptr& f);
bool uses_index(const Fptr& f);

// Records every atom with its sort; throws std::invalid_argument if a name
// occurs with both sorts across the collection.
void collect_atoms(const Fptr& f, std::map<std::string, Sort>& out);

/* Fragment translation between the sufficiency and necessity languages:
 * homomorphic on atoms, negation, and conjunction, and on modalities
 *   suff->nec:  [[x]] a  becomes  [x] ! T(a)
 *   nec->suff:  [x] a    becomes  [[x]] ! T(a)
 * The input must lie in the source fragment (no modality of the target kind);
 * indexed modalities are rejected.  Sorts are preserved.
 */
enum class RhoDirection { suff_to_nec, nec_to_suff };

Fptr translate_rho(const Fptr& f, RhoDirection dir);

}  // namespace fcl
