#pragma once

#include <functional>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "fcl/concepts.hpp"
#include "fcl/context.hpp"
#include "fcl/formula.hpp"

namespace fcl {

// A fuzzy context plus a crisp valuation: object-sorted atoms denote subsets
// of G, property-sorted atoms subsets of M.
struct Model {
  FuzzyContext ctx;
  std::map<std::string, CrispSet> v_obj;
  std::map<std::string, CrispSet> v_prop;
};

// Throws if a valuation entry has the wrong sort or universe size.
void validate_model(const Model& m);

/* Truth-set evaluator with per-formula memoization.  Modal clauses go
 * through measures(): [c] reads the necessity measure, [[c]] the guaranteed
 * possibility, each against the world's possibility distribution; strict
 * marks use > instead of >=.
 *
 * Indexed modalities resolve their relation through the lookup callback
 * (wired up by the multi-relational layer); without one, an index is an
 * error and plain modalities use the model's own context.
 */
class Evaluator {
 public:
  using RelationLookup = std::function<const FuzzyContext&(const IndexTerm*)>;

  explicit Evaluator(const Model& m);
  Evaluator(const Model& m, RelationLookup lookup);

  const CrispSet& truth(const Fptr& f);
  bool satisfies(std::size_t world, const Fptr& f);

  const Model& model() const { return model_; }

 private:
  const Model& model_;
  RelationLookup lookup_;
  // keyed by shared node identity; holding the Fptr pins the node so a freed
  // address can never alias a stale cache entry
  std::unordered_map<Fptr, CrispSet> memo_;
};

// One-shot conveniences over a fresh Evaluator.
bool satisfies(const Model& m, Sort world_sort, std::size_t world, const Fptr& f);
CrispSet truth_set(const Model& m, const Fptr& f);

// Local semantic consequence over an explicit model class: at every world of
// the given sort in every listed model where all of gamma hold, phi holds.
// With empty gamma this is validity over the class.
bool consequence(const std::vector<Model>& models, Sort s, const std::vector<Fptr>& gamma,
                 const Fptr& phi);

// Truth-set/operator correspondences at threshold c for one formula: its
// truth set pushed through the sharp (+/-), box, and diamond derivations at
// both the strict and non-strict cuts equals the truth set of the matching
// modal formula.  Six identities per formula sort.
struct IdentityCheck {
  std::string name;
  bool holds;
};

struct Prop2Report {
  std::vector<IdentityCheck> items;
  bool all_hold;
};

Prop2Report check_prop2(const Model& m, const Fptr& phi, const Degree& c);

/* Does the pair (phi, psi) denote a concept of the given flavor in this
 * model?  Checks the two defining equivalences on truth sets:
 *   formal:            phi == [[c]]_p psi      and  [[c]]_o phi == psi
 *   object_oriented:   phi == <(1-c)+>_p psi   and  [c]_o phi   == psi
 *   property_oriented: phi == [c]_p psi        and  <(1-c)+>_o phi == psi
 * When true, (|phi|, |psi|) satisfies the flavor's concept equations.
 */
bool check_concept_pair(const Model& m, const Fptr& phi, const Fptr& psi, const Degree& c,
                        ConceptFlavor flavor);

}  // namespace fcl
