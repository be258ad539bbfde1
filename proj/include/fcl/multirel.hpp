#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "fcl/context.hpp"
#include "fcl/index_term.hpp"
#include "fcl/model.hpp"

namespace fcl {

/* A family of same-shape fuzzy relations over one pair of universes,
 * addressed by index terms.  Compound relations are evaluated on demand —
 * pointwise min for &, max for |, 1-x for ~, the constant-zero relation for
 * 0 — and cached under the term's printed form, so repeated modalities over
 * one index share a single materialized matrix.
 */
class MultiContext {
 public:
  MultiContext(std::vector<std::string> objects, std::vector<std::string> attributes);

  // Shape must match the universes; name must be fresh.
  void add_relation(const std::string& name, std::vector<std::vector<Degree>> rows);

  std::size_t n_objects() const { return objects_.size(); }
  std::size_t n_attributes() const { return attributes_.size(); }
  std::size_t universe_size(Sort s) const {
    return s == Sort::object ? n_objects() : n_attributes();
  }
  const std::vector<std::string>& names(Sort s) const {
    return s == Sort::object ? objects_ : attributes_;
  }
  std::vector<std::string> relation_names() const;

  // Materialized relation of a (possibly compound) index.  Throws
  // std::out_of_range on an undeclared primitive.  The reference stays valid
  // for the lifetime of this MultiContext.
  const FuzzyContext& derived(const ITerm& idx) const;
  const FuzzyContext& derived(const IndexTerm* idx) const;

 private:
  std::vector<std::string> objects_, attributes_;
  std::map<std::string, FuzzyContext> primitive_;
  mutable std::map<std::string, FuzzyContext> cache_;
};

/* Multi-relational model: every modality must carry an index, and evaluates
 * against the derived relation of that index.  A bare modality has no
 * designated relation here, so evaluation rejects it.
 */
struct MultiModel {
  MultiContext ctx;
  std::map<std::string, CrispSet> v_obj;
  std::map<std::string, CrispSet> v_prop;
};

CrispSet truth_set(const MultiModel& m, const Fptr& f);
bool satisfies(const MultiModel& m, Sort world_sort, std::size_t world, const Fptr& f);

/* Equality of index terms as relation identities.  The deciding check
 * evaluates both terms over all assignments of their primitives into the
 * three-element chain {0, 1/2, 1} with min/max/1-x: the chain generates the
 * variety of that pointwise algebra, so chain-validity is exactly "the two
 * derived relations coincide in every multi-relational context".
 *
 * A second, stricter check runs over the four-element De Morgan lattice
 * {0, a, b, 1} (a, b incomparable, each its own complement).  It validates
 * fewer equations — e.g. x & ~x = x & ~x & (y | ~y) holds on the chain but
 * not here — and is reported alongside for callers who want the weaker
 * axiom-list reading of the index algebra; a disagreement between the two
 * marks an equation whose status depends on that choice.
 */
struct ZaVerdict {
  bool kleene;     // valid over the 3-chain; the verdict used by za_equal
  bool de_morgan;  // valid over the 4-element De Morgan lattice
  bool agree() const { return kleene == de_morgan; }
};

ZaVerdict za_compare(const ITerm& lhs, const ITerm& rhs);
bool za_equal(const ITerm& lhs, const ITerm& rhs);

/* Randomized validity check of the indexed-extension schemas (def_u, def_i,
 * def_c, def_0) plus index-threaded instances of the core schemas, against
 * random multi-relational models.  Any failing instance is reported with its
 * printed formula and location; a clean report is the expected outcome.
 */
struct BmAxiomReport {
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::size_t instances_checked = 0;
  std::vector<std::string> failures;
  bool clean() const { return failures.empty(); }
};

BmAxiomReport check_bm_axioms(std::size_t trials, std::uint64_t seed);

// Random index term over the given primitive names (uniform over shapes up
// to the depth); used by the fuzzers and the equality-oracle tests.
ITerm random_index_term(std::mt19937_64& rng, const std::vector<std::string>& prims,
                        std::size_t depth);

}  // namespace fcl
