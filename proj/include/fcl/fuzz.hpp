#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "fcl/axioms.hpp"
#include "fcl/model.hpp"

namespace fcl {

using Rng = std::mt19937_64;

/* Random-instance generators.  The grid is a finite degree set containing 0
 * and 1 and closed under 1-x, matching the shape every weight in the logic
 * lives on; contexts and models draw their incidence values from it.
 */
std::set<Degree> random_grid(Rng& rng, std::size_t extra = 3);

FuzzyContext random_context(Rng& rng, std::size_t max_g, std::size_t max_m,
                            const std::set<Degree>& grid);

// Adds a random crisp valuation for every named atom on top of a random
// context; max_g/max_m bound (not fix) the universe sizes.
Model random_model(Rng& rng, std::size_t max_g, std::size_t max_m,
                   const std::set<Degree>& grid, const std::vector<std::string>& obj_atoms,
                   const std::vector<std::string>& prop_atoms);

struct FormulaGenOptions {
  std::size_t max_depth = 3;
  bool allow_nec = true;
  bool allow_suff = true;
  std::vector<Degree> marks;  // weight pool; {0, 1/2, 1} when empty
  std::vector<std::string> obj_atoms{"p"};
  std::vector<std::string> prop_atoms{"q"};
};

Fptr random_formula(Rng& rng, Sort sort, const FormulaGenOptions& opt);

/* Randomized soundness check of the axiom schemas: every schema instance
 * (side-condition-respecting bindings, random formulas, random models) must
 * hold at every world, and both generalization rules must preserve
 * model-validity.  A counterexample is a bug — unless the run deliberately
 * corrupts a schema to demonstrate that the fuzzer has teeth, which is what
 * SchemaMutation is for: drop_con1_guard removes the antecedent guarding the
 * first consistency axiom, leaving an implication that fails exactly where
 * the guarded exceptional case (an empty truth set) arises.
 */
enum class SchemaMutation { none, drop_con1_guard };

struct FuzzCounterexample {
  Model model;  // shrunk: no world removal or 0/1 overwrite of an interior cell keeps it failing
  Sort world_sort = Sort::object;
  std::size_t world = 0;
  std::string schema;
  AxiomArgs args;
  Fptr instance;
};

struct FuzzReport {
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::size_t instances_checked = 0;
  std::vector<FuzzCounterexample> counterexamples;
  bool clean() const { return counterexamples.empty(); }
};

struct FuzzConfig {
  std::uint64_t seed = 0;
  std::size_t trials = 1000;
  std::size_t max_domain = 4;
  std::set<AxiomId> schema_filter;  // empty = every non-indexed schema
  SchemaMutation mutation = SchemaMutation::none;
  std::size_t max_counterexamples = 1;  // stop after this many
};

FuzzReport soundness_fuzz(const FuzzConfig& cfg);

}  // namespace fcl
