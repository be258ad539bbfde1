#pragma once

#include <optional>
#include <set>
#include <vector>

#include "fcl/model.hpp"

namespace fcl {

/* Degree quantization.  A finite weight set D (containing 0 and 1, closed
 * under 1-x) induces the thresholds {1-c : c in D}; every relation value is
 * classified by its position relative to them, and the class representatives
 * are the thresholds themselves plus the midpoint of each consecutive pair.
 * Satisfaction of any formula whose weights lie in D only ever compares
 * measure values against thresholds, so replacing each incidence degree by
 * its class representative changes nothing a D-weighted formula can see.
 */
struct QuantizedGrid {
  std::vector<Degree> thresholds;       // sorted ascending
  std::vector<Degree> relation_values;  // thresholds plus consecutive midpoints
};

// Throws std::invalid_argument unless D contains 0 and 1 and is closed
// under complement.
QuantizedGrid make_grid(const std::set<Degree>& degrees);

// The class representative of one value.
Degree quantize_value(const QuantizedGrid& grid, const Degree& v);

FuzzyContext quantize_context(const FuzzyContext& ctx, const std::set<Degree>& degrees);
Model quantize_model(const Model& m, const std::set<Degree>& degrees);

/* Bounded satisfiability search.  Enumerates every model with universe sizes
 * up to max_g x max_m, incidence values drawn from the quantized grid of the
 * input's weight closure, and valuations over the input's atoms, looking for
 * a world of the given sort satisfying every formula of gamma at once.
 *
 * `found == false` means the bounded space is exhausted — NOT that gamma is
 * unsatisfiable.  Quantization bounds the relation values a witness needs,
 * but nothing bounds the universe sizes, so absence within the bounds
 * carries no refutation weight.
 *
 * The search runs on the necessity fragment.  A pure sufficiency input is
 * solved by translating it into the necessity fragment and complementing
 * the witness's incidence relation (satisfaction at a world transfers
 * exactly between a model and its complement across that translation);
 * mixing the two modality kinds in one input is rejected.
 */
struct SatResult {
  bool found = false;
  std::optional<Model> model;
  std::size_t world = 0;
  std::size_t models_enumerated = 0;
};

SatResult bounded_sat(const std::vector<Fptr>& gamma, Sort world_sort, std::size_t max_g,
                      std::size_t max_m);

}  // namespace fcl
