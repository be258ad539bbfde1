#pragma once

#include <cstddef>
#include <vector>

#include "fcl/context.hpp"

namespace fcl {

// The three cut-concept flavors: antitone (formal) pairs and the two
// monotone (rough-style) pairs.
enum class ConceptFlavor { formal, object_oriented, property_oriented };

const char* flavor_name(ConceptFlavor f);

// Extent/intent pair closed under the flavor's derivation round trip at
// threshold c:
//   formal:             extent+_c = intent      and  intent-_c     = extent
//   object_oriented:    extent box_c = intent   and  intent dia_{>1-c} = extent
//   property_oriented:  extent dia_{>1-c} = intent  and  intent box_c = extent
struct CutConcept {
  CrispSet extent;  // object side
  CrispSet intent;  // property side
  ConceptFlavor flavor;
  Degree threshold;

  bool operator==(const CutConcept& other) const {
    return extent == other.extent && intent == other.intent && flavor == other.flavor &&
           threshold == other.threshold;
  }
};

// Does the pair satisfy its flavor's two defining equations in ctx?
bool is_concept(const FuzzyContext& ctx, const CutConcept& cc);

// Close a one-sided seed into a concept (the seed's round-trip fixed point).
CutConcept closure(const FuzzyContext& ctx, const CrispSet& seed, ConceptFlavor flavor,
                   const Degree& c);

/* Complete lattice of all concepts of one flavor at one threshold.
 * Concepts are stored in canonical order (extent size, then lexicographic
 * bit order); leq is extent inclusion, which for every flavor is the lattice
 * order.  meet/join tables are computed from the flavor's algebraic formulas
 * and always index into the concept list.
 */
struct ConceptLattice {
  ConceptFlavor flavor;
  Degree threshold;
  std::vector<CutConcept> concepts;
  std::vector<std::vector<char>> leq;         // leq[i][j]: concept i <= concept j
  std::vector<std::vector<int>> meet, join;   // indices into concepts

  std::size_t size() const { return concepts.size(); }
  int index_of_extent(const CrispSet& extent) const;  // -1 if absent
  int top() const;     // greatest element
  int bottom() const;  // least element
};

ConceptLattice enumerate_concepts(const FuzzyContext& ctx, ConceptFlavor flavor, const Degree& c);

// Binary meet/join of two same-flavor concepts over ctx, by the closed-form
// lattice operations (intersecting intents / uniting extents and re-deriving
// the missing side, per flavor).
CutConcept concept_meet(const FuzzyContext& ctx, const CutConcept& a, const CutConcept& b);
CutConcept concept_join(const FuzzyContext& ctx, const CutConcept& a, const CutConcept& b);

// Concept dualities.  The two formal maps land in the complemented context;
// the rough-pair map stays inside the same context (composing the other two
// carries the concept out and back):
//   formal <-> object_oriented  : complement the extent   (in ctx.complemented())
//   formal <-> property_oriented: complement the intent   (in ctx.complemented())
//   object_oriented <-> property_oriented: complement both (in ctx itself)
// Each mapping is an involution (applying it twice gives the original).
enum class DualityMap { formal_oo, formal_po, oo_po };

CutConcept dualize(const CutConcept& cc, DualityMap map);

}  // namespace fcl
