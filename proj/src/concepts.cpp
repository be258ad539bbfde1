#include "fcl/concepts.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace fcl {

const char* flavor_name(ConceptFlavor f) {
  switch (f) {
    case ConceptFlavor::formal: return "formal";
    case ConceptFlavor::object_oriented: return "object-oriented";
    case ConceptFlavor::property_oriented: return "property-oriented";
  }
  return "?";
}

namespace {

// The two derivation round-trip legs of each flavor, as cut operations.
CrispSet obj_to_prop(const FuzzyContext& ctx, const CrispSet& a, ConceptFlavor f, const Degree& c) {
  switch (f) {
    case ConceptFlavor::formal: return cut(derive(ctx, a, DeriveOp::plus), c);
    case ConceptFlavor::object_oriented: return cut(derive(ctx, a, DeriveOp::box), c);
    case ConceptFlavor::property_oriented:
      return cut(derive(ctx, a, DeriveOp::diamond), c.complement(), /*strict=*/true);
  }
  throw std::logic_error("unreachable");
}

CrispSet prop_to_obj(const FuzzyContext& ctx, const CrispSet& b, ConceptFlavor f, const Degree& c) {
  switch (f) {
    case ConceptFlavor::formal: return cut(derive(ctx, b, DeriveOp::minus), c);
    case ConceptFlavor::object_oriented:
      return cut(derive(ctx, b, DeriveOp::diamond), c.complement(), /*strict=*/true);
    case ConceptFlavor::property_oriented: return cut(derive(ctx, b, DeriveOp::box), c);
  }
  throw std::logic_error("unreachable");
}

// Canonical order: extent size first, then lexicographic bit order.
bool canonical_less(const CutConcept& x, const CutConcept& y) {
  std::size_t cx = x.extent.count(), cy = y.extent.count();
  if (cx != cy) return cx < cy;
  return x.extent.bits < y.extent.bits;
}

}  // namespace

bool is_concept(const FuzzyContext& ctx, const CutConcept& cc) {
  return obj_to_prop(ctx, cc.extent, cc.flavor, cc.threshold) == cc.intent &&
         prop_to_obj(ctx, cc.intent, cc.flavor, cc.threshold) == cc.extent;
}

CutConcept closure(const FuzzyContext& ctx, const CrispSet& seed, ConceptFlavor flavor,
                   const Degree& c) {
  CutConcept out;
  out.flavor = flavor;
  out.threshold = c;
  if (seed.universe_size() != ctx.universe_size(seed.sort))
    throw std::invalid_argument("closure: seed universe does not match context");
  if (seed.sort == Sort::object) {
    // One extra round trip turns the seed's image into a genuine fixed point;
    // for the monotone flavors the first image is already closed.
    if (flavor == ConceptFlavor::formal) {
      out.intent = obj_to_prop(ctx, seed, flavor, c);
      out.extent = prop_to_obj(ctx, out.intent, flavor, c);
    } else {
      CrispSet b0 = obj_to_prop(ctx, seed, flavor, c);
      out.extent = prop_to_obj(ctx, b0, flavor, c);
      out.intent = obj_to_prop(ctx, out.extent, flavor, c);
    }
  } else {
    out.extent = prop_to_obj(ctx, seed, flavor, c);
    out.intent = obj_to_prop(ctx, out.extent, flavor, c);
  }
  return out;
}

CutConcept concept_meet(const FuzzyContext& ctx, const CutConcept& a, const CutConcept& b) {
  if (a.flavor != b.flavor || !(a.threshold == b.threshold))
    throw std::invalid_argument("meet: mismatched flavor or threshold");
  CutConcept out;
  out.flavor = a.flavor;
  out.threshold = a.threshold;
  switch (a.flavor) {
    case ConceptFlavor::formal:
    case ConceptFlavor::property_oriented:
      out.extent = a.extent.intersect(b.extent);
      out.intent = obj_to_prop(ctx, out.extent, a.flavor, a.threshold);
      break;
    case ConceptFlavor::object_oriented:
      out.intent = a.intent.intersect(b.intent);
      out.extent = prop_to_obj(ctx, out.intent, a.flavor, a.threshold);
      break;
  }
  return out;
}

CutConcept concept_join(const FuzzyContext& ctx, const CutConcept& a, const CutConcept& b) {
  if (a.flavor != b.flavor || !(a.threshold == b.threshold))
    throw std::invalid_argument("join: mismatched flavor or threshold");
  CutConcept out;
  out.flavor = a.flavor;
  out.threshold = a.threshold;
  switch (a.flavor) {
    case ConceptFlavor::formal:
      out.intent = a.intent.intersect(b.intent);
      out.extent = prop_to_obj(ctx, out.intent, a.flavor, a.threshold);
      break;
    case ConceptFlavor::object_oriented:
      out.extent = a.extent.unite(b.extent);
      out.intent = obj_to_prop(ctx, out.extent, a.flavor, a.threshold);
      break;
    case ConceptFlavor::property_oriented:
      out.intent = a.intent.unite(b.intent);
      out.extent = prop_to_obj(ctx, out.intent, a.flavor, a.threshold);
      break;
  }
  return out;
}

ConceptLattice enumerate_concepts(const FuzzyContext& ctx, ConceptFlavor flavor, const Degree& c) {
  // Seed closures: empty set, full set, singletons and co-singletons on both
  // sides.  Depending on flavor these provide the meet- or join-generators;
  // the meet/join fixed point below completes the lattice.
  std::vector<CrispSet> seeds;
  for (Sort s : {Sort::object, Sort::property}) {
    std::size_t n = ctx.universe_size(s);
    seeds.push_back(CrispSet(s, n));
    seeds.push_back(full_set(s, n));
    for (std::size_t i = 0; i < n; ++i) {
      seeds.push_back(singleton(s, n, i));
      seeds.push_back(singleton(s, n, i).complement());
    }
  }

  std::map<std::vector<char>, int> by_extent;
  std::vector<CutConcept> found;
  std::deque<int> fresh;
  auto insert = [&](const CutConcept& cc) {
    auto it = by_extent.find(cc.extent.bits);
    if (it != by_extent.end()) return;
    by_extent.emplace(cc.extent.bits, (int)found.size());
    fresh.push_back((int)found.size());
    found.push_back(cc);
  };

  for (const auto& seed : seeds) insert(closure(ctx, seed, flavor, c));

  // Close under binary meet and join until stable.
  while (!fresh.empty()) {
    int i = fresh.front();
    fresh.pop_front();
    for (std::size_t j = 0; j < found.size(); ++j) {
      insert(concept_meet(ctx, found[i], found[(int)j]));
      insert(concept_join(ctx, found[i], found[(int)j]));
    }
  }

  std::sort(found.begin(), found.end(), canonical_less);

  ConceptLattice lat;
  lat.flavor = flavor;
  lat.threshold = c;
  lat.concepts = std::move(found);
  std::size_t n = lat.concepts.size();
  lat.leq.assign(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      lat.leq[i][j] = lat.concepts[i].extent.subset_of(lat.concepts[j].extent);
  lat.meet.assign(n, std::vector<int>(n, -1));
  lat.join.assign(n, std::vector<int>(n, -1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      CutConcept m = concept_meet(ctx, lat.concepts[i], lat.concepts[j]);
      CutConcept jn = concept_join(ctx, lat.concepts[i], lat.concepts[j]);
      int mi = lat.index_of_extent(m.extent), ji = lat.index_of_extent(jn.extent);
      if (mi < 0 || ji < 0) throw std::logic_error("lattice not closed under meet/join");
      lat.meet[i][j] = lat.meet[j][i] = mi;
      lat.join[i][j] = lat.join[j][i] = ji;
    }
  return lat;
}

int ConceptLattice::index_of_extent(const CrispSet& extent) const {
  for (std::size_t i = 0; i < concepts.size(); ++i)
    if (concepts[i].extent == extent) return (int)i;
  return -1;
}

int ConceptLattice::top() const {
  for (std::size_t i = 0; i < concepts.size(); ++i) {
    bool greatest = true;
    for (std::size_t j = 0; j < concepts.size() && greatest; ++j) greatest = leq[j][i];
    if (greatest) return (int)i;
  }
  return -1;
}

int ConceptLattice::bottom() const {
  for (std::size_t i = 0; i < concepts.size(); ++i) {
    bool least = true;
    for (std::size_t j = 0; j < concepts.size() && least; ++j) least = leq[i][j];
    if (least) return (int)i;
  }
  return -1;
}

CutConcept dualize(const CutConcept& cc, DualityMap map) {
  CutConcept out = cc;
  switch (map) {
    case DualityMap::formal_oo:
      if (cc.flavor == ConceptFlavor::formal) out.flavor = ConceptFlavor::object_oriented;
      else if (cc.flavor == ConceptFlavor::object_oriented) out.flavor = ConceptFlavor::formal;
      else throw std::invalid_argument("dualize: formal_oo expects a formal or oo concept");
      out.extent = cc.extent.complement();
      break;
    case DualityMap::formal_po:
      if (cc.flavor == ConceptFlavor::formal) out.flavor = ConceptFlavor::property_oriented;
      else if (cc.flavor == ConceptFlavor::property_oriented) out.flavor = ConceptFlavor::formal;
      else throw std::invalid_argument("dualize: formal_po expects a formal or po concept");
      out.intent = cc.intent.complement();
      break;
    case DualityMap::oo_po:
      if (cc.flavor == ConceptFlavor::object_oriented) out.flavor = ConceptFlavor::property_oriented;
      else if (cc.flavor == ConceptFlavor::property_oriented) out.flavor = ConceptFlavor::object_oriented;
      else throw std::invalid_argument("dualize: oo_po expects an oo or po concept");
      out.extent = cc.extent.complement();
      out.intent = cc.intent.complement();
      break;
  }
  return out;
}

}  // namespace fcl
