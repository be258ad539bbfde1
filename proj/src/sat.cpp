#include "fcl/sat.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace fcl {

QuantizedGrid make_grid(const std::set<Degree>& degrees) {
  if (degrees.count(Degree::zero()) == 0 || degrees.count(Degree::one()) == 0)
    throw std::invalid_argument("make_grid: the degree set must contain 0 and 1");
  for (const Degree& d : degrees)
    if (degrees.count(d.complement()) == 0)
      throw std::invalid_argument("make_grid: the degree set must be closed under 1-x, " +
                                  d.str() + " lacks its complement");
  QuantizedGrid grid;
  for (const Degree& d : degrees) grid.thresholds.push_back(d.complement());
  std::sort(grid.thresholds.begin(), grid.thresholds.end());
  for (std::size_t i = 0; i < grid.thresholds.size(); ++i) {
    grid.relation_values.push_back(grid.thresholds[i]);
    if (i + 1 < grid.thresholds.size())
      grid.relation_values.push_back(
          Degree::midpoint(grid.thresholds[i], grid.thresholds[i + 1]));
  }
  return grid;
}

Degree quantize_value(const QuantizedGrid& grid, const Degree& v) {
  // first threshold >= v; thresholds span [0, 1], so it always exists
  auto it = std::lower_bound(grid.thresholds.begin(), grid.thresholds.end(), v);
  if (*it == v) return v;
  return Degree::midpoint(*(it - 1), *it);
}

FuzzyContext quantize_context(const FuzzyContext& ctx, const std::set<Degree>& degrees) {
  QuantizedGrid grid = make_grid(degrees);
  FuzzyContext out = ctx;
  for (std::size_t g = 0; g < out.n_objects(); ++g)
    for (std::size_t m = 0; m < out.n_attributes(); ++m)
      out.at(g, m) = quantize_value(grid, out.at(g, m));
  return out;
}

Model quantize_model(const Model& m, const std::set<Degree>& degrees) {
  return Model{quantize_context(m.ctx, degrees), m.v_obj, m.v_prop};
}

namespace {

struct AtomSlot {
  std::string name;
  Sort sort;
};

// Odometer-style exhaustive search over the quantized model space, smallest
// universes first.  Returns the first satisfying (model, world).
SatResult search_necessity(const std::vector<Fptr>& gamma, Sort world_sort,
                           std::size_t max_g, std::size_t max_m) {
  std::map<std::string, Sort> atom_sorts;
  for (const Fptr& f : gamma) collect_atoms(f, atom_sorts);
  std::vector<AtomSlot> atoms;
  for (const auto& [name, sort] : atom_sorts) atoms.push_back({name, sort});

  const std::vector<Degree> vals = make_grid(deg_of(gamma)).relation_values;
  SatResult res;

  for (std::size_t ng = 1; ng <= max_g; ++ng)
    for (std::size_t nm = 1; nm <= max_m; ++nm) {
      std::vector<std::string> gs, ms;
      for (std::size_t i = 0; i < ng; ++i) gs.push_back("g" + std::to_string(i + 1));
      for (std::size_t i = 0; i < nm; ++i) ms.push_back("m" + std::to_string(i + 1));
      const std::size_t ncells = ng * nm;

      std::vector<std::size_t> cell(ncells, 0);
      while (true) {
        std::vector<std::vector<Degree>> rows(ng, std::vector<Degree>(nm));
        for (std::size_t k = 0; k < ncells; ++k) rows[k / nm][k % nm] = vals[cell[k]];
        FuzzyContext ctx(gs, ms, rows);

        std::size_t val_bits = 0;
        for (const AtomSlot& a : atoms)
          val_bits += a.sort == Sort::object ? ng : nm;
        for (std::size_t mask = 0; mask < (std::size_t{1} << val_bits); ++mask) {
          Model m{ctx, {}, {}};
          std::size_t bit = 0;
          for (const AtomSlot& a : atoms) {
            const std::size_t n = a.sort == Sort::object ? ng : nm;
            CrispSet s(a.sort, n);
            for (std::size_t i = 0; i < n; ++i, ++bit)
              if ((mask >> bit) & 1) s.add(i);
            (a.sort == Sort::object ? m.v_obj : m.v_prop).emplace(a.name, std::move(s));
          }
          ++res.models_enumerated;

          Evaluator ev(m);
          for (std::size_t w = 0; w < m.ctx.universe_size(world_sort); ++w) {
            bool all = true;
            for (const Fptr& f : gamma)
              if (!ev.satisfies(w, f)) {
                all = false;
                break;
              }
            if (all) {
              res.found = true;
              res.model = std::move(m);
              res.world = w;
              return res;
            }
          }
        }

        // advance the incidence odometer
        std::size_t k = 0;
        while (k < ncells && ++cell[k] == vals.size()) cell[k++] = 0;
        if (k == ncells) break;
      }
    }
  return res;
}

}  // namespace

SatResult bounded_sat(const std::vector<Fptr>& gamma, Sort world_sort, std::size_t max_g,
                      std::size_t max_m) {
  if (max_g == 0 || max_m == 0)
    throw std::invalid_argument("bounded_sat: universe bounds must be positive");
  bool any_nec = false, any_suff = false;
  for (const Fptr& f : gamma) {
    if (f->sort != world_sort)
      throw std::invalid_argument(
          std::string("bounded_sat: formula sort does not match the ") +
          sort_name(world_sort) + "-sorted world");
    if (uses_index(f))
      throw std::invalid_argument("bounded_sat: indexed modalities are not searchable");
    any_nec = any_nec || uses_nec(f);
    any_suff = any_suff || uses_suff(f);
  }
  if (any_nec && any_suff)
    throw std::invalid_argument(
        "bounded_sat: mixed necessity and sufficiency modalities — only a pure fragment "
        "is searchable");

  if (!any_suff) return search_necessity(gamma, world_sort, max_g, max_m);

  // pure sufficiency: solve the translated problem, then complement the
  // witness relation; the same world satisfies the original input there
  std::vector<Fptr> translated;
  for (const Fptr& f : gamma) translated.push_back(translate_rho(f, RhoDirection::suff_to_nec));
  SatResult res = search_necessity(translated, world_sort, max_g, max_m);
  if (!res.found) return res;
  res.model = Model{res.model->ctx.complemented(), res.model->v_obj, res.model->v_prop};
  Evaluator ev(*res.model);
  for (const Fptr& f : gamma)
    if (!ev.satisfies(res.world, f))
      throw std::logic_error("bounded_sat: complemented witness failed re-verification");
  return res;
}

}  // namespace fcl
