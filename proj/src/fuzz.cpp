#include "fcl/fuzz.hpp"

#include <stdexcept>
#include <utility>

namespace fcl {

std::set<Degree> random_grid(Rng& rng, std::size_t extra) {
  std::set<Degree> grid{Degree::zero(), Degree::one()};
  std::uniform_int_distribution<int> den(2, 6);
  for (std::size_t k = 0; k < extra; ++k) {
    int q = den(rng);
    Degree d(std::uniform_int_distribution<int>(1, q - 1)(rng), q);
    grid.insert(d);
    grid.insert(d.complement());
  }
  return grid;
}

FuzzyContext random_context(Rng& rng, std::size_t max_g, std::size_t max_m,
                            const std::set<Degree>& grid) {
  if (max_g == 0 || max_m == 0) throw std::invalid_argument("random_context: empty bounds");
  std::vector<Degree> pool(grid.begin(), grid.end());
  if (pool.empty()) throw std::invalid_argument("random_context: empty degree grid");
  std::size_t ng = std::uniform_int_distribution<std::size_t>(1, max_g)(rng);
  std::size_t nm = std::uniform_int_distribution<std::size_t>(1, max_m)(rng);
  std::vector<std::string> gs, ms;
  for (std::size_t i = 0; i < ng; ++i) gs.push_back("g" + std::to_string(i + 1));
  for (std::size_t i = 0; i < nm; ++i) ms.push_back("m" + std::to_string(i + 1));
  std::vector<std::vector<Degree>> rows(ng, std::vector<Degree>(nm));
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (auto& row : rows)
    for (auto& cell : row) cell = pool[pick(rng)];
  return FuzzyContext(std::move(gs), std::move(ms), std::move(rows));
}

Model random_model(Rng& rng, std::size_t max_g, std::size_t max_m,
                   const std::set<Degree>& grid, const std::vector<std::string>& obj_atoms,
                   const std::vector<std::string>& prop_atoms) {
  Model m{random_context(rng, max_g, max_m, grid), {}, {}};
  for (const auto& name : obj_atoms) {
    CrispSet s(Sort::object, m.ctx.n_objects());
    for (std::size_t i = 0; i < m.ctx.n_objects(); ++i)
      if (rng() & 1) s.add(i);
    m.v_obj.emplace(name, std::move(s));
  }
  for (const auto& name : prop_atoms) {
    CrispSet s(Sort::property, m.ctx.n_attributes());
    for (std::size_t i = 0; i < m.ctx.n_attributes(); ++i)
      if (rng() & 1) s.add(i);
    m.v_prop.emplace(name, std::move(s));
  }
  return m;
}

Fptr random_formula(Rng& rng, Sort sort, const FormulaGenOptions& opt) {
  const auto& atoms = sort == Sort::object ? opt.obj_atoms : opt.prop_atoms;
  if (atoms.empty())
    throw std::invalid_argument(std::string("random_formula: no ") + sort_name(sort) +
                                " atoms to draw from");
  const bool modal = opt.allow_nec || opt.allow_suff;
  // depth exhausted: atoms only; modalities disabled: stay propositional
  const int hi = opt.max_depth == 0 ? 0 : (modal ? 4 : 2);
  int choice = std::uniform_int_distribution<int>(0, hi)(rng);
  switch (choice) {
    case 0:
      return atom(atoms[std::uniform_int_distribution<std::size_t>(0, atoms.size() - 1)(rng)],
                  sort);
    case 1:
    case 2: {
      FormulaGenOptions sub = opt;
      sub.max_depth = opt.max_depth - 1;
      if (choice == 1) return neg(random_formula(rng, sort, sub));
      return conj(random_formula(rng, sort, sub), random_formula(rng, sort, sub));
    }
    default: {
      static const Degree kDefault[] = {Degree::zero(), Degree(1, 2), Degree::one()};
      const Degree* pool = opt.marks.empty() ? kDefault : opt.marks.data();
      std::size_t n = opt.marks.empty() ? 3 : opt.marks.size();
      WeightMark mark{pool[std::uniform_int_distribution<std::size_t>(0, n - 1)(rng)],
                      static_cast<bool>(rng() & 1)};
      FormulaGenOptions sub = opt;
      sub.max_depth = opt.max_depth - 1;
      Fptr arg = random_formula(rng, opposite(sort), sub);
      bool use_nec = opt.allow_nec && (!opt.allow_suff || (rng() & 1));
      return use_nec ? nec(mark, std::move(arg)) : suff(mark, std::move(arg));
    }
  }
}

namespace {

// True when the instance fails at some world of its sort; reports the first.
bool fails_somewhere(const Model& m, const Fptr& inst, std::size_t& world) {
  CrispSet ts = truth_set(m, inst);
  for (std::size_t w = 0; w < ts.universe_size(); ++w)
    if (!ts.contains(w)) {
      world = w;
      return true;
    }
  return false;
}

Model drop_world(const Model& m, Sort s, std::size_t k) {
  std::vector<std::string> gs = m.ctx.names(Sort::object);
  std::vector<std::string> ms = m.ctx.names(Sort::property);
  std::vector<std::vector<Degree>> rows;
  for (std::size_t i = 0; i < m.ctx.n_objects(); ++i) {
    if (s == Sort::object && i == k) continue;
    std::vector<Degree> row;
    for (std::size_t j = 0; j < m.ctx.n_attributes(); ++j) {
      if (s == Sort::property && j == k) continue;
      row.push_back(m.ctx.at(i, j));
    }
    rows.push_back(std::move(row));
  }
  auto& names = s == Sort::object ? gs : ms;
  names.erase(names.begin() + static_cast<std::ptrdiff_t>(k));

  Model out{FuzzyContext(std::move(gs), std::move(ms), std::move(rows)), m.v_obj, m.v_prop};
  auto& table = s == Sort::object ? out.v_obj : out.v_prop;
  const std::size_t n = m.ctx.universe_size(s);
  for (auto& [name, old] : table) {
    CrispSet shrunk(s, n - 1);
    for (std::size_t i = 0, o = 0; i < n; ++i) {
      if (i == k) continue;
      if (old.contains(i)) shrunk.add(o);
      ++o;
    }
    old = std::move(shrunk);
  }
  return out;
}

Model set_cell(const Model& m, std::size_t i, std::size_t j, const Degree& v) {
  Model out = m;
  out.ctx.at(i, j) = v;
  return out;
}

/* Greedy witness minimization: repeatedly drop worlds and overwrite interior
 * (neither-0-nor-1) cells with 0 or 1 as long as the instance still fails
 * somewhere.  The result is locally minimal — no single such step keeps it
 * failing — which is usually small enough to read off the failure by hand.
 * Cells already at an extreme are left alone: flipping 0 to 1 and back can
 * both "succeed" when the instance ignores that cell, and shrinking must
 * strictly shrink something (worlds or interior cells) to terminate.
 */
std::pair<Model, std::size_t> shrink_counterexample(Model m, const Fptr& inst) {
  std::size_t world = 0;
  fails_somewhere(m, inst, world);
  bool improved = true;
  while (improved) {
    improved = false;
    for (Sort s : {Sort::object, Sort::property}) {
      for (std::size_t k = 0; k < m.ctx.universe_size(s) && m.ctx.universe_size(s) > 1; ++k) {
        Model cand = drop_world(m, s, k);
        std::size_t w = 0;
        if (fails_somewhere(cand, inst, w)) {
          m = std::move(cand);
          world = w;
          improved = true;
          k = static_cast<std::size_t>(-1);  // restart over the shrunk universe
        }
      }
    }
    for (std::size_t i = 0; i < m.ctx.n_objects(); ++i)
      for (std::size_t j = 0; j < m.ctx.n_attributes(); ++j) {
        if (m.ctx.at(i, j) == Degree::zero() || m.ctx.at(i, j) == Degree::one()) continue;
        for (const Degree& v : {Degree::zero(), Degree::one()}) {
          Model cand = set_cell(m, i, j, v);
          std::size_t w = 0;
          if (fails_somewhere(cand, inst, w)) {
            m = std::move(cand);
            world = w;
            improved = true;
            break;  // this cell is extremal now; move on
          }
        }
      }
  }
  return {std::move(m), world};
}

Degree pick_degree(Rng& rng, const std::vector<Degree>& pool, bool exclude_one) {
  std::vector<Degree> usable;
  for (const Degree& d : pool)
    if (!exclude_one || !d.is_one()) usable.push_back(d);
  return usable[std::uniform_int_distribution<std::size_t>(0, usable.size() - 1)(rng)];
}

}  // namespace

FuzzReport soundness_fuzz(const FuzzConfig& cfg) {
  Rng rng(cfg.seed);
  FuzzReport rep;
  rep.seed = cfg.seed;

  std::vector<AxiomId> schemas;
  for (AxiomId id : axiom_catalog()) {
    if (id == AxiomId::def_u || id == AxiomId::def_i || id == AxiomId::def_c ||
        id == AxiomId::def_0)
      continue;  // indexed schemas are exercised against multi-relational models
    if (!cfg.schema_filter.empty() && cfg.schema_filter.count(id) == 0) continue;
    schemas.push_back(id);
  }

  for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
    ++rep.trials;
    std::set<Degree> grid = random_grid(rng);
    std::vector<Degree> gv(grid.begin(), grid.end());
    Model m = random_model(rng, cfg.max_domain, cfg.max_domain, grid, {"p"}, {"q"});
    FormulaGenOptions opt;
    opt.max_depth = 2;
    opt.marks = gv;

    auto record = [&](const std::string& label, const AxiomArgs& args, const Fptr& inst) {
      auto [small, world] = shrink_counterexample(m, inst);
      rep.counterexamples.push_back(
          FuzzCounterexample{std::move(small), inst->sort, world, label, args, inst});
      return rep.counterexamples.size() >= cfg.max_counterexamples;
    };

    for (AxiomId id : schemas) {
      Sort s = (rng() & 1) ? Sort::object : Sort::property;
      AxiomArgs a;
      switch (id) {
        case AxiomId::k_nec:
        case AxiomId::k_nec_strict:
        case AxiomId::k_suff:
        case AxiomId::k_suff_strict:
          a.c = pick_degree(rng, gv, false);
          a.phi = random_formula(rng, s, opt);
          a.psi = random_formula(rng, s, opt);
          break;
        case AxiomId::b_nec_strict:
        case AxiomId::b_suff_strict:
          // the strict symmetry schemas exclude weight 1
          a.c = pick_degree(rng, gv, true);
          a.phi = random_formula(rng, s, opt);
          break;
        case AxiomId::bk_i:
        case AxiomId::bk_ii: {
          Degree x = pick_degree(rng, gv, false), y = pick_degree(rng, gv, false);
          while (x == y) y = pick_degree(rng, gv, false);
          a.c = max(x, y);
          a.d = min(x, y);
          a.phi = random_formula(rng, s, opt);
          break;
        }
        case AxiomId::bk_v_a:
        case AxiomId::bk_v_b:
        case AxiomId::bk_vi_a:
        case AxiomId::bk_vi_b:
          a.phi = random_formula(rng, s, opt);
          break;
        default:  // b_nec, b_suff, con1, con2
          a.c = pick_degree(rng, gv, false);
          a.phi = random_formula(rng, s, opt);
          break;
      }

      Fptr inst;
      std::string label = axiom_name(id);
      if (id == AxiomId::con1 && cfg.mutation == SchemaMutation::drop_con1_guard) {
        // the consistency axiom without its guard: fails exactly in the
        // exceptional case the guard exists to exclude
        inst = implies(nec({a.c->complement(), false}, neg(a.phi)),
                       neg(suff({*a.c, true}, a.phi)));
        label += " (guard dropped)";
      } else {
        inst = instantiate_axiom(id, a);
      }
      ++rep.instances_checked;
      std::size_t w = 0;
      if (fails_somewhere(m, inst, w))
        if (record(label, a, inst)) return rep;
    }

    // generalization rules preserve model-validity: a valid formula yields a
    // valid weight-1 necessity, an unsatisfiable one a valid sufficiency
    Sort s = (rng() & 1) ? Sort::object : Sort::property;
    Fptr f = random_formula(rng, s, opt);
    CrispSet ts = truth_set(m, f);
    std::vector<std::pair<std::string, Fptr>> ug;
    if (ts.is_full()) ug.emplace_back("UG nec", nec({Degree::one(), false}, f));
    if (ts.empty()) ug.emplace_back("UG suff", suff({Degree::one(), false}, f));
    // plus two instances that are forced to fire
    ug.emplace_back("UG nec", nec({Degree::one(), false}, or_(f, neg(f))));
    ug.emplace_back("UG suff", suff({Degree::one(), false}, conj(f, neg(f))));
    for (auto& [label, inst] : ug) {
      ++rep.instances_checked;
      std::size_t w = 0;
      if (fails_somewhere(m, inst, w))
        if (record(label, {}, inst)) return rep;
    }
  }
  return rep;
}

}  // namespace fcl
