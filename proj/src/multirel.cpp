#include "fcl/multirel.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "fcl/axioms.hpp"

namespace fcl {

namespace {

std::vector<std::vector<Degree>> zero_rows(std::size_t g, std::size_t m) {
  return std::vector<std::vector<Degree>>(g, std::vector<Degree>(m));
}

}  // namespace

MultiContext::MultiContext(std::vector<std::string> objects, std::vector<std::string> attributes)
    : objects_(std::move(objects)), attributes_(std::move(attributes)) {
  // Delegate universe validation (non-empty, duplicate-free) to the
  // single-relation constructor by building the zero relation once.
  cache_.emplace("0", FuzzyContext(objects_, attributes_,
                                   zero_rows(objects_.size(), attributes_.size())));
}

void MultiContext::add_relation(const std::string& name, std::vector<std::vector<Degree>> rows) {
  // Identifier-shaped names only: anything else (in particular "0") would
  // collide with the index-term constant syntax and the cache keys.
  bool ok = !name.empty() && (std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_');
  for (char ch : name)
    ok = ok && (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_');
  if (!ok) throw std::invalid_argument("relation name must be an identifier: '" + name + "'");
  if (primitive_.count(name))
    throw std::invalid_argument("duplicate relation name: " + name);
  primitive_.emplace(name, FuzzyContext(objects_, attributes_, std::move(rows)));
  // Compound caches built before this relation existed stay valid: they could
  // only have referenced previously declared primitives (unknown ones throw).
}

std::vector<std::string> MultiContext::relation_names() const {
  std::vector<std::string> out;
  for (const auto& kv : primitive_) out.push_back(kv.first);
  return out;
}

const FuzzyContext& MultiContext::derived(const ITerm& idx) const { return derived(idx.get()); }

const FuzzyContext& MultiContext::derived(const IndexTerm* idx) const {
  if (!idx) throw std::invalid_argument("modality without a relation index in a multi-relational context");
  ITerm key_owner;  // only for printing compound keys
  std::string key;
  switch (idx->kind) {
    case IndexTerm::Kind::zero: key = "0"; break;
    case IndexTerm::Kind::primitive: key = idx->name; break;
    default: {
      // Reprint through a shared handle; the cache key is the canonical text.
      key_owner = ITerm(idx, [](const IndexTerm*) {});  // non-owning alias
      key = print_index_term(key_owner);
      break;
    }
  }
  auto hit = cache_.find(key);
  if (hit != cache_.end()) return hit->second;
  if (idx->kind == IndexTerm::Kind::primitive) {
    auto p = primitive_.find(idx->name);
    if (p == primitive_.end()) throw std::out_of_range("undeclared relation: " + idx->name);
    return cache_.emplace(key, p->second).first->second;
  }

  FuzzyContext result(objects_, attributes_, zero_rows(n_objects(), n_attributes()));
  if (idx->kind == IndexTerm::Kind::complement) {
    result = derived(idx->left.get()).complemented();
  } else {
    const FuzzyContext& l = derived(idx->left.get());
    const FuzzyContext& r = derived(idx->right.get());
    bool is_meet = idx->kind == IndexTerm::Kind::meet;
    for (std::size_t g = 0; g < n_objects(); ++g)
      for (std::size_t m = 0; m < n_attributes(); ++m)
        result.at(g, m) = is_meet ? min(l.at(g, m), r.at(g, m)) : max(l.at(g, m), r.at(g, m));
  }
  return cache_.emplace(key, std::move(result)).first->second;
}

namespace {

// Facade over the single-relation evaluator: the base context slot is the
// zero relation (never consulted — the lookup intercepts every modality and
// rejects bare ones).
Model facade_model(const MultiModel& m) {
  Model out{m.ctx.derived(IndexTerm::zero()), m.v_obj, m.v_prop};
  return out;
}

}  // namespace

CrispSet truth_set(const MultiModel& m, const Fptr& f) {
  Model base = facade_model(m);
  Evaluator ev(base, [&m](const IndexTerm* t) -> const FuzzyContext& { return m.ctx.derived(t); });
  return ev.truth(f);
}

bool satisfies(const MultiModel& m, Sort world_sort, std::size_t world, const Fptr& f) {
  if (f->sort != world_sort)
    throw std::invalid_argument("formula sort does not match the world's sort");
  if (world >= m.ctx.universe_size(world_sort))
    throw std::out_of_range("world index out of range");
  Model base = facade_model(m);
  Evaluator ev(base, [&m](const IndexTerm* t) -> const FuzzyContext& { return m.ctx.derived(t); });
  return ev.truth(f).contains(world);
}

namespace {

// --- index-term equality over small algebras ------------------------------
//
// Values are small ints.  3-chain: {0,1,2} for {0, 1/2, 1}; meet/join are
// min/max and complement is 2-v.  De Morgan 4-lattice: 0 < a,b < 1 with a,b
// incomparable and self-complemented, encoded 0,1,2,3 with table lookups.

constexpr int dm_meet[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 0, 2, 2}, {0, 1, 2, 3}};
constexpr int dm_join[4][4] = {{0, 1, 2, 3}, {1, 1, 3, 3}, {2, 3, 2, 3}, {3, 3, 3, 3}};
constexpr int dm_compl[4] = {3, 1, 2, 0};

int eval_kleene(const IndexTerm* t, const std::map<std::string, int>& env) {
  switch (t->kind) {
    case IndexTerm::Kind::zero: return 0;
    case IndexTerm::Kind::primitive: return env.at(t->name);
    case IndexTerm::Kind::meet: return std::min(eval_kleene(t->left.get(), env), eval_kleene(t->right.get(), env));
    case IndexTerm::Kind::join: return std::max(eval_kleene(t->left.get(), env), eval_kleene(t->right.get(), env));
    case IndexTerm::Kind::complement: return 2 - eval_kleene(t->left.get(), env);
  }
  return 0;
}

int eval_dm(const IndexTerm* t, const std::map<std::string, int>& env) {
  switch (t->kind) {
    case IndexTerm::Kind::zero: return 0;
    case IndexTerm::Kind::primitive: return env.at(t->name);
    case IndexTerm::Kind::meet: return dm_meet[eval_dm(t->left.get(), env)][eval_dm(t->right.get(), env)];
    case IndexTerm::Kind::join: return dm_join[eval_dm(t->left.get(), env)][eval_dm(t->right.get(), env)];
    case IndexTerm::Kind::complement: return dm_compl[eval_dm(t->left.get(), env)];
  }
  return 0;
}

template <typename Eval>
bool agree_on_all(const ITerm& lhs, const ITerm& rhs, const std::vector<std::string>& prims,
                  int base, Eval eval) {
  std::map<std::string, int> env;
  for (const auto& p : prims) env[p] = 0;
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < prims.size(); ++k) total *= static_cast<std::uint64_t>(base);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::uint64_t rest = mask;
    for (const auto& p : prims) {
      env[p] = static_cast<int>(rest % base);
      rest /= base;
    }
    if (eval(lhs.get(), env) != eval(rhs.get(), env)) return false;
  }
  return true;
}

}  // namespace

ZaVerdict za_compare(const ITerm& lhs, const ITerm& rhs) {
  if (!lhs || !rhs) throw std::invalid_argument("za_compare: null index term");
  std::set<std::string> prim_set;
  collect_primitives(lhs, prim_set);
  collect_primitives(rhs, prim_set);
  std::vector<std::string> prims(prim_set.begin(), prim_set.end());
  if (prims.size() > 8)
    throw std::invalid_argument("za_compare: more than 8 distinct primitive indices");
  ZaVerdict v{};
  v.kleene = agree_on_all(lhs, rhs, prims, 3, eval_kleene);
  v.de_morgan = agree_on_all(lhs, rhs, prims, 4, eval_dm);
  return v;
}

bool za_equal(const ITerm& lhs, const ITerm& rhs) { return za_compare(lhs, rhs).kleene; }

ITerm random_index_term(std::mt19937_64& rng, const std::vector<std::string>& prims,
                        std::size_t depth) {
  auto leaf = [&]() -> ITerm {
    if (prims.empty() || rng() % 8 == 0) return IndexTerm::zero();
    return IndexTerm::prim(prims[rng() % prims.size()]);
  };
  if (depth == 0) return leaf();
  switch (rng() % 5) {
    case 0: return leaf();
    case 1: return IndexTerm::meet_of(random_index_term(rng, prims, depth - 1),
                                      random_index_term(rng, prims, depth - 1));
    case 2: return IndexTerm::join_of(random_index_term(rng, prims, depth - 1),
                                      random_index_term(rng, prims, depth - 1));
    default: return IndexTerm::compl_of(random_index_term(rng, prims, depth - 1));
  }
}

namespace {

// --- randomized validity of the indexed-extension schemas -----------------

const std::vector<Degree>& bm_grid() {
  static const std::vector<Degree> grid = {
      Degree::zero(), Degree(3, 10), Degree(1, 2), Degree(3, 5), Degree(7, 10), Degree::one()};
  return grid;
}

CrispSet random_subset(std::mt19937_64& rng, Sort s, std::size_t universe) {
  CrispSet out(s, universe);
  for (std::size_t k = 0; k < universe; ++k)
    if (rng() % 2) out.add(k);
  return out;
}

MultiModel random_multi_model(std::mt19937_64& rng, std::vector<std::string>& prims_out) {
  std::size_t g = 1 + rng() % 3, m = 1 + rng() % 3;
  std::vector<std::string> objects, attributes;
  for (std::size_t k = 0; k < g; ++k) objects.push_back("g" + std::to_string(k + 1));
  for (std::size_t k = 0; k < m; ++k) attributes.push_back("m" + std::to_string(k + 1));
  MultiContext ctx(objects, attributes);
  std::size_t n_rel = 1 + rng() % 3;
  prims_out.clear();
  const auto& grid = bm_grid();
  for (std::size_t r = 0; r < n_rel; ++r) {
    std::string name(1, static_cast<char>('a' + r));
    std::vector<std::vector<Degree>> rows(g, std::vector<Degree>(m));
    for (auto& row : rows)
      for (auto& cell : row) cell = grid[rng() % grid.size()];
    ctx.add_relation(name, std::move(rows));
    prims_out.push_back(name);
  }
  MultiModel model{std::move(ctx), {}, {}};
  model.v_obj["p"] = random_subset(rng, Sort::object, g);
  model.v_prop["q"] = random_subset(rng, Sort::property, m);
  return model;
}

// Shallow random indexed formula: atoms, negation, conjunction, and indexed
// modalities of both kinds.
Fptr random_indexed_formula(std::mt19937_64& rng, Sort sort, const std::vector<std::string>& prims,
                            std::size_t depth) {
  auto at = [&](Sort s) { return atom(s == Sort::object ? "p" : "q", s); };
  if (depth == 0 || rng() % 4 == 0) return at(sort);
  switch (rng() % 4) {
    case 0: return neg(random_indexed_formula(rng, sort, prims, depth - 1));
    case 1:
      return conj(random_indexed_formula(rng, sort, prims, depth - 1),
                  random_indexed_formula(rng, sort, prims, depth - 1));
    default: {
      const auto& grid = bm_grid();
      WeightMark mark{grid[rng() % grid.size()], rng() % 2 == 1};
      ITerm idx = random_index_term(rng, prims, 1);
      Fptr arg = random_indexed_formula(rng, opposite(sort), prims, depth - 1);
      return rng() % 2 ? nec(mark, arg, idx) : suff(mark, arg, idx);
    }
  }
}

}  // namespace

BmAxiomReport check_bm_axioms(std::size_t trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  BmAxiomReport report;
  report.seed = seed;
  report.trials = trials;
  const auto& grid = bm_grid();

  for (std::size_t trial = 0; trial < trials; ++trial) {
    std::vector<std::string> prims;
    MultiModel model = random_multi_model(rng, prims);

    AxiomArgs args;
    args.c = grid[rng() % grid.size()];
    args.strict_mark = rng() % 2 == 1;
    args.phi = random_indexed_formula(rng, rng() % 2 ? Sort::object : Sort::property, prims, 2);
    args.i = random_index_term(rng, prims, 2);
    args.j = random_index_term(rng, prims, 2);

    std::vector<std::pair<AxiomId, AxiomArgs>> instances;
    instances.emplace_back(AxiomId::def_u, args);
    instances.emplace_back(AxiomId::def_i, args);
    {
      AxiomArgs a = args;
      a.j = nullptr;
      instances.emplace_back(AxiomId::def_c, a);
    }
    {
      AxiomArgs a;
      a.phi = args.phi;
      instances.emplace_back(AxiomId::def_0, a);
    }
    // Core schemas with one relation index threaded through: each instance
    // only ever reads a single derived relation, so single-relation
    // soundness carries over verbatim.
    {
      AxiomArgs a;
      a.c = args.c;
      a.phi = args.phi;
      a.psi = random_indexed_formula(rng, args.phi->sort, prims, 1);
      a.index = args.i;
      instances.emplace_back(AxiomId::k_nec, a);
      instances.emplace_back(AxiomId::k_suff, a);
      AxiomArgs b;
      b.c = a.c;
      b.phi = a.phi;
      b.index = a.index;
      instances.emplace_back(AxiomId::b_nec, b);
      instances.emplace_back(AxiomId::con1, b);
      instances.emplace_back(AxiomId::con2, b);
      // grid ends with 1, which the strict symmetry schema excludes
      b.c = grid[rng() % (grid.size() - 1)];
      instances.emplace_back(AxiomId::b_suff_strict, b);
    }

    for (const auto& [id, a] : instances) {
      Fptr inst = instantiate_axiom(id, a);
      CrispSet truth = truth_set(model, inst);
      ++report.instances_checked;
      if (!truth.is_full()) {
        std::ostringstream msg;
        msg << axiom_name(id) << " fails at trial " << trial << ", "
            << sort_name(inst->sort) << " world "
            << [&] {
                 for (std::size_t w = 0; w < truth.universe_size(); ++w)
                   if (!truth.contains(w)) return w;
                 return std::size_t(0);
               }()
            << ": " << print_formula(inst);
        report.failures.push_back(msg.str());
      }
    }
  }
  return report;
}

}  // namespace fcl
