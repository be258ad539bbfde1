#include "fcl/context.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace fcl {

namespace {

void require_same_universe(const CrispSet& a, const CrispSet& b) {
  if (a.sort != b.sort || a.bits.size() != b.bits.size())
    throw std::invalid_argument("set operation across different universes");
}

}  // namespace

std::size_t CrispSet::count() const {
  return (std::size_t)std::count(bits.begin(), bits.end(), (char)1);
}

bool CrispSet::subset_of(const CrispSet& other) const {
  require_same_universe(*this, other);
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (bits[i] && !other.bits[i]) return false;
  return true;
}

CrispSet CrispSet::complement() const {
  CrispSet out(sort, bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) out.bits[i] = !bits[i];
  return out;
}

CrispSet CrispSet::intersect(const CrispSet& other) const {
  require_same_universe(*this, other);
  CrispSet out(sort, bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) out.bits[i] = bits[i] && other.bits[i];
  return out;
}

CrispSet CrispSet::unite(const CrispSet& other) const {
  require_same_universe(*this, other);
  CrispSet out(sort, bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) out.bits[i] = bits[i] || other.bits[i];
  return out;
}

CrispSet full_set(Sort s, std::size_t universe) {
  CrispSet out(s, universe);
  std::fill(out.bits.begin(), out.bits.end(), (char)1);
  return out;
}

CrispSet singleton(Sort s, std::size_t universe, std::size_t member) {
  CrispSet out(s, universe);
  out.add(member);
  return out;
}

CrispSet cut(const FuzzySet& fs, const Degree& c, bool strict) {
  CrispSet out(fs.sort, fs.grades.size());
  for (std::size_t i = 0; i < fs.grades.size(); ++i)
    out.bits[i] = strict ? fs.grades[i] > c : fs.grades[i] >= c;
  return out;
}

FuzzyContext::FuzzyContext(std::vector<std::string> objects, std::vector<std::string> attributes,
                           std::vector<std::vector<Degree>> rows)
    : objects_(std::move(objects)), attributes_(std::move(attributes)) {
  if (objects_.empty() || attributes_.empty())
    throw std::invalid_argument("context universes must be non-empty");
  for (Sort s : {Sort::object, Sort::property}) {
    std::set<std::string> seen;
    for (const auto& n : names(s))
      if (n.empty() || !seen.insert(n).second)
        throw std::invalid_argument("duplicate or empty element name '" + n + "'");
  }
  if (rows.size() != objects_.size())
    throw std::invalid_argument("incidence row count does not match objects");
  cells_.reserve(objects_.size() * attributes_.size());
  for (const auto& row : rows) {
    if (row.size() != attributes_.size())
      throw std::invalid_argument("incidence row width does not match attributes");
    cells_.insert(cells_.end(), row.begin(), row.end());
  }
}

std::size_t FuzzyContext::index_of(Sort s, const std::string& name) const {
  const auto& list = names(s);
  auto it = std::find(list.begin(), list.end(), name);
  if (it == list.end())
    throw std::out_of_range(std::string("unknown ") + sort_name(s) + " '" + name + "'");
  return (std::size_t)(it - list.begin());
}

FuzzyContext FuzzyContext::complemented() const {
  FuzzyContext out = *this;
  for (auto& d : out.cells_) d = d.complement();
  return out;
}

PossMeasures measures(const FuzzyContext& ctx, Sort pivot_sort, std::size_t pivot,
                      const CrispSet& subset) {
  if (subset.sort != opposite(pivot_sort))
    throw std::invalid_argument("measures: subset must live on the sort opposite the pivot");
  std::size_t n = ctx.universe_size(subset.sort);
  if (subset.universe_size() != n)
    throw std::invalid_argument("measures: subset universe does not match context");
  auto dist = [&](std::size_t x) {
    return pivot_sort == Sort::object ? ctx.at(pivot, x) : ctx.at(x, pivot);
  };
  PossMeasures r{Degree::zero(), Degree::one(), Degree::one(), Degree::zero()};
  for (std::size_t x = 0; x < n; ++x) {
    Degree pi = dist(x);
    if (subset.contains(x)) {
      r.possibility = max(r.possibility, pi);
      r.guaranteed = min(r.guaranteed, pi);
    } else {
      r.necessity = min(r.necessity, pi.complement());
      r.potential = max(r.potential, pi.complement());
    }
  }
  return r;
}

FuzzySet derive(const FuzzyContext& ctx, const CrispSet& input, DeriveOp op) {
  if (op == DeriveOp::plus && input.sort != Sort::object)
    throw std::invalid_argument("derive: plus applies to object sets only");
  if (op == DeriveOp::minus && input.sort != Sort::property)
    throw std::invalid_argument("derive: minus applies to property sets only");
  std::size_t in_n = ctx.universe_size(input.sort);
  if (input.universe_size() != in_n)
    throw std::invalid_argument("derive: set universe does not match context");
  Sort out_sort = opposite(input.sort);
  std::size_t out_n = ctx.universe_size(out_sort);
  auto inc = [&](std::size_t in_i, std::size_t out_i) {
    return input.sort == Sort::object ? ctx.at(in_i, out_i) : ctx.at(out_i, in_i);
  };
  FuzzySet out(out_sort, out_n);
  for (std::size_t o = 0; o < out_n; ++o) {
    if (op == DeriveOp::diamond) {
      // sup over the whole input universe of min(incidence, characteristic)
      Degree acc = Degree::zero();
      for (std::size_t i = 0; i < in_n; ++i)
        if (input.contains(i)) acc = max(acc, inc(i, o));
      out.grades[o] = acc;
    } else {
      Degree acc = Degree::one();
      for (std::size_t i = 0; i < in_n; ++i) {
        Degree chi = input.contains(i) ? Degree::one() : Degree::zero();
        // plus/minus: characteristic => incidence;  box: incidence => characteristic
        Degree step = (op == DeriveOp::box) ? residuum(inc(i, o), chi) : residuum(chi, inc(i, o));
        acc = min(acc, step);
      }
      out.grades[o] = acc;
    }
  }
  return out;
}

}  // namespace fcl
