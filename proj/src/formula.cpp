#include "fcl/formula.hpp"

#include <functional>
#include <stdexcept>

namespace fcl {

namespace {

std::size_t hash_mix(std::size_t seed, std::size_t v) {
  // boost-style combine; good enough for memo tables
  return seed ^ (v + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2));
}

std::size_t hash_of(Formula::Node n, Sort s, const std::string& sym, const Fptr& l, const Fptr& r,
                    const WeightMark& m, const ITerm& idx) {
  std::size_t h = hash_mix(static_cast<std::size_t>(n) * 31 + 7, static_cast<std::size_t>(s));
  if (!sym.empty()) h = hash_mix(h, std::hash<std::string>{}(sym));
  if (l) h = hash_mix(h, l->hash);
  if (r) h = hash_mix(h, r->hash);
  h = hash_mix(h, std::hash<Degree>{}(m.degree));
  h = hash_mix(h, m.strict ? 2 : 1);
  if (idx) h = hash_mix(h, std::hash<std::string>{}(print_index_term(idx)));
  return h;
}

Fptr make(Formula::Node n, Sort s, std::string sym, Fptr l, Fptr r, WeightMark m, ITerm idx) {
  auto f = std::make_shared<Formula>();
  f->node = n;
  f->sort = s;
  f->symbol = std::move(sym);
  f->left = std::move(l);
  f->right = std::move(r);
  f->mark = m;
  f->index = std::move(idx);
  f->hash = hash_of(f->node, f->sort, f->symbol, f->left, f->right, f->mark, f->index);
  return f;
}

}  // namespace

Fptr atom(std::string name, Sort s) {
  if (name.empty()) throw std::invalid_argument("atom name must be nonempty");
  return make(Formula::Node::atom, s, std::move(name), nullptr, nullptr, {Degree::zero()}, nullptr);
}

Fptr neg(Fptr f) {
  if (!f) throw std::invalid_argument("neg: null formula");
  if (f->node == Formula::Node::neg) return f->left;  // !!a collapses to a
  Sort s = f->sort;
  return make(Formula::Node::neg, s, "", std::move(f), nullptr, {Degree::zero()}, nullptr);
}

Fptr conj(Fptr a, Fptr b) {
  if (!a || !b) throw std::invalid_argument("conj: null formula");
  if (a->sort != b->sort)
    throw std::invalid_argument("conj: operands have different sorts (" +
                                std::string(sort_name(a->sort)) + " vs " + sort_name(b->sort) +
                                ")");
  Sort s = a->sort;
  return make(Formula::Node::conj, s, "", std::move(a), std::move(b), {Degree::zero()}, nullptr);
}

Fptr nec(WeightMark m, Fptr arg, ITerm index) {
  if (!arg) throw std::invalid_argument("nec: null formula");
  Sort s = opposite(arg->sort);
  return make(Formula::Node::nec, s, "", std::move(arg), nullptr, m, std::move(index));
}

Fptr suff(WeightMark m, Fptr arg, ITerm index) {
  if (!arg) throw std::invalid_argument("suff: null formula");
  Sort s = opposite(arg->sort);
  return make(Formula::Node::suff, s, "", std::move(arg), nullptr, m, std::move(index));
}

Fptr implies(Fptr a, Fptr b) { return neg(conj(std::move(a), neg(std::move(b)))); }

Fptr or_(Fptr a, Fptr b) { return neg(conj(neg(std::move(a)), neg(std::move(b)))); }

Fptr iff(Fptr a, Fptr b) {
  // sequence the two reads before the moves; argument order is unspecified
  Fptr forward = implies(a, b);
  return conj(std::move(forward), implies(std::move(b), std::move(a)));
}

Fptr expand_derived(DerivedKind kind, const Degree& c, Fptr arg, ITerm index) {
  WeightMark m{c.complement(), kind == DerivedKind::pos || kind == DerivedKind::suff_dual};
  bool suff_kind = kind == DerivedKind::suff_dual || kind == DerivedKind::suff_dual_strict;
  Fptr inner = neg(std::move(arg));
  Fptr boxed = suff_kind ? suff(m, std::move(inner), std::move(index))
                         : nec(m, std::move(inner), std::move(index));
  return neg(std::move(boxed));
}

bool formula_equal(const Fptr& a, const Fptr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->hash != b->hash || a->node != b->node || a->sort != b->sort) return false;
  switch (a->node) {
    case Formula::Node::atom:
      return a->symbol == b->symbol;
    case Formula::Node::neg:
      return formula_equal(a->left, b->left);
    case Formula::Node::conj:
      return formula_equal(a->left, b->left) && formula_equal(a->right, b->right);
    case Formula::Node::nec:
    case Formula::Node::suff:
      return a->mark == b->mark && iterm_equal(a->index, b->index) &&
             formula_equal(a->left, b->left);
  }
  return false;
}

namespace {

std::string print_mark(const WeightMark& m, bool suff_kind) {
  std::string w = m.degree.str() + (m.strict ? "+" : "");
  return suff_kind ? "[[" + w + "]]" : "[" + w + "]";
}

std::string print_index_suffix(const ITerm& idx) {
  if (!idx) return "";
  if (idx->kind == IndexTerm::Kind::primitive || idx->kind == IndexTerm::Kind::zero)
    return "^" + print_index_term(idx);
  std::string body = print_index_term(idx);
  // composites print with their own parens; complements need them added
  if (body.front() != '(') body = "(" + body + ")";
  return "^" + body;
}

// Prints at "unary" precedence: conjunctions get parenthesized, everything
// else stands bare.
std::string print_unary(const Fptr& f) {
  if (f->node == Formula::Node::conj) return "(" + print_formula(f) + ")";
  return print_formula(f);
}

}  // namespace

std::string print_formula(const Fptr& f) {
  switch (f->node) {
    case Formula::Node::atom:
      return f->symbol;
    case Formula::Node::neg:
      return "!" + print_unary(f->left);
    case Formula::Node::conj: {
      // '&' folds left in the grammar, so only a right-nested conjunct
      // needs parentheses
      std::string lhs = print_formula(f->left);
      std::string rhs = print_unary(f->right);
      return lhs + " & " + rhs;
    }
    case Formula::Node::nec:
    case Formula::Node::suff: {
      bool suff_kind = f->node == Formula::Node::suff;
      const char* tag = f->left->sort == Sort::property ? "_p" : "_o";
      return print_mark(f->mark, suff_kind) + tag + print_index_suffix(f->index) + " " +
             print_unary(f->left);
    }
  }
  return "";
}

namespace {

void deg_collect(const Fptr& f, std::set<Degree>& out) {
  if (!f) return;
  if (f->node == Formula::Node::nec || f->node == Formula::Node::suff) {
    out.insert(f->mark.degree);
    out.insert(f->mark.degree.complement());
  }
  deg_collect(f->left, out);
  deg_collect(f->right, out);
}

}  // namespace

std::set<Degree> deg_of(const Fptr& f) {
  std::set<Degree> out{Degree::zero(), Degree::one()};
  deg_collect(f, out);
  return out;
}

std::set<Degree> deg_of(const std::vector<Fptr>& fs) {
  std::set<Degree> out{Degree::zero(), Degree::one()};
  for (const auto& f : fs) deg_collect(f, out);
  return out;
}

namespace {

bool any_node(const Fptr& f, Formula::Node kind) {
  if (!f) return false;
  if (f->node == kind) return true;
  return any_node(f->left, kind) || any_node(f->right, kind);
}

bool any_index(const Fptr& f) {
  if (!f) return false;
  if (f->index) return true;
  return any_index(f->left) || any_index(f->right);
}

}  // namespace

bool uses_nec(const Fptr& f) { return any_node(f, Formula::Node::nec); }
bool uses_suff(const Fptr& f) { return any_node(f, Formula::Node::suff); }
bool uses_index(const Fptr& f) { return any_index(f); }

void collect_atoms(const Fptr& f, std::map<std::string, Sort>& out) {
  if (!f) return;
  if (f->node == Formula::Node::atom) {
    auto [it, inserted] = out.emplace(f->symbol, f->sort);
    if (!inserted && it->second != f->sort)
      throw std::invalid_argument("atom '" + f->symbol + "' occurs with both sorts");
    return;
  }
  collect_atoms(f->left, out);
  collect_atoms(f->right, out);
}

Fptr translate_rho(const Fptr& f, RhoDirection dir) {
  if (!f) throw std::invalid_argument("translate_rho: null formula");
  switch (f->node) {
    case Formula::Node::atom:
      return f;
    case Formula::Node::neg:
      return neg(translate_rho(f->left, dir));
    case Formula::Node::conj:
      return conj(translate_rho(f->left, dir), translate_rho(f->right, dir));
    case Formula::Node::nec:
    case Formula::Node::suff: {
      if (f->index)
        throw std::invalid_argument("translation is defined for plain (unindexed) formulas");
      bool is_suff = f->node == Formula::Node::suff;
      if (is_suff != (dir == RhoDirection::suff_to_nec))
        throw std::invalid_argument(
            dir == RhoDirection::suff_to_nec
                ? "formula is not in the sufficiency fragment (necessity modality found)"
                : "formula is not in the necessity fragment (sufficiency modality found)");
      Fptr body = neg(translate_rho(f->left, dir));
      return is_suff ? nec(f->mark, std::move(body)) : suff(f->mark, std::move(body));
    }
  }
  throw std::logic_error("translate_rho: unreachable");
}

}  // namespace fcl
