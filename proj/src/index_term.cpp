#include "fcl/index_term.hpp"

#include <cctype>

#include "fcl/parse_error.hpp"

namespace fcl {

ITerm IndexTerm::zero() { return std::make_shared<IndexTerm>(IndexTerm{Kind::zero, "", {}, {}}); }

ITerm IndexTerm::prim(std::string name) {
  return std::make_shared<IndexTerm>(IndexTerm{Kind::primitive, std::move(name), {}, {}});
}

ITerm IndexTerm::meet_of(ITerm a, ITerm b) {
  return std::make_shared<IndexTerm>(IndexTerm{Kind::meet, "", std::move(a), std::move(b)});
}

ITerm IndexTerm::join_of(ITerm a, ITerm b) {
  return std::make_shared<IndexTerm>(IndexTerm{Kind::join, "", std::move(a), std::move(b)});
}

ITerm IndexTerm::compl_of(ITerm a) {
  return std::make_shared<IndexTerm>(IndexTerm{Kind::complement, "", std::move(a), {}});
}

bool iterm_equal(const ITerm& a, const ITerm& b) {
  if (a == b) return true;  // covers both-null and shared nodes
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case IndexTerm::Kind::zero:
      return true;
    case IndexTerm::Kind::primitive:
      return a->name == b->name;
    case IndexTerm::Kind::complement:
      return iterm_equal(a->left, b->left);
    case IndexTerm::Kind::meet:
    case IndexTerm::Kind::join:
      return iterm_equal(a->left, b->left) && iterm_equal(a->right, b->right);
  }
  return false;
}

std::string print_index_term(const ITerm& t) {
  switch (t->kind) {
    case IndexTerm::Kind::zero:
      return "0";
    case IndexTerm::Kind::primitive:
      return t->name;
    case IndexTerm::Kind::complement:
      return "~" + print_index_term(t->left);
    case IndexTerm::Kind::meet:
      return "(" + print_index_term(t->left) + " & " + print_index_term(t->right) + ")";
    case IndexTerm::Kind::join:
      return "(" + print_index_term(t->left) + " | " + print_index_term(t->right) + ")";
  }
  return "";
}

namespace {

// Recursive-descent parser over the raw string; `&` binds tighter than `|`,
// `~` tighter than both.
struct ITermParser {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  ITerm parse_union() {
    ITerm t = parse_inter();
    while (peek() == '|') {
      ++pos;
      t = IndexTerm::join_of(t, parse_inter());
    }
    return t;
  }

  ITerm parse_inter() {
    ITerm t = parse_unary();
    while (peek() == '&') {
      ++pos;
      t = IndexTerm::meet_of(t, parse_unary());
    }
    return t;
  }

  ITerm parse_unary() {
    char c = peek();
    if (c == '~') {
      ++pos;
      return IndexTerm::compl_of(parse_unary());
    }
    if (c == '(') {
      ++pos;
      ITerm t = parse_union();
      if (peek() != ')') throw ParseError("expected ')' in index term", pos);
      ++pos;
      return t;
    }
    if (c == '0') {
      ++pos;
      return IndexTerm::zero();
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
        ++pos;
      return IndexTerm::prim(text.substr(start, pos - start));
    }
    throw ParseError("expected an index term", pos);
  }
};

}  // namespace

ITerm parse_index_term(const std::string& text) {
  ITermParser p{text};
  ITerm t = p.parse_union();
  p.skip_ws();
  if (p.pos != text.size()) throw ParseError("trailing input after index term", p.pos);
  return t;
}

void collect_primitives(const ITerm& t, std::set<std::string>& out) {
  if (!t) return;
  if (t->kind == IndexTerm::Kind::primitive) out.insert(t->name);
  collect_primitives(t->left, out);
  collect_primitives(t->right, out);
}

}  // namespace fcl
