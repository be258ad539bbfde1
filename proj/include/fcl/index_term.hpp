#pragma once

#include <cstddef>
#include <memory>
#include <set>
#include <string>

namespace fcl {

/* Relation index terms: the term algebra over primitive relation names with
 * intersection, union, complement, and the empty relation.  Terms are
 * immutable and shared; structural equality is what matters, so no
 * normalization happens at construction.
 */
struct IndexTerm;
using ITerm = std::shared_ptr<const IndexTerm>;

struct IndexTerm {
  enum class Kind { zero, primitive, meet, join, complement };

  Kind kind;
  std::string name;      // primitive only
  ITerm left, right;     // meet/join both, complement left only

  static ITerm zero();
  static ITerm prim(std::string name);
  static ITerm meet_of(ITerm a, ITerm b);
  static ITerm join_of(ITerm a, ITerm b);
  static ITerm compl_of(ITerm a);
};

bool iterm_equal(const ITerm& a, const ITerm& b);

// Canonical concrete syntax: `0`, names, `(a & b)`, `(a | b)`, `~a`.
std::string print_index_term(const ITerm& t);

// Parses the syntax above.  Throws ParseError (see parser.hpp) on bad input.
ITerm parse_index_term(const std::string& text);

// All primitive names occurring in the term.
void collect_primitives(const ITerm& t, std::set<std::string>& out);

}  // namespace fcl
