#pragma once

#include <map>
#include <optional>
#include <string>

#include "fcl/formula.hpp"
#include "fcl/parse_error.hpp"

namespace fcl {

// Declared atom sorts.  The parser consults this table and records any atom
// whose sort it infers from context, so later formulas in the same session
// see a consistent assignment.
struct SymbolTable {
  std::map<std::string, Sort> sorts;

  void declare(const std::string& name, Sort s);
  std::optional<Sort> lookup(const std::string& name) const;
};

/* Parses the concrete formula syntax:
 *
 *   formula := iff
 *   iff     := imp ('<->' imp)*          (right-associative)
 *   imp     := or ('->' or)*             (right-associative)
 *   or      := and ('|' and)*
 *   and     := unary ('&' unary)*
 *   unary   := '!' unary | MOD unary | IDENT | '(' formula ')'
 *   MOD     := '[' W ']' TAG IDX? | '[[' W ']]' TAG IDX?
 *            | '<' W '>' TAG IDX? | '<<' W '>>' TAG IDX?
 *   W       := (INT | INT '/' INT | DECIMAL) '+'?
 *   TAG     := '_p' | '_o'
 *   IDX     := '^' index-term
 *
 * The _p/_o tag names the sort of the modality's argument.  Sorts propagate
 * downward from expected_sort and from modality tags; an atom whose sort
 * cannot be determined is an error unless the symbol table already knows it.
 * Angle modalities are expanded to their definitions during parsing.
 *
 * Throws ParseError with a character position on any failure.
 */
Fptr parse_formula(const std::string& text, SymbolTable& symbols,
                   std::optional<Sort> expected_sort = std::nullopt);

}  // namespace fcl
