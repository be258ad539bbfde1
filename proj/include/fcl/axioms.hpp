#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fcl/formula.hpp"

namespace fcl {

/* Axiom schemas of the weighted calculus and its Boolean-indexed extension.
 *
 * Core schemas quantify over a weight c (the bookkeeping weakening pair also
 * over a second weight d with the side condition c > d) and one or two
 * formula metavariables.  The def_* schemas of the indexed extension
 * additionally carry index-term metavariables and a mark that may itself be
 * strict ([c] or [c+], chosen by AxiomArgs::strict_mark); for the core
 * schemas strictness is part of the schema identity instead.
 */
enum class AxiomId {
  k_nec,          // [c](a->b) -> ([c]a -> [c]b)
  k_nec_strict,   // [c+](a->b) -> ([c+]a -> [c+]b)
  b_nec,          // a -> [c]![c]!a
  b_nec_strict,   // a -> [c+]![c+]!a
  k_suff,         // [[c]](a & !b) -> ([[c]]!a -> [[c]]!b)
  k_suff_strict,  // strict marks throughout
  b_suff,         // a -> [[c]][[c]]a
  b_suff_strict,  // a -> [[c+]][[c+]]a
  con1,           // !([1]!a & [[1]]a) -> ([1-c]!a -> ![[c+]]a)
  con2,           // !([1]!a & [[1]]a) -> ([(1-c)+]!a -> ![[c]]a)
  bk_i,           // [c]a -> [d+]a        (c > d)
  bk_ii,          // [[c]]a -> [[d+]]a    (c > d)
  bk_iii,         // [c+]a -> [c]a
  bk_iv,          // [[c+]]a -> [[c]]a
  bk_v_a,         // ![1+]a
  bk_v_b,         // [0]a
  bk_vi_a,        // ![[1+]]a
  bk_vi_b,        // [[0]]a
  def_u,          // [x]^(i|j)a <-> ([x]^i a & [x]^j a)
  def_i,          // [[x]]^(i&j)a <-> ([[x]]^i a & [[x]]^j a)
  def_c,          // [x]^(~i)a <-> [[x]]^i !a
  def_0,          // [1]^0 a
};

struct AxiomArgs {
  std::optional<Degree> c, d;
  bool strict_mark = false;  // def_u/def_i/def_c: instantiate the mark as c+
  Fptr phi, psi;
  ITerm i, j;                // def-schema index metavariables
  ITerm index;               // optional: thread one relation index through a core schema
};

// ASCII schema names as used in proof scripts: K[c], K[c+], B[c], B[c+],
// K[[c]], K[[c+]], B[[c]], B[[c+]], CON1, CON2, BKi..BKiv, BKva, BKvb,
// BKvia, BKvib, DefU, DefI, DefC, Def0.
const char* axiom_name(AxiomId id);
std::optional<AxiomId> axiom_by_name(const std::string& name);
const std::vector<AxiomId>& axiom_catalog();

// Builds the schema instance for the given bindings.  Throws
// std::invalid_argument, prefixed with the schema name, on missing or
// spurious bindings, sort clashes, or side-condition violations (BKi/BKii
// require c > d strictly; exact rational comparison).
Fptr instantiate_axiom(AxiomId id, const AxiomArgs& args);

/* Proof systems: the full two-sorted calculus (wml), its necessity-only and
 * sufficiency-only fragments (wkb / wkf), and the Boolean multi-relational
 * extension (bml = full calculus plus the def_* schemas, the index-equality
 * rule, and indexed modalities in the language).
 */
enum class System { wml, wkb, wkf, bml };

const char* system_name(System s);  // "2WML", "2WKB", "2WKF", "2WBML"
std::optional<System> system_by_name(const std::string& name);

bool system_has_axiom(System s, AxiomId id);

enum class RuleId { mp, ug_nec, ug_suff, taut, eq };
bool system_has_rule(System s, RuleId r);

}  // namespace fcl
