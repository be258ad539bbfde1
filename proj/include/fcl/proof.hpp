#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fcl/axioms.hpp"
#include "fcl/formula.hpp"
#include "fcl/parser.hpp"

namespace fcl {

/* Hilbert-style proof scripts and their checker.
 *
 * A script is a numbered sequence of formulas, each carrying a justification:
 * a premise, a named axiom-schema instance with its bindings spelled out, a
 * propositional tautology, or an application of modus ponens, one of the two
 * necessitation-style rules, or (in the indexed system) the index-equality
 * rule.  The checker verifies every line against its stated justification —
 * it never searches for one.
 */
struct Justification {
  enum class Kind { premise, axiom, mp, ug_nec, ug_suff, taut, eq };

  Kind kind = Kind::premise;
  AxiomId axiom = AxiomId::k_nec;  // kind == axiom
  AxiomArgs args;                  // kind == axiom
  std::size_t ref1 = 0, ref2 = 0;  // cited step numbers (mp both, ug first)
  ITerm eq_lhs, eq_rhs;            // kind == eq: the two index terms
};

struct ProofLine {
  Fptr formula;
  Justification just;
  std::string text;  // source line, for diagnostics
};

struct ProofScript {
  SymbolTable symbols;
  std::vector<ProofLine> lines;
};

/* Script file format.  Header lines `obj <names...>` / `prop <names...>`
 * declare atom sorts; `#` starts a comment.  Each step reads
 *
 *   <n>. <formula> ; <justification>
 *
 * with steps numbered consecutively from 1 and justifications
 *
 *   premise
 *   taut
 *   mp <i> <j>
 *   ug-nec <i>
 *   ug-suff <i>
 *   ax <NAME> [c=<w>] [d=<w>] [i=<term>] [j=<term>] [idx=<term>]
 *             phi=<formula> [psi=<formula>]
 *   eq <term> = <term>
 *
 * Weights may carry a trailing `+` only for the Def* schemas, where the mark
 * is a schema parameter; the core schemas encode strictness in their name.
 * Throws std::runtime_error with the offending line number on structural
 * problems; formula and index-term syntax errors are wrapped the same way.
 */
ProofScript parse_proof_script(const std::string& text);

// Serializes a script back to the file format: sort declarations first (so
// atoms re-parse with the right sorts), then every step's text.  Parsing the
// result reproduces the script.
std::string render_proof_script(const ProofScript& script);

/* Premise-dependent lines are tracked through the proof: a use of UG on such
 * a line is legal only in the global reading of consequence (premises hold at
 * every world), not the local one (premises hold at the evaluation world).
 * The verdict reports which reading the accepted script establishes.
 */
enum class ConsequenceKind { local, global };

struct ProofVerdict {
  bool accepted = false;
  std::size_t failed_line = 0;  // 1-based step number; 0 when accepted
  std::string reason;
  ConsequenceKind kind = ConsequenceKind::local;
  std::vector<std::size_t> premise_lines;
  Fptr conclusion;  // last line of an accepted script
};

// Verifies the script line by line under the given system's language,
// axioms, and rules.  The overload with `premises` additionally requires the
// script's premise lines to match the given list (same order, structural
// equality).
ProofVerdict check_proof(const ProofScript& script, System system);
ProofVerdict check_proof(const ProofScript& script, const std::vector<Fptr>& premises,
                         System system);

/* Maps a proof in one fragment to a proof in the other, translating every
 * line with the fragment translation and rewriting each justification by the
 * corresponding schema (necessity K maps to sufficiency K and so on; the
 * translated bindings are adjusted so the translated lines check).  Input
 * scripts must be pure: CON1/CON2, indexed modalities, and eq lines have no
 * counterpart across the translation and are rejected with
 * std::invalid_argument.
 */
ProofScript translate_proof(const ProofScript& script, RhoDirection dir);

}  // namespace fcl
