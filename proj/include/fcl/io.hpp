#pragma once

#include <string>
#include <variant>

#include "fcl/concepts.hpp"
#include "fcl/model.hpp"
#include "fcl/multirel.hpp"

namespace fcl {

/* File formats.
 *
 * JSON is the canonical machine format.  A context file is an object with
 * "objects" and "attributes" (arrays of names) and exactly one of
 *   "incidence":  row-major array of degree cells, or
 *   "relations":  {name: rows, ...} for a multi-relational context.
 * A model file is a context file with an optional "valuation" block,
 *   "valuation": {"object": {atom: [member names]}, "property": {...}},
 * either side of which may be omitted.
 *
 * Degree cells are strings ("3/10", "0.3", "1") parsed exactly; the JSON
 * integers 0 and 1 are also accepted so crisp contexts read naturally.  Other
 * numeric cells are rejected — a JSON 0.3 travels as a binary double and no
 * longer means three tenths — with a hint to quote the value instead.
 *
 * CSV is accepted for plain single-relation contexts only: a header line
 * ",m1,m2,..." naming the attributes, then one line "g,cell,cell,..." per
 * object.  Cells are trimmed; there is no quoting, so names must not contain
 * commas.  Multi-relational contexts and valuations need JSON.
 *
 * Writers emit canonical form: keys sorted, two-space indent, degrees as
 * strings, valuation members in universe order, trailing newline.  Loading a
 * canonical file and saving it again reproduces it byte for byte.
 */

using AnyContext = std::variant<FuzzyContext, MultiContext>;
using AnyModel = std::variant<Model, MultiModel>;

// Parse from text; format is sniffed (leading '{' = JSON, otherwise CSV).
// Throws std::runtime_error with row/column or key context on bad input.
AnyContext parse_context(const std::string& text);
AnyModel parse_model(const std::string& text);

// Whole-file convenience wrappers around the parsers.
AnyContext load_context(const std::string& path);
AnyModel load_model(const std::string& path);

std::string to_json(const AnyContext& ctx);
std::string to_json(const AnyModel& m);
std::string to_csv(const FuzzyContext& ctx);

// Hasse diagram of the lattice order (edges are covers, drawn bottom-up).
// Nodes appear in the lattice's canonical concept order and are labeled
// "extent / intent" with member names, so output is deterministic.
std::string lattice_dot(const ConceptLattice& lat, const FuzzyContext& ctx);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace fcl
