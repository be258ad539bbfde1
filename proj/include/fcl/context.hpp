#pragma once

#include <string>
#include <vector>

#include "fcl/degree.hpp"

namespace fcl {

// The two sorts of the language and of context universes: s1 = objects,
// s2 = properties.  A set or formula always knows which side it lives on.
enum class Sort { object, property };

inline Sort opposite(Sort s) { return s == Sort::object ? Sort::property : Sort::object; }
inline const char* sort_name(Sort s) { return s == Sort::object ? "object" : "property"; }

// Crisp subset of one universe, as a tagged bit vector over that universe's
// element order.  All binary operations insist on matching sort and size.
struct CrispSet {
  Sort sort;
  std::vector<char> bits;

  CrispSet() : sort(Sort::object) {}
  CrispSet(Sort s, std::size_t universe) : sort(s), bits(universe, 0) {}

  std::size_t universe_size() const { return bits.size(); }
  bool contains(std::size_t i) const { return bits[i] != 0; }
  void add(std::size_t i) { bits[i] = 1; }
  void remove(std::size_t i) { bits[i] = 0; }
  std::size_t count() const;
  bool empty() const { return count() == 0; }
  bool is_full() const { return count() == bits.size(); }

  bool subset_of(const CrispSet& other) const;
  CrispSet complement() const;
  CrispSet intersect(const CrispSet& other) const;
  CrispSet unite(const CrispSet& other) const;

  bool operator==(const CrispSet& other) const {
    return sort == other.sort && bits == other.bits;
  }
};

CrispSet full_set(Sort s, std::size_t universe);
CrispSet singleton(Sort s, std::size_t universe, std::size_t member);

// Fuzzy subset of one universe: a [0,1] grade per element.
struct FuzzySet {
  Sort sort;
  std::vector<Degree> grades;

  FuzzySet() : sort(Sort::object) {}
  FuzzySet(Sort s, std::size_t universe) : sort(s), grades(universe) {}
};

// c-cut {w | grade(w) >= c}, or the strict version {w | grade(w) > c}.
CrispSet cut(const FuzzySet& fs, const Degree& c, bool strict = false);

/* Fuzzy formal context: finite object and property universes with a
 * [0,1]-valued incidence relation.  Universes are non-empty and duplicate
 * free; the incidence table is total.
 */
class FuzzyContext {
public:
  FuzzyContext(std::vector<std::string> objects, std::vector<std::string> attributes,
               std::vector<std::vector<Degree>> rows);

  std::size_t n_objects() const { return objects_.size(); }
  std::size_t n_attributes() const { return attributes_.size(); }
  std::size_t universe_size(Sort s) const {
    return s == Sort::object ? n_objects() : n_attributes();
  }
  const std::vector<std::string>& names(Sort s) const {
    return s == Sort::object ? objects_ : attributes_;
  }
  // Index of a named element; throws std::out_of_range if unknown.
  std::size_t index_of(Sort s, const std::string& name) const;

  const Degree& at(std::size_t g, std::size_t m) const { return cells_[g * attributes_.size() + m]; }
  Degree& at(std::size_t g, std::size_t m) { return cells_[g * attributes_.size() + m]; }

  // Complemented context (1 - incidence), same universes.
  FuzzyContext complemented() const;

  bool operator==(const FuzzyContext& other) const {
    return objects_ == other.objects_ && attributes_ == other.attributes_ && cells_ == other.cells_;
  }

private:
  std::vector<std::string> objects_, attributes_;
  std::vector<Degree> cells_;  // row-major, objects x attributes
};

// The four possibilistic measures of a crisp subset, relative to the
// possibility distribution that one element of the opposite sort induces
// through the incidence relation.
struct PossMeasures {
  Degree possibility;  // sup of the distribution over members
  Degree necessity;    // inf of the co-distribution over non-members
  Degree guaranteed;   // inf of the distribution over members
  Degree potential;    // sup of the co-distribution over non-members
};

// pivot is an element index of pivot_sort; subset must live on the opposite
// sort.  Empty sup = 0 and empty inf = 1, so for the full/empty subset the
// conventions possibility(empty)=0, necessity(full)=1, guaranteed(empty)=1,
// potential(full)=0 fall out.
PossMeasures measures(const FuzzyContext& ctx, Sort pivot_sort, std::size_t pivot,
                      const CrispSet& subset);

// The six derivation operators.  plus applies to object sets only, minus to
// property sets only, box and diamond to either; the result always lives on
// the opposite sort.
enum class DeriveOp { plus, minus, box, diamond };

FuzzySet derive(const FuzzyContext& ctx, const CrispSet& input, DeriveOp op);

}  // namespace fcl
