#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>

namespace fcl {

/* Exact rational in the unit interval [0,1].
 *
 * Degrees only ever come from user-written grids (decimals or fractions),
 * their complements, Łukasiewicz residua and interval midpoints, so the
 * reduced components stay tiny.  int64 storage with __int128 intermediates
 * for comparison and arithmetic is exact for anything remotely near desk
 * scale; a range check guards the [0,1] invariant at every construction.
 */
class Degree {
public:
  Degree() : num_(0), den_(1) {}
  Degree(std::int64_t num, std::int64_t den);

  static Degree zero() { return Degree(); }
  static Degree one() { return Degree(1, 1); }

  // Accepts "1", "0", "3/10", "0.35", ".5".
  static Degree parse(const std::string& text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == den_; }

  Degree complement() const;                              // 1 - x
  static Degree midpoint(const Degree& a, const Degree& b);  // (a+b)/2

  // Canonical form: "0", "1", or reduced "n/d".
  std::string str() const;

  std::strong_ordering operator<=>(const Degree& other) const;
  bool operator==(const Degree& other) const {
    return num_ == other.num_ && den_ == other.den_;
  }

private:
  std::int64_t num_, den_;  // reduced, den_ > 0, 0 <= num_ <= den_
};

// Łukasiewicz residuum: a => b is 1 if a <= b, else 1 - a + b.
Degree residuum(const Degree& a, const Degree& b);

inline const Degree& min(const Degree& a, const Degree& b) { return b < a ? b : a; }
inline const Degree& max(const Degree& a, const Degree& b) { return a < b ? b : a; }

}  // namespace fcl

template <>
struct std::hash<fcl::Degree> {
  std::size_t operator()(const fcl::Degree& d) const noexcept {
    return std::hash<std::int64_t>()(d.num() * 0x9e3779b97f4a7c15LL ^ d.den());
  }
};
