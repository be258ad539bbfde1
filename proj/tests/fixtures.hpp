#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "fcl/context.hpp"

namespace fixtures {

inline fcl::Degree d(const std::string& s) { return fcl::Degree::parse(s); }

// The running 2x2 example used throughout the tests:
//          m1     m2
//   g1      1    3/5
//   g2   3/10      0
inline fcl::FuzzyContext k0() {
  return fcl::FuzzyContext({"g1", "g2"}, {"m1", "m2"},
                           {{d("1"), d("3/5")}, {d("3/10"), d("0")}});
}

inline fcl::CrispSet make_set(fcl::Sort s, std::size_t n, std::initializer_list<std::size_t> members) {
  fcl::CrispSet out(s, n);
  for (auto i : members) out.add(i);
  return out;
}

}  // namespace fixtures
