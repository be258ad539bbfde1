#include "fcl/degree.hpp"

#include <numeric>
#include <stdexcept>

namespace fcl {

namespace {

using int128 = __int128;

// Reduce n/d (d != 0) and check it lands in [0,1].
void normalize(std::int64_t& n, std::int64_t& d) {
  if (d == 0) throw std::invalid_argument("degree: zero denominator");
  if (d < 0) { n = -n; d = -d; }
  if (n < 0 || n > d) throw std::invalid_argument("degree: value outside [0,1]");
  std::int64_t g = std::gcd(n, d);
  n /= g;
  d /= g;
}

int128 gcd128(int128 a, int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) { int128 t = a % b; a = b; b = t; }
  return a;
}

Degree from_raw(int128 n, int128 d) {
  if (d < 0) { n = -n; d = -d; }
  int128 g = gcd128(n, d);
  // Intermediates are sums of products of two reduced degrees, so after
  // reduction the result always fits back into int64.
  if (g != 0) { n /= g; d /= g; }
  return Degree((std::int64_t)n, (std::int64_t)d);
}

}  // namespace

Degree::Degree(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
  normalize(num_, den_);
}

Degree Degree::parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("degree: empty literal");
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    std::size_t p1 = 0, p2 = 0;
    std::int64_t n = std::stoll(text.substr(0, slash), &p1);
    std::int64_t d = std::stoll(text.substr(slash + 1), &p2);
    if (p1 != slash || p2 != text.size() - slash - 1)
      throw std::invalid_argument("degree: malformed fraction '" + text + "'");
    return Degree(n, d);
  }
  auto dot = text.find('.');
  if (dot == std::string::npos) {
    std::size_t p = 0;
    std::int64_t n = std::stoll(text, &p);
    if (p != text.size())
      throw std::invalid_argument("degree: malformed literal '" + text + "'");
    return Degree(n, 1);
  }
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  std::size_t frac_len = text.size() - dot - 1;
  if (frac_len == 0 || frac_len > 17 || digits.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("degree: malformed decimal '" + text + "'");
  std::int64_t den = 1;
  for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
  std::int64_t num = digits.empty() ? 0 : std::stoll(digits);
  return Degree(num, den);
}

Degree Degree::complement() const { return Degree(den_ - num_, den_); }

Degree Degree::midpoint(const Degree& a, const Degree& b) {
  return from_raw((int128)a.num_ * b.den_ + (int128)b.num_ * a.den_,
                  (int128)a.den_ * b.den_ * 2);
}

std::string Degree::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::strong_ordering Degree::operator<=>(const Degree& other) const {
  int128 lhs = (int128)num_ * other.den_;
  int128 rhs = (int128)other.num_ * den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Degree residuum(const Degree& a, const Degree& b) {
  if (a <= b) return Degree::one();
  // 1 - a + b; a > b guarantees the result is inside (b, 1).
  return from_raw((int128)a.den() * b.den() - (int128)a.num() * b.den() + (int128)b.num() * a.den(),
                  (int128)a.den() * b.den());
}

}  // namespace fcl
