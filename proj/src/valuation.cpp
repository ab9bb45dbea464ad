#include "theta_sums/valuation.hpp"

#include <numeric>

#include "theta_sums/errors.hpp"

namespace theta_sums {

Valuation Valuation::finite(std::int64_t v) {
  if (v < 0) throw InvalidInput("valuation must be non-negative");
  return Valuation{v};
}

std::string Valuation::to_string() const {
  return is_infinite() ? std::string("inf") : std::to_string(*value_);
}

std::strong_ordering operator<=>(const Valuation& a,
                                 const Valuation& b) noexcept {
  if (a.is_infinite() || b.is_infinite()) {
    return a.is_infinite() <=> b.is_infinite();
  }
  return *a.value_ <=> *b.value_;
}

Valuation operator+(const Valuation& a, const Valuation& b) {
  if (a.is_infinite() || b.is_infinite()) return Valuation::infinite();
  return Valuation{*a.value_ + *b.value_};
}

std::ostream& operator<<(std::ostream& os, const Valuation& v) {
  return os << v.to_string();
}

Rational Rational::make(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InvalidInput("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  return Rational{num / g, den / g};
}

std::string Rational::to_string() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
  const __int128 lhs = static_cast<__int128>(a.num) * b.den;
  const __int128 rhs = static_cast<__int128>(b.num) * a.den;
  return lhs <=> rhs;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

}  // namespace theta_sums
