#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace theta_sums {

// A theta-adic valuation: a non-negative integer, or +infinity for zero.
class Valuation {
 public:
  static Valuation finite(std::int64_t v);
  static Valuation infinite() noexcept { return Valuation{}; }

  bool is_infinite() const noexcept { return !value_.has_value(); }
  bool is_finite() const noexcept { return value_.has_value(); }
  // Throws std::bad_optional_access when infinite.
  std::int64_t value() const { return value_.value(); }

  // "inf" or the decimal value.
  std::string to_string() const;

  friend bool operator==(const Valuation&, const Valuation&) = default;
  friend std::strong_ordering operator<=>(const Valuation& a,
                                          const Valuation& b) noexcept;
  friend Valuation operator+(const Valuation& a, const Valuation& b);

  bool at_least(std::int64_t bound) const noexcept {
    return is_infinite() || *value_ >= bound;
  }

 private:
  Valuation() = default;
  explicit Valuation(std::int64_t v) : value_(v) {}

  std::optional<std::int64_t> value_;
};

std::ostream& operator<<(std::ostream& os, const Valuation& v);

// Reduced fraction with positive denominator.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational make(std::int64_t num, std::int64_t den);

  std::string to_string() const;  // "n" or "n/d"

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) noexcept;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace theta_sums
