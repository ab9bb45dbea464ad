#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace theta_sums {

// An odd prime p >= 5. Construction validates primality by trial division.
class Prime {
 public:
  explicit Prime(std::int64_t value);

  std::int64_t value() const noexcept { return value_; }
  // p - 1, the modulus of the exponent equations.
  std::int64_t order() const noexcept { return value_ - 1; }
  // (p - 1) / 2, the conjectured bound on mu_p(d1, d2).
  std::int64_t half_order() const noexcept { return (value_ - 1) / 2; }

  friend auto operator<=>(const Prime&, const Prime&) = default;

 private:
  std::int64_t value_;
};

bool is_prime(std::int64_t n);

// Primes in [lo, hi] that are at least 5, ascending. Requires 2 <= lo <= hi.
std::vector<Prime> primes_in_range(std::int64_t lo, std::int64_t hi);

std::int64_t gcd(std::int64_t a, std::int64_t b);

// Canonical representative of a mod m in [0, m - 1].
std::int64_t mod_floor(std::int64_t a, std::int64_t m);

// u in [1, m - 1] with a*u = 1 mod m; throws NotInvertible if gcd(a, m) != 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t m);

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t m);

}  // namespace theta_sums
