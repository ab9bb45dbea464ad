#include "theta_sums/modarith.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "theta_sums/errors.hpp"

namespace theta_sums {

Prime::Prime(std::int64_t value) : value_(value) {
  if (value < 5 || !is_prime(value)) {
    throw InvalidInput("expected a prime p >= 5, got " + std::to_string(value));
  }
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::int64_t f = 3; f * f <= n; f += 2) {
    if (n % f == 0) return false;
  }
  return true;
}

std::vector<Prime> primes_in_range(std::int64_t lo, std::int64_t hi) {
  if (lo < 2 || lo > hi) {
    throw InvalidInput("primes_in_range requires 2 <= lo <= hi");
  }
  std::vector<Prime> out;
  for (std::int64_t n = std::max<std::int64_t>(lo, 5); n <= hi; ++n) {
    if (is_prime(n)) out.emplace_back(n);
  }
  return out;
}

std::int64_t gcd(std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0 || (a == 0 && b == 0)) {
    throw InvalidInput("gcd requires non-negative arguments, not both zero");
  }
  return std::gcd(a, b);
}

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  if (m < 2) throw InvalidInput("mod_inverse requires m >= 2");
  // Extended Euclid on (a mod m, m), tracking only the coefficient of a.
  std::int64_t r0 = m, r1 = mod_floor(a, m);
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    s0 -= q * s1;
    std::swap(s0, s1);
  }
  if (r0 != 1) {
    throw NotInvertible(std::to_string(a) + " is not invertible mod " +
                        std::to_string(m));
  }
  return mod_floor(s0, m);
}

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t m) {
  using u128 = unsigned __int128;
  std::uint64_t result = 1 % static_cast<std::uint64_t>(m);
  std::uint64_t b = static_cast<std::uint64_t>(mod_floor(base, m));
  const auto mod = static_cast<std::uint64_t>(m);
  while (exp > 0) {
    if (exp & 1) result = static_cast<std::uint64_t>(u128{result} * b % mod);
    b = static_cast<std::uint64_t>(u128{b} * b % mod);
    exp >>= 1;
  }
  return static_cast<std::int64_t>(result);
}

}  // namespace theta_sums
