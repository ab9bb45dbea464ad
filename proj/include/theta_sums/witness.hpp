#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "theta_sums/modarith.hpp"

namespace theta_sums {

enum class WitnessBranch { GcdD1, GcdD2, Doubling };

// "gcd_d1", "gcd_d2", "doubling".
std::string_view to_string(WitnessBranch b);

struct WitnessStep {
  enum class Kind { Start, Double, Reflect };
  Kind kind;
  std::int64_t i;
  std::int64_t j;
};

/// Output of the constructive procedure for mu_p(d1, d2) <= (p-1)/2.
struct WitnessResult {
  std::int64_t i = 0;
  std::int64_t j = 0;
  WitnessBranch branch = WitnessBranch::Doubling;
  std::int64_t doublings = 0;
  bool reflected = false;
  // Set when the procedure's own tuple failed validation and the exhaustive
  // solver supplied (i, j) instead.
  bool fallback = false;
  // States visited by the doubling branch, in order. Empty for gcd branches.
  std::vector<WitnessStep> trace;
};

// (i, j) != (0, 0), 0 <= i, j <= p-1 and d1*i + d2*j = 0 mod p-1.
bool check_witness(std::int64_t p, std::int64_t d1, std::int64_t d2,
                   std::int64_t i, std::int64_t j);

/// Builds a small solution (i, j) of d1*i + d2*j = 0 mod p-1:
///
///  1. gcd(d1, p-1) = g >= 2: ((p-1)/g, 0).
///  2. gcd(d2, p-1) = g >= 2: (0, (p-1)/g).
///  3. Otherwise d1, d2 are odd. Start from i = 1, j = -d1/d2 mod p-1 and
///     double both while j >= (p-1)/2. If i + j still exceeds (p-1)/2,
///     reflect to ((p-1)/2 - i, (p-1)/2 - j), which stays a solution since
///     d1 + d2 is even.
///
/// The result is validated; if it is not a solution within the bound, the
/// exhaustive solver's witness is returned with fallback set.
/// Throws InvalidInput unless p >= 5 is prime and 1 <= d1 != d2 <= p-2.
WitnessResult construct_witness(std::int64_t p, std::int64_t d1, std::int64_t d2);

}  // namespace theta_sums
