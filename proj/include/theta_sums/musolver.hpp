#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "theta_sums/modarith.hpp"

namespace theta_sums {

/// Degrees d_1..d_N of mu_p: minimize sum j_i over nonzero tuples with
/// 0 <= j_i < p and sum d_i j_i = 0 mod p-1.
struct MuProblem {
  // Throws InvalidInput unless every degree lies in [1, p-2].
  MuProblem(Prime p, std::vector<std::int64_t> degrees);

  Prime p;
  std::vector<std::int64_t> degrees;
};

enum class MuMethod { BruteForce, BFS };

std::string_view to_string(MuMethod m);

struct MuResult {
  std::int64_t value;
  std::vector<std::int64_t> witness;
  MuMethod method;
};

inline constexpr std::int64_t kBruteMaxPrime = 2000;
inline constexpr std::int64_t kBfsMaxPrime = 1'000'000;

// Exhaustive scan; lexicographically smallest witness among minimizers.
// Throws TooLarge for N > 2 or p > kBruteMaxPrime.
MuResult mu_brute(const MuProblem& prob);

// Shortest nonempty walk 0 -> 0 in Z_{p-1} with unit steps +d_i.
MuResult mu_bfs(const MuProblem& prob);

// True iff the witness has the right length, lies in [0, p-1]^N, is nonzero,
// solves the congruence and sums to result.value.
bool verify_mu_result(const MuProblem& prob, const MuResult& result);

}  // namespace theta_sums
