#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "theta_sums/valuation.hpp"
#include "theta_sums/witness.hpp"

namespace theta_sums {

enum class SolverChoice { BFS, Brute, Both };
enum class CoeffPolicy { All, Diagonal };

std::string_view to_string(SolverChoice s);
std::string_view to_string(CoeffPolicy c);

struct ConjectureRow {
  std::int64_t p, d1, d2;
  std::int64_t mu;
  std::int64_t bound;  // (p-1)/2
  bool ok;             // mu <= bound
  std::int64_t j1, j2;
  SolverChoice method;
};

struct Theorem1Row {
  std::int64_t p, d1, d2, a, b;
  Valuation nu_theta;
  std::int64_t mu;
  bool ok;  // nu_theta >= mu
};

struct WitnessRow {
  std::int64_t p, d1, d2, i, j;
  WitnessBranch branch;
  std::int64_t doublings;
  bool reflected;
  bool fallback;
  bool sum_ok;  // i + j <= (p-1)/2
};

struct SweepSummary {
  std::int64_t rows_checked = 0;
  std::int64_t violations = 0;
  std::int64_t fallbacks = 0;
  // max over rows of mu / ((p-1)/2); for witness sweeps (i+j) / ((p-1)/2).
  Rational max_mu_ratio{0, 1};
  // theorem1 sweeps: rows with nu_theta == mu.
  std::int64_t equality_count = 0;
  // Conjecture sweeps with SolverChoice::Both; counted in violations too.
  std::int64_t solver_disagreements = 0;
  // Witness sweeps: rows per branch name, plus "reflected".
  std::map<std::string, std::int64_t> branch_counts;
  // Wall-clock time. Not part of any report file.
  std::chrono::duration<double> elapsed{0};
};

template <typename Row>
struct SweepResult {
  std::vector<Row> rows;
  SweepSummary summary;
};

inline constexpr double kDefaultWorkBudget = 1e11;
inline constexpr std::int64_t kTheorem1AllMaxPrime = 31;

struct SweepOptions {
  // 0 means one worker per hardware thread.
  unsigned threads = 1;
  // Upper bound on estimated elementary steps; RangeTooLarge beyond it.
  double max_work = kDefaultWorkBudget;
};

// Every prime in [p_lo, p_hi] and every pair 1 <= d1 < d2 <= p-2.
SweepResult<ConjectureRow> sweep_conjecture(std::int64_t p_lo, std::int64_t p_hi,
                                            SolverChoice solver,
                                            const SweepOptions& opts = {});

// Rows for every (p, d1, d2, a, b); Diagonal restricts to a = b = 1.
// CoeffPolicy::All requires p_hi <= kTheorem1AllMaxPrime.
SweepResult<Theorem1Row> sweep_theorem1(std::int64_t p_lo, std::int64_t p_hi,
                                        CoeffPolicy policy,
                                        const SweepOptions& opts = {});

SweepResult<WitnessRow> sweep_witness(std::int64_t p_lo, std::int64_t p_hi,
                                      const SweepOptions& opts = {});

// Estimated elementary steps, used by the budget guard.
double estimate_conjecture_work(std::int64_t p_lo, std::int64_t p_hi,
                                SolverChoice solver);
double estimate_theorem1_work(std::int64_t p_lo, std::int64_t p_hi,
                              CoeffPolicy policy);
double estimate_witness_work(std::int64_t p_lo, std::int64_t p_hi);

}  // namespace theta_sums
