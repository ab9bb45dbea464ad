#include "theta_sums/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <iterator>
#include <mutex>
#include <sstream>
#include <thread>

#include "theta_sums/errors.hpp"
#include "theta_sums/expsum.hpp"
#include "theta_sums/modarith.hpp"
#include "theta_sums/musolver.hpp"

namespace theta_sums {
namespace {

using Clock = std::chrono::steady_clock;

double pair_count(std::int64_t p) {
  const double n = static_cast<double>(p - 2);
  return n * (n - 1) / 2;
}

void require_range(std::int64_t p_lo, std::int64_t p_hi) {
  if (p_lo < 5 || p_lo > p_hi) {
    throw InvalidInput("sweep range needs 5 <= pmin <= pmax");
  }
}

void require_budget(double work, const SweepOptions& opts, std::string_view what) {
  if (work > opts.max_work) {
    std::ostringstream os;
    os << what << " sweep needs ~" << work << " steps, budget is "
       << opts.max_work;
    throw RangeTooLarge(os.str());
  }
}

unsigned worker_count(const SweepOptions& opts, std::size_t tasks) {
  unsigned n = opts.threads;
  if (n == 0) n = std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(tasks, 1)));
}

// Runs one task per prime and concatenates the results in prime order, so
// the output is independent of the number of workers.
template <typename Row, typename Task>
std::vector<Row> run_per_prime(const std::vector<Prime>& primes,
                               const SweepOptions& opts, Task task) {
  std::vector<std::vector<Row>> slots(primes.size());
  const unsigned workers = worker_count(opts, primes.size());

  if (workers <= 1) {
    for (std::size_t k = 0; k < primes.size(); ++k) slots[k] = task(primes[k]);
  } else {
    // Largest primes first for balance; slot index keeps the order.
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
      for (;;) {
        const std::size_t taken = next.fetch_add(1);
        if (taken >= primes.size()) return;
        const std::size_t k = primes.size() - 1 - taken;
        try {
          slots[k] = task(primes[k]);
        } catch (...) {
          const std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    };
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    pool.clear();
    if (failure) std::rethrow_exception(failure);
  }

  std::vector<Row> rows;
  std::size_t total = 0;
  for (const auto& s : slots) total += s.size();
  rows.reserve(total);
  for (auto& s : slots) {
    std::move(s.begin(), s.end(), std::back_inserter(rows));
  }
  return rows;
}

void raise_ratio(SweepSummary& s, std::int64_t num, std::int64_t den) {
  const Rational r = Rational::make(num, den);
  if (r > s.max_mu_ratio) s.max_mu_ratio = r;
}

}  // namespace

std::string_view to_string(SolverChoice s) {
  switch (s) {
    case SolverChoice::BFS:
      return "bfs";
    case SolverChoice::Brute:
      return "brute";
    case SolverChoice::Both:
      return "both";
  }
  return "unknown";
}

std::string_view to_string(CoeffPolicy c) {
  return c == CoeffPolicy::All ? "all" : "diag";
}

double estimate_conjecture_work(std::int64_t p_lo, std::int64_t p_hi,
                                SolverChoice solver) {
  double work = 0;
  for (const Prime& prime : primes_in_range(p_lo, p_hi)) {
    const double p = static_cast<double>(prime.value());
    double per_pair = 0;
    if (solver != SolverChoice::Brute) per_pair += 2 * p;
    if (solver != SolverChoice::BFS) per_pair += p * p;
    work += pair_count(prime.value()) * per_pair;
  }
  return work;
}

double estimate_theorem1_work(std::int64_t p_lo, std::int64_t p_hi,
                              CoeffPolicy policy) {
  double work = 0;
  for (const Prime& prime : primes_in_range(p_lo, p_hi)) {
    const double p = static_cast<double>(prime.value());
    const double combos = policy == CoeffPolicy::All ? (p - 1) * (p - 1) : 1;
    // Evaluation plus the quadratic change of basis per sum.
    work += pair_count(prime.value()) * (2 * p + combos * (2 * p + p * p / 2));
  }
  return work;
}

double estimate_witness_work(std::int64_t p_lo, std::int64_t p_hi) {
  double work = 0;
  for (const Prime& prime : primes_in_range(p_lo, p_hi)) {
    work += pair_count(prime.value()) * 64;
  }
  return work;
}

SweepResult<ConjectureRow> sweep_conjecture(std::int64_t p_lo, std::int64_t p_hi,
                                            SolverChoice solver,
                                            const SweepOptions& opts) {
  require_range(p_lo, p_hi);
  require_budget(estimate_conjecture_work(p_lo, p_hi, solver), opts, "conjecture");
  const auto start = Clock::now();

  // Rows keep the exhaustive witness when both solvers ran.
  struct Tagged {
    ConjectureRow row;
    bool disagreement;
    bool witness_ok;
  };

  const auto rows = run_per_prime<Tagged>(
      primes_in_range(p_lo, p_hi), opts, [solver](Prime prime) {
        std::vector<Tagged> out;
        const std::int64_t p = prime.value();
        out.reserve(static_cast<std::size_t>(pair_count(p)));
        for (std::int64_t d1 = 1; d1 <= p - 2; ++d1) {
          for (std::int64_t d2 = d1 + 1; d2 <= p - 2; ++d2) {
            const MuProblem prob(prime, {d1, d2});
            MuResult chosen{0, {}, MuMethod::BFS};
            bool disagreement = false;
            bool witness_ok = true;
            if (solver != SolverChoice::Brute) {
              chosen = mu_bfs(prob);
              witness_ok = verify_mu_result(prob, chosen);
            }
            if (solver != SolverChoice::BFS) {
              MuResult brute = mu_brute(prob);
              witness_ok = witness_ok && verify_mu_result(prob, brute);
              if (solver == SolverChoice::Both) {
                disagreement = brute.value != chosen.value;
              }
              chosen = std::move(brute);
            }
            const std::int64_t bound = prime.half_order();
            out.push_back(Tagged{
                ConjectureRow{p, d1, d2, chosen.value, bound, chosen.value <= bound,
                              chosen.witness[0], chosen.witness[1], solver},
                disagreement, witness_ok});
          }
        }
        return out;
      });

  SweepResult<ConjectureRow> result;
  result.rows.reserve(rows.size());
  SweepSummary& s = result.summary;
  for (const Tagged& t : rows) {
    const ConjectureRow& r = t.row;
    ++s.rows_checked;
    if (!r.ok || t.disagreement || !t.witness_ok ||
        !check_witness(r.p, r.d1, r.d2, r.j1, r.j2)) {
      ++s.violations;
    }
    if (t.disagreement) ++s.solver_disagreements;
    raise_ratio(s, r.mu, r.bound);
    result.rows.push_back(r);
  }
  s.elapsed = Clock::now() - start;
  return result;
}

SweepResult<Theorem1Row> sweep_theorem1(std::int64_t p_lo, std::int64_t p_hi,
                                        CoeffPolicy policy,
                                        const SweepOptions& opts) {
  require_range(p_lo, p_hi);
  if (policy == CoeffPolicy::All && p_hi > kTheorem1AllMaxPrime) {
    throw RangeTooLarge("theorem1 sweep over all coefficients is limited to p <= " +
                        std::to_string(kTheorem1AllMaxPrime));
  }
  require_budget(estimate_theorem1_work(p_lo, p_hi, policy), opts, "theorem1");
  const auto start = Clock::now();

  SweepResult<Theorem1Row> result;
  result.rows = run_per_prime<Theorem1Row>(
      primes_in_range(p_lo, p_hi), opts, [policy](Prime prime) {
        std::vector<Theorem1Row> out;
        const std::int64_t p = prime.value();
        const std::int64_t coeff_max = policy == CoeffPolicy::All ? p - 1 : 1;
        for (std::int64_t d1 = 1; d1 <= p - 2; ++d1) {
          for (std::int64_t d2 = d1 + 1; d2 <= p - 2; ++d2) {
            const std::int64_t mu = mu_bfs(MuProblem(prime, {d1, d2})).value;
            for (std::int64_t a = 1; a <= coeff_max; ++a) {
              for (std::int64_t b = 1; b <= coeff_max; ++b) {
                const Valuation nu =
                    sum_valuation(SparsePoly::binomial(prime, a, d1, b, d2));
                out.push_back(Theorem1Row{p, d1, d2, a, b, nu, mu, nu.at_least(mu)});
              }
            }
          }
        }
        return out;
      });

  SweepSummary& s = result.summary;
  for (const Theorem1Row& r : result.rows) {
    ++s.rows_checked;
    if (!r.ok) ++s.violations;
    if (r.nu_theta.is_finite() && r.nu_theta.value() == r.mu) ++s.equality_count;
    raise_ratio(s, r.mu, (r.p - 1) / 2);
  }
  s.elapsed = Clock::now() - start;
  return result;
}

SweepResult<WitnessRow> sweep_witness(std::int64_t p_lo, std::int64_t p_hi,
                                      const SweepOptions& opts) {
  require_range(p_lo, p_hi);
  require_budget(estimate_witness_work(p_lo, p_hi), opts, "witness");
  const auto start = Clock::now();

  SweepResult<WitnessRow> result;
  result.rows = run_per_prime<WitnessRow>(
      primes_in_range(p_lo, p_hi), opts, [](Prime prime) {
        std::vector<WitnessRow> out;
        const std::int64_t p = prime.value();
        out.reserve(static_cast<std::size_t>(pair_count(p)));
        for (std::int64_t d1 = 1; d1 <= p - 2; ++d1) {
          for (std::int64_t d2 = d1 + 1; d2 <= p - 2; ++d2) {
            const WitnessResult w = construct_witness(p, d1, d2);
            out.push_back(WitnessRow{p, d1, d2, w.i, w.j, w.branch, w.doublings,
                                     w.reflected, w.fallback,
                                     w.i + w.j <= prime.half_order()});
          }
        }
        return out;
      });

  SweepSummary& s = result.summary;
  for (const std::string_view name : {"gcd_d1", "gcd_d2", "doubling", "reflected"}) {
    s.branch_counts[std::string(name)] = 0;
  }
  for (const WitnessRow& r : result.rows) {
    ++s.rows_checked;
    if (!r.sum_ok || !check_witness(r.p, r.d1, r.d2, r.i, r.j)) ++s.violations;
    if (r.fallback) ++s.fallbacks;
    ++s.branch_counts[std::string(to_string(r.branch))];
    if (r.reflected) ++s.branch_counts["reflected"];
    raise_ratio(s, r.i + r.j, (r.p - 1) / 2);
  }
  s.elapsed = Clock::now() - start;
  return result;
}

}  // namespace theta_sums
