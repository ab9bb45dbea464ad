#include "theta_sums/witness.hpp"

#include <string>
#include <utility>

#include "theta_sums/errors.hpp"
#include "theta_sums/musolver.hpp"

namespace theta_sums {
namespace {

bool within_bound(const WitnessResult& r, std::int64_t p) {
  return r.i + r.j <= (p - 1) / 2;
}

// Structural invariants on top of check_witness.
bool well_formed(const WitnessResult& r, std::int64_t p, std::int64_t d1,
                 std::int64_t d2) {
  if (!check_witness(p, d1, d2, r.i, r.j) || !within_bound(r, p)) return false;
  if (r.branch != WitnessBranch::Doubling) {
    return r.doublings == 0 && !r.reflected;
  }
  return (std::int64_t{1} << r.doublings) <= p - 1;
}

WitnessResult exhaustive_fallback(WitnessResult attempted, std::int64_t p,
                                  std::int64_t d1, std::int64_t d2) {
  const MuProblem prob(Prime(p), {d1, d2});
  const MuResult mu = p <= kBruteMaxPrime ? mu_brute(prob) : mu_bfs(prob);
  attempted.i = mu.witness[0];
  attempted.j = mu.witness[1];
  attempted.fallback = true;
  return attempted;
}

}  // namespace

std::string_view to_string(WitnessBranch b) {
  switch (b) {
    case WitnessBranch::GcdD1:
      return "gcd_d1";
    case WitnessBranch::GcdD2:
      return "gcd_d2";
    case WitnessBranch::Doubling:
      return "doubling";
  }
  return "unknown";
}

bool check_witness(std::int64_t p, std::int64_t d1, std::int64_t d2,
                   std::int64_t i, std::int64_t j) {
  if (p < 3) return false;
  if (i == 0 && j == 0) return false;
  if (i < 0 || j < 0 || i > p - 1 || j > p - 1) return false;
  return mod_floor(d1 * i + d2 * j, p - 1) == 0;
}

WitnessResult construct_witness(std::int64_t p, std::int64_t d1,
                                std::int64_t d2) {
  if (p < 5 || !is_prime(p)) {
    throw InvalidInput("witness needs a prime p >= 5, got " + std::to_string(p));
  }
  if (d1 < 1 || d1 > p - 2 || d2 < 1 || d2 > p - 2 || d1 == d2) {
    throw InvalidInput("witness needs 1 <= d1 != d2 <= p-2");
  }
  const std::int64_t m = p - 1;
  const std::int64_t half = m / 2;

  WitnessResult r;
  if (const std::int64_t g1 = gcd(d1, m); g1 >= 2) {
    r.i = m / g1;
    r.branch = WitnessBranch::GcdD1;
  } else if (const std::int64_t g2 = gcd(d2, m); g2 >= 2) {
    r.j = m / g2;
    r.branch = WitnessBranch::GcdD2;
  } else {
    // Both degrees are units mod p-1, hence odd. With i = 1 the congruence
    // fixes j, and j lands in [1, p-3]: j = 0 forces d1 = 0 and j = p-2
    // forces d1 = d2.
    r.branch = WitnessBranch::Doubling;
    r.i = 1;
    r.j = mod_floor(-d1 * mod_inverse(d2, m), m);
    r.trace.push_back({WitnessStep::Kind::Start, r.i, r.j});
    bool sane = r.j >= 1 && r.j <= p - 3;

    // j = (p-1)/2 on entry would make gcd(d1, p-1) = (p-1)/2 > 1, so the
    // choice of >= over > is unobservable here.
    while (sane && r.j >= half) {
      r.i *= 2;
      r.j = 2 * r.j % m;
      ++r.doublings;
      r.trace.push_back({WitnessStep::Kind::Double, r.i, r.j});
      // i = 2^doublings never passes (p-1)/2 while j is still large.
      sane = r.i <= half;
    }
    if (sane && r.i + r.j > half) {
      r.i = half - r.i;
      r.j = half - r.j;
      r.reflected = true;
      r.trace.push_back({WitnessStep::Kind::Reflect, r.i, r.j});
    }
    if (!sane) return exhaustive_fallback(std::move(r), p, d1, d2);
  }

  if (!well_formed(r, p, d1, d2)) return exhaustive_fallback(std::move(r), p, d1, d2);
  return r;
}

}  // namespace theta_sums
