#include <doctest.h>

#include <numeric>

#include "theta_sums/errors.hpp"
#include "theta_sums/musolver.hpp"

using namespace theta_sums;

namespace {

using Vec = std::vector<std::int64_t>;

// Exhaustive scan over any number of degrees; test-only.
std::int64_t mu_enumerate(std::int64_t p, const Vec& degrees) {
  const std::size_t n = degrees.size();
  Vec j(n, 0);
  std::int64_t best = -1;
  for (;;) {
    std::size_t k = 0;
    while (k < n && ++j[k] == p) j[k++] = 0;
    if (k == n) break;
    std::int64_t residue = 0, total = 0;
    for (std::size_t i = 0; i < n; ++i) {
      residue += degrees[i] * j[i];
      total += j[i];
    }
    if (residue % (p - 1) == 0 && (best < 0 || total < best)) best = total;
  }
  return best;
}

}  // namespace

TEST_CASE("mu_brute examples") {
  const auto r1 = mu_brute(MuProblem(Prime(5), {2, 3}));
  CHECK(r1.value == 2);
  CHECK(r1.witness == Vec{2, 0});
  const auto r2 = mu_brute(MuProblem(Prime(7), {2, 3}));
  CHECK(r2.value == 2);
  CHECK(r2.witness == Vec{0, 2});
  const auto r3 = mu_brute(MuProblem(Prime(11), {3, 7}));
  CHECK(r3.value == 2);
  CHECK(r3.witness == Vec{1, 1});
  const auto r4 = mu_brute(MuProblem(Prime(13), {2}));
  CHECK(r4.value == 6);
  CHECK(r4.witness == Vec{6});
  CHECK(mu_brute(MuProblem(Prime(5), {1, 2})).value == 2);
  CHECK(r1.method == MuMethod::BruteForce);
}

TEST_CASE("mu_brute guards") {
  CHECK_THROWS_AS(mu_brute(MuProblem(Prime(7), {1, 2, 3})), TooLarge);
  CHECK_THROWS_AS(mu_brute(MuProblem(Prime(2003), {1, 2})), TooLarge);
  CHECK_THROWS_AS(MuProblem(Prime(7), {}), InvalidInput);
  CHECK_THROWS_AS(MuProblem(Prime(7), {0, 2}), InvalidInput);
  CHECK_THROWS_AS(MuProblem(Prime(7), {6}), InvalidInput);
}

TEST_CASE("mu_bfs examples") {
  CHECK(mu_bfs(MuProblem(Prime(5), {2, 3})).value == 2);
  const auto r = mu_bfs(MuProblem(Prime(7), {1, 2, 3}));
  CHECK(r.value == 2);
  CHECK(r.witness == Vec{0, 0, 2});
  CHECK(r.method == MuMethod::BFS);
  CHECK(mu_bfs(MuProblem(Prime(11), {7, 9})).value == 4);
  CHECK(mu_bfs(MuProblem(Prime(13), {2})).witness == Vec{6});
}

TEST_CASE("bfs equals brute force, witnesses verify, p <= 61") {
  for (const Prime& p : primes_in_range(5, 61)) {
    for (std::int64_t d1 = 1; d1 <= p.value() - 2; ++d1) {
      for (std::int64_t d2 = 1; d2 <= p.value() - 2; ++d2) {
        if (d1 == d2) continue;
        const MuProblem prob(p, {d1, d2});
        const MuResult a = mu_bfs(prob), b = mu_brute(prob);
        REQUIRE(a.value == b.value);
        REQUIRE(verify_mu_result(prob, a));
        REQUIRE(verify_mu_result(prob, b));
        REQUIRE(a.value <= p.value() - 1);
      }
    }
  }
}

TEST_CASE("bfs matches enumeration for three degrees") {
  for (std::int64_t pv : {5, 7, 11, 13}) {
    const Prime p(pv);
    for (std::int64_t d1 = 1; d1 <= pv - 2; ++d1) {
      for (std::int64_t d2 = d1 + 1; d2 <= pv - 2; ++d2) {
        for (std::int64_t d3 = d2 + 1; d3 <= pv - 2; ++d3) {
          const MuProblem prob(p, {d1, d2, d3});
          const MuResult r = mu_bfs(prob);
          REQUIRE(r.value == mu_enumerate(pv, prob.degrees));
          REQUIRE(verify_mu_result(prob, r));
        }
      }
    }
  }
}

TEST_CASE("symmetry, unit scaling and monotonicity") {
  for (const Prime& p : primes_in_range(5, 89)) {
    const std::int64_t pv = p.value(), m = p.order();
    for (std::int64_t d1 = 1; d1 <= pv - 2; ++d1) {
      const std::int64_t single = mu_bfs(MuProblem(p, {d1})).value;
      CHECK(single == m / std::gcd(d1, m));
      for (std::int64_t d2 = d1 + 1; d2 <= pv - 2; ++d2) {
        const std::int64_t mu = mu_bfs(MuProblem(p, {d1, d2})).value;
        REQUIRE(mu == mu_bfs(MuProblem(p, {d2, d1})).value);
        REQUIRE(mu <= single);
        REQUIRE(mu <= (pv - 1) / 2);
        for (std::int64_t c = 2; c < m; ++c) {
          if (std::gcd(c, m) != 1) continue;
          const std::int64_t e1 = c * d1 % m, e2 = c * d2 % m;
          if (e1 == 0 || e2 == 0 || e1 == e2) continue;
          REQUIRE(mu_bfs(MuProblem(p, {e1, e2})).value == mu);
        }
        if (d2 + 1 <= pv - 2) {
          REQUIRE(mu_bfs(MuProblem(p, {d1, d2, d2 + 1})).value <= mu);
        }
      }
    }
  }
}

TEST_CASE("verify_mu_result rejects bad witnesses") {
  const MuProblem prob(Prime(7), {2, 3});
  CHECK(verify_mu_result(prob, MuResult{2, {0, 2}, MuMethod::BFS}));
  CHECK_FALSE(verify_mu_result(prob, MuResult{3, {2, 1}, MuMethod::BFS}));
  CHECK_FALSE(verify_mu_result(prob, MuResult{0, {0, 0}, MuMethod::BFS}));
  CHECK_FALSE(verify_mu_result(prob, MuResult{3, {0, 2}, MuMethod::BFS}));
  CHECK_FALSE(verify_mu_result(prob, MuResult{8, {0, 8}, MuMethod::BFS}));
  CHECK_FALSE(verify_mu_result(prob, MuResult{2, {2}, MuMethod::BFS}));
}
