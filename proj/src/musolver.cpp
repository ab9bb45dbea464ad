#include "theta_sums/musolver.hpp"

#include <limits>
#include <string>
#include <utility>

#include "theta_sums/errors.hpp"

namespace theta_sums {

MuProblem::MuProblem(Prime prime, std::vector<std::int64_t> degs)
    : p(prime), degrees(std::move(degs)) {
  if (degrees.empty()) throw InvalidInput("mu problem needs at least one degree");
  for (std::int64_t d : degrees) {
    if (d < 1 || d > p.value() - 2) {
      throw InvalidInput("degree " + std::to_string(d) + " outside [1, p-2]");
    }
  }
}

std::string_view to_string(MuMethod m) {
  return m == MuMethod::BruteForce ? "brute" : "bfs";
}

MuResult mu_brute(const MuProblem& prob) {
  const std::int64_t p = prob.p.value();
  const std::int64_t m = prob.p.order();
  if (prob.degrees.size() > 2) throw TooLarge("mu_brute supports at most 2 degrees");
  if (p > kBruteMaxPrime) {
    throw TooLarge("mu_brute limited to p <= " + std::to_string(kBruteMaxPrime));
  }

  if (prob.degrees.size() == 1) {
    const std::int64_t d = prob.degrees[0];
    for (std::int64_t j = 1; j < p; ++j) {
      if (d * j % m == 0) return MuResult{j, {j}, MuMethod::BruteForce};
    }
  } else {
    const std::int64_t d1 = prob.degrees[0];
    const std::int64_t d2 = prob.degrees[1];
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    std::int64_t b1 = 0, b2 = 0;
    // Lexicographic order, strict improvement keeps the smallest witness.
    for (std::int64_t j1 = 0; j1 < p; ++j1) {
      for (std::int64_t j2 = 0; j2 < p; ++j2) {
        if (j1 == 0 && j2 == 0) continue;
        if ((d1 * j1 + d2 * j2) % m != 0) continue;
        if (j1 + j2 < best) {
          best = j1 + j2;
          b1 = j1;
          b2 = j2;
        }
      }
    }
    if (best != std::numeric_limits<std::int64_t>::max()) {
      return MuResult{best, {b1, b2}, MuMethod::BruteForce};
    }
  }
  throw InvariantError("mu_brute found no solution");
}

// The per-coordinate cap j_i < p never binds: j_1 = (p-1)/gcd(d_1, p-1) is a
// solution with sum <= p-1, so an optimal walk has at most p-1 steps in total.
// The search therefore tracks residues only; verify_mu_result checks the cap.
MuResult mu_bfs(const MuProblem& prob) {
  const std::int64_t m = prob.p.order();
  if (prob.p.value() > kBfsMaxPrime) {
    throw TooLarge("mu_bfs limited to p <= " + std::to_string(kBfsMaxPrime));
  }
  const auto n = static_cast<std::size_t>(m);
  constexpr std::int32_t kUnseen = -1;
  constexpr std::int32_t kRoot = -2;
  // parent[r] = residue before the last step, step[r] = degree index used.
  std::vector<std::int32_t> parent(n, kUnseen);
  std::vector<std::int32_t> step(n, 0);
  std::vector<std::int32_t> queue;
  queue.reserve(n);

  bool found = false;
  std::int32_t final_node = kRoot;  // residue before the closing step
  std::int32_t final_step = -1;

  // Seed with one-step residues so the empty walk never counts as solved.
  // Smallest degree index wins ties throughout.
  for (std::size_t i = 0; i < prob.degrees.size() && !found; ++i) {
    const auto r = static_cast<std::size_t>(prob.degrees[i] % m);
    if (r == 0) {
      found = true;  // a single step closes the walk
      final_step = static_cast<std::int32_t>(i);
    } else if (parent[r] == kUnseen) {
      parent[r] = kRoot;
      step[r] = static_cast<std::int32_t>(i);
      queue.push_back(static_cast<std::int32_t>(r));
    }
  }

  for (std::size_t head = 0; head < queue.size() && !found; ++head) {
    const std::int32_t u = queue[head];
    for (std::size_t i = 0; i < prob.degrees.size(); ++i) {
      auto v = static_cast<std::size_t>((u + prob.degrees[i]) % m);
      if (v == 0) {
        found = true;
        final_node = u;
        final_step = static_cast<std::int32_t>(i);
        break;
      }
      if (parent[v] == kUnseen) {
        parent[v] = u;
        step[v] = static_cast<std::int32_t>(i);
        queue.push_back(static_cast<std::int32_t>(v));
      }
    }
  }
  if (!found) throw InvariantError("mu_bfs found no closed walk");

  std::vector<std::int64_t> witness(prob.degrees.size(), 0);
  witness[static_cast<std::size_t>(final_step)] += 1;
  for (std::int32_t node = final_node; node >= 0;) {
    witness[static_cast<std::size_t>(step[static_cast<std::size_t>(node)])] += 1;
    node = parent[static_cast<std::size_t>(node)];
  }
  std::int64_t value = 0;
  for (std::int64_t j : witness) value += j;
  return MuResult{value, std::move(witness), MuMethod::BFS};
}

bool verify_mu_result(const MuProblem& prob, const MuResult& result) {
  const std::int64_t p = prob.p.value();
  if (result.witness.size() != prob.degrees.size()) return false;
  std::int64_t total = 0;
  std::int64_t residue = 0;
  bool nonzero = false;
  for (std::size_t i = 0; i < result.witness.size(); ++i) {
    const std::int64_t j = result.witness[i];
    if (j < 0 || j > p - 1) return false;
    nonzero = nonzero || j != 0;
    total += j;
    residue = (residue + prob.degrees[i] * j) % prob.p.order();
  }
  return nonzero && residue == 0 && total == result.value;
}

}  // namespace theta_sums
