// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "test_support.hpp"
#include "theta_sums/campaign.hpp"
#include "theta_sums/cli.hpp"
#include "theta_sums/cyclotomic.hpp"
#include "theta_sums/expsum.hpp"
#include "theta_sums/musolver.hpp"
#include "theta_sums/witness.hpp"

using namespace theta_sums;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

struct Verdict {
  bool pass;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  std::function<Verdict()> run;
};

int run_cli(std::vector<std::string> args, std::string* out = nullptr) {
  args.insert(args.begin(), "theta-sums");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream o, e;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), o, e);
  if (out) *out = o.str() + e.str();
  return code;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<std::vector<std::string>> read_csv(const fs::path& p) {
  std::vector<std::vector<std::string>> rows;
  std::ifstream in(p);
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) cells.push_back(cell);
    rows.push_back(std::move(cells));
  }
  return rows;
}

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

const fs::path& work_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "theta_sums_acceptance";
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

// 1. mu_p(d1, d2) <= (p-1)/2 for all p in [5, 409], within 5 minutes.
Verdict conjecture_sweep() {
  const auto t0 = Clock::now();
  const fs::path out = work_dir() / "conjecture_t1.csv";
  std::string log;
  const int code = run_cli({"sweep", "conjecture", "--pmin", "5", "--pmax", "409", "--method",
                            "bfs", "--threads", "1", "--out", out.string()},
                           &log);
  const double secs = seconds_since(t0);
  std::int64_t rows = 0, bad = 0;
  for (const auto& r : read_csv(out)) {
    ++rows;
    const std::int64_t mu = std::stoll(r[3]), bound = std::stoll(r[4]);
    const std::int64_t p = std::stoll(r[0]);
    if (r[5] != "true" || mu > bound || bound != (p - 1) / 2 ||
        !check_witness(p, std::stoll(r[1]), std::stoll(r[2]), std::stoll(r[6]),
                       std::stoll(r[7]))) {
      ++bad;
    }
  }
  std::ostringstream d;
  d << rows << " rows, " << bad << " violations, exit " << code << ", " << secs << "s";
  return {code == 0 && bad == 0 && rows > 0 && secs < 300, d.str()};
}

// 2. BFS and brute force agree for every p <= 97 and d1 < d2.
Verdict solver_equivalence() {
  std::int64_t pairs = 0, bad = 0;
  for (const Prime& p : primes_in_range(5, 97)) {
    for (std::int64_t d1 = 1; d1 <= p.value() - 2; ++d1) {
      for (std::int64_t d2 = d1 + 1; d2 <= p.value() - 2; ++d2) {
        const MuProblem prob(p, {d1, d2});
        const MuResult a = mu_bfs(prob), b = mu_brute(prob);
        ++pairs;
        if (a.value != b.value ||
            !check_witness(p.value(), d1, d2, a.witness[0], a.witness[1]) ||
            !check_witness(p.value(), d1, d2, b.witness[0], b.witness[1]) ||
            !verify_mu_result(prob, a) || !verify_mu_result(prob, b)) {
          ++bad;
        }
      }
    }
  }
  return {bad == 0, std::to_string(pairs) + " pairs, " + std::to_string(bad) + " mismatches"};
}

// 3. Worked examples; (2,1) at (p,d1,d2) = (7,2,3) is not a solution.
Verdict worked_examples() {
  struct Case {
    std::int64_t p, d1, d2, i, j;
  };
  bool ok = true;
  std::ostringstream d;
  for (const Case& c : {Case{5, 2, 3, 2, 0}, Case{11, 3, 7, 1, 1}, Case{11, 7, 9, 3, 1}}) {
    const WitnessResult w = construct_witness(c.p, c.d1, c.d2);
    const bool hit = w.i == c.i && w.j == c.j && w.i + w.j <= (c.p - 1) / 2 &&
                     check_witness(c.p, c.d1, c.d2, w.i, w.j);
    ok = ok && hit;
    d << "(" << c.p << "," << c.d1 << "," << c.d2 << ")->(" << w.i << "," << w.j << ") ";
  }
  const bool invalid_rejected = !check_witness(7, 2, 3, 2, 1);
  const WitnessResult r = construct_witness(7, 2, 3);
  const bool replacement = check_witness(7, 2, 3, r.i, r.j) && r.i + r.j <= 3;
  d << "invalid (2,1) rejected=" << invalid_rejected << " replacement=(" << r.i << ","
    << r.j << ")";
  std::string selftest_log;
  const bool selftest_ok = run_cli({"selftest"}, &selftest_log) == 0 &&
                           selftest_log.find("PASS invalid pair") != std::string::npos;
  return {ok && invalid_rejected && replacement && selftest_ok, d.str()};
}

// 4. Valuation anchors and closed form vs repeated division.
Verdict valuation_anchors() {
  bool ok = true;
  for (std::int64_t pv : {5, 7, 11, 13, 17}) {
    const Prime p(pv);
    ok = ok && theta_valuation(CycInt::from_integer(p, pv)) == Valuation::finite(pv - 1);
    ok = ok && theta_valuation(CycInt::theta(p)) == Valuation::finite(1);
    ok = ok && theta_valuation(CycInt::zero(p)).is_infinite();
  }
  auto rng = testing::seeded_rng(400);
  int compared = 0, mismatches = 0;
  for (std::int64_t pv : {5, 7, 11}) {
    const Prime p(pv);
    int n = 0;
    while (n < 1000) {
      const CycInt x = testing::random_cyc_with_valuation_spread(rng, p);
      if (x.is_zero()) continue;
      ++n;
      ++compared;
      if (theta_valuation(x) != theta_valuation_oracle(x)) ++mismatches;
    }
  }
  return {ok && mismatches == 0,
          std::to_string(compared) + " random elements, " + std::to_string(mismatches) +
              " mismatches"};
}

// 5. nu_theta(S_p(X^2)) = (p-1)/2 = mu_p(2), and S^2 = +-p.
Verdict gauss_sums() {
  bool ok = true;
  std::ostringstream d;
  for (std::int64_t pv : {5, 13, 17, 29}) {
    const Prime p(pv);
    const CycInt g = exp_sum(SparsePoly(p, {Term{1, 2}}));
    const CycInt sq = g * g;
    const bool square_ok =
        sq == CycInt::from_integer(p, pv) || sq == CycInt::from_integer(p, -pv);
    const std::int64_t half = (pv - 1) / 2;
    const Valuation v = theta_valuation(g);
    const std::int64_t mu = mu_bfs(MuProblem(p, {2})).value;
    // Squaring doubles the valuation: 2 nu = nu_theta(p) = p-1.
    const bool via_square = square_ok && theta_valuation(sq) == Valuation::finite(pv - 1);
    ok = ok && via_square && v == Valuation::finite(half) && mu == half;
    d << "p=" << pv << ":nu=" << v << " ";
  }
  return {ok, d.str()};
}

// 6. nu_theta >= mu_p for all binomials with p <= 31, within 10 minutes.
Verdict theorem1_suite() {
  const auto t0 = Clock::now();
  const auto r = sweep_theorem1(5, 31, CoeffPolicy::All);
  const double secs = seconds_since(t0);
  std::int64_t bad = 0;
  for (const Theorem1Row& row : r.rows) {
    if (!row.nu_theta.at_least(row.mu)) ++bad;
  }
  std::ostringstream d;
  d << r.summary.rows_checked << " rows, " << bad << " violations, "
    << r.summary.equality_count << " with equality, " << secs << "s";
  return {bad == 0 && r.summary.violations == 0 && secs < 600, d.str()};
}

// 7. sum_valuation is constant across all twists, p <= 13.
Verdict character_invariance() {
  std::int64_t polys = 0, bad = 0;
  for (const Prime& p : primes_in_range(5, 13)) {
    const std::int64_t pv = p.value();
    for (std::int64_t d1 = 1; d1 <= pv - 2; ++d1) {
      for (std::int64_t d2 = d1 + 1; d2 <= pv - 2; ++d2) {
        for (std::int64_t a = 1; a < pv; ++a) {
          for (std::int64_t b = 1; b < pv; ++b) {
            const SparsePoly f = SparsePoly::binomial(p, a, d1, b, d2);
            const Valuation base = sum_valuation(f);
            ++polys;
            for (std::int64_t c = 1; c < pv; ++c) {
              if (sum_valuation(twist(f, c)) != base) ++bad;
            }
          }
        }
      }
    }
  }
  return {bad == 0, std::to_string(polys) + " binomials, " + std::to_string(bad) + " changes"};
}

// 8. Multiplicativity and the ultrametric inequality.
Verdict valuation_algebra() {
  auto rng = testing::seeded_rng(800);
  int bad = 0, strict = 0;
  for (std::int64_t pv : {5, 7, 11}) {
    const Prime p(pv);
    for (int t = 0; t < 1000; ++t) {
      const CycInt x = testing::random_cyc_with_valuation_spread(rng, p);
      const CycInt y = testing::random_cyc_with_valuation_spread(rng, p);
      const Valuation vx = theta_valuation(x), vy = theta_valuation(y);
      if (theta_valuation(x * y) != vx + vy) ++bad;
      const Valuation vs = theta_valuation(x + y);
      if (vs < std::min(vx, vy)) ++bad;
      if (vx != vy) {
        ++strict;
        if (vs != std::min(vx, vy)) ++bad;
      }
    }
  }
  return {bad == 0 && strict > 0,
          "3000 pairs, " + std::to_string(strict) + " strict cases, " + std::to_string(bad) +
              " failures"};
}

// 9. The construction is sound for every pair with p <= 499.
Verdict witness_sweep() {
  const fs::path out = work_dir() / "witness_t1.csv";
  std::string log;
  const int code = run_cli(
      {"sweep", "witness", "--pmin", "5", "--pmax", "499", "--threads", "1", "--out", out.string()},
      &log);
  std::int64_t rows = 0, bad = 0, fallbacks = 0;
  for (const auto& r : read_csv(out)) {
    ++rows;
    const std::int64_t p = std::stoll(r[0]), i = std::stoll(r[3]), j = std::stoll(r[4]);
    if (!check_witness(p, std::stoll(r[1]), std::stoll(r[2]), i, j) || i + j > (p - 1) / 2 ||
        r[9] != "true") {
      ++bad;
    }
    if (r[8] == "true") ++fallbacks;
  }
  std::string selftest_log;
  run_cli({"selftest"}, &selftest_log);
  const bool recorded =
      selftest_log.find("fallbacks=" + std::to_string(fallbacks)) != std::string::npos;
  std::ostringstream d;
  d << rows << " rows, " << bad << " invalid, fallbacks=" << fallbacks
    << (fallbacks ? " (finding)" : "") << ", exit " << code;
  return {code == 0 && bad == 0 && rows > 0 && recorded, d.str()};
}

// 10. Criteria 1 and 9 are byte-identical under other thread counts.
Verdict determinism() {
  bool ok = true;
  std::ostringstream d;
  for (const char* threads : {"2", "4"}) {
    const fs::path c = work_dir() / (std::string("conjecture_t") + threads + ".csv");
    const fs::path w = work_dir() / (std::string("witness_t") + threads + ".csv");
    run_cli({"sweep", "conjecture", "--pmin", "5", "--pmax", "409", "--method", "bfs",
             "--threads", threads, "--out", c.string()});
    run_cli({"sweep", "witness", "--pmin", "5", "--pmax", "499", "--threads", threads,
             "--out", w.string()});
    const bool same_c = slurp(c) == slurp(work_dir() / "conjecture_t1.csv");
    const bool same_w = slurp(w) == slurp(work_dir() / "witness_t1.csv");
    ok = ok && same_c && same_w;
    d << "threads=" << threads << " conjecture " << (same_c ? "identical" : "DIFFERS")
      << ", witness " << (same_w ? "identical" : "DIFFERS") << "; ";
  }
  return {ok, d.str()};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "conjecture sweep p in [5,409], 0 violations", conjecture_sweep},
      {2, "bfs == brute for p <= 97", solver_equivalence},
      {3, "worked examples and invalid p=7 pair", worked_examples},
      {4, "valuation anchors and oracle agreement", valuation_anchors},
      {5, "Gauss sums nu_theta = (p-1)/2", gauss_sums},
      {6, "nu_theta >= mu_p, p <= 31, all coefficients", theorem1_suite},
      {7, "character invariance, p <= 13", character_invariance},
      {8, "multiplicativity and ultrametric", valuation_algebra},
      {9, "witness sweep p in [5,499]", witness_sweep},
      {10, "determinism across thread counts", determinism},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    Verdict v{false, ""};
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("threw: ") + e.what()};
    }
    std::cout << (v.pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << " -- "
              << v.detail << std::endl;
    if (!v.pass) ++failures;
  }
  std::error_code ec;
  fs::remove_all(work_dir(), ec);
  std::cout << (failures == 0 ? "all acceptance criteria passed"
                              : std::to_string(failures) + " criterion(s) failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
