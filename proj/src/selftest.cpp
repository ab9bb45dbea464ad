#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "theta_sums/campaign.hpp"
#include "theta_sums/cli.hpp"
#include "theta_sums/cyclotomic.hpp"
#include "theta_sums/expsum.hpp"
#include "theta_sums/musolver.hpp"
#include "theta_sums/witness.hpp"

namespace theta_sums::cli {
namespace {

struct Fixture {
  std::string name;
  std::function<bool(std::ostream& note)> check;
};

bool witness_is(std::int64_t p, std::int64_t d1, std::int64_t d2, std::int64_t i,
                std::int64_t j) {
  const WitnessResult w = construct_witness(p, d1, d2);
  return w.i == i && w.j == j && !w.fallback;
}

std::vector<Fixture> fixtures() {
  std::vector<Fixture> f;
  f.push_back({"example (5,2,3) -> (2,0)", [](std::ostream&) {
                 return witness_is(5, 2, 3, 2, 0) &&
                        construct_witness(5, 2, 3).branch == WitnessBranch::GcdD1;
               }});
  f.push_back({"example (11,3,7) -> (1,1)",
               [](std::ostream&) { return witness_is(11, 3, 7, 1, 1); }});
  f.push_back({"example (11,7,9) -> (3,1) reflected", [](std::ostream&) {
                 const WitnessResult w = construct_witness(11, 7, 9);
                 return witness_is(11, 7, 9, 3, 1) && w.reflected && w.doublings == 1;
               }});
  f.push_back({"invalid pair (2,1) at (7,2,3) rejected, replacement valid", [](std::ostream& note) {
                 const WitnessResult w = construct_witness(7, 2, 3);
                 note << "replacement (" << w.i << ',' << w.j << ")";
                 return !check_witness(7, 2, 3, 2, 1) && check_witness(7, 2, 3, w.i, w.j) &&
                        w.i + w.j <= 3;
               }});
  f.push_back({"nu_theta(p) = p-1, nu_theta(theta) = 1, nu_theta(0) = inf",
               [](std::ostream&) {
                 for (std::int64_t pv : {5, 7, 11, 13, 17}) {
                   const Prime p(pv);
                   if (theta_valuation(CycInt::from_integer(p, pv)) !=
                           Valuation::finite(pv - 1) ||
                       theta_valuation(CycInt::theta(p)) != Valuation::finite(1) ||
                       !theta_valuation(CycInt::zero(p)).is_infinite()) {
                     return false;
                   }
                 }
                 return true;
               }});
  f.push_back({"Gauss sums: nu_theta = (p-1)/2 = mu_p(2), square = +-p", [](std::ostream&) {
                 for (std::int64_t pv : {5, 13, 17, 29}) {
                   const Prime p(pv);
                   const CycInt g = exp_sum(SparsePoly(p, {Term{1, 2}}));
                   const CycInt sq = g * g;
                   if (sq != CycInt::from_integer(p, pv) && sq != CycInt::from_integer(p, -pv)) {
                     return false;
                   }
                   const std::int64_t half = (pv - 1) / 2;
                   if (theta_valuation(g) != Valuation::finite(half) ||
                       mu_bfs(MuProblem(p, {2})).value != half) {
                     return false;
                   }
                 }
                 return true;
               }});
  f.push_back({"conjecture sweep p <= 61, bfs and brute agree", [](std::ostream& note) {
                 const auto r = sweep_conjecture(5, 61, SolverChoice::Both);
                 note << r.summary.rows_checked << " rows";
                 return r.summary.violations == 0;
               }});
  f.push_back({"nu_theta >= mu_p for p <= 13, all coefficients", [](std::ostream& note) {
                 const auto r = sweep_theorem1(5, 13, CoeffPolicy::All);
                 note << r.summary.rows_checked << " rows, " << r.summary.equality_count
                      << " with equality";
                 return r.summary.violations == 0;
               }});
  f.push_back({"character twists preserve nu_theta, p <= 7", [](std::ostream&) {
                 for (std::int64_t pv : {5, 7}) {
                   const Prime p(pv);
                   for (std::int64_t d1 = 1; d1 <= pv - 2; ++d1) {
                     for (std::int64_t d2 = d1 + 1; d2 <= pv - 2; ++d2) {
                       const SparsePoly f = SparsePoly::binomial(p, 1, d1, 1, d2);
                       const Valuation base = sum_valuation(f);
                       for (std::int64_t c = 2; c < pv; ++c) {
                         if (sum_valuation(twist(f, c)) != base) return false;
                       }
                     }
                   }
                 }
                 return true;
               }});
  f.push_back({"witness construction sound for p <= 499", [](std::ostream& note) {
                 const auto r = sweep_witness(5, 499);
                 note << r.summary.rows_checked << " rows, fallbacks=" << r.summary.fallbacks;
                 if (r.summary.fallbacks > 0) note << " (finding)";
                 return r.summary.violations == 0;
               }});
  return f;
}

}  // namespace

int selftest(std::ostream& out, std::ostream& err) {
  int failures = 0;
  for (const Fixture& fx : fixtures()) {
    std::ostringstream note;
    bool ok = false;
    try {
      ok = fx.check(note);
    } catch (const std::exception& e) {
      note << "threw: " << e.what();
    }
    out << (ok ? "PASS " : "FAIL ") << fx.name;
    if (!note.str().empty()) out << " [" << note.str() << "]";
    out << '\n';
    if (!ok) ++failures;
  }
  if (failures > 0) {
    err << failures << " selftest fixture(s) failed\n";
    return kExitInternal;
  }
  return kExitOk;
}

}  // namespace theta_sums::cli
