#include "theta_sums/report.hpp"

#include <string>

namespace theta_sums {
namespace {

using nlohmann::ordered_json;

const char* flag(bool b) { return b ? "true" : "false"; }

template <typename Row>
void jsonl_body(std::ostream& os, std::span<const Row> rows,
                const SweepSummary& summary) {
  for (const Row& r : rows) os << to_json(r).dump() << '\n';
  ordered_json tail;
  tail["summary"] = to_json(summary);
  os << tail.dump() << '\n';
}

}  // namespace

ordered_json to_json(const ConjectureRow& r) {
  ordered_json j;
  j["p"] = r.p;
  j["d1"] = r.d1;
  j["d2"] = r.d2;
  j["mu"] = r.mu;
  j["bound"] = r.bound;
  j["ok"] = r.ok;
  j["j1"] = r.j1;
  j["j2"] = r.j2;
  j["method"] = std::string(to_string(r.method));
  return j;
}

ordered_json to_json(const Theorem1Row& r) {
  ordered_json j;
  j["p"] = r.p;
  j["d1"] = r.d1;
  j["d2"] = r.d2;
  j["a"] = r.a;
  j["b"] = r.b;
  if (r.nu_theta.is_infinite()) {
    j["nu_theta"] = "inf";
  } else {
    j["nu_theta"] = r.nu_theta.value();
  }
  j["mu"] = r.mu;
  j["ok"] = r.ok;
  return j;
}

ordered_json to_json(const WitnessRow& r) {
  ordered_json j;
  j["p"] = r.p;
  j["d1"] = r.d1;
  j["d2"] = r.d2;
  j["i"] = r.i;
  j["j"] = r.j;
  j["branch"] = std::string(to_string(r.branch));
  j["doublings"] = r.doublings;
  j["reflected"] = r.reflected;
  j["fallback"] = r.fallback;
  j["sum_ok"] = r.sum_ok;
  return j;
}

ordered_json to_json(const SweepSummary& s) {
  ordered_json j;
  j["rows_checked"] = s.rows_checked;
  j["violations"] = s.violations;
  j["fallbacks"] = s.fallbacks;
  j["max_mu_ratio"] = s.max_mu_ratio.to_string();
  j["equality_count"] = s.equality_count;
  j["solver_disagreements"] = s.solver_disagreements;
  if (!s.branch_counts.empty()) {
    ordered_json counts = ordered_json::object();
    for (const auto& [name, n] : s.branch_counts) counts[name] = n;
    j["branch_counts"] = counts;
  }
  return j;
}

void write_csv(std::ostream& os, std::span<const ConjectureRow> rows) {
  os << "p,d1,d2,mu,bound,ok,j1,j2,method\n";
  for (const auto& r : rows) {
    os << r.p << ',' << r.d1 << ',' << r.d2 << ',' << r.mu << ',' << r.bound
       << ',' << flag(r.ok) << ',' << r.j1 << ',' << r.j2 << ','
       << to_string(r.method) << '\n';
  }
}

void write_csv(std::ostream& os, std::span<const Theorem1Row> rows) {
  os << "p,d1,d2,a,b,nu_theta,mu,ok\n";
  for (const auto& r : rows) {
    os << r.p << ',' << r.d1 << ',' << r.d2 << ',' << r.a << ',' << r.b << ','
       << r.nu_theta << ',' << r.mu << ',' << flag(r.ok) << '\n';
  }
}

void write_csv(std::ostream& os, std::span<const WitnessRow> rows) {
  os << "p,d1,d2,i,j,branch,doublings,reflected,fallback,sum_ok\n";
  for (const auto& r : rows) {
    os << r.p << ',' << r.d1 << ',' << r.d2 << ',' << r.i << ',' << r.j << ','
       << to_string(r.branch) << ',' << r.doublings << ',' << flag(r.reflected)
       << ',' << flag(r.fallback) << ',' << flag(r.sum_ok) << '\n';
  }
}

void write_jsonl(std::ostream& os, std::span<const ConjectureRow> rows,
                 const SweepSummary& summary) {
  jsonl_body(os, rows, summary);
}

void write_jsonl(std::ostream& os, std::span<const Theorem1Row> rows,
                 const SweepSummary& summary) {
  jsonl_body(os, rows, summary);
}

void write_jsonl(std::ostream& os, std::span<const WitnessRow> rows,
                 const SweepSummary& summary) {
  jsonl_body(os, rows, summary);
}

}  // namespace theta_sums
