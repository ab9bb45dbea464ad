#include "theta_sums/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "theta_sums/campaign.hpp"
#include "theta_sums/cyclotomic.hpp"
#include "theta_sums/errors.hpp"
#include "theta_sums/musolver.hpp"
#include "theta_sums/report.hpp"
#include "theta_sums/witness.hpp"

namespace theta_sums::cli {
namespace {

using nlohmann::ordered_json;

std::string tuple_text(const std::vector<std::int64_t>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k];
  os << ')';
  return os.str();
}

ordered_json bigint_json(const mpz_class& z) {
  if (z.fits_slong_p()) return ordered_json(z.get_si());
  return ordered_json(z.get_str());
}

std::string_view step_name(WitnessStep::Kind k) {
  switch (k) {
    case WitnessStep::Kind::Start:
      return "start";
    case WitnessStep::Kind::Double:
      return "double";
    case WitnessStep::Kind::Reflect:
      return "reflect";
  }
  return "?";
}

unsigned resolve_threads(const std::optional<unsigned>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv(kThreadsEnv); env != nullptr && *env != '\0') {
    try {
      return static_cast<unsigned>(std::stoul(env));
    } catch (const std::exception&) {
      throw InvalidInput(std::string(kThreadsEnv) + " must be a non-negative integer");
    }
  }
  return 0;
}

struct MuArgs {
  std::int64_t p = 0;
  std::vector<std::int64_t> degrees;
  std::string method = "bfs";
  bool json = false;
};

int cmd_mu(const MuArgs& a, std::ostream& out) {
  const MuProblem prob(Prime(a.p), a.degrees);
  std::optional<MuResult> bfs, brute;
  if (a.method != "brute") bfs = mu_bfs(prob);
  if (a.method != "bfs") brute = mu_brute(prob);
  for (const auto* r : {&bfs, &brute}) {
    if (*r && !verify_mu_result(prob, **r)) {
      throw InvariantError(std::string(to_string((*r)->method)) +
                           " solver returned an invalid witness");
    }
  }
  if (bfs && brute && bfs->value != brute->value) {
    throw InvariantError("solvers disagree: bfs=" + std::to_string(bfs->value) +
                         " brute=" + std::to_string(brute->value));
  }
  const MuResult& r = brute ? *brute : *bfs;
  const std::int64_t bound = prob.p.half_order();

  if (a.json) {
    ordered_json j;
    j["p"] = a.p;
    j["degrees"] = a.degrees;
    if (a.degrees.size() == 2) {
      j["d1"] = a.degrees[0];
      j["d2"] = a.degrees[1];
    }
    j["mu"] = r.value;
    j["bound"] = bound;
    j["ok"] = r.value <= bound;
    if (r.witness.size() == 2) {
      j["j1"] = r.witness[0];
      j["j2"] = r.witness[1];
    }
    j["witness"] = r.witness;
    j["method"] = a.method;
    out << j.dump() << '\n';
  } else {
    out << "mu=" << r.value << " witness=" << tuple_text(r.witness) << '\n';
    out << "method=" << a.method << " bound=" << bound
        << " ok=" << (r.value <= bound ? "true" : "false") << '\n';
  }
  return kExitOk;
}

struct WitnessArgs {
  std::int64_t p = 0, d1 = 0, d2 = 0;
  bool json = false;
};

int cmd_witness(const WitnessArgs& a, std::ostream& out) {
  const WitnessResult w = construct_witness(a.p, a.d1, a.d2);
  const std::int64_t bound = (a.p - 1) / 2;
  const bool sum_ok = w.i + w.j <= bound;
  if (a.json) {
    ordered_json j = to_json(WitnessRow{a.p, a.d1, a.d2, w.i, w.j, w.branch,
                                        w.doublings, w.reflected, w.fallback,
                                        sum_ok});
    ordered_json trace = ordered_json::array();
    for (const WitnessStep& s : w.trace) {
      trace.push_back({{"step", step_name(s.kind)}, {"i", s.i}, {"j", s.j}});
    }
    j["trace"] = trace;
    out << j.dump() << '\n';
  } else {
    out << "(i,j)=(" << w.i << ',' << w.j << ") branch=" << to_string(w.branch)
        << " reflected=" << (w.reflected ? "true" : "false") << '\n';
    out << "doublings=" << w.doublings
        << " fallback=" << (w.fallback ? "true" : "false") << " sum=" << w.i + w.j
        << " bound=" << bound << " sum_ok=" << (sum_ok ? "true" : "false") << '\n';
    if (!w.trace.empty()) {
      out << "trace:";
      for (const WitnessStep& s : w.trace) {
        out << ' ' << step_name(s.kind) << '(' << s.i << ',' << s.j << ')';
      }
      out << '\n';
    }
  }
  return sum_ok ? kExitOk : kExitViolations;
}

struct ExpsumArgs {
  std::int64_t p = 0;
  std::string poly;
  bool json = false;
};

int cmd_expsum(const ExpsumArgs& a, std::ostream& out) {
  const Prime p(a.p);
  const SparsePoly f = parse_poly(a.poly, p);
  const CycInt s = exp_sum(f);
  const Valuation nu = theta_valuation(s);
  std::vector<std::int64_t> degrees;
  for (const Term& t : f.terms()) degrees.push_back(t.exponent);
  const std::int64_t mu = mu_bfs(MuProblem(p, degrees)).value;
  const std::string nu_p = nu.is_infinite() ? "inf" : p_adic_valuation(s).to_string();
  const bool ok = nu.at_least(mu);

  if (a.json) {
    ordered_json j;
    j["p"] = a.p;
    j["poly"] = f.to_string();
    ordered_json coeffs = ordered_json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back(bigint_json(c));
    j["coeffs"] = coeffs;
    if (nu.is_infinite()) {
      j["nu_theta"] = "inf";
    } else {
      j["nu_theta"] = nu.value();
    }
    j["nu_p"] = nu_p;
    j["mu"] = mu;
    j["ok"] = ok;
    out << j.dump() << '\n';
  } else {
    out << "poly=" << f.to_string() << '\n';
    out << "coeffs=[";
    for (std::size_t k = 0; k < s.coeffs().size(); ++k) {
      out << (k ? "," : "") << s.coeffs()[k].get_str();
    }
    out << "]\n";
    out << "nu_theta=" << nu << " nu_p=" << nu_p << '\n';
    out << "mu=" << mu << " ok=" << (ok ? "true" : "false") << '\n';
  }
  return ok ? kExitOk : kExitViolations;
}

struct SweepArgs {
  std::string kind;
  std::int64_t pmin = 5;
  std::int64_t pmax = 0;
  std::string method = "bfs";
  std::string coeffs = "all";
  std::optional<unsigned> threads;
  std::string format = "csv";
  std::string out_path;
  double budget = kDefaultWorkBudget;
};

void print_summary(std::ostream& os, std::string_view kind, const SweepSummary& s) {
  os << "sweep=" << kind << " rows=" << s.rows_checked
     << " violations=" << s.violations << " fallbacks=" << s.fallbacks
     << " max_mu_ratio=" << s.max_mu_ratio;
  if (kind == "theorem1") os << " equality_count=" << s.equality_count;
  if (s.solver_disagreements) os << " solver_disagreements=" << s.solver_disagreements;
  for (const auto& [name, n] : s.branch_counts) os << ' ' << name << '=' << n;
  os << " elapsed=" << s.elapsed.count() << "s\n";
  if (s.fallbacks > 0) {
    os << "finding: construction fell back to the exhaustive solver " << s.fallbacks
       << " time(s)\n";
  }
}

template <typename Row>
int emit(const SweepArgs& a, const SweepResult<Row>& result, std::ostream& out,
         std::ostream& err) {
  const ReportFormat format =
      a.format == "csv" ? ReportFormat::Csv : ReportFormat::JsonLines;
  if (a.out_path.empty()) {
    write_report(out, result, format);
    print_summary(err, a.kind, result.summary);
  } else {
    std::ofstream file(a.out_path, std::ios::binary | std::ios::trunc);
    if (!file) throw InvalidInput("cannot open " + a.out_path + " for writing");
    write_report(file, result, format);
    file.close();
    if (!file) throw std::runtime_error("failed writing " + a.out_path);
    print_summary(out, a.kind, result.summary);
  }
  return result.summary.violations == 0 ? kExitOk : kExitViolations;
}

int cmd_sweep(const SweepArgs& a, std::ostream& out, std::ostream& err) {
  SweepOptions opts;
  opts.threads = resolve_threads(a.threads);
  opts.max_work = a.budget;
  if (a.kind == "conjecture") {
    const SolverChoice solver = a.method == "bfs"     ? SolverChoice::BFS
                                : a.method == "brute" ? SolverChoice::Brute
                                                      : SolverChoice::Both;
    return emit(a, sweep_conjecture(a.pmin, a.pmax, solver, opts), out, err);
  }
  if (a.kind == "theorem1") {
    const CoeffPolicy policy = a.coeffs == "all" ? CoeffPolicy::All : CoeffPolicy::Diagonal;
    return emit(a, sweep_theorem1(a.pmin, a.pmax, policy, opts), out, err);
  }
  return emit(a, sweep_witness(a.pmin, a.pmax, opts), out, err);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact exponential sums over prime fields and the modular bound mu_p",
               "theta-sums"};
  app.require_subcommand(1);

  MuArgs mu_args;
  auto* mu = app.add_subcommand("mu", "Compute mu_p(d_1,...,d_N) with a witness");
  mu->add_option("--p", mu_args.p, "Prime p >= 5")->required();
  mu->add_option("--degrees", mu_args.degrees, "Comma-separated degrees in [1, p-2]")
      ->required()
      ->delimiter(',');
  mu->add_option("--method", mu_args.method)
      ->check(CLI::IsMember({"bfs", "brute", "both"}))
      ->capture_default_str();
  mu->add_flag("--json", mu_args.json, "Emit one JSON object");

  WitnessArgs w_args;
  auto* wit = app.add_subcommand("witness", "Run the constructive witness procedure");
  wit->add_option("--p", w_args.p)->required();
  wit->add_option("--d1", w_args.d1)->required();
  wit->add_option("--d2", w_args.d2)->required();
  wit->add_flag("--json", w_args.json);

  ExpsumArgs e_args;
  auto* es = app.add_subcommand("expsum", "Exponential sum and its valuations");
  es->add_option("--p", e_args.p)->required();
  es->add_option("--poly", e_args.poly, "e.g. \"2*x^3 + 3*x^7\"")->required();
  es->add_flag("--json", e_args.json);

  SweepArgs s_args;
  auto* sw = app.add_subcommand("sweep", "Batch verification over a prime range");
  sw->add_option("kind", s_args.kind)
      ->required()
      ->check(CLI::IsMember({"conjecture", "theorem1", "witness"}));
  sw->add_option("--pmin", s_args.pmin)->capture_default_str();
  sw->add_option("--pmax", s_args.pmax)->required();
  sw->add_option("--method", s_args.method, "Conjecture solver")
      ->check(CLI::IsMember({"bfs", "brute", "both"}))
      ->capture_default_str();
  sw->add_option("--coeffs", s_args.coeffs, "Coefficient policy for the theorem1 sweep")
      ->check(CLI::IsMember({"all", "diag"}))
      ->capture_default_str();
  sw->add_option("--threads", s_args.threads,
                 std::string("Worker threads, 0 = all cores (default from ") +
                     kThreadsEnv + ")");
  sw->add_option("--format", s_args.format)
      ->check(CLI::IsMember({"csv", "jsonl"}))
      ->capture_default_str();
  sw->add_option("--out", s_args.out_path, "Report path (default: stdout)");
  sw->add_option("--budget", s_args.budget, "Work budget in elementary steps")
      ->capture_default_str();

  auto* st = app.add_subcommand("selftest", "Run the embedded acceptance fixtures");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*mu) return cmd_mu(mu_args, out);
    if (*wit) return cmd_witness(w_args, out);
    if (*es) return cmd_expsum(e_args, out);
    if (*sw) return cmd_sweep(s_args, out, err);
    if (*st) return selftest(out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const TooLarge& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvariantError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace theta_sums::cli
