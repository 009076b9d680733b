// kal — build, verify and check exact certificates for knapsack
// approximation lower bounds and the coefficient-rounding scheme.
//
// Exit codes: 0 all verdicts pass, 1 a mathematical verdict failed,
// 2 usage/parameter error, 3 resource budget exceeded.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "kal/balas.hpp"
#include "kal/certificate.hpp"
#include "kal/error.hpp"
#include "kal/field.hpp"
#include "kal/json_io.hpp"
#include "kal/lower_bound.hpp"
#include "kal/random_gen.hpp"
#include "kal/rounding.hpp"

namespace {

using kal::Json;
using kal::Rational;

constexpr int kExitPass = 0;
constexpr int kExitVerdictFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct CsvRow {
  std::string command;
  std::string p_or_n;
  std::string epsilon;
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  std::int64_t wall_ms = 0;
};

void append_csv(const std::string& path, const CsvRow& row) {
  const bool fresh = !std::filesystem::exists(path);
  std::ofstream f(path, std::ios::app);
  if (!f) throw kal::IoError("cannot open " + path + " for writing");
  if (fresh) f << "command,p/n,epsilon,checks,failures,wall_ms\n";
  f << row.command << ',' << row.p_or_n << ',' << row.epsilon << ',' << row.checks << ','
    << row.failures << ',' << row.wall_ms << "\n";
}

class Stopwatch {
public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  std::int64_t ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

private:
  std::chrono::steady_clock::time_point start_;
};

Rational parse_epsilon(const std::string& text) {
  // Exact rationals only: accepting "0.1" here would silently change the
  // mathematics downstream.
  try {
    return Rational::parse(text);
  } catch (const kal::ParseError&) {
    throw kal::ParamError("epsilon must be an exact rational like 1/16 (got '" + text + "')");
  }
}

kal::PairPolicy parse_pair_policy(const std::string& text, std::optional<std::uint64_t> seed) {
  if (text == "all") return kal::PairPolicy::all();
  const std::string prefix = "sample:";
  if (text.rfind(prefix, 0) == 0) {
    const auto count = std::stoull(text.substr(prefix.size()));
    if (!seed.has_value())
      throw kal::ParamError("--pairs sample:N requires --seed for reproducibility");
    return kal::PairPolicy::sample(*seed, count);
  }
  throw kal::ParamError("--pairs must be 'all' or 'sample:N' (got '" + text + "')");
}

kal::SolveOptions solve_options_from_env(std::optional<std::uint64_t> budget_flag) {
  kal::SolveOptions opts;
  if (const char* env = std::getenv("KAL_BUDGET_NODES")) {
    opts.node_budget = std::stoull(env);
  }
  if (budget_flag.has_value()) opts.node_budget = *budget_flag;
  return opts;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const auto piece = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                   : comma - pos);
    out.push_back(Rational::parse(piece));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

// ---------------------------------------------------------------------------
// nw

struct NwArgs {
  std::uint64_t prime = 0;
  std::optional<int> degree;
  std::string pairs = "all";
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string report_out;
  std::string csv;
  int jobs = 1;
  std::uint64_t family_cap = 1'000'000;
};

int run_nw(const NwArgs& args) {
  Stopwatch watch;
  if (!kal::is_prime(args.prime))
    throw kal::ParamError(std::to_string(args.prime) + " is not prime");
  int degree;
  if (args.degree.has_value()) {
    degree = *args.degree;
  } else {
    kal::LowerBoundParams params;
    params.p = args.prime;
    params.epsilon = Rational(1, 16); // unused by the family itself
    degree = params.default_degree();
    if (degree < 0)
      throw kal::ParamError("default degree ⌊p/2 − 4⌋ is negative for p = " +
                            std::to_string(args.prime) + "; pass --degree");
  }

  const kal::SetSystem sys = kal::build_nw_family(args.prime, degree, args.family_cap);
  const kal::PairPolicy policy = parse_pair_policy(args.pairs, args.seed);
  const kal::SetSystemReport rep = kal::verify_set_system(sys, policy, args.jobs);

  if (!args.out.empty()) kal::save_json(args.out, kal::to_json(sys));
  if (!args.report_out.empty()) {
    Json j;
    j["p"] = sys.p;
    j["d"] = sys.d;
    j["count"] = rep.count;
    j["count_ok"] = rep.count_ok;
    j["sizes_ok"] = rep.sizes_ok;
    j["distinct_ok"] = rep.distinct_ok;
    j["max_intersection"] = rep.max_intersection;
    j["pairs_checked"] = rep.pairs_checked;
    j["verdict"] = rep.verdict;
    kal::save_json(args.report_out, j);
  }

  std::cout << "NW p=" << sys.p << " d=" << sys.d << " count=" << rep.count
            << " max_intersection=" << rep.max_intersection << " pairs=" << rep.pairs_checked
            << " verdict=" << (rep.verdict ? "PASS" : "FAIL") << "\n";
  if (!args.csv.empty()) {
    append_csv(args.csv, {"nw", std::to_string(args.prime), "", rep.pairs_checked,
                          rep.verdict ? 0ULL : 1ULL, watch.ms()});
  }
  return rep.verdict ? kExitPass : kExitVerdictFail;
}

// ---------------------------------------------------------------------------
// certify / check

struct CertifyArgs {
  std::uint64_t prime = 0;
  std::string epsilon;
  bool relaxed = false;
  std::optional<int> degree;
  std::string pairs = "all";
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string csv;
  int jobs = 1;
  bool full_solve = false;
  std::optional<std::uint64_t> budget;
  std::uint64_t family_cap = 1'000'000;
};

int run_certify(const CertifyArgs& args) {
  Stopwatch watch;
  kal::LowerBoundParams params;
  params.p = args.prime;
  params.epsilon = parse_epsilon(args.epsilon);
  params.strict = !args.relaxed;
  params.degree = args.degree;

  const auto hard = params.hard_errors();
  if (!hard.empty()) throw kal::ParamError(hard.front());
  if (params.strict) {
    const auto regime = params.regime_violations();
    if (!regime.empty()) throw kal::ParamError("strict regime: " + regime.front());
  } else {
    for (const auto& w : params.regime_violations())
      std::cerr << "warning: " << w << "\n";
  }

  kal::CertifyOptions opts;
  opts.jobs = args.jobs;
  opts.full_solve = args.full_solve;
  opts.solve = solve_options_from_env(args.budget);
  opts.family_cap = args.family_cap;

  const kal::PairPolicy policy = parse_pair_policy(args.pairs, args.seed);
  const kal::WitnessCertificate cert = kal::certify(params, policy, opts);

  if (!args.out.empty()) kal::save_certificate(args.out, cert);
  std::cout << kal::certificate_summary(cert) << "\n";
  if (!args.csv.empty()) {
    std::uint64_t failures = 0;
    for (const auto& w : cert.witnesses) failures += w.gap_ok ? 0 : 1;
    for (const auto& pr : cert.pairs) failures += pr.dominance_ok ? 0 : 1;
    append_csv(args.csv, {"certify", std::to_string(args.prime), params.epsilon.str(),
                          cert.witnesses.size() + cert.pairs.size(), failures, watch.ms()});
  }
  return cert.verdict ? kExitPass : kExitVerdictFail;
}

struct CheckArgs {
  std::string in;
  int jobs = 1;
  bool full_solve = false;
  std::string csv;
};

int run_check(const CheckArgs& args) {
  Stopwatch watch;
  const kal::WitnessCertificate cert = kal::load_certificate(args.in);
  kal::CertifyOptions opts;
  opts.jobs = args.jobs;
  opts.full_solve = args.full_solve;
  const kal::CheckReport rep = kal::check_certificate(cert, opts);
  std::cout << "CHECK file=" << args.in << " verdict=" << (rep.ok ? "PASS" : "FAIL");
  if (!rep.ok) std::cout << " detail=\"" << rep.detail << "\"";
  std::cout << "\n";
  if (!args.csv.empty()) {
    append_csv(args.csv, {"check", std::to_string(cert.p), cert.epsilon.str(),
                          cert.witnesses.size() + cert.pairs.size(), rep.ok ? 0ULL : 1ULL,
                          watch.ms()});
  }
  return rep.ok ? kExitPass : kExitVerdictFail;
}

// ---------------------------------------------------------------------------
// round

struct RoundArgs {
  std::string instance_path;
  std::string system_path;
  std::optional<std::uint64_t> lowerbound_prime;
  std::string lowerbound_epsilon;
  std::optional<std::size_t> random_n;
  std::string epsilon; // scheme epsilon
  std::uint64_t trials = 0;
  std::optional<std::uint64_t> seed;
  std::string objective;
  bool claim2 = false;
  bool exhaustive = false;
  bool van_vyve = false;
  std::uint64_t cap = 100'000;
  std::string out;
  std::string csv;
  std::optional<std::uint64_t> budget;
};

struct RoundTarget {
  std::optional<kal::KnapsackInstance> instance;
  std::optional<kal::DownMonotoneSystem> system;
  std::size_t n = 0;
};

Json ratio_check_to_json(const kal::RatioCheck& check) {
  Json j;
  j["epsilon"] = check.epsilon.str();
  j["gamma"] = check.gamma.str();
  j["K"] = check.K.str();
  j["beta"] = check.beta.str();
  j["bound"] = check.bound.str();
  j["ratio"] = check.ratio.str();
  j["verdict"] = check.verdict;
  Json ctilde = Json::array();
  for (const auto& v : check.c_tilde) {
    if (!v.fits_slong_p())
      throw kal::SolveError("rounded coefficient too large for the JSON schema");
    ctilde.push_back(v.get_si());
  }
  j["ctilde"] = std::move(ctilde);
  Json g = Json::array();
  for (auto i : check.G) g.push_back(i);
  j["G"] = std::move(g);
  return j;
}

int run_round(const RoundArgs& args) {
  Stopwatch watch;
  const Rational scheme_eps = parse_epsilon(args.epsilon);
  const kal::SolveOptions solve_opts = solve_options_from_env(args.budget);

  RoundTarget target;
  std::string p_or_n;
  if (!args.instance_path.empty()) {
    target.instance = kal::instance_from_json(kal::load_json(args.instance_path));
    kal::require_valid(*target.instance);
    target.n = target.instance->n();
  } else if (!args.system_path.empty()) {
    target.system = kal::system_from_json(kal::load_json(args.system_path));
    kal::require_valid(*target.system);
    target.n = target.system->n_vars;
  } else if (args.lowerbound_prime.has_value()) {
    kal::LowerBoundParams params;
    params.p = *args.lowerbound_prime;
    params.epsilon = parse_epsilon(args.lowerbound_epsilon.empty() ? "1/16"
                                                                   : args.lowerbound_epsilon);
    target.instance = kal::build_instance(params);
    target.n = target.instance->n();
  } else if (args.random_n.has_value()) {
    if (!args.seed.has_value()) throw kal::ParamError("--n requires --seed");
    kal::SplitMix64 rng(*args.seed);
    target.instance = kal::random_scaled_instance(rng, *args.random_n);
    target.n = *args.random_n;
  } else {
    throw kal::ParamError("round needs --instance, --system, --lowerbound-prime or --n");
  }
  p_or_n = std::to_string(target.n);

  // Objectives to check.
  std::vector<kal::Objective> objectives;
  if (!args.objective.empty()) {
    kal::Objective c;
    c.coeffs = parse_rational_list(args.objective);
    if (c.dim() != target.n)
      throw kal::ParamError("--objective has " + std::to_string(c.dim()) + " entries, expected " +
                            std::to_string(target.n));
    objectives.push_back(std::move(c));
  } else if (args.claim2) {
    if (!args.lowerbound_prime.has_value())
      throw kal::ParamError("--claim2 needs --lowerbound-prime");
    const auto family = kal::build_nw_family(*args.lowerbound_prime, 0, 1'000);
    objectives.push_back(kal::separation_objective(
        family.sets.front().elements,
        parse_epsilon(args.lowerbound_epsilon.empty() ? "1/16" : args.lowerbound_epsilon),
        target.n - 1));
  } else {
    if (args.trials == 0)
      throw kal::ParamError("round needs --objective, --claim2 or --trials");
    if (!args.seed.has_value()) throw kal::ParamError("--trials requires --seed");
    for (std::uint64_t t = 0; t < args.trials; ++t) {
      kal::SplitMix64 rng(kal::SplitMix64::derive(*args.seed, t));
      objectives.push_back(kal::random_objective(rng, target.n));
    }
  }

  Json results = Json::array();
  std::uint64_t failures = 0;
  for (const auto& c : objectives) {
    kal::RatioCheck check;
    if (target.instance) {
      check = kal::certify_ratio(*target.instance, c, scheme_eps, solve_opts);
    } else {
      check = kal::certify_ratio(*target.system, c, scheme_eps);
    }
    Json j = ratio_check_to_json(check);
    bool ok = check.verdict;

    if ((args.exhaustive || args.van_vyve) && !check.trivial) {
      // Oracle chain: β ≤ maxQ ≤ bound, and the guarantee (1−ε)·maxQ ≤ β.
      kal::Objective clamped = c;
      for (auto& v : clamped.coeffs) {
        if (v.sign() < 0) v = Rational(0);
      }
      const auto chain = [&](const kal::SolveResult& q_res, const char* key) {
        const Rational& max_q = q_res.value;
        const bool chain_ok = check.beta <= max_q && max_q <= check.bound &&
                              (Rational(1) - scheme_eps) * max_q <= check.beta;
        j[key] = max_q.str();
        j[std::string(key) + "_ok"] = chain_ok;
        std::cout << "  chain " << key << ": beta=" << check.beta.str()
                  << " maxQ=" << max_q.str() << " bound=" << check.bound.str() << " "
                  << (chain_ok ? "OK" : "VIOLATED") << "\n";
        return chain_ok;
      };
      if (args.exhaustive) {
        const auto q = target.instance
                           ? kal::exhaustive_q_opt(*target.instance, clamped, scheme_eps, args.cap)
                           : kal::exhaustive_q_opt(*target.system, clamped, scheme_eps, args.cap);
        ok = chain(q, "max_q") && ok;
      }
      if (args.van_vyve) {
        const auto q = target.instance
                           ? kal::van_vyve_q_opt(*target.instance, clamped, scheme_eps, args.cap)
                           : kal::van_vyve_q_opt(*target.system, clamped, scheme_eps, args.cap);
        ok = chain(q, "max_q_van_vyve") && ok;
      }
    }

    if (!check.clamped_indices.empty())
      std::cerr << "note: clamped " << check.clamped_indices.size()
                << " negative objective coefficients to 0\n";
    if (!ok) ++failures;
    results.push_back(std::move(j));
  }

  if (!args.out.empty()) kal::save_json(args.out, results);
  const bool pass = failures == 0;
  std::cout << "ROUND n=" << target.n << " eps=" << scheme_eps.str()
            << " checks=" << objectives.size() << " failures=" << failures
            << " verdict=" << (pass ? "PASS" : "FAIL") << "\n";
  if (!args.csv.empty()) {
    append_csv(args.csv,
               {"round", p_or_n, scheme_eps.str(), objectives.size(), failures, watch.ms()});
  }
  return pass ? kExitPass : kExitVerdictFail;
}

// ---------------------------------------------------------------------------
// extension

struct ExtensionArgs {
  std::optional<std::uint64_t> prime;
  std::optional<std::uint64_t> n;
  std::string epsilon;
  std::uint64_t trials = 100;
  std::optional<std::uint64_t> seed;
  bool relaxed = false;
  int jobs = 1;
  std::string out;
  std::string csv;
};

int run_extension(const ExtensionArgs& args) {
  Stopwatch watch;
  const Rational eps = parse_epsilon(args.epsilon);
  std::uint64_t sqrt_n = 0;
  if (args.prime.has_value()) {
    if (!kal::is_prime(*args.prime))
      throw kal::ParamError(std::to_string(*args.prime) + " is not prime");
    sqrt_n = *args.prime;
  } else if (args.n.has_value()) {
    while ((sqrt_n + 1) * (sqrt_n + 1) <= *args.n) ++sqrt_n;
    if (sqrt_n * sqrt_n != *args.n)
      throw kal::ParamError("--n must be a perfect square (got " + std::to_string(*args.n) + ")");
  } else {
    throw kal::ParamError("extension needs --prime or --n");
  }
  if (!args.seed.has_value()) throw kal::ParamError("extension requires --seed");
  if (!args.relaxed &&
      (!kal::is_prime(sqrt_n) || !(eps < Rational(2, 27)) || sqrt_n * sqrt_n < 130)) {
    std::cerr << "warning: parameters are outside the lower-bound regime; the extension is "
                 "still exact (pass --relaxed to silence)\n";
  }

  const kal::BalasExtension ext = kal::build_balas_extension(sqrt_n, eps);
  if (ext.piece1_empty)
    std::cerr << "note: b1 < 0, no feasible point has the heavy item; piece 1 dropped\n";
  const kal::KnapsackInstance inst = kal::hard_instance(sqrt_n, eps);
  const kal::ExtensionReport rep =
      kal::verify_extension(ext, inst, args.trials, *args.seed, args.jobs);

  if (!args.out.empty()) {
    Json j = kal::to_json(ext.rows);
    Json vars = Json::array();
    for (const auto& name : ext.var_names()) vars.push_back(name);
    j["vars"] = std::move(vars);
    j["epsilon"] = eps.str();
    j["b0"] = ext.b0;
    j["b1"] = ext.b1;
    j["trials"] = rep.trials;
    j["failures"] = rep.failures;
    j["lift_checks"] = rep.lift_checks;
    j["lift_failures"] = rep.lift_failures;
    j["verdict"] = rep.verdict;
    kal::save_json(args.out, j);
  }

  std::cout << "EXTENSION n=" << ext.n << " eps=" << eps.str() << " b0=" << ext.b0
            << " b1=" << ext.b1 << " trials=" << rep.trials << " failures=" << rep.failures
            << " lift_checks=" << rep.lift_checks
            << " verdict=" << (rep.verdict ? "PASS" : "FAIL") << "\n";
  if (!args.csv.empty()) {
    append_csv(args.csv, {"extension", std::to_string(ext.n), eps.str(),
                          rep.trials + rep.lift_checks, rep.failures + rep.lift_failures,
                          watch.ms()});
  }
  return rep.verdict ? kExitPass : kExitVerdictFail;
}

// ---------------------------------------------------------------------------
// report

struct ReportArgs {
  std::string in;
  std::string csv;
};

int run_report(const ReportArgs& args) {
  Stopwatch watch;
  const Json j = kal::load_json(args.in);
  std::string command = "report";
  std::string p_or_n;
  std::string eps;
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;

  if (j.is_object() && j.value("format", "") == "kal-certificate") {
    const kal::WitnessCertificate cert = kal::certificate_from_json(j);
    std::cout << kal::certificate_summary(cert) << "\n";
    std::cout << "witness count " << cert.witness_count << " = p^(d+1) with p=" << cert.p
              << ", d=" << cert.degree << "; any epsilon-approximation of this instance in the"
              << " original space needs at least " << cert.witness_count
              << " distinct inequalities\n";
    p_or_n = std::to_string(cert.p);
    eps = cert.epsilon.str();
    checks = cert.witnesses.size() + cert.pairs.size();
    for (const auto& w : cert.witnesses) failures += w.gap_ok ? 0 : 1;
    for (const auto& pr : cert.pairs) failures += pr.dominance_ok ? 0 : 1;
  } else if (j.is_object() && j.contains("sets")) {
    const kal::SetSystem sys = kal::set_system_from_json(j);
    std::cout << "SETSYSTEM p=" << sys.p << " d=" << sys.d << " sets=" << sys.sets.size()
              << "\n";
    p_or_n = std::to_string(sys.p);
    checks = sys.sets.size();
  } else if (j.is_array()) {
    std::uint64_t pass = 0;
    for (const auto& item : j) {
      if (item.contains("verdict") && item["verdict"].get<bool>()) ++pass;
    }
    checks = j.size();
    failures = checks - pass;
    std::cout << "RATIOCHECKS checks=" << checks << " failures=" << failures << "\n";
  } else if (j.is_object() && j.contains("b0")) {
    std::cout << "EXTENSION n=" << (j.at("n").get<std::uint64_t>() - 1) / 2
              << " b0=" << j.at("b0").get<std::int64_t>()
              << " b1=" << j.at("b1").get<std::int64_t>() << " verdict="
              << (j.value("verdict", false) ? "PASS" : "FAIL") << "\n";
    checks = j.value("trials", 0ULL);
    failures = j.value("failures", 0ULL);
    eps = j.value("epsilon", "");
  } else {
    throw kal::ParseError("unrecognized report input: " + args.in);
  }

  if (!args.csv.empty()) append_csv(args.csv, {command, p_or_n, eps, checks, failures, watch.ms()});
  return kExitPass;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact certificates for knapsack approximation lower bounds"};
  app.require_subcommand(1);

  NwArgs nw;
  auto* nw_cmd = app.add_subcommand("nw", "build and verify the polynomial-graph set system");
  nw_cmd->add_option("--prime", nw.prime, "field size p (prime)")->required();
  int nw_degree = -1;
  auto* nw_degree_opt = nw_cmd->add_option("--degree", nw_degree, "max polynomial degree");
  nw_cmd->add_option("--pairs", nw.pairs, "all | sample:N");
  std::uint64_t nw_seed = 0;
  auto* nw_seed_opt = nw_cmd->add_option("--seed", nw_seed, "sampling seed");
  nw_cmd->add_option("--out", nw.out, "write the set system JSON here");
  nw_cmd->add_option("--report", nw.report_out, "write the verification report JSON here");
  nw_cmd->add_option("--csv", nw.csv, "append a CSV summary row");
  nw_cmd->add_option("--jobs", nw.jobs, "worker threads");
  nw_cmd->add_option("--max-family", nw.family_cap, "family size cap");

  CertifyArgs certify;
  auto* certify_cmd = app.add_subcommand("certify", "build and verify a witness certificate");
  certify_cmd->add_option("--prime", certify.prime, "field size p (prime)")->required();
  certify_cmd->add_option("--epsilon", certify.epsilon, "epsilon as exact rational")->required();
  certify_cmd->add_flag("--relaxed", certify.relaxed, "waive the strict parameter regime");
  int certify_degree = -1;
  auto* certify_degree_opt =
      certify_cmd->add_option("--degree", certify_degree, "degree override (relaxed)");
  certify_cmd->add_option("--pairs", certify.pairs, "all | sample:N");
  std::uint64_t certify_seed = 0;
  auto* certify_seed_opt = certify_cmd->add_option("--seed", certify_seed, "sampling seed");
  certify_cmd->add_option("--out", certify.out, "certificate path (.gz compresses)");
  certify_cmd->add_option("--csv", certify.csv, "append a CSV summary row");
  certify_cmd->add_option("--jobs", certify.jobs, "worker threads");
  certify_cmd->add_flag("--full-solve", certify.full_solve,
                        "solve gap checks over the full instance instead of the support");
  std::uint64_t certify_budget = 0;
  auto* certify_budget_opt =
      certify_cmd->add_option("--budget-nodes", certify_budget, "branch-and-bound node budget");
  certify_cmd->add_option("--max-family", certify.family_cap, "family size cap");

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "re-verify a stored certificate");
  check_cmd->add_option("--in", check.in, "certificate path")->required();
  check_cmd->add_option("--jobs", check.jobs, "worker threads");
  check_cmd->add_flag("--full-solve", check.full_solve, "full-instance gap solves");
  check_cmd->add_option("--csv", check.csv, "append a CSV summary row");

  RoundArgs round;
  auto* round_cmd = app.add_subcommand("round", "certify the coefficient-rounding scheme");
  round_cmd->add_option("--instance", round.instance_path, "knapsack instance JSON");
  round_cmd->add_option("--system", round.system_path, "down-monotone system JSON");
  std::uint64_t round_lb_prime = 0;
  auto* round_lb_opt = round_cmd->add_option("--lowerbound-prime", round_lb_prime,
                                             "use the hard instance for this prime");
  round_cmd->add_option("--lowerbound-epsilon", round.lowerbound_epsilon,
                        "instance epsilon (default 1/16)");
  std::size_t round_n = 0;
  auto* round_n_opt = round_cmd->add_option("--n", round_n, "random seeded instance of this size");
  round_cmd->add_option("--epsilon", round.epsilon, "scheme epsilon (exact rational)")->required();
  round_cmd->add_option("--trials", round.trials, "number of random objectives");
  std::uint64_t round_seed = 0;
  auto* round_seed_opt = round_cmd->add_option("--seed", round_seed, "master seed");
  round_cmd->add_option("--objective", round.objective, "explicit objective (comma-separated)");
  round_cmd->add_flag("--claim2", round.claim2, "use the first witness separation objective");
  round_cmd->add_flag("--exhaustive", round.exhaustive, "also solve Q exhaustively (tiny n)");
  round_cmd->add_flag("--van-vyve", round.van_vyve, "also solve the baseline-grid Q (tiny n)");
  round_cmd->add_option("--cap", round.cap, "tuple enumeration cap");
  round_cmd->add_option("--out", round.out, "write ratio checks JSON here");
  round_cmd->add_option("--csv", round.csv, "append a CSV summary row");
  std::uint64_t round_budget = 0;
  auto* round_budget_opt =
      round_cmd->add_option("--budget-nodes", round_budget, "branch-and-bound node budget");

  ExtensionArgs extension;
  auto* ext_cmd = app.add_subcommand("extension", "build and verify the Balas extension");
  std::uint64_t ext_prime = 0;
  auto* ext_prime_opt = ext_cmd->add_option("--prime", ext_prime, "sqrt(n), prime");
  std::uint64_t ext_n = 0;
  auto* ext_n_opt = ext_cmd->add_option("--n", ext_n, "base item count (perfect square)");
  ext_cmd->add_option("--epsilon", extension.epsilon, "epsilon (exact rational)")->required();
  ext_cmd->add_option("--trials", extension.trials, "random objectives to test");
  std::uint64_t ext_seed = 0;
  auto* ext_seed_opt = ext_cmd->add_option("--seed", ext_seed, "master seed");
  ext_cmd->add_flag("--relaxed", extension.relaxed, "accept any epsilon in (0,1)");
  ext_cmd->add_option("--jobs", extension.jobs, "worker threads");
  ext_cmd->add_option("--out", extension.out, "write the extension system JSON here");
  ext_cmd->add_option("--csv", extension.csv, "append a CSV summary row");

  ReportArgs report;
  auto* report_cmd = app.add_subcommand("report", "summarize a kal output file");
  report_cmd->add_option("--in", report.in, "input file")->required();
  report_cmd->add_option("--csv", report.csv, "append a CSV summary row");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (nw_cmd->parsed()) {
      if (nw_degree_opt->count() > 0) nw.degree = nw_degree;
      if (nw_seed_opt->count() > 0) nw.seed = nw_seed;
      return run_nw(nw);
    }
    if (certify_cmd->parsed()) {
      if (certify_degree_opt->count() > 0) certify.degree = certify_degree;
      if (certify_seed_opt->count() > 0) certify.seed = certify_seed;
      if (certify_budget_opt->count() > 0) certify.budget = certify_budget;
      return run_certify(certify);
    }
    if (check_cmd->parsed()) return run_check(check);
    if (round_cmd->parsed()) {
      if (round_lb_opt->count() > 0) round.lowerbound_prime = round_lb_prime;
      if (round_n_opt->count() > 0) round.random_n = round_n;
      if (round_seed_opt->count() > 0) round.seed = round_seed;
      if (round_budget_opt->count() > 0) round.budget = round_budget;
      return run_round(round);
    }
    if (ext_cmd->parsed()) {
      if (ext_prime_opt->count() > 0) extension.prime = ext_prime;
      if (ext_n_opt->count() > 0) extension.n = ext_n;
      if (ext_seed_opt->count() > 0) extension.seed = ext_seed;
      return run_extension(extension);
    }
    if (report_cmd->parsed()) return run_report(report);
  } catch (const kal::BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const kal::ParamError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const kal::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const kal::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const kal::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerdictFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
