#include "corrgraph/experiment.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "corrgraph/admissibility.hpp"
#include "corrgraph/detection.hpp"
#include "corrgraph/errors.hpp"
#include "corrgraph/likelihood.hpp"
#include "corrgraph/parallel.hpp"
#include "corrgraph/sampling.hpp"

namespace corrgraph {

namespace {

// Substream bases keeping the rho-curve estimation, H1 trials and H0 trials
// on disjoint streams of the master seed.
constexpr std::uint64_t kStreamTrials = 0;
constexpr std::uint64_t kStreamNull = 1ull << 40;
constexpr std::uint64_t kStreamRho = 1ull << 41;

std::string fmt(const char* f, ...) {
  char buf[256];
  va_list ap;
  va_start(ap, f);
  vsnprintf(buf, sizeof(buf), f, ap);
  va_end(ap);
  return buf;
}

double parse_double(const std::string& v, const std::string& flag) {
  try {
    std::size_t used = 0;
    double d = std::stod(v, &used);
    if (used != v.size()) throw std::invalid_argument("trailing");
    return d;
  } catch (const std::exception&) {
    throw ParameterError("usage: bad value '" + v + "' for " + flag);
  }
}

int parse_int(const std::string& v, const std::string& flag) {
  try {
    std::size_t used = 0;
    long d = std::stol(v, &used);
    if (used != v.size()) throw std::invalid_argument("trailing");
    return static_cast<int>(d);
  } catch (const std::exception&) {
    throw ParameterError("usage: bad value '" + v + "' for " + flag);
  }
}

std::uint64_t parse_u64(const std::string& v, const std::string& flag) {
  try {
    std::size_t used = 0;
    std::uint64_t d = std::stoull(v, &used);
    if (used != v.size()) throw std::invalid_argument("trailing");
    return d;
  } catch (const std::exception&) {
    throw ParameterError("usage: bad value '" + v + "' for " + flag);
  }
}

template <class T, class Parse>
std::vector<T> parse_list(const std::string& v, const std::string& flag, Parse p) {
  std::vector<T> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(p(item, flag));
  if (out.empty()) throw ParameterError("usage: empty list for " + flag);
  return out;
}

ExperimentKind parse_kind(const std::string& v) {
  if (v == "rho-sweep") return ExperimentKind::rho_sweep;
  if (v == "detect") return ExperimentKind::detect;
  if (v == "tv") return ExperimentKind::tv;
  if (v == "admissibility-rate") return ExperimentKind::admissibility_rate;
  if (v == "moment-trend") return ExperimentKind::moment_trend;
  throw ParameterError("usage: unknown experiment kind '" + v + "'");
}

void apply_file(ExperimentConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open config file " + path);
  nlohmann::json j;
  in >> j;
  if (j.contains("kind")) cfg.kind = parse_kind(j["kind"].get<std::string>());
  if (j.contains("n")) cfg.n = j["n"].get<int>();
  if (j.contains("alpha")) cfg.alpha = j["alpha"].get<double>();
  if (j.contains("p")) cfg.p = j["p"].get<double>();
  if (j.contains("s")) cfg.s = j["s"].get<double>();
  if (j.contains("tau")) cfg.tau = j["tau"].get<double>();
  if (j.contains("epsilon")) cfg.epsilon = j["epsilon"].get<double>();
  if (j.contains("trials")) cfg.trials = j["trials"].get<int>();
  if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("threads")) cfg.threads = j["threads"].get<int>();
  if (j.contains("output")) cfg.output = j["output"].get<std::string>();
  if (j.contains("lambda_grid")) cfg.lambda_grid = j["lambda_grid"].get<std::vector<double>>();
  if (j.contains("s_grid")) cfg.s_grid = j["s_grid"].get<std::vector<double>>();
  if (j.contains("n_grid")) cfg.n_grid = j["n_grid"].get<std::vector<int>>();
  if (j.contains("mode")) {
    auto m = j["mode"].get<std::string>();
    if (m == "planted") cfg.detect_mode = DetectMode::planted;
    else if (m == "bruteforce") cfg.detect_mode = DetectMode::bruteforce;
    else throw ParameterError("usage: unknown mode '" + m + "'");
  }
  if (j.contains("rho_n")) cfg.rho_n = j["rho_n"].get<int>();
  if (j.contains("rho_trials")) cfg.rho_trials = j["rho_trials"].get<int>();
  if (j.contains("tol")) cfg.tol = j["tol"].get<double>();
  if (j.contains("xi")) cfg.xi = j["xi"].get<double>();
  if (j.contains("delta")) cfg.delta = j["delta"].get<double>();
  if (j.contains("c_prime")) cfg.c_prime = j["c_prime"].get<double>();
  if (j.contains("k_max")) cfg.k_max = j["k_max"].get<int>();
  if (j.contains("cycle_cap")) cfg.cycle_cap = j["cycle_cap"].get<int>();
}

}  // namespace

ExperimentConfig parse_config(const std::vector<std::string>& args,
                              const std::string& config_file) {
  ExperimentConfig cfg;
  if (!config_file.empty()) apply_file(cfg, config_file);

  bool alpha_from_flags = false, p_from_flags = false;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& flag = args[i];
    auto next = [&]() -> const std::string& {
      if (i + 1 >= args.size()) throw ParameterError("usage: missing value for " + flag);
      return args[++i];
    };
    if (flag == "--kind") cfg.kind = parse_kind(next());
    else if (flag == "--n") cfg.n = parse_int(next(), flag);
    else if (flag == "--alpha") { cfg.alpha = parse_double(next(), flag); alpha_from_flags = true; }
    else if (flag == "--p") { cfg.p = parse_double(next(), flag); p_from_flags = true; }
    else if (flag == "--s") cfg.s = parse_double(next(), flag);
    else if (flag == "--tau") cfg.tau = parse_double(next(), flag);
    else if (flag == "--eps") cfg.epsilon = parse_double(next(), flag);
    else if (flag == "--trials") cfg.trials = parse_int(next(), flag);
    else if (flag == "--seed") cfg.seed = parse_u64(next(), flag);
    else if (flag == "--threads") cfg.threads = parse_int(next(), flag);
    else if (flag == "--output") cfg.output = next();
    else if (flag == "--lambda-grid") cfg.lambda_grid = parse_list<double>(next(), flag, parse_double);
    else if (flag == "--s-grid") cfg.s_grid = parse_list<double>(next(), flag, parse_double);
    else if (flag == "--n-grid") cfg.n_grid = parse_list<int>(next(), flag, parse_int);
    else if (flag == "--mode") {
      const std::string& m = next();
      if (m == "planted") cfg.detect_mode = DetectMode::planted;
      else if (m == "bruteforce") cfg.detect_mode = DetectMode::bruteforce;
      else throw ParameterError("usage: unknown mode '" + m + "'");
    }
    else if (flag == "--rho-n") cfg.rho_n = parse_int(next(), flag);
    else if (flag == "--rho-trials") cfg.rho_trials = parse_int(next(), flag);
    else if (flag == "--tol") cfg.tol = parse_double(next(), flag);
    else if (flag == "--xi") cfg.xi = parse_double(next(), flag);
    else if (flag == "--delta") cfg.delta = parse_double(next(), flag);
    else if (flag == "--cprime") cfg.c_prime = parse_double(next(), flag);
    else if (flag == "--kmax") cfg.k_max = parse_int(next(), flag);
    else if (flag == "--cycle-cap") cfg.cycle_cap = parse_int(next(), flag);
    else throw ParameterError("usage: unknown flag '" + flag + "'");
  }

  if (alpha_from_flags && p_from_flags)
    throw ParameterError("usage: --alpha and --p are mutually exclusive");
  if (cfg.alpha && cfg.p && alpha_from_flags) cfg.p.reset();   // flag overrides file
  if (cfg.alpha && cfg.p && p_from_flags) cfg.alpha.reset();
  if (cfg.alpha && cfg.p)
    throw ParameterError("usage: config sets both alpha and p");
  if (cfg.alpha && (*cfg.alpha <= 0.0 || *cfg.alpha > 1.0))
    throw ParameterError("usage: alpha outside (0,1]");
  if (cfg.p && (*cfg.p <= 0.0 || *cfg.p > 1.0))
    throw ParameterError("usage: p outside (0,1]");
  if (cfg.trials < 1) throw ParameterError("usage: trials must be positive");
  if (cfg.threads < 1) throw ParameterError("usage: threads must be positive");
  return cfg;
}

ExperimentOutput run_rho_sweep(const ExperimentConfig& config) {
  if (config.lambda_grid.empty())
    throw ParameterError("rho-sweep: empty lambda grid");
  std::string csv = csv_header("rho-sweep");
  csv += "lambda,n,trials,mean,stderr\n";
  std::vector<RhoEstimate> rows;
  for (double lambda : config.lambda_grid) {
    RhoEstimate e = estimate_rho(lambda, config.n, config.trials,
                                 RngSeed{config.seed, kStreamRho}, config.threads);
    rows.push_back(e);
    csv += fmt("%.6f,%d,%d,%.6f,%.6f\n", e.lambda, e.n, e.trials, e.mean, e.stderr_);
  }
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].lambda <= rows[i - 1].lambda) continue;
    double joint = 3.0 * std::sqrt(rows[i].stderr_ * rows[i].stderr_ +
                                   rows[i - 1].stderr_ * rows[i - 1].stderr_);
    if (rows[i].mean < rows[i - 1].mean - joint)
      csv += fmt("# warning: mean decreased beyond 3 joint stderr at lambda=%.6f\n",
                 rows[i].lambda);
  }
  return ExperimentOutput{std::move(csv)};
}

namespace {

struct ResolvedDetection {
  double p = 0, s = 0, tau = 0, lambda_star = 0;
  int floor = 0;
};

ResolvedDetection resolve_detection(const ExperimentConfig& config) {
  ResolvedDetection r;
  if (config.alpha) {
    RhoCurve curve(config.rho_n, config.rho_trials,
                   RngSeed{config.seed, kStreamRho}, config.threads);
    DetectionConfig dc = make_detection_config(config.n, *config.alpha,
                                               config.epsilon, curve, config.tol);
    r.p = dc.p;
    r.s = dc.s;
    r.tau = config.tau.value_or(dc.tau);
    r.lambda_star = dc.thresholds.lambda_star;
    r.floor = dc.size_floor;
    return r;
  }
  if (!config.p || !config.s || !config.tau)
    throw ParameterError("detect: need --alpha, or explicit --p --s --tau");
  r.p = *config.p;
  r.s = *config.s;
  r.tau = *config.tau;
  r.floor = config.n >= 3 ? size_floor(config.n) : 1;
  return r;
}

}  // namespace

ExperimentOutput run_detection_experiment(const ExperimentConfig& config) {
  const bool brute = config.detect_mode == DetectMode::bruteforce;
  if (brute && config.n > 8)
    throw RefusalError("detect: bruteforce mode requires n <= 8");
  if (!brute && config.n < 100)
    throw RefusalError("detect: planted mode requires n >= 100");
  ResolvedDetection r = resolve_detection(config);
  const int trials = config.trials;

  std::vector<DetectionOutcome> h1(trials), h0(trials);
  parallel_for(trials, config.threads, [&](int t) {
    CorrelatedPair pair = sample_correlated_pair(
        config.n, r.p, r.s, RngSeed{config.seed, kStreamTrials + t});
    h1[t] = brute
                ? statistic_bruteforce(pair.g, pair.g2, r.floor, r.tau)
                : statistic_planted(pair, r.floor, r.tau);
    RngSeed null_seed{config.seed, kStreamNull + 2 * static_cast<std::uint64_t>(t)};
    Graph a = sample_er(config.n, r.p * r.s, null_seed);
    Graph b = sample_er(config.n, r.p * r.s, null_seed.with_stream(null_seed.stream + 1));
    h0[t] = brute ? statistic_bruteforce(a, b, r.floor, r.tau)
                  : statistic_identity(a, b, r.floor, r.tau);
  });

  std::string csv = csv_header("detect");
  csv += "trial,side,statistic,tau,decision\n";
  int h1_miss = 0, h0_exceed = 0;
  for (int t = 0; t < trials; ++t) {
    csv += fmt("%d,H1,%.6f,%.6f,%s\n", t, h1[t].statistic, r.tau,
               h1[t].decision == Hypothesis::H1 ? "H1" : "H0");
    if (h1[t].decision == Hypothesis::H0) ++h1_miss;
  }
  for (int t = 0; t < trials; ++t) {
    csv += fmt("%d,H0,%.6f,%.6f,%s\n", t, h0[t].statistic, r.tau,
               h0[t].decision == Hypothesis::H1 ? "H1" : "H0");
    if (h0[t].decision == Hypothesis::H1) ++h0_exceed;
  }
  csv += fmt("# tau %.6f\n", r.tau);
  if (config.alpha) csv += fmt("# lambda_star %.6f\n", r.lambda_star);
  csv += fmt("# type_ii_rate %.6f\n", static_cast<double>(h1_miss) / trials);
  csv += fmt("# type_i_proxy_rate %.6f\n", static_cast<double>(h0_exceed) / trials);
  if (!brute && config.n >= 3) {
    H0BoundTotal bound = h0_union_bound_total(config.n, r.p * r.s, r.tau);
    csv += fmt("# h0_union_bound_log %.6f\n", bound.log_total);
    csv += fmt("# h0_union_bound %.6e\n", bound.total);
  }
  return ExperimentOutput{std::move(csv)};
}

ExperimentOutput run_tv_experiment(const ExperimentConfig& config) {
  if (config.n > 4) throw RefusalError("tv: n > 4");
  if (config.s_grid.empty()) throw ParameterError("tv: empty s grid");
  const double p = config.p.value_or(0.5);
  std::string csv = csv_header("tv");
  csv += "s,tv\n";
  for (double s : config.s_grid)
    csv += fmt("%.6f,%.12f\n", s, exact_tv(config.n, p, s));
  return ExperimentOutput{std::move(csv)};
}

ExperimentOutput run_admissibility_rate(const ExperimentConfig& config) {
  if (config.lambda_grid.size() != 1)
    throw ParameterError("admissibility-rate: need exactly one lambda");
  const double lambda = config.lambda_grid[0];
  double xi;
  if (config.xi) {
    xi = *config.xi;
  } else {
    // Density cap from the estimated rho curve: midpoint of rho at
    // lambda_star - eps and at lambda_star, with eps = lambda_star - lambda.
    if (!config.alpha) throw ParameterError("admissibility-rate: need --xi or --alpha");
    RhoCurve curve(config.rho_n, config.rho_trials,
                   RngSeed{config.seed, kStreamRho}, config.threads);
    InvertRhoResult inv = invert_rho_on(
        [&](double l) { return curve(l).mean; }, 1.0 / *config.alpha, config.tol);
    double eps = inv.lambda_star - lambda;
    if (eps <= 0.0)
      throw ParameterError("admissibility-rate: lambda must lie below lambda_star");
    ThresholdInfo info = threshold_tau(*config.alpha, eps,
                                       [&](double l) { return curve(l); }, config.tol);
    xi = info.xi;
  }

  const int trials = config.trials;
  std::vector<AdmissibilityReport> reports(trials);
  parallel_for(trials, config.threads, [&](int t) {
    Graph g = sample_er(config.n, lambda / config.n,
                        RngSeed{config.seed, kStreamTrials + t});
    reports[t] = check_admissible(g, xi, config.delta, config.cycle_cap);
  });

  std::string csv = csv_header("admissibility-rate");
  csv += "trial,pass_i,pass_ii,pass_iii,pass_iv,admissible\n";
  int pass = 0;
  for (int t = 0; t < trials; ++t) {
    const auto& rep = reports[t];
    csv += fmt("%d,%d,%d,%d,%d,%d\n", t, rep.pass_i, rep.pass_ii, rep.pass_iii,
               rep.pass_iv, rep.admissible());
    if (rep.admissible()) ++pass;
  }
  csv += fmt("# xi %.6f\n", xi);
  csv += fmt("# delta %.6f\n", config.delta);
  csv += fmt("# pass_rate %.6f\n", static_cast<double>(pass) / trials);
  return ExperimentOutput{std::move(csv)};
}

ExperimentOutput run_moment_trend(const ExperimentConfig& config) {
  if (config.n_grid.empty()) throw ParameterError("moment-trend: empty n grid");
  if (config.lambda_grid.size() != 1)
    throw ParameterError("moment-trend: need exactly one lambda");
  if (!config.xi) throw ParameterError("moment-trend: need --xi");
  const double lambda = config.lambda_grid[0];
  const double alpha = config.alpha.value_or(0.5);
  const int trials = config.trials;

  std::string csv = csv_header("moment-trend");
  csv += "n,trial,admissible,non_tree_sum,tree_sum\n";
  std::vector<double> avg_nontree, avg_tree;
  std::vector<int> kept;
  for (std::size_t gi = 0; gi < config.n_grid.size(); ++gi) {
    const int n = config.n_grid[gi];
    const double p = std::pow(n, -alpha);
    struct Row {
      bool admissible = false;
      MomentTerms terms;
    };
    std::vector<Row> rows(trials);
    parallel_for(trials, config.threads, [&](int t) {
      Graph g = sample_er(n, lambda / n,
                          RngSeed{config.seed, kStreamTrials + gi * trials + t});
      rows[t].admissible =
          check_admissible(g, *config.xi, config.delta, config.cycle_cap).admissible();
      if (rows[t].admissible)
        rows[t].terms = truncated_moment_terms(g, p, *config.xi, config.c_prime,
                                               config.k_max);
    });
    double sum_nt = 0, sum_t = 0;
    int used = 0;
    for (int t = 0; t < trials; ++t) {
      if (rows[t].admissible) {
        csv += fmt("%d,%d,1,%.6f,%.6f\n", n, t, rows[t].terms.non_tree_sum,
                   rows[t].terms.tree_sum);
        sum_nt += rows[t].terms.non_tree_sum;
        sum_t += rows[t].terms.tree_sum;
        ++used;
      } else {
        csv += fmt("%d,%d,0,0.000000,0.000000\n", n, t);
      }
    }
    avg_nontree.push_back(used ? sum_nt / used : 0.0);
    avg_tree.push_back(used ? sum_t / used : 0.0);
    kept.push_back(used);
  }
  for (std::size_t gi = 0; gi < config.n_grid.size(); ++gi)
    csv += fmt("# n %d admissible_trials %d avg_non_tree %.6f avg_tree %.6f\n",
               config.n_grid[gi], kept[gi], avg_nontree[gi], avg_tree[gi]);
  bool nt_ok = true, t_ok = true;
  for (std::size_t gi = 1; gi < avg_nontree.size(); ++gi) {
    nt_ok = nt_ok && avg_nontree[gi] <= avg_nontree[gi - 1];
    t_ok = t_ok && avg_tree[gi] <= avg_tree[gi - 1];
  }
  csv += fmt("# non_tree_nonincreasing %d\n", nt_ok);
  csv += fmt("# tree_nonincreasing %d\n", t_ok);
  return ExperimentOutput{std::move(csv)};
}

ExperimentOutput run_experiment(const ExperimentConfig& config) {
  switch (config.kind) {
    case ExperimentKind::rho_sweep: return run_rho_sweep(config);
    case ExperimentKind::detect: return run_detection_experiment(config);
    case ExperimentKind::tv: return run_tv_experiment(config);
    case ExperimentKind::admissibility_rate: return run_admissibility_rate(config);
    case ExperimentKind::moment_trend: return run_moment_trend(config);
  }
  throw ParameterError("unknown experiment kind");
}

}  // namespace corrgraph
