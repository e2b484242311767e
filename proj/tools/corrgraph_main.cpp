#include <cstdarg>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "corrgraph/admissibility.hpp"
#include "corrgraph/detection.hpp"
#include "corrgraph/errors.hpp"
#include "corrgraph/experiment.hpp"
#include "corrgraph/likelihood.hpp"
#include "corrgraph/orbits.hpp"
#include "corrgraph/parallel.hpp"
#include "corrgraph/sampling.hpp"
#include "corrgraph/version.hpp"

namespace {

using namespace corrgraph;

struct GlobalOpts {
  std::uint64_t seed = kDefaultSeed;
  int threads = 1;
  std::string output;
};

void emit(const GlobalOpts& g, const std::string& text) {
  if (g.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(g.output, std::ios::binary);
    if (!out) throw ParameterError("cannot open " + g.output);
    out << text;
  }
}

std::string fmt(const char* f, ...) {
  char buf[256];
  va_list ap;
  va_start(ap, f);
  vsnprintf(buf, sizeof(buf), f, ap);
  va_end(ap);
  return buf;
}

// Cycle notation, e.g. "(0 1 2)(3 4)"; unlisted vertices stay fixed.
Bijection parse_cycles(const std::string& text, int n) {
  std::vector<int> map(n);
  for (int i = 0; i < n; ++i) map[i] = i;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] != '(') {
      if (std::isspace(static_cast<unsigned char>(text[pos]))) {
        ++pos;
        continue;
      }
      throw ParameterError("sigma: expected '(' in cycle notation");
    }
    std::size_t close = text.find(')', pos);
    if (close == std::string::npos) throw ParameterError("sigma: unbalanced '('");
    std::string body = text.substr(pos + 1, close - pos - 1);
    for (char& c : body)
      if (c == ',') c = ' ';
    std::istringstream ss(body);
    std::vector<int> cyc;
    int v;
    while (ss >> v) {
      if (v < 0 || v >= n) throw ParameterError("sigma: vertex out of range");
      cyc.push_back(v);
    }
    for (std::size_t i = 0; i < cyc.size(); ++i)
      map[cyc[i]] = cyc[(i + 1) % cyc.size()];
    pos = close + 1;
  }
  return Bijection(std::move(map));
}

std::string format_densest(const DensestResult& r) {
  std::string out = fmt("%lld %lld %zu %d\n", static_cast<long long>(r.density.num),
                        static_cast<long long>(r.density.den), r.subset.size(),
                        r.exact ? 1 : 0);
  for (std::size_t i = 0; i < r.subset.size(); ++i) {
    out += std::to_string(r.subset[i]);
    out += (i + 1 < r.subset.size()) ? ' ' : '\n';
  }
  if (r.subset.empty()) out += '\n';
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"correlated graph detection via densest subgraphs"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOpts global;
  app.add_option("--seed", global.seed, "master RNG seed");
  app.add_option("--threads", global.threads, "worker threads for Monte Carlo trials");
  app.add_option("--output", global.output, "output file (default: stdout)");

  // sample
  auto* sample = app.add_subcommand("sample", "sample G(n,q) or a correlated pair");
  int sample_n = 100;
  double sample_q = -1, sample_p = -1, sample_s = -1;
  std::string out2, out_pi;
  sample->add_option("--n", sample_n, "vertex count")->required();
  sample->add_option("--q", sample_q, "edge probability (single-graph mode)");
  sample->add_option("--p", sample_p, "parent edge probability (pair mode)");
  sample->add_option("--s", sample_s, "subsampling probability (pair mode)");
  sample->add_option("--output2", out2, "second graph file (pair mode)");
  sample->add_option("--output-pi", out_pi, "planted bijection file (pair mode)");
  sample->callback([&] {
    if (sample_q >= 0) {
      Graph g = sample_er(sample_n, sample_q, RngSeed{global.seed, 0});
      std::ostringstream ss;
      write_edge_list(g, ss);
      emit(global, ss.str());
      return;
    }
    if (sample_p < 0 || sample_s < 0)
      throw ParameterError("sample: need --q, or --p with --s");
    CorrelatedPair pair =
        sample_correlated_pair(sample_n, sample_p, sample_s, RngSeed{global.seed, 0});
    std::ostringstream ss;
    write_edge_list(pair.g, ss);
    emit(global, ss.str());
    if (!out2.empty()) write_edge_list_file(pair.g2, out2);
    if (!out_pi.empty()) {
      std::ofstream out(out_pi);
      if (!out) throw ParameterError("cannot open " + out_pi);
      out << pair.pi_star.size() << '\n';
      for (int i = 0; i < pair.pi_star.size(); ++i) out << pair.pi_star(i) << '\n';
    }
  });

  // densest
  auto* densest = app.add_subcommand("densest", "maximum-density subgraph of a graph file");
  std::string densest_input, densest_method = "exact";
  densest->add_option("--input", densest_input, "edge-list file")->required();
  densest->add_option("--method", densest_method, "exact | peel | brute")
      ->check(CLI::IsMember({"exact", "peel", "brute"}));
  densest->callback([&] {
    Graph g = read_edge_list_file(densest_input);
    DensestResult r = densest_method == "peel"    ? greedy_peel(g)
                      : densest_method == "brute" ? densest_bruteforce(g)
                                                  : densest_exact(g);
    emit(global, format_densest(r));
  });

  // rho
  auto* rho = app.add_subcommand("rho", "Monte Carlo estimate of rho(lambda)");
  double rho_lambda = 1.0;
  int rho_n = 2000, rho_trials = 30;
  rho->add_option("--lambda", rho_lambda)->required();
  rho->add_option("--n", rho_n);
  rho->add_option("--trials", rho_trials);
  rho->callback([&] {
    RhoEstimate e = estimate_rho(rho_lambda, rho_n, rho_trials,
                                 RngSeed{global.seed, 0}, global.threads);
    emit(global, fmt("%.6f %.6f\n", e.mean, e.stderr_));
  });

  // lambda-star
  auto* lstar = app.add_subcommand("lambda-star", "invert the rho curve at 1/alpha");
  double ls_alpha = 0.5, ls_tol = 0.05;
  int ls_n = 2000, ls_trials = 30;
  lstar->add_option("--alpha", ls_alpha)->required();
  lstar->add_option("--n", ls_n);
  lstar->add_option("--trials", ls_trials);
  lstar->add_option("--tol", ls_tol);
  lstar->callback([&] {
    InvertRhoResult r = invert_rho(1.0 / ls_alpha, ls_n, ls_trials,
                                   RngSeed{global.seed, 0}, ls_tol, global.threads);
    emit(global, fmt("%.6f\n", r.lambda_star));
  });

  // tau
  auto* tau_cmd = app.add_subcommand("tau", "decision threshold tau and density cap xi");
  double tau_alpha = 0.5, tau_eps = 1.0, tau_tol = 0.05;
  int tau_n = 2000, tau_trials = 30;
  tau_cmd->add_option("--alpha", tau_alpha)->required();
  tau_cmd->add_option("--eps", tau_eps)->required();
  tau_cmd->add_option("--n", tau_n);
  tau_cmd->add_option("--trials", tau_trials);
  tau_cmd->add_option("--tol", tau_tol);
  tau_cmd->callback([&] {
    RhoCurve curve(tau_n, tau_trials, RngSeed{global.seed, 0}, global.threads);
    ThresholdInfo info = threshold_tau(
        tau_alpha, tau_eps, [&](double l) { return curve(l); }, tau_tol);
    std::string out;
    out += fmt("lambda_star %.6f\n", info.lambda_star);
    out += fmt("tau %.6f\n", info.tau);
    out += fmt("xi %.6f\n", info.xi);
    emit(global, out);
  });

  // detect
  auto* detect = app.add_subcommand("detect", "per-trial detection statistics, one side");
  int det_n = 2000, det_trials = 30;
  double det_alpha = 0.5, det_eps = 1.0, det_tol = 0.05;
  std::string det_mode = "planted";
  int det_rho_n = 2000, det_rho_trials = 30;
  detect->add_option("--n", det_n)->required();
  detect->add_option("--alpha", det_alpha)->required();
  detect->add_option("--eps", det_eps);
  detect->add_option("--mode", det_mode)->check(CLI::IsMember({"planted", "h0"}));
  detect->add_option("--trials", det_trials);
  detect->add_option("--rho-n", det_rho_n);
  detect->add_option("--rho-trials", det_rho_trials);
  detect->add_option("--tol", det_tol);
  detect->callback([&] {
    RhoCurve curve(det_rho_n, det_rho_trials, RngSeed{global.seed, 1ull << 41},
                   global.threads);
    DetectionConfig cfg =
        make_detection_config(det_n, det_alpha, det_eps, curve, det_tol);
    std::vector<DetectionOutcome> outs(det_trials);
    const bool planted = det_mode == "planted";
    parallel_for(det_trials, global.threads, [&](int t) {
      if (planted) {
        CorrelatedPair pair = sample_correlated_pair(
            det_n, cfg.p, cfg.s, RngSeed{global.seed, static_cast<std::uint64_t>(t)});
        outs[t] = statistic_planted(pair, cfg.size_floor, cfg.tau);
      } else {
        RngSeed st{global.seed, (1ull << 40) + 2 * static_cast<std::uint64_t>(t)};
        Graph a = sample_er(det_n, cfg.p * cfg.s, st);
        Graph b = sample_er(det_n, cfg.p * cfg.s, st.with_stream(st.stream + 1));
        outs[t] = statistic_identity(a, b, cfg.size_floor, cfg.tau);
      }
    });
    std::string csv = csv_header("detect");
    csv += "trial,statistic,tau,decision\n";
    for (int t = 0; t < det_trials; ++t)
      csv += fmt("%d,%.6f,%.6f,%s\n", t, outs[t].statistic, cfg.tau,
                 outs[t].decision == Hypothesis::H1 ? "H1" : "H0");
    emit(global, csv);
  });

  // h0-bound
  auto* h0b = app.add_subcommand("h0-bound", "union bound on the null exceedance");
  int h0_n = 2000;
  double h0_p = 0.01, h0_s = 0.5, h0_tau = 2.0;
  h0b->add_option("--n", h0_n)->required();
  h0b->add_option("--p", h0_p)->required();
  h0b->add_option("--s", h0_s)->required();
  h0b->add_option("--tau", h0_tau)->required();
  h0b->callback([&] {
    H0BoundTotal b = h0_union_bound_total(h0_n, h0_p * h0_s, h0_tau);
    std::string out;
    out += fmt("first_k %d\n", b.first_k);
    out += fmt("log_total %.6f\n", b.log_total);
    out += fmt("total %.6e\n", b.total);
    emit(global, out);
  });

  // likelihood
  auto* like = app.add_subcommand("likelihood", "log likelihood ratio of a graph pair");
  std::string like_g, like_g2;
  double like_p = 0.5, like_s = 0.5;
  like->add_option("--g", like_g)->required();
  like->add_option("--g2", like_g2)->required();
  like->add_option("--p", like_p)->required();
  like->add_option("--s", like_s)->required();
  like->callback([&] {
    Graph g = read_edge_list_file(like_g);
    Graph g2 = read_edge_list_file(like_g2);
    emit(global, fmt("%.6f\n", log_likelihood_ratio(g, g2, like_p, like_s)));
  });

  // orbits
  auto* orb = app.add_subcommand("orbits", "edge-orbit sizes of a vertex permutation");
  int orb_n = 0;
  std::string orb_sigma;
  orb->add_option("--n", orb_n)->required();
  orb->add_option("--sigma", orb_sigma, "cycle notation, e.g. \"(0 1 2)(3 4)\"")
      ->required();
  orb->callback([&] {
    OrbitDecomposition d = orbit_decomposition(parse_cycles(orb_sigma, orb_n));
    std::string out;
    for (std::size_t i = 0; i < d.orbits.size(); ++i) {
      out += std::to_string(d.orbits[i].size());
      out += (i + 1 < d.orbits.size()) ? ' ' : '\n';
    }
    if (d.orbits.empty()) out += '\n';
    emit(global, out);
  });

  // tv
  auto* tv = app.add_subcommand("tv", "exact total variation distance, n <= 4");
  int tv_n = 3;
  double tv_p = 0.5, tv_s = 0.5;
  tv->add_option("--n", tv_n)->required();
  tv->add_option("--p", tv_p)->required();
  tv->add_option("--s", tv_s)->required();
  tv->callback([&] { emit(global, fmt("%.12f\n", exact_tv(tv_n, tv_p, tv_s))); });

  // admissible
  auto* adm = app.add_subcommand("admissible", "truncation conditions of a graph file");
  std::string adm_input;
  double adm_xi = 2.0, adm_delta = 0.2;
  int adm_cap = 8;
  adm->add_option("--input", adm_input)->required();
  adm->add_option("--xi", adm_xi)->required();
  adm->add_option("--delta", adm_delta)->required();
  adm->add_option("--cycle-cap", adm_cap);
  adm->callback([&] {
    Graph g = read_edge_list_file(adm_input);
    AdmissibilityReport rep = check_admissible(g, adm_xi, adm_delta, adm_cap);
    std::string out;
    out += fmt("pass_i %d", rep.pass_i);
    if (!rep.pass_i) {
      out += " witness_subset";
      for (int v : rep.dense_subset) out += fmt(" %d", v);
    }
    out += '\n';
    out += fmt("pass_ii %d", rep.pass_ii);
    if (!rep.pass_ii) out += fmt(" witness_vertex %d", rep.max_degree_vertex);
    out += '\n';
    out += fmt("pass_iii %d", rep.pass_iii);
    if (!rep.pass_iii) {
      out += " witness_subgraph";
      for (int v : rep.small_bicyclic) out += fmt(" %d", v);
    }
    out += '\n';
    out += fmt("pass_iv %d", rep.pass_iv);
    if (!rep.pass_iv)
      out += fmt(" witness_k %d count %lld bound %.3f", rep.cycle_violation->k,
                 static_cast<long long>(rep.cycle_violation->count),
                 rep.cycle_violation->bound);
    out += '\n';
    out += fmt("admissible %d\n", rep.admissible());
    emit(global, out);
  });

  // moment-terms
  auto* mom = app.add_subcommand("moment-terms", "truncated-moment bound terms");
  std::string mom_input;
  double mom_p = 0.01, mom_xi = 1.6, mom_c = 0.01;
  int mom_kmax = 4;
  mom->add_option("--input", mom_input)->required();
  mom->add_option("--p", mom_p)->required();
  mom->add_option("--xi", mom_xi)->required();
  mom->add_option("--cprime", mom_c);
  mom->add_option("--kmax", mom_kmax);
  mom->callback([&] {
    Graph g = read_edge_list_file(mom_input);
    MomentTerms t = truncated_moment_terms(g, mom_p, mom_xi, mom_c, mom_kmax);
    emit(global,
         fmt("non_tree_sum %.6f\ntree_sum %.6f\n", t.non_tree_sum, t.tree_sum));
  });

  // experiment
  auto* exp = app.add_subcommand("experiment", "batch experiments emitting CSV");
  std::string exp_config;
  exp->add_option("--config", exp_config, "JSON config file (flags override)");
  std::map<std::string, std::string> exp_flags;
  for (const char* name :
       {"--kind", "--n", "--alpha", "--p", "--s", "--tau", "--eps", "--trials",
        "--lambda-grid", "--s-grid", "--n-grid", "--mode", "--rho-n",
        "--rho-trials", "--tol", "--xi", "--delta", "--cprime", "--kmax",
        "--cycle-cap"}) {
    exp->add_option(name, exp_flags[name]);
  }
  exp->callback([&] {
    std::vector<std::string> args;
    for (const auto& [name, value] : exp_flags) {
      if (exp->count(name)) {
        args.push_back(name);
        args.push_back(value);
      }
    }
    if (app.count("--seed")) {
      args.push_back("--seed");
      args.push_back(std::to_string(global.seed));
    }
    if (app.count("--threads")) {
      args.push_back("--threads");
      args.push_back(std::to_string(global.threads));
    }
    ExperimentConfig cfg = parse_config(args, exp_config);
    ExperimentOutput out = run_experiment(cfg);
    if (!cfg.output.empty() && global.output.empty()) global.output = cfg.output;
    emit(global, out.csv);
  });

  try {
    CLI11_PARSE(app, argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
