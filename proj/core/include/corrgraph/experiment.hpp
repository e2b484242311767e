#pragma once

#include <optional>
#include <string>
#include <vector>

#include "corrgraph/rng.hpp"
#include "corrgraph/version.hpp"

namespace corrgraph {

enum class ExperimentKind { rho_sweep, detect, tv, admissibility_rate, moment_trend };

enum class DetectMode { planted, bruteforce };

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::rho_sweep;
  int n = 2000;
  std::optional<double> alpha;  // exactly one of alpha / p for sparse runs
  std::optional<double> p;
  std::optional<double> s;
  std::optional<double> tau;    // explicit threshold (otherwise estimated)
  double epsilon = 1.0;
  int trials = 30;
  std::uint64_t seed = kDefaultSeed;
  int threads = 1;
  std::string output;

  std::vector<double> lambda_grid;  // rho sweep; single value for admissibility
  std::vector<double> s_grid;       // tv sweep
  std::vector<int> n_grid;          // moment trend

  DetectMode detect_mode = DetectMode::planted;

  // rho-curve estimation shared by detect / admissibility thresholds
  int rho_n = 2000;
  int rho_trials = 30;
  double tol = 0.05;

  // admissibility / moment parameters
  std::optional<double> xi;
  double delta = 0.2;
  double c_prime = 0.01;
  int k_max = 4;
  int cycle_cap = 8;
};

// Assembles a config from "--flag value" tokens, optionally layered over a
// JSON file (flags win). Rejects unknown flags, malformed values and configs
// that set both --alpha and --p.
ExperimentConfig parse_config(const std::vector<std::string>& args,
                              const std::string& config_file = "");

struct ExperimentOutput {
  std::string csv;  // includes the versioned header and summary comments
};

ExperimentOutput run_rho_sweep(const ExperimentConfig& config);
ExperimentOutput run_detection_experiment(const ExperimentConfig& config);
ExperimentOutput run_tv_experiment(const ExperimentConfig& config);
ExperimentOutput run_admissibility_rate(const ExperimentConfig& config);
ExperimentOutput run_moment_trend(const ExperimentConfig& config);

// Dispatch on config.kind.
ExperimentOutput run_experiment(const ExperimentConfig& config);

}  // namespace corrgraph
