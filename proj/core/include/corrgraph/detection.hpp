#pragma once

#include <functional>

#include "corrgraph/density.hpp"
#include "corrgraph/rho.hpp"
#include "corrgraph/sampling.hpp"

namespace corrgraph {

// ceil(n / ln n), the minimum subset size entering the test statistic.
int size_floor(int n);

// Densest subgraph subject to |U| >= floor. If the unconstrained optimum
// meets the floor it is returned exactly; otherwise falls back to exhaustive
// search (n <= 20) or to the best peeling prefix of size >= floor, flagged
// via `exact`.
DensestResult constrained_densest(const Graph& g, int floor);

enum class StatisticMode { planted, bruteforce, heuristic };

struct DetectionOutcome {
  double statistic = 0;
  Hypothesis decision = Hypothesis::H0;  // H1 iff statistic >= tau
  StatisticMode mode = StatisticMode::planted;
  bool approximate = false;
  DensestResult result;
};

// Constrained density of the pi*-intersection graph; a lower bound on the
// full max-over-bijections statistic.
DetectionOutcome statistic_planted(const CorrelatedPair& pair, int floor, double tau);

// Exact maximization over all n! bijections, n <= 8.
DetectionOutcome statistic_bruteforce(const Graph& g, const Graph& g2, int floor,
                                      double tau);

// Identity-bijection surrogate used on the null side of experiments.
DetectionOutcome statistic_identity(const Graph& g, const Graph& g2, int floor,
                                    double tau);

struct ThresholdInfo {
  double lambda_star = 1.0;
  double tau = 0;  // midpoint of rho(lambda_star) and rho(lambda_star + eps)
  double xi = 0;   // midpoint of rho(lambda_star - eps) and rho(lambda_star)
  RhoEstimate rho_minus, rho_star, rho_plus;
};

// Decision threshold and admissibility density cap from an estimated rho
// curve. The curve callable must be monotone in lambda (Monte Carlo curves
// from RhoCurve are, thanks to common random numbers). lambda values <= 0
// contribute rho = 0 without being evaluated.
ThresholdInfo threshold_tau(double alpha, double epsilon,
                            const std::function<RhoEstimate(double)>& rho_curve,
                            double tol = 0.05);

struct H0BoundTerm {
  double log_term = 0;       // log of C(n,k)^2 k! ChernoffTail(C(k,2),(ps)^2,tau*k)
  bool applicable = true;    // false when tau*k <= mean (trivial bound 1, log 0)
};

// One term of the union bound on P[statistic >= tau] under the null.
H0BoundTerm h0_union_bound_term(int n, int k, double ps, double tau);

struct H0BoundTotal {
  double log_total = 0;
  double total = 0;          // may overflow to inf; log_total stays finite
  int first_k = 0;
  bool all_applicable = true;
};

// Sum of exp(term) over k = size_floor(n) .. n.
H0BoundTotal h0_union_bound_total(int n, double ps, double tau);

struct DetectionConfig {
  int n = 0;
  double alpha = 0;
  double epsilon = 0;
  double p = 0;
  double s = 0;
  double lambda = 0;  // n p s^2 on the correlated side
  int size_floor = 0;
  double tau = 0;
  ThresholdInfo thresholds;
};

// Resolves p = n^(-alpha), lambda = lambda_star + epsilon and
// s = sqrt(lambda/(n p)); rejects configurations with s > 1.
DetectionConfig make_detection_config(int n, double alpha, double epsilon,
                                      RhoCurve& curve, double tol = 0.05);

}  // namespace corrgraph
