#pragma once

#include <functional>
#include <map>

#include "corrgraph/density.hpp"
#include "corrgraph/rng.hpp"

namespace corrgraph {

// Monte Carlo estimate of the limiting maximum subgraph density rho(lambda)
// of G(n, lambda/n).
struct RhoEstimate {
  double lambda = 0;
  int n = 0;
  int trials = 0;
  double mean = 0;
  double stderr_ = 0;
};

// Mean and standard error of densest_exact density over independent
// G(n, lambda/n) samples; trial t uses substream rng.stream + t, so results
// do not depend on the worker count.
RhoEstimate estimate_rho(double lambda, int n, int trials, RngSeed rng,
                         int threads = 1);

// Memoized estimate_rho sharing one substream set across lambdas (common
// random numbers), which makes the estimated curve monotone in lambda
// pathwise and bisection on it well behaved.
class RhoCurve {
 public:
  RhoCurve(int n, int trials, RngSeed rng, int threads = 1)
      : n_(n), trials_(trials), rng_(rng), threads_(threads) {}

  const RhoEstimate& operator()(double lambda);

  int n() const { return n_; }
  int trials() const { return trials_; }

 private:
  int n_;
  int trials_;
  RngSeed rng_;
  int threads_;
  std::map<double, RhoEstimate> cache_;
};

struct InvertRhoResult {
  double lambda_star = 1.0;
  double rho_at_result = 1.0;
  int evaluations = 0;
};

// Bisection solving curve(lambda) = target for target >= 1, to bracket width
// tol. target == 1 returns 1 exactly. Throws BracketingError when no lambda
// within [1, 2*target*max(2,target)] reaches the target.
InvertRhoResult invert_rho_on(const std::function<double(double)>& curve,
                              double target, double tol);

InvertRhoResult invert_rho(double target, int n, int trials, RngSeed rng,
                           double tol, int threads = 1);

}  // namespace corrgraph
