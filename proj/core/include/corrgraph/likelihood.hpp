#pragma once

#include "corrgraph/graph.hpp"

namespace corrgraph {

// Per-pair likelihood ratio l(x,y) of the correlated law against independent
// sampling, for edge indicators x, y in {0,1}. Requires p, s in (0,1).
double ell(int x, int y, double p, double s);

// Joint pmf of one indicator pair under the correlated law.
double joint_edge_pmf(int x, int y, double p, double s);

// The 2x2 kernel M(x,y) = l(x,y) * P[y] with P the Bernoulli(ps) marginal.
// Its eigenvalues are 1 and rho = s(1-p)/(1-ps).
struct LikelihoodKernel {
  double p = 0, s = 0;
  double ell00 = 0, ell01 = 0, ell11 = 0;
  double m[2][2] = {{0, 0}, {0, 0}};
  double rho = 0;                    // by formula
  double eigenvalues[2] = {0, 0};    // numeric, ascending
};

LikelihoodKernel kernel(double p, double s);

// log of Q[G,G2 | pi] / P[G,G2]: the sum of log l over all vertex pairs.
double pair_loglikelihood(const Graph& g, const Graph& g2, const Bijection& pi,
                          double p, double s);

// log of the likelihood ratio L = (1/n!) sum over bijections of
// exp(pair_loglikelihood), accumulated with log-sum-exp. n <= 8.
double log_likelihood_ratio(const Graph& g, const Graph& g2, double p, double s);
double likelihood_ratio(const Graph& g, const Graph& g2, double p, double s);

// Conditional expectation of an orbit's likelihood product given that the
// orbit is not entirely contained in the intersection graph:
// (1 + rho^(2k) - s^(2k)) / (1 - (p s^2)^k). At most 1 for p, s <= 0.1.
double orbit_factor(int k, double p, double s);

// Total variation distance between the independent and the correlated law by
// full enumeration of graph pairs and bijections. n <= 4.
double exact_tv(int n, double p, double s);

}  // namespace corrgraph
