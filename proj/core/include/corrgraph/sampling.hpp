#pragma once

#include "corrgraph/graph.hpp"
#include "corrgraph/rng.hpp"

namespace corrgraph {

enum class Hypothesis { H0, H1 };

// Two graphs subsampled from a common parent, with the planted bijection.
// g2 lives on its own vertex set {0..n-1}; pi_star maps g's vertices into it.
struct CorrelatedPair {
  Graph g;
  Graph g2;
  Bijection pi_star;
  double p = 0;
  double s = 0;

  double lambda() const { return g.n() * p * s * s; }  // never stored
};

// Erdos-Renyi G(n, q): each pair included independently with probability q,
// iterating pairs in lexicographic order so seeds are portable.
Graph sample_er(int n, double q, RngSeed rng);

// Draws pi_star uniformly, per-pair parent indicators Bernoulli(p) and child
// indicators Bernoulli(s); an edge of g (resp. g2) needs its parent and its
// own child indicator. Marginally both graphs are G(n, p*s).
CorrelatedPair sample_correlated_pair(int n, double p, double s, RngSeed rng);

// Edge (u,v) present iff (u,v) in g and (pi(u),pi(v)) in g2.
Graph intersection_graph(const Graph& g, const Graph& g2, const Bijection& pi);

struct CorrelationResult {
  double corr = 0;     // Pearson correlation of the two edge counts
  bool defined = true; // false when either count sequence has zero variance
  double mean_e1 = 0;
  double mean_e2 = 0;
};

// Pearson correlation of (|E|, |E2|) across independent trials. Under H1 the
// pair is correlated with expected correlation s(1-p)/(1-ps); under H0 two
// independent G(n, ps) samples are drawn instead. When both variances vanish
// and the sequences are identical the correlation is reported as 1 with
// defined=false.
CorrelationResult edge_count_correlation_experiment(int n, double p, double s,
                                                    int trials, RngSeed rng,
                                                    Hypothesis hyp = Hypothesis::H1);

}  // namespace corrgraph
