#include "corrgraph/sampling.hpp"

#include <cmath>
#include <cstdint>
#include <numeric>

#include "corrgraph/errors.hpp"

namespace corrgraph {

namespace {

// Number of pairs whose first coordinate is < u, in the lexicographic order
// (0,1), (0,2), ..., (n-2,n-1).
std::int64_t row_offset(std::int64_t u, std::int64_t n) {
  return u * (2 * n - u - 1) / 2;
}

// Pair at flat index idx of the lexicographic order.
Edge pair_at(std::int64_t idx, int n) {
  double disc = static_cast<double>(2 * n - 1) * (2 * n - 1) - 8.0 * static_cast<double>(idx);
  std::int64_t u = static_cast<std::int64_t>((2.0 * n - 1 - std::sqrt(disc)) / 2.0);
  if (u < 0) u = 0;
  if (u > n - 2) u = n - 2;
  while (row_offset(u + 1, n) <= idx) ++u;
  while (row_offset(u, n) > idx) --u;
  std::int64_t v = u + 1 + (idx - row_offset(u, n));
  return {static_cast<int>(u), static_cast<int>(v)};
}

Bijection sample_bijection(int n, SplitRng& rng) {
  std::vector<int> m(n);
  std::iota(m.begin(), m.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i) + 1));
    std::swap(m[i], m[j]);
  }
  return Bijection(std::move(m));
}

// Calls visit(u, v) for every pair kept by an independent Bernoulli(q) per
// pair, walking pairs in lexicographic order. Uses geometric skips when q is
// small and a straight scan otherwise.
template <class Visit>
void bernoulli_pair_walk(int n, double q, SplitRng& rng, Visit&& visit) {
  const std::int64_t total = static_cast<std::int64_t>(n) * (n - 1) / 2;
  if (q <= 0.0 || total == 0) return;
  if (q >= 1.0) {
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) visit(u, v);
    return;
  }
  if (q > 0.1) {
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng.bernoulli(q)) visit(u, v);
    return;
  }
  std::int64_t idx = static_cast<std::int64_t>(rng.geometric_skip(q));
  while (idx < total) {
    auto [u, v] = pair_at(idx, n);
    visit(u, v);
    idx += 1 + static_cast<std::int64_t>(rng.geometric_skip(q));
  }
}

}  // namespace

Graph sample_er(int n, double q, RngSeed seed) {
  if (q < 0.0 || q > 1.0) throw ParameterError("sample_er: q outside [0,1]");
  if (n < 0) throw ParameterError("sample_er: negative n");
  SplitRng rng(seed);
  std::vector<Edge> edges;
  bernoulli_pair_walk(n, q, rng, [&](int u, int v) { edges.emplace_back(u, v); });
  return Graph(n, std::move(edges));
}

CorrelatedPair sample_correlated_pair(int n, double p, double s, RngSeed seed) {
  if (p < 0.0 || p > 1.0 || s < 0.0 || s > 1.0)
    throw ParameterError("sample_correlated_pair: p, s outside [0,1]");
  if (n < 0) throw ParameterError("sample_correlated_pair: negative n");
  SplitRng rng(seed);
  Bijection pi_star = sample_bijection(n, rng);

  std::vector<Edge> e1, e2;
  // Parent pairs are Bernoulli(p); each surviving pair is then subsampled
  // once per side with Bernoulli(s).
  bernoulli_pair_walk(n, p, rng, [&](int u, int v) {
    if (rng.bernoulli(s)) e1.emplace_back(u, v);
    if (rng.bernoulli(s)) {
      int a = pi_star(u), b = pi_star(v);
      e2.emplace_back(std::min(a, b), std::max(a, b));
    }
  });
  return CorrelatedPair{Graph(n, std::move(e1)), Graph(n, std::move(e2)),
                        std::move(pi_star), p, s};
}

Graph intersection_graph(const Graph& g, const Graph& g2, const Bijection& pi) {
  if (g.n() != g2.n() || g.n() != pi.size())
    throw ParameterError("intersection_graph: size mismatch");
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges())
    if (g2.has_edge(pi(u), pi(v))) edges.emplace_back(u, v);
  return Graph(g.n(), std::move(edges));
}

CorrelationResult edge_count_correlation_experiment(int n, double p, double s,
                                                    int trials, RngSeed seed,
                                                    Hypothesis hyp) {
  if (trials < 2) throw ParameterError("edge_count_correlation: trials < 2");
  std::vector<double> xs(trials), ys(trials);
  for (int t = 0; t < trials; ++t) {
    if (hyp == Hypothesis::H1) {
      CorrelatedPair pair =
          sample_correlated_pair(n, p, s, seed.with_stream(seed.stream + t));
      xs[t] = pair.g.m();
      ys[t] = pair.g2.m();
    } else {
      RngSeed st = seed.with_stream(seed.stream + 2 * t);
      xs[t] = sample_er(n, p * s, st).m();
      ys[t] = sample_er(n, p * s, st.with_stream(st.stream + 1)).m();
    }
  }
  double mx = 0, my = 0;
  for (int t = 0; t < trials; ++t) {
    mx += xs[t];
    my += ys[t];
  }
  mx /= trials;
  my /= trials;
  double sxx = 0, syy = 0, sxy = 0;
  for (int t = 0; t < trials; ++t) {
    sxx += (xs[t] - mx) * (xs[t] - mx);
    syy += (ys[t] - my) * (ys[t] - my);
    sxy += (xs[t] - mx) * (ys[t] - my);
  }
  CorrelationResult r;
  r.mean_e1 = mx;
  r.mean_e2 = my;
  if (sxx == 0.0 || syy == 0.0) {
    r.defined = false;
    r.corr = (xs == ys) ? 1.0 : std::nan("");
  } else {
    r.corr = sxy / std::sqrt(sxx * syy);
  }
  return r;
}

}  // namespace corrgraph
