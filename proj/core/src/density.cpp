#include "corrgraph/density.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "corrgraph/errors.hpp"
#include "corrgraph/maxflow.hpp"

namespace corrgraph {

DensityValue subgraph_density(const Graph& g, const std::vector<int>& subset) {
  if (subset.empty()) throw ParameterError("subgraph_density: empty subset");
  return DensityValue{g.edges_within(subset), static_cast<std::int64_t>(subset.size())};
}

namespace {

std::vector<int> all_vertices(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

// Feasibility test "is there a nonempty U with |E(U)|/|U| > c/D?" on the
// standard density network: source->v with capacity m, v->sink with capacity
// m + 2*guess - deg(v), both directions of each edge with capacity 1, all
// scaled by 2D to stay integral. A cut with source side U has capacity
// 2D(mn - 2|E(U)|) + 4c|U|, so the maximal min-cut source side maximizes
// |E(U)| - (c/D)|U|.
struct GuessResult {
  bool feasible = false;
  std::vector<int> witness;
};

GuessResult test_density_guess(const Graph& g, std::int64_t c, std::int64_t d_scale) {
  const int n = g.n();
  const std::int64_t m = g.m();
  const int source = n;
  const int sink = n + 1;
  const std::int64_t cap_source = 2 * d_scale * m;
  MaxFlow flow(n + 2);
  for (int v = 0; v < n; ++v) {
    flow.add_edge(source, v, cap_source);
    flow.add_edge(v, sink, 2 * d_scale * m + 4 * c - 2 * d_scale * g.degree(v));
  }
  for (const auto& [u, v] : g.edges()) flow.add_edge(u, v, 2 * d_scale, 2 * d_scale);
  std::int64_t value = flow.run(source, sink);
  GuessResult r;
  if (value >= cap_source * n) return r;  // only the empty cut is minimum
  r.feasible = true;
  std::vector<char> side = flow.min_cut_source_side_maximal(sink);
  for (int v = 0; v < n; ++v)
    if (side[v]) r.witness.push_back(v);
  return r;
}

}  // namespace

DensestResult densest_exact(const Graph& g) {
  const int n = g.n();
  if (n < 1) throw ParameterError("densest_exact: empty graph");
  if (g.m() == 0)
    return DensestResult{all_vertices(n), DensityValue{0, n}, true};

  // Distinct achievable densities (denominator <= n) differ by more than
  // 1/n^2, so once the bracket [lo/D, hi/D] has width 1/D = 1/n^2 the last
  // feasible witness attains the maximum.
  const std::int64_t d_scale = static_cast<std::int64_t>(n) * n;

  // Peeling gives an achievable density within a factor 2 of the optimum;
  // bracket the search with it from both sides.
  DensestResult seed = greedy_peel(g);
  std::int64_t lo = seed.density.num * d_scale / seed.density.den - 1;
  if (lo < 0) lo = 0;
  std::int64_t hi = std::min(d_scale * (n - 1) / 2,
                             2 * seed.density.num * d_scale / seed.density.den) + 1;
  GuessResult first = test_density_guess(g, lo, d_scale);
  std::vector<int> witness = std::move(first.witness);
  while (hi - lo > 1) {
    std::int64_t mid = lo + (hi - lo) / 2;
    GuessResult r = test_density_guess(g, mid, d_scale);
    if (r.feasible) {
      lo = mid;
      witness = std::move(r.witness);
    } else {
      hi = mid;
    }
  }
  std::sort(witness.begin(), witness.end());
  DensityValue best = subgraph_density(g, witness);
  return DensestResult{std::move(witness), best, true};
}

DensestResult densest_bruteforce(const Graph& g) {
  const int n = g.n();
  if (n < 1) throw ParameterError("densest_bruteforce: empty graph");
  if (n > 20) throw RefusalError("densest_bruteforce: n > 20");
  std::vector<std::uint32_t> adj(n, 0);
  for (const auto& [u, v] : g.edges()) {
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
  }
  DensityValue best{-1, 1};
  std::uint32_t best_mask = 0;
  // Lex comparison of equal-cardinality subsets as ascending sequences: the
  // mask owning the lowest differing vertex is smaller.
  auto lex_smaller = [](std::uint32_t a, std::uint32_t b) {
    std::uint32_t diff = a ^ b;
    return diff != 0 && (a & (diff & -diff));
  };
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::int64_t edges = 0;
    for (std::uint32_t rest = mask; rest;) {
      int v = __builtin_ctz(rest);
      rest &= rest - 1;
      edges += __builtin_popcount(adj[v] & mask);
    }
    edges /= 2;
    DensityValue d{edges, __builtin_popcount(mask)};
    // Ties: maximum cardinality, then lexicographically smallest vertex set
    // (the last clause is provably unreachable at the top but keeps the
    // comparator total).
    if (best.num < 0 || best < d || (best == d && d.den > best.den) ||
        (best == d && d.den == best.den && lex_smaller(mask, best_mask))) {
      best = d;
      best_mask = mask;
    }
  }
  std::vector<int> subset;
  for (int v = 0; v < n; ++v)
    if (best_mask & (1u << v)) subset.push_back(v);
  return DensestResult{std::move(subset), best, true};
}

DensestResult greedy_peel(const Graph& g) { return greedy_peel(g, 1); }

DensestResult greedy_peel(const Graph& g, int floor) {
  const int n = g.n();
  if (n < 1) throw ParameterError("greedy_peel: empty graph");
  if (floor < 1 || floor > n) throw ParameterError("greedy_peel: floor out of range");
  std::vector<int> degree(n);
  std::set<std::pair<int, int>> order;  // (degree, vertex), min first
  for (int v = 0; v < n; ++v) {
    degree[v] = g.degree(v);
    order.emplace(degree[v], v);
  }
  std::vector<char> removed(n, 0);
  std::vector<int> removal_order;
  removal_order.reserve(n);
  std::int64_t edges_left = g.m();
  DensityValue best{edges_left, n};
  int best_removed = 0;

  for (int step = 0; step < n; ++step) {
    auto [d, v] = *order.begin();
    order.erase(order.begin());
    removed[v] = 1;
    removal_order.push_back(v);
    edges_left -= d;
    for (int w : g.neighbors(v)) {
      if (!removed[w]) {
        order.erase({degree[w], w});
        order.emplace(--degree[w], w);
      }
    }
    int remaining = n - step - 1;
    if (remaining >= floor) {
      DensityValue cur{edges_left, remaining};
      if (best < cur) {
        best = cur;
        best_removed = step + 1;
      }
    }
  }

  std::vector<char> gone(n, 0);
  for (int i = 0; i < best_removed; ++i) gone[removal_order[i]] = 1;
  std::vector<int> subset;
  for (int v = 0; v < n; ++v)
    if (!gone[v]) subset.push_back(v);
  return DensestResult{std::move(subset), best, false};
}

Graph k_core(const Graph& g, int k) {
  if (k < 0) throw ParameterError("k_core: negative k");
  const int n = g.n();
  std::vector<int> degree(n);
  std::vector<char> removed(n, 0);
  std::vector<int> queue;
  for (int v = 0; v < n; ++v) {
    degree[v] = g.degree(v);
    if (degree[v] < k) {
      removed[v] = 1;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    for (int w : g.neighbors(v)) {
      if (!removed[w] && --degree[w] < k) {
        removed[w] = 1;
        queue.push_back(w);
      }
    }
  }
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges())
    if (!removed[u] && !removed[v]) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

}  // namespace corrgraph
