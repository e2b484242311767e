#pragma once

#include <cstdint>
#include <limits>
#include <vector>

namespace corrgraph {

// Dinic max-flow with 64-bit integer capacities. Supports symmetric arcs via
// rev_cap, which the density-testing network uses for its undirected edges.
class MaxFlow {
 public:
  explicit MaxFlow(int n) : graph_(n), level_(n), iter_(n) {}

  void add_edge(int from, int to, std::int64_t cap, std::int64_t rev_cap = 0) {
    graph_[from].push_back({to, static_cast<int>(graph_[to].size()), cap});
    graph_[to].push_back({from, static_cast<int>(graph_[from].size()) - 1, rev_cap});
  }

  std::int64_t run(int s, int t) {
    std::int64_t flow = 0;
    while (bfs(s, t)) {
      iter_.assign(iter_.size(), 0);
      std::int64_t f;
      while ((f = dfs(s, t, std::numeric_limits<std::int64_t>::max())) > 0)
        flow += f;
    }
    return flow;
  }

  // After run(): the largest source side of a minimum cut, i.e. the
  // complement of every vertex that can still reach t in the residual graph.
  std::vector<char> min_cut_source_side_maximal(int t) const {
    const int n = static_cast<int>(graph_.size());
    std::vector<char> reaches_t(n, 0);
    std::vector<int> stack{t};
    reaches_t[t] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (const Arc& a : graph_[x]) {
        // Residual capacity of the arc a.to -> x.
        if (!reaches_t[a.to] && graph_[a.to][a.rev].cap > 0) {
          reaches_t[a.to] = 1;
          stack.push_back(a.to);
        }
      }
    }
    std::vector<char> side(n);
    for (int v = 0; v < n; ++v) side[v] = !reaches_t[v];
    return side;
  }

 private:
  struct Arc {
    int to;
    int rev;
    std::int64_t cap;
  };

  bool bfs(int s, int t) {
    level_.assign(level_.size(), -1);
    std::vector<int> queue;
    queue.reserve(level_.size());
    queue.push_back(s);
    level_[s] = 0;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int v = queue[qi];
      for (const Arc& a : graph_[v]) {
        if (a.cap > 0 && level_[a.to] < 0) {
          level_[a.to] = level_[v] + 1;
          queue.push_back(a.to);
        }
      }
    }
    return level_[t] >= 0;
  }

  std::int64_t dfs(int v, int t, std::int64_t limit) {
    if (v == t) return limit;
    for (int& i = iter_[v]; i < static_cast<int>(graph_[v].size()); ++i) {
      Arc& a = graph_[v][i];
      if (a.cap > 0 && level_[v] < level_[a.to]) {
        std::int64_t d = dfs(a.to, t, std::min(limit, a.cap));
        if (d > 0) {
          a.cap -= d;
          graph_[a.to][a.rev].cap += d;
          return d;
        }
      }
    }
    return 0;
  }

  std::vector<std::vector<Arc>> graph_;
  std::vector<int> level_;
  std::vector<int> iter_;
};

}  // namespace corrgraph
