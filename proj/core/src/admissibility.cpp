#include "corrgraph/admissibility.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <queue>
#include <string>
#include <unordered_set>

#include "corrgraph/density.hpp"
#include "corrgraph/errors.hpp"

namespace corrgraph {

double chernoff_tail(double mu, double delta) {
  if (mu <= 0.0) throw ParameterError("chernoff_tail: mu must be positive");
  if (delta < 0.0) throw ParameterError("chernoff_tail: delta must be nonnegative");
  return std::exp(-mu * ((1.0 + delta) * std::log1p(delta) - delta));
}

namespace {

// All simple cycles of length 3..max_len as vertex lists (first vertex is the
// smallest of the cycle). Each cycle appears once.
std::vector<std::vector<int>> collect_cycles(const Graph& h, int max_len) {
  std::vector<std::vector<int>> cycles;
  if (max_len < 3) return cycles;
  const int n = h.n();
  std::vector<int> path;
  std::vector<char> on_path(n, 0);

  for (int root = 0; root < n; ++root) {
    path.assign(1, root);
    on_path[root] = 1;
    // Iterative DFS over paths whose interior vertices all exceed root.
    std::vector<std::vector<int>> cand_stack;
    auto push_candidates = [&](int v) {
      std::vector<int> cs;
      for (int w : h.neighbors(v))
        if (w > root && !on_path[w]) cs.push_back(w);
      std::sort(cs.begin(), cs.end());
      cand_stack.push_back(std::move(cs));
    };
    push_candidates(root);
    while (!cand_stack.empty()) {
      if (cand_stack.back().empty()) {
        cand_stack.pop_back();
        on_path[path.back()] = 0;
        path.pop_back();
        continue;
      }
      int next = cand_stack.back().back();
      cand_stack.back().pop_back();
      path.push_back(next);
      on_path[next] = 1;
      const int len = static_cast<int>(path.size());
      if (len >= 3 && h.has_edge(next, root) && path[1] < path.back())
        cycles.push_back(path);
      if (len < max_len) {
        push_candidates(next);
      } else {
        on_path[next] = 0;
        path.pop_back();
      }
    }
    on_path[root] = 0;
  }
  return cycles;
}

// Minimal connected subgraph with two independent cycles, realized as a pair
// of distinct short cycles plus (when disjoint) a shortest connecting path.
struct BicyclicWitness {
  int size = 0;
  std::vector<int> vertices;
};

std::optional<BicyclicWitness> smallest_bicyclic(const Graph& h, int max_size) {
  auto cycles = collect_cycles(h, max_size);
  std::optional<BicyclicWitness> best;
  const int n = h.n();
  std::vector<char> in_a(n, 0);
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    std::fill(in_a.begin(), in_a.end(), 0);
    for (int v : cycles[i]) in_a[v] = 1;
    for (std::size_t j = i + 1; j < cycles.size(); ++j) {
      int shared = 0;
      for (int v : cycles[j]) shared += in_a[v];
      std::vector<int> verts = cycles[i];
      if (shared > 0) {
        for (int v : cycles[j])
          if (!in_a[v]) verts.push_back(v);
      } else {
        // BFS from cycle i to cycle j for the connecting path.
        std::vector<int> parent(n, -2);
        std::queue<int> q;
        for (int v : cycles[i]) {
          parent[v] = -1;
          q.push(v);
        }
        std::vector<char> in_b(n, 0);
        for (int v : cycles[j]) in_b[v] = 1;
        int hit = -1;
        while (!q.empty() && hit < 0) {
          int v = q.front();
          q.pop();
          for (int w : h.neighbors(v)) {
            if (parent[w] == -2) {
              parent[w] = v;
              if (in_b[w]) {
                hit = w;
                break;
              }
              q.push(w);
            }
          }
        }
        if (hit < 0) continue;  // different components
        for (int v = parent[hit]; v >= 0; v = parent[v]) verts.push_back(v);
        for (int v : cycles[j]) verts.push_back(v);
      }
      std::sort(verts.begin(), verts.end());
      verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
      int size = static_cast<int>(verts.size());
      if (size <= max_size && (!best || size < best->size))
        best = BicyclicWitness{size, std::move(verts)};
    }
  }
  return best;
}

}  // namespace

std::int64_t count_k_cycles(const Graph& h, int k) {
  if (k < 3 || k > 10) throw RefusalError("count_k_cycles: k outside [3,10]");
  const int n = h.n();
  std::int64_t twice = 0;
  std::vector<char> on_path(n, 0);
  // Paths of k vertices starting at the cycle's smallest vertex.
  std::vector<int> path;
  auto dfs = [&](auto&& self, int root, int v, int depth) -> void {
    if (depth == k - 1) {
      if (h.has_edge(v, root)) ++twice;
      return;
    }
    for (int w : h.neighbors(v)) {
      if (w > root && !on_path[w]) {
        on_path[w] = 1;
        self(self, root, w, depth + 1);
        on_path[w] = 0;
      }
    }
  };
  for (int root = 0; root < n; ++root) {
    on_path[root] = 1;
    dfs(dfs, root, root, 0);
    on_path[root] = 0;
  }
  return twice / 2;
}

AdmissibilityReport check_admissible(const Graph& h, double xi, double delta,
                                     int cycle_cap) {
  const int n = h.n();
  if (n < 3) throw ParameterError("check_admissible: n < 3");
  if (xi <= 0.0) throw ParameterError("check_admissible: xi must be positive");
  if (delta <= 0.0) throw ParameterError("check_admissible: delta must be positive");
  if (cycle_cap < 2 || cycle_cap > 10)
    throw ParameterError("check_admissible: cycle_cap outside [2,10]");

  AdmissibilityReport rep;
  rep.xi = xi;
  rep.delta = delta;

  DensestResult densest = densest_exact(h);
  rep.pass_i = static_cast<long double>(densest.density.num) <=
               static_cast<long double>(xi) * densest.density.den;
  if (!rep.pass_i) rep.dense_subset = densest.subset;

  const double log_n = std::log(n);
  rep.pass_ii = true;
  for (int v = 0; v < n; ++v) {
    if (h.degree(v) > log_n) {
      rep.pass_ii = false;
      rep.max_degree_vertex = v;
      break;
    }
  }

  const double size_threshold = 2.0 * std::log(std::log(n));
  auto witness = smallest_bicyclic(h, static_cast<int>(std::floor(size_threshold)));
  rep.pass_iii = !witness.has_value();
  if (witness) rep.small_bicyclic = witness->vertices;

  rep.pass_iv = true;
  for (int k = 3; k <= cycle_cap; ++k) {  // k = 2 is vacuous in simple graphs
    std::int64_t cnt = count_k_cycles(h, k);
    double bound = std::pow(n, delta * k);
    if (static_cast<double>(cnt) > bound) {
      rep.pass_iv = false;
      rep.cycle_violation = CycleCountViolation{k, cnt, bound};
      break;
    }
  }
  return rep;
}

namespace {

std::int64_t count_labeled_embeddings(const Graph& pattern, const Graph& host) {
  const int k = pattern.n();
  // BFS order so every vertex after the first has a mapped neighbor.
  std::vector<int> order;
  std::vector<char> seen(k, 0);
  order.push_back(0);
  seen[0] = 1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    std::vector<int> nbrs(pattern.neighbors(order[i]).begin(),
                          pattern.neighbors(order[i]).end());
    std::sort(nbrs.begin(), nbrs.end());
    for (int w : nbrs) {
      if (!seen[w]) {
        seen[w] = 1;
        order.push_back(w);
      }
    }
  }
  if (static_cast<int>(order.size()) != k)
    throw ParameterError("count_embeddings: pattern must be connected");

  // For each position, the previously placed pattern neighbors.
  std::vector<std::vector<int>> anchors(k);
  std::vector<int> pos_of(k);
  for (int i = 0; i < k; ++i) pos_of[order[i]] = i;
  for (int i = 1; i < k; ++i)
    for (int w : pattern.neighbors(order[i]))
      if (pos_of[w] < i) anchors[i].push_back(pos_of[w]);

  std::vector<int> image(k, -1);
  std::vector<char> used(host.n(), 0);
  std::int64_t count = 0;
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == k) {
      ++count;
      return;
    }
    if (pos == 0) {
      for (int c = 0; c < host.n(); ++c) {
        image[0] = c;
        used[c] = 1;
        self(self, 1);
        used[c] = 0;
      }
      return;
    }
    const int a0 = image[anchors[pos][0]];
    for (int c : host.neighbors(a0)) {
      if (used[c]) continue;
      bool ok = true;
      for (std::size_t j = 1; j < anchors[pos].size(); ++j) {
        if (!host.has_edge(image[anchors[pos][j]], c)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      image[pos] = c;
      used[c] = 1;
      self(self, pos + 1);
      used[c] = 0;
    }
  };
  rec(rec, 0);
  return count;
}

}  // namespace

EmbeddingCount count_embeddings(const Graph& pattern, const Graph& host) {
  if (pattern.n() < 1) throw ParameterError("count_embeddings: empty pattern");
  if (pattern.n() > 8) throw RefusalError("count_embeddings: pattern larger than 8");
  if (host.n() > 5000) throw RefusalError("count_embeddings: host larger than 5000");
  EmbeddingCount out;
  out.labeled = count_labeled_embeddings(pattern, host);
  // An injective edge-preserving self-map of a finite graph maps edges onto
  // edges, so this counts exactly the automorphisms.
  out.aut = count_labeled_embeddings(pattern, pattern);
  if (out.labeled % out.aut != 0)
    throw std::logic_error("count_embeddings: labeled count not divisible by aut");
  out.unlabeled = out.labeled / out.aut;
  return out;
}

namespace {

int pair_slot(int i, int j, int k) {
  if (i > j) std::swap(i, j);
  return i * k - i * (i + 1) / 2 + (j - i - 1);
}

std::uint32_t permute_mask(std::uint32_t mask, const std::vector<int>& perm, int k) {
  std::uint32_t out = 0;
  for (int i = 0, slot = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j, ++slot)
      if (mask >> slot & 1) out |= 1u << pair_slot(perm[i], perm[j], k);
  return out;
}

bool mask_connected(std::uint32_t mask, int k) {
  std::vector<std::uint32_t> adj(k, 0);
  for (int i = 0, slot = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j, ++slot) {
      if (mask >> slot & 1) {
        adj[i] |= 1u << j;
        adj[j] |= 1u << i;
      }
    }
  }
  std::uint32_t reached = 1, frontier = 1;
  while (frontier) {
    std::uint32_t next = 0;
    for (std::uint32_t rest = frontier; rest;) {
      int v = __builtin_ctz(rest);
      rest &= rest - 1;
      next |= adj[v];
    }
    frontier = next & ~reached;
    reached |= next;
  }
  return reached == (1u << k) - 1;
}

std::vector<Graph> build_classes(int k) {
  std::vector<Graph> out;
  if (k == 1) {
    out.emplace_back(1);
    return out;
  }
  const int slots = k * (k - 1) / 2;
  std::vector<std::vector<int>> perms;
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<char> visited(1u << slots, 0);
  for (std::uint32_t mask = 0; mask < (1u << slots); ++mask) {
    if (visited[mask]) continue;
    // mask is the smallest member of its isomorphism orbit
    for (const auto& p : perms) visited[permute_mask(mask, p, k)] = 1;
    if (!mask_connected(mask, k)) continue;
    std::vector<Edge> edges;
    for (int i = 0, slot = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j, ++slot)
        if (mask >> slot & 1) edges.emplace_back(i, j);
    out.emplace_back(k, std::move(edges));
  }
  return out;
}

}  // namespace

const std::vector<Graph>& connected_classes(int k) {
  if (k < 1 || k > 6) throw RefusalError("connected_classes: k outside [1,6]");
  static const std::array<std::vector<Graph>, 7> tables = [] {
    std::array<std::vector<Graph>, 7> t;
    for (int kk = 1; kk <= 6; ++kk) t[kk] = build_classes(kk);
    return t;
  }();
  return tables[k];
}

namespace {

// Rooted canonical string (sorted child forms in parentheses).
std::string ahu(int v, int parent, const std::vector<std::vector<int>>& adj) {
  std::vector<std::string> parts;
  for (int w : adj[v])
    if (w != parent) parts.push_back(ahu(w, v, adj));
  std::sort(parts.begin(), parts.end());
  std::string s = "(";
  for (const auto& p : parts) s += p;
  s += ")";
  return s;
}

std::string tree_canonical(const std::vector<Edge>& edges, int k) {
  std::vector<std::vector<int>> adj(k);
  std::vector<int> degree(k, 0);
  for (const auto& [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
    ++degree[u];
    ++degree[v];
  }
  // Centers by peeling leaves.
  std::vector<int> deg = degree;
  std::vector<int> layer;
  std::vector<char> gone(k, 0);
  for (int v = 0; v < k; ++v)
    if (deg[v] <= 1) layer.push_back(v);
  int alive = k;
  while (alive > 2) {
    std::vector<int> next;
    for (int v : layer) {
      gone[v] = 1;
      --alive;
      for (int w : adj[v])
        if (!gone[w] && --deg[w] == 1) next.push_back(w);
    }
    layer = std::move(next);
  }
  std::vector<int> centers;
  for (int v = 0; v < k; ++v)
    if (!gone[v]) centers.push_back(v);
  if (centers.size() == 1) return "C" + ahu(centers[0], -1, adj);
  const std::string a = ahu(centers[0], centers[1], adj);
  const std::string b = ahu(centers[1], centers[0], adj);
  return "E" + (a <= b ? a + b : b + a);
}

}  // namespace

TreeClassCount tree_class_count(int k) {
  if (k < 2 || k > 8) throw RefusalError("tree_class_count: k outside [2,8]");
  TreeClassCount out;
  out.bound = 1;
  for (int i = 1; i < k; ++i) out.bound *= 4;
  if (k == 2) {
    out.count = 1;
    return out;
  }
  // All labeled trees via Prufer sequences, deduplicated by canonical form.
  std::unordered_set<std::string> forms;
  std::vector<int> seq(k - 2, 0);
  for (;;) {
    std::vector<int> degree(k, 1);
    for (int x : seq) ++degree[x];
    std::vector<Edge> edges;
    std::vector<char> used(k, 0);
    std::vector<int> deg = degree;
    for (int x : seq) {
      int leaf = -1;
      for (int v = 0; v < k; ++v) {
        if (deg[v] == 1 && !used[v]) {
          leaf = v;
          break;
        }
      }
      edges.emplace_back(std::min(leaf, x), std::max(leaf, x));
      used[leaf] = 1;
      --deg[x];
    }
    int a = -1, b = -1;
    for (int v = 0; v < k; ++v) {
      if (!used[v] && deg[v] == 1) {
        if (a < 0)
          a = v;
        else
          b = v;
      }
    }
    edges.emplace_back(std::min(a, b), std::max(a, b));
    forms.insert(tree_canonical(edges, k));

    int pos = k - 3;
    while (pos >= 0 && seq[pos] == k - 1) seq[pos--] = 0;
    if (pos < 0) break;
    ++seq[pos];
  }
  out.count = static_cast<int>(forms.size());
  if (out.count > out.bound)
    throw std::logic_error("tree_class_count: count exceeds 4^(k-1)");
  return out;
}

EmbeddingBoundsReport embedding_bounds_check(const Graph& h, int k, double xi,
                                             double delta) {
  if (k < 2 || k > 6) throw RefusalError("embedding_bounds_check: k outside [2,6]");
  if (!check_admissible(h, xi, delta).admissible())
    throw RefusalError("embedding_bounds_check: host is not admissible");
  EmbeddingBoundsReport rep;
  rep.k = k;
  for (const Graph& cls : connected_classes(k)) {
    // Aut(H) t(H, host) is exactly the labeled embedding count.
    auto labeled = static_cast<double>(count_embeddings(cls, h).labeled);
    if (cls.m() == k - 1)
      rep.tree_sum += labeled;
    else
      rep.nontree_sum += labeled;
  }
  const double log_n = std::log(h.n());
  rep.tree_bound = h.n() * std::pow(4.0 * log_n, 2.0 * (k - 1));
  rep.nontree_bound =
      std::pow(k, 3) * std::pow(std::pow(2.0, xi + 1.0) * std::pow(h.n(), delta), k);
  rep.ok_tree = rep.tree_sum <= rep.tree_bound;
  rep.ok_nontree = rep.nontree_sum <= rep.nontree_bound;
  return rep;
}

MomentTerms truncated_moment_terms(const Graph& h, double p, double xi,
                                   double c_prime, int k_max) {
  if (k_max < 2 || k_max > 6) throw RefusalError("truncated_moment_terms: k_max outside [2,6]");
  if (!(p > 0.0 && p < 1.0)) throw ParameterError("truncated_moment_terms: p outside (0,1)");
  if (c_prime <= 0.0) throw ParameterError("truncated_moment_terms: c_prime must be positive");
  const double n = h.n();
  if (n * std::pow(p, xi) <= 1.0)
    throw RefusalError("truncated_moment_terms: requires n p^xi > 1");
  MomentTerms out;
  for (int k = 2; k <= k_max; ++k) {
    const double cyc_scale = std::pow(c_prime * n * std::pow(p, xi), k);
    const double tree_scale = std::pow(c_prime * n * p, k);
    for (const Graph& cls : connected_classes(k)) {
      auto labeled = static_cast<double>(count_embeddings(cls, h).labeled);
      if (labeled == 0) continue;
      if (cls.m() == k - 1)
        out.tree_sum += p * labeled / tree_scale;
      else
        out.non_tree_sum += labeled / cyc_scale;
    }
  }
  return out;
}

}  // namespace corrgraph
