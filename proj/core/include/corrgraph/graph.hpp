#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace corrgraph {

using Edge = std::pair<int, int>;  // canonical form: first < second

// Simple undirected graph on vertices 0..n-1. Immutable after construction;
// adjacency sets give O(1) edge membership, the sorted edge list gives a
// stable iteration order.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n), adj_(n) {}
  // Validates: endpoints in range, no self-loops, no duplicates.
  Graph(int n, std::vector<Edge> edges);

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }

  bool has_edge(int u, int v) const {
    if (u == v) return false;
    return adj_[u].count(v) > 0;
  }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  const std::unordered_set<int>& neighbors(int v) const { return adj_[v]; }
  const std::vector<Edge>& edges() const { return edges_; }

  int max_degree() const;
  // Vertices with at least one incident edge.
  int support_size() const;
  std::vector<int> support() const;

  // Number of edges with both endpoints in `subset`.
  std::int64_t edges_within(const std::vector<int>& subset) const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_ = 0;
  std::vector<std::unordered_set<int>> adj_;
  std::vector<Edge> edges_;
};

// Permutation of {0..n-1}; mapping[i] is the image of i.
class Bijection {
 public:
  Bijection() = default;
  // Validates that `mapping` is a permutation.
  explicit Bijection(std::vector<int> mapping);

  static Bijection identity(int n);

  int size() const { return static_cast<int>(map_.size()); }
  int operator()(int v) const { return map_[v]; }
  const std::vector<int>& mapping() const { return map_; }

  Bijection inverse() const;
  // Composition this(other(v)).
  Bijection compose(const Bijection& other) const;

  bool operator==(const Bijection& other) const { return map_ == other.map_; }

 private:
  std::vector<int> map_;
};

// Edge-list text format: first line "n m", then m lines "u v" with u < v,
// 0-based. Readers reject duplicates, self-loops and out-of-range endpoints.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(const Graph& g, std::ostream& out);
void write_edge_list_file(const Graph& g, const std::string& path);

}  // namespace corrgraph
