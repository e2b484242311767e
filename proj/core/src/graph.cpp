#include "corrgraph/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "corrgraph/errors.hpp"

namespace corrgraph {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), adj_(n) {
  if (n < 0) throw ParameterError("graph: negative vertex count");
  for (auto& [u, v] : edges) {
    if (u > v) std::swap(u, v);
    if (u == v) throw ParameterError("graph: self-loop");
    if (u < 0 || v >= n) throw ParameterError("graph: endpoint out of range");
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw ParameterError("graph: duplicate edge");
  edges_ = std::move(edges);
  for (const auto& [u, v] : edges_) {
    adj_[u].insert(v);
    adj_[v].insert(u);
  }
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

int Graph::support_size() const {
  int c = 0;
  for (int v = 0; v < n_; ++v)
    if (degree(v) > 0) ++c;
  return c;
}

std::vector<int> Graph::support() const {
  std::vector<int> out;
  for (int v = 0; v < n_; ++v)
    if (degree(v) > 0) out.push_back(v);
  return out;
}

std::int64_t Graph::edges_within(const std::vector<int>& subset) const {
  std::vector<char> in(n_, 0);
  for (int v : subset) {
    if (v < 0 || v >= n_) throw ParameterError("edges_within: vertex out of range");
    in[v] = 1;
  }
  std::int64_t count = 0;
  for (int v : subset) {
    if (static_cast<int>(neighbors(v).size()) * 4 < n_) {
      for (int w : neighbors(v))
        if (in[w] && w > v) ++count;
    } else {
      for (int w : subset)
        if (w > v && has_edge(v, w)) ++count;
    }
  }
  return count;
}

Bijection::Bijection(std::vector<int> mapping) : map_(std::move(mapping)) {
  std::vector<int> sorted = map_;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < static_cast<int>(sorted.size()); ++i)
    if (sorted[i] != i) throw ParameterError("bijection: not a permutation");
}

Bijection Bijection::identity(int n) {
  std::vector<int> m(n);
  std::iota(m.begin(), m.end(), 0);
  return Bijection(std::move(m));
}

Bijection Bijection::inverse() const {
  std::vector<int> inv(map_.size());
  for (int i = 0; i < size(); ++i) inv[map_[i]] = i;
  return Bijection(std::move(inv));
}

Bijection Bijection::compose(const Bijection& other) const {
  if (size() != other.size()) throw ParameterError("bijection: size mismatch");
  std::vector<int> out(map_.size());
  for (int i = 0; i < size(); ++i) out[i] = map_[other(i)];
  return Bijection(std::move(out));
}

Graph read_edge_list(std::istream& in) {
  int n = 0, m = 0;
  if (!(in >> n >> m)) throw ParameterError("edge list: missing header");
  if (n < 0 || m < 0) throw ParameterError("edge list: negative header");
  std::vector<Edge> edges;
  edges.reserve(m);
  for (int i = 0; i < m; ++i) {
    int u, v;
    if (!(in >> u >> v)) throw ParameterError("edge list: truncated input");
    if (u >= v) throw ParameterError("edge list: edges must satisfy u < v");
    edges.emplace_back(u, v);
  }
  return Graph(n, std::move(edges));  // range/duplicate checks happen here
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open " + path);
  return read_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  out << g.n() << ' ' << g.m() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_edge_list_file(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParameterError("cannot open " + path);
  write_edge_list(g, out);
}

}  // namespace corrgraph
