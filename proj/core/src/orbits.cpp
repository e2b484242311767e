#include "corrgraph/orbits.hpp"

#include <algorithm>

#include "corrgraph/errors.hpp"

namespace corrgraph {

OrbitDecomposition orbit_decomposition(const Bijection& sigma) {
  const int n = sigma.size();
  OrbitDecomposition out;
  out.sigma = sigma;
  std::vector<char> visited(static_cast<std::size_t>(n) * n, 0);
  auto flat = [n](int u, int v) { return static_cast<std::size_t>(u) * n + v; };
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (visited[flat(u, v)]) continue;
      std::vector<Edge> orbit;
      int a = u, b = v;
      do {
        orbit.emplace_back(std::min(a, b), std::max(a, b));
        visited[flat(std::min(a, b), std::max(a, b))] = 1;
        int na = sigma(a), nb = sigma(b);
        a = na;
        b = nb;
      } while (!(std::min(a, b) == u && std::max(a, b) == v));
      out.orbits.push_back(std::move(orbit));
    }
  }
  return out;
}

FullOrbitSet full_orbits(const OrbitDecomposition& decomp, const Graph& h) {
  if (h.n() != decomp.n()) throw ParameterError("full_orbits: size mismatch");
  FullOrbitSet out;
  std::vector<Edge> edges;
  for (int i = 0; i < static_cast<int>(decomp.orbits.size()); ++i) {
    const auto& orbit = decomp.orbits[i];
    bool contained = std::all_of(orbit.begin(), orbit.end(), [&](const Edge& e) {
      return h.has_edge(e.first, e.second);
    });
    if (contained) {
      out.orbit_indices.push_back(i);
      edges.insert(edges.end(), orbit.begin(), orbit.end());
    }
  }
  out.h_graph = Graph(h.n(), std::move(edges));
  out.edge_count = out.h_graph.m();
  return out;
}

}  // namespace corrgraph
