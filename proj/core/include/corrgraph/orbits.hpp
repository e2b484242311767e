#pragma once

#include <vector>

#include "corrgraph/graph.hpp"

namespace corrgraph {

// Partition of all unordered pairs into the orbits of the pair permutation
// Sigma((u,v)) = (sigma(u), sigma(v)) induced by a vertex permutation sigma.
struct OrbitDecomposition {
  Bijection sigma;
  std::vector<std::vector<Edge>> orbits;  // each orbit in traversal order

  int n() const { return sigma.size(); }
};

OrbitDecomposition orbit_decomposition(const Bijection& sigma);

// The orbits whose every pair is an edge of the reference intersection graph,
// together with the subgraph they span.
struct FullOrbitSet {
  std::vector<int> orbit_indices;  // into the decomposition's orbit list
  Graph h_graph;                   // edges of the selected orbits
  std::int64_t edge_count = 0;     // equals h_graph.m()
};

FullOrbitSet full_orbits(const OrbitDecomposition& decomp, const Graph& h);

}  // namespace corrgraph
