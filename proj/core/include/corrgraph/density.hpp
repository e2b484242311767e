#pragma once

#include <cstdint>
#include <vector>

#include "corrgraph/graph.hpp"

namespace corrgraph {

// Exact subgraph density |E(U)|/|U|. Comparisons cross-multiply in 64-bit
// integers; no floating point on correctness paths.
struct DensityValue {
  std::int64_t num = 0;  // edge count
  std::int64_t den = 1;  // vertex count, >= 1

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

inline bool operator<(const DensityValue& a, const DensityValue& b) {
  return a.num * b.den < b.num * a.den;
}
inline bool operator==(const DensityValue& a, const DensityValue& b) {
  return a.num * b.den == b.num * a.den;
}
inline bool operator<=(const DensityValue& a, const DensityValue& b) {
  return a.num * b.den <= b.num * a.den;
}
inline bool operator>(const DensityValue& a, const DensityValue& b) { return b < a; }
inline bool operator>=(const DensityValue& a, const DensityValue& b) { return b <= a; }

struct DensestResult {
  std::vector<int> subset;  // sorted ascending
  DensityValue density;
  bool exact = false;
};

// |E(U)|/|U| for a nonempty subset.
DensityValue subgraph_density(const Graph& g, const std::vector<int>& subset);

// Exact maximum-density subgraph via parametric min-cut: binary search over
// candidate densities on the n^2-grid (which separates all rationals with
// denominator <= n), one max-flow feasibility test per guess. Among all
// maximizers the returned subset has maximum cardinality (such a maximizer is
// unique; ties below it would be broken lexicographically).
DensestResult densest_exact(const Graph& g);

// Exhaustive oracle, n <= 20. Same tie-breaking: density, then cardinality,
// then lexicographically smallest vertex set.
DensestResult densest_bruteforce(const Graph& g);

// Repeatedly remove a minimum-degree vertex (lowest id on ties) and keep the
// best intermediate density. Lower bound: exact flag is always false. The
// two-argument form restricts to prefixes of at least `floor` vertices.
DensestResult greedy_peel(const Graph& g);
DensestResult greedy_peel(const Graph& g, int floor);

// Maximal subgraph of minimum degree >= k (possibly empty), on the original
// vertex range. Obtained by iteratively deleting vertices of degree < k.
Graph k_core(const Graph& g, int k);

}  // namespace corrgraph
