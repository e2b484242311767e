#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "corrgraph/graph.hpp"

namespace corrgraph {

// Upper tail of Bin with mean mu at (1+delta)mu:
// exp(-mu[(1+delta)log(1+delta) - delta]).
double chernoff_tail(double mu, double delta);

struct CycleCountViolation {
  int k = 0;
  std::int64_t count = 0;
  double bound = 0;
};

// Truncation conditions on a sparse host graph:
//   (i)   every subgraph has edge-vertex ratio <= xi
//   (ii)  maximum degree <= ln n
//   (iii) every connected subgraph with two independent cycles has more than
//         2 ln ln n vertices
//   (iv)  at most n^(delta k) simple k-cycles, for k up to cycle_cap
struct AdmissibilityReport {
  double xi = 0;
  double delta = 0;
  bool pass_i = false, pass_ii = false, pass_iii = false, pass_iv = false;

  std::vector<int> dense_subset;               // (i) witness
  int max_degree_vertex = -1;                  // (ii) witness
  std::vector<int> small_bicyclic;             // (iii) witness vertex set
  std::optional<CycleCountViolation> cycle_violation;  // (iv) witness

  bool admissible() const { return pass_i && pass_ii && pass_iii && pass_iv; }
};

AdmissibilityReport check_admissible(const Graph& h, double xi, double delta,
                                     int cycle_cap = 8);

// Number of simple k-cycles, each counted once as a subgraph. 3 <= k <= 10.
std::int64_t count_k_cycles(const Graph& h, int k);

struct EmbeddingCount {
  std::int64_t labeled = 0;    // injective edge-preserving maps
  std::int64_t aut = 0;        // automorphisms of the pattern
  std::int64_t unlabeled = 0;  // labeled / aut, exactly
};

// Labeled embeddings by backtracking: pattern edges must map to host edges,
// pattern non-edges are unconstrained. Pattern must be connected and have at
// most 8 vertices; host at most 5000.
EmbeddingCount count_embeddings(const Graph& pattern, const Graph& host);

// Representatives of the isomorphism classes of connected graphs on k
// vertices, k <= 6. Deterministic order.
const std::vector<Graph>& connected_classes(int k);

struct TreeClassCount {
  int count = 0;
  std::int64_t bound = 0;  // 4^(k-1)
};

// Number of unlabeled trees on k vertices (canonical-form generation over
// all labeled trees), checked against the 4^(k-1) bound. 2 <= k <= 8.
TreeClassCount tree_class_count(int k);

struct EmbeddingBoundsReport {
  int k = 0;
  double tree_sum = 0;      // sum of Aut(T) t(T,host) over tree classes
  double tree_bound = 0;    // n (4 ln n)^(2(k-1))
  double nontree_sum = 0;   // sum of Aut(C) t(C,host) over connected non-trees
  double nontree_bound = 0; // k^3 (2^(xi+1) n^delta)^k
  bool ok_tree = false;
  bool ok_nontree = false;
};

// Evaluates both embedding-count bounds for pattern size k <= 6 on a host
// that passes check_admissible for (xi, delta); refuses otherwise.
EmbeddingBoundsReport embedding_bounds_check(const Graph& h, int k, double xi,
                                             double delta);

struct MomentTerms {
  double non_tree_sum = 0;  // sum over classes of Aut(C) t(C,h) / (c' n p^xi)^|C|
  double tree_sum = 0;      // sum over classes of p Aut(T) t(T,h) / (c' n p)^|T|
};

// Per-class terms of the truncated-moment bound, summed over pattern sizes
// 2..k_max (k_max <= 6). Requires n p^xi > 1; the caller is responsible for
// supplying an admissible host.
MomentTerms truncated_moment_terms(const Graph& h, double p, double xi,
                                   double c_prime, int k_max);

}  // namespace corrgraph
