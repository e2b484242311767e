#include <doctest.h>

#include <cmath>

#include "corrgraph/detection.hpp"
#include "corrgraph/errors.hpp"
#include "test_util.hpp"

using namespace corrgraph;

TEST_CASE("size_floor examples") {
  CHECK(size_floor(3) == 3);
  CHECK(size_floor(100) == 22);
  CHECK_THROWS_AS(size_floor(2), ParameterError);
  int prev = 0;
  for (int n = 10; n <= 10000; n += 97) {
    int f = size_floor(n);
    CHECK(f >= prev);
    prev = f;
  }
}

TEST_CASE("constrained_densest ladder") {
  Graph k4 = testutil::complete(4);
  DensestResult r = constrained_densest(k4, 1);
  CHECK(r.exact);
  CHECK(r.density == DensityValue{6, 4});

  // two disjoint triangles + 10 isolated vertices, floor 10
  std::vector<Edge> e{{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}};
  Graph g(16, std::move(e));
  DensestResult c = constrained_densest(g, 10);
  CHECK(c.exact);
  CHECK(c.density == DensityValue{6, 10});
  CHECK(c.subset.size() == 10);

  CHECK_THROWS_AS(constrained_densest(k4, 5), ParameterError);
  CHECK_THROWS_AS(constrained_densest(k4, 0), ParameterError);
}

TEST_CASE("unconstrained densest usually meets the floor at lambda=3") {
  const int n = 2000, trials = 30;
  const int floor = size_floor(n);
  int exact_count = 0;
  for (int t = 0; t < trials; ++t) {
    Graph g = sample_er(n, 3.0 / n, RngSeed{131, static_cast<std::uint64_t>(t)});
    DensestResult r = constrained_densest(g, floor);
    // at n > 20 the result is exact iff the unconstrained optimum met the floor
    if (r.exact) {
      CHECK(static_cast<int>(r.subset.size()) >= floor);
      ++exact_count;
    }
  }
  CHECK(exact_count >= 27);
}

TEST_CASE("statistic_planted degenerate pairs") {
  CorrelatedPair all = sample_correlated_pair(6, 1.0, 1.0, RngSeed{61, 0});
  DetectionOutcome out = statistic_planted(all, 1, 2.0);
  CHECK(out.statistic == doctest::Approx(2.5));
  CHECK(out.decision == Hypothesis::H1);
  CHECK_FALSE(out.approximate);

  CorrelatedPair none = sample_correlated_pair(6, 1.0, 0.0, RngSeed{61, 0});
  DetectionOutcome zero = statistic_planted(none, 1, 0.5);
  CHECK(zero.statistic == 0.0);
  CHECK(zero.result.subset.size() == 6);  // full-set witness on empty graphs
  CHECK(zero.decision == Hypothesis::H0);
}

TEST_CASE("statistic_bruteforce small instances") {
  // triangle+isolated vertex on both sides: some bijection aligns them
  Graph g(4, {{0, 1}, {0, 2}, {1, 2}});
  DetectionOutcome out = statistic_bruteforce(g, g, 1, 0.9);
  CHECK(out.statistic == doctest::Approx(1.0));
  CHECK(out.decision == Hypothesis::H1);

  Graph k4 = testutil::complete(4);
  DetectionOutcome none = statistic_bruteforce(k4, Graph(4), 1, 0.5);
  CHECK(none.statistic == 0.0);

  // 4-cycle vs path on 4 vertices: best alignment keeps 3 path edges
  DetectionOutcome cp = statistic_bruteforce(testutil::cycle(4), testutil::path(4), 1, 1.0);
  CHECK(cp.statistic == doctest::Approx(0.75));

  CHECK_THROWS_AS(statistic_bruteforce(Graph(9), Graph(9), 1, 1.0), RefusalError);
}

TEST_CASE("bruteforce statistic dominates the planted statistic") {
  for (int t = 0; t < 12; ++t) {
    CorrelatedPair pair =
        sample_correlated_pair(6, 0.5, 0.7, RngSeed{67, static_cast<std::uint64_t>(t)});
    DetectionOutcome planted = statistic_planted(pair, 1, 1.0);
    DetectionOutcome brute = statistic_bruteforce(pair.g, pair.g2, 1, 1.0);
    CHECK(brute.result.density >= planted.result.density);
    CHECK(planted.statistic >= 0.0);
  }
}

TEST_CASE("bruteforce statistic is relabeling invariant") {
  SplitRng rng(RngSeed{71, 0});
  for (int t = 0; t < 20; ++t) {
    int n = 4 + static_cast<int>(rng.below(3));  // 4..6
    Graph g = sample_er(n, 0.5, RngSeed{71, 100 + static_cast<std::uint64_t>(t)});
    Graph g2 = sample_er(n, 0.5, RngSeed{71, 200 + static_cast<std::uint64_t>(t)});
    DetectionOutcome base = statistic_bruteforce(g, g2, 1, 1.0);

    Bijection relabel = testutil::random_bijection(n, rng);
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges()) {
      int a = relabel(u), b = relabel(v);
      edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    Graph g_rel(n, std::move(edges));
    DetectionOutcome rel = statistic_bruteforce(g_rel, g2, 1, 1.0);
    CHECK(base.result.density == rel.result.density);
  }
}

TEST_CASE("threshold_tau with an analytic curve") {
  // Piecewise-linear surrogate: rho(l) = 1 for l <= 1, 1 + (l-1)/2 beyond.
  auto curve = [](double l) {
    double mean = l <= 1.0 ? 1.0 : 1.0 + (l - 1.0) / 2.0;
    return RhoEstimate{l, 0, 0, mean, 0.0};
  };
  ThresholdInfo one = threshold_tau(1.0, 0.5, curve, 1e-4);
  CHECK(one.lambda_star == doctest::Approx(1.0));
  CHECK(one.tau == doctest::Approx((1.0 + 1.25) / 2).epsilon(1e-3));
  CHECK(one.tau > 1.0);

  ThresholdInfo half = threshold_tau(0.5, 0.8, curve, 1e-4);
  CHECK(half.lambda_star == doctest::Approx(3.0).epsilon(1e-3));
  // sandwich rho(l*) < tau < rho(l*+eps), and xi < tau
  CHECK(half.rho_star.mean < half.tau);
  CHECK(half.tau < half.rho_plus.mean);
  CHECK(half.xi < half.tau);

  CHECK_THROWS_AS(threshold_tau(0.0, 1.0, curve), ParameterError);
  CHECK_THROWS_AS(threshold_tau(0.5, 0.0, curve), ParameterError);
}

TEST_CASE("h0 union bound terms") {
  // monotone decrease in tau
  double prev = 1e300;
  for (double tau : {1.5, 2.0, 2.5, 3.0}) {
    H0BoundTerm t = h0_union_bound_term(1000, 50, 0.01, tau);
    CHECK(t.applicable);
    CHECK(t.log_term < prev);
    prev = t.log_term;
  }
  // inapplicable when the threshold sits at or below the mean
  H0BoundTerm trivial = h0_union_bound_term(1000, 50, 0.9, 0.1);
  CHECK_FALSE(trivial.applicable);
  CHECK(trivial.log_term == 0.0);

  CHECK_THROWS_AS(h0_union_bound_term(10, 0, 0.5, 1.0), ParameterError);
}

TEST_CASE("decision consistency") {
  CorrelatedPair pair = sample_correlated_pair(150, 0.05, 0.6, RngSeed{73, 0});
  for (double tau : {0.1, 0.5, 1.0, 2.0}) {
    DetectionOutcome out = statistic_planted(pair, size_floor(150), tau);
    CHECK((out.decision == Hypothesis::H1) == (out.statistic >= tau));
  }
}
