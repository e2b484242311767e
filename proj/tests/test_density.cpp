#include <doctest.h>

#include <cmath>

#include "corrgraph/density.hpp"
#include "corrgraph/errors.hpp"
#include "corrgraph/sampling.hpp"
#include "test_util.hpp"

using namespace corrgraph;

TEST_CASE("density values compare exactly") {
  CHECK(DensityValue{1, 2} < DensityValue{2, 3});
  CHECK(DensityValue{2, 4} == DensityValue{1, 2});
  CHECK(DensityValue{3, 2} > DensityValue{4, 3});
}

TEST_CASE("subgraph_density examples") {
  Graph k4 = testutil::complete(4);
  CHECK(subgraph_density(k4, {0, 1, 2, 3}) == DensityValue{6, 4});
  CHECK_THROWS_AS(subgraph_density(k4, {}), ParameterError);

  // any subset of a tree has density < 1
  Graph tree = testutil::star(6);
  CHECK(subgraph_density(tree, {0, 1, 2}) < DensityValue{1, 1});
  CHECK(subgraph_density(tree, {0, 1, 2, 3, 4, 5, 6}) == DensityValue{6, 7});

  Graph k4_minus(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
  CHECK(subgraph_density(k4_minus, {0, 1, 2, 3}) == DensityValue{5, 4});
}

TEST_CASE("densest_bruteforce small cases") {
  DensestResult tri = densest_bruteforce(testutil::cycle(3));
  CHECK(tri.density == DensityValue{3, 3});
  CHECK(tri.subset == std::vector<int>{0, 1, 2});

  // two disjoint triangles: the 6-vertex union wins the cardinality tie-break
  Graph two_tri(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
  DensestResult both = densest_bruteforce(two_tri);
  CHECK(both.density == DensityValue{6, 6});
  CHECK(both.subset.size() == 6);

  Graph k4_minus(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
  DensestResult r = densest_bruteforce(k4_minus);
  CHECK(r.density == DensityValue{5, 4});
  CHECK(r.subset.size() == 4);

  CHECK_THROWS_AS(densest_bruteforce(Graph(21)), RefusalError);
}

TEST_CASE("densest_exact closed-form families") {
  for (int n : {2, 5, 9}) {
    DensestResult r = densest_exact(testutil::complete(n));
    CHECK(r.exact);
    CHECK(r.density == DensityValue{n * (n - 1) / 2, n});
    CHECK(static_cast<int>(r.subset.size()) == n);
  }
  DensestResult star = densest_exact(testutil::star(6));
  CHECK(star.density == DensityValue{6, 7});
  CHECK(star.subset.size() == 7);

  DensestResult pet = densest_exact(testutil::petersen());
  CHECK(pet.density == DensityValue{15, 10});
  CHECK(pet.subset.size() == 10);

  DensestResult empty = densest_exact(Graph(4));
  CHECK(empty.density == DensityValue{0, 4});
  CHECK(empty.subset.size() == 4);

  CHECK_THROWS_AS(densest_exact(Graph(0)), ParameterError);
}

TEST_CASE("densest_exact agrees with brute force on random graphs") {
  int trial = 0;
  for (int rep = 0; rep < 60; ++rep) {
    for (double q : {0.15, 0.4, 0.75}) {
      int n = 4 + rep % 9;  // 4..12
      Graph g = sample_er(n, q, RngSeed{23, static_cast<std::uint64_t>(trial++)});
      DensestResult exact = densest_exact(g);
      DensestResult brute = densest_bruteforce(g);
      REQUIRE(exact.density == brute.density);
      REQUIRE(exact.subset.size() == brute.subset.size());
      REQUIRE(exact.subset == brute.subset);
    }
  }
}

TEST_CASE("greedy_peel dominance and examples") {
  DensestResult k4 = greedy_peel(testutil::complete(4));
  CHECK(k4.density == DensityValue{6, 4});
  CHECK_FALSE(k4.exact);

  CHECK(greedy_peel(testutil::path(8)).density < DensityValue{1, 1});

  for (int t = 0; t < 60; ++t) {
    Graph g = sample_er(64, 4.0 / 64, RngSeed{29, static_cast<std::uint64_t>(t)});
    DensestResult peel = greedy_peel(g);
    DensestResult exact = densest_exact(g);
    REQUIRE(peel.density <= exact.density);
    // peel density is achieved by its own subset
    REQUIRE(subgraph_density(g, peel.subset) == peel.density);
  }
}

TEST_CASE("k_core basics") {
  Graph tri = testutil::cycle(3);
  CHECK(k_core(tri, 2) == tri);

  Graph tree = testutil::star(5);
  CHECK(k_core(tree, 2).m() == 0);
  CHECK(k_core(tree, 2).support_size() == 0);

  // maximality: every deleted vertex has < k neighbors inside the core
  Graph g = sample_er(300, 3.0 / 300, RngSeed{31, 0});
  Graph core = k_core(g, 2);
  std::vector<char> in_core(g.n(), 0);
  for (int v = 0; v < g.n(); ++v)
    if (core.degree(v) > 0) in_core[v] = 1;
  for (int v = 0; v < g.n(); ++v) {
    if (in_core[v]) {
      CHECK(core.degree(v) >= 2);
    } else {
      int into = 0;
      for (int w : g.neighbors(v)) into += in_core[w];
      CHECK(into < 2);
    }
  }
}
