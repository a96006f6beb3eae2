#include <random>

#include "doctest.h"
#include "hhlines/corpus.hpp"
#include "hhlines/metric_lines.hpp"
#include "oracles.hpp"

using namespace hhlines;

TEST_CASE("betweenness and collinearity") {
  const DistanceMatrix p3 = apsp(graphs::path(3));
  const DistanceMatrix c5 = apsp(graphs::cycle(5));
  CHECK(is_between(p3, 1, 0, 2));
  CHECK(is_between(c5, 0, 0, 3));
  CHECK_FALSE(is_between(c5, 3, 0, 1));
  CHECK(collinear(p3, 0, 2, 1));
  CHECK_FALSE(collinear(c5, 0, 1, 3));
  CHECK(collinear(c5, 0, 1, 0));
}

TEST_CASE("intervals") {
  CHECK(interval(apsp(graphs::path(3)), 0, 2) == VertexSet::of({0, 1, 2}));
  CHECK(interval(apsp(graphs::complete(3)), 0, 1) == VertexSet::of({0, 1}));
  CHECK(interval(apsp(graphs::cycle(4)), 0, 2) == VertexSet::of({0, 1, 2, 3}));
}

TEST_CASE("lines") {
  CHECK(line(apsp(graphs::cycle(4)), 0, 1).members == VertexSet::of({0, 1, 2, 3}));
  CHECK(line(apsp(graphs::complete(3)), 0, 1).members == VertexSet::of({0, 1}));
  CHECK(line(apsp(graphs::cycle(5)), 0, 1).members == VertexSet::of({0, 1, 2, 4}));
  CHECK_THROWS_AS(line(apsp(graphs::cycle(5)), 2, 2), Error);
  CHECK(is_universal_line(graphs::cycle(4), line(apsp(graphs::cycle(4)), 0, 1)));
  CHECK_FALSE(is_universal_line(graphs::complete(3), line(apsp(graphs::complete(3)), 0, 1)));
  CHECK(is_universal_line(graphs::path(3), line(apsp(graphs::path(3)), 0, 1)));
}

TEST_CASE("line families of small fixtures") {
  const LineFamily k3(graphs::complete(3));
  CHECK(k3.distinct() == 3);
  for (const auto& [members, fl] : k3.lines()) CHECK(members.size() == 2);

  const LineFamily c5(graphs::cycle(5));
  CHECK(c5.distinct() == 10);
  int four = 0, three = 0;
  for (const auto& [members, fl] : c5.lines()) {
    four += members.size() == 4;
    three += members.size() == 3;
  }
  CHECK(four == 5);
  CHECK(three == 5);
  CHECK(c5.l1_size() == 5);
  CHECK(c5.l2_size() == 0);
}

TEST_CASE("two squares joined by an apex") {
  const LineFamily fam(graphs::two_c4_plus_apex());
  CHECK(fam.l1_size() == 6);
  CHECK(fam.l2_size() == 2);
  CHECK_FALSE(fam.universal_edge());
  // Brute force over all distance-2 pairs.
  const Graph& g = fam.graph();
  bool any_universal_2pair = false;
  for (int u = 0; u < 9; ++u)
    for (int v = u + 1; v < 9; ++v)
      if (fam.distances()(u, v) == 2 && oracle::naive_line(oracle::floyd_warshall(g), u, v).size() == 9)
        any_universal_2pair = true;
  CHECK(fam.universal_2pair().has_value() == any_universal_2pair);
}

TEST_CASE("good pairs") {
  const Graph c4 = graphs::cycle(4);
  CHECK(is_good_pair(c4, apsp(c4), 0, 2));
  const Graph k3 = graphs::complete(3);
  CHECK_FALSE(is_good_pair(k3, apsp(k3), 0, 1));
  const Graph p4 = graphs::path(4);
  const bool truth = oracle::naive_good_pair(p4, 0, 2);
  CHECK(is_good_pair(p4, apsp(p4), 0, 2) == truth);
  CHECK(truth);  // line(0,1) and line(1,2) are both the whole path
}

TEST_CASE("universal pairs") {
  CHECK(universal_edge_exists(graphs::path(3)) == VertexPair{0, 1});
  CHECK_FALSE(universal_edge_exists(graphs::complete(3)));
  CHECK_FALSE(universal_2pair_exists(graphs::complete(3)));
}

TEST_CASE("line count agrees with the naive recomputation") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 1000; ++i) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const Graph g = oracle::random_connected(rng, n, 0.1 + 0.6 * static_cast<double>(rng() % 100) / 100.0);
    const LineFamily fam(g);
    const auto naive = oracle::naive_lines(g);
    REQUIRE(fam.distinct() == naive.size());
    for (const auto& members : naive) CHECK(fam.lines().contains(VertexSet::of(members)));
  }
}

TEST_CASE("line invariants on the corpus") {
  for (int n = 2; n <= 7; ++n) {
    for (const Graph& g : enumerate_connected(n)) {
      const LineFamily fam(g);
      const DistanceMatrix& dm = fam.distances();
      const auto fw = oracle::floyd_warshall(g);
      bool ok = true;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
          const VertexSet members = fam.line_of(u, v);
          ok &= members == fam.line_of(v, u);
          ok &= interval(dm, u, v).subset_of(members);
          ok &= members.contains(u) && members.contains(v);
          ok &= fam.good(u, v) == oracle::naive_good_pair(g, u, v);
          for (int z = 0; z < n; ++z) {
            if (members.contains(z)) continue;
            ok &= std::abs(dm(z, u) - dm(z, v)) <= dm(u, v) - 1;
            if (fam.good(u, v)) ok &= dm(z, u) == dm(z, v);
          }
          if (fam.good(u, v))
            for (Vertex c : common_neighbors(g, u, v)) ok &= fam.line_of(c, u) == fam.line_of(c, v);
        }
      CHECK_MESSAGE(ok, to_graph6(g));
    }
  }
}
