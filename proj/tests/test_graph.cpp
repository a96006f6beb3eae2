#include <random>
#include <sstream>

#include "doctest.h"
#include "hhlines/corpus.hpp"
#include "hhlines/graph.hpp"
#include "hhlines/graph_io.hpp"
#include "oracles.hpp"

using namespace hhlines;

namespace {

void check_error(ErrorKind kind, auto&& fn) {
  try {
    fn();
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == kind);
  }
}

}  // namespace

TEST_CASE("vertex sets behave as ordered bitsets") {
  const VertexSet s = VertexSet::of({1, 5, 63});
  CHECK(s.size() == 3);
  CHECK(s.contains(63));
  CHECK(s.first() == 1);
  CHECK(s.to_vector() == std::vector<Vertex>{1, 5, 63});
  CHECK((s - VertexSet::of({5})) == VertexSet::of({1, 63}));
  CHECK(VertexSet::of({1}).subset_of(s));
  CHECK(VertexSet::range(64).size() == 64);
  CHECK(VertexPair::of(4, 2) == VertexPair{2, 4});
}

TEST_CASE("graph construction rejects loops and oversize orders") {
  check_error(ErrorKind::SelfLoop, [] { Graph(3, {{1, 1}}); });
  check_error(ErrorKind::TooLarge, [] { Graph(65); });
  check_error(ErrorKind::TooLarge, [] { Graph(0); });
  const Graph g(3, {{0, 1}, {1, 0}, {1, 2}});
  CHECK(g.edge_count() == 2);
  CHECK(g.is_connected());
  CHECK_FALSE(Graph(3, {{0, 1}}).is_connected());
}

TEST_CASE("graph6 decoding") {
  SUBCASE("K2") {
    const Graph g = parse_graph6("A_");
    CHECK(g.order() == 2);
    CHECK(g.adjacent(0, 1));
  }
  SUBCASE("five vertex code matches reference decoder") {
    const Graph g = parse_graph6("D?{");
    const auto ref = oracle::decode_graph6("D?{");
    REQUIRE(ref);
    CHECK(oracle::adjacency(g) == *ref);
  }
  SUBCASE("malformed inputs") {
    check_error(ErrorKind::MalformedEncoding, [] { parse_graph6("A`"); });
    check_error(ErrorKind::MalformedEncoding, [] { parse_graph6(""); });
    check_error(ErrorKind::MalformedEncoding, [] { parse_graph6("D?"); });
    check_error(ErrorKind::MalformedEncoding, [] { parse_graph6("D?{?"); });
    check_error(ErrorKind::MalformedEncoding, [] { parse_graph6("A\x7f"); });
    check_error(ErrorKind::TooLarge, [] { parse_graph6("~?@@"); });
  }
  SUBCASE("optional header and connectivity requirement") {
    CHECK(parse_graph6(">>graph6<<A_").order() == 2);
    check_error(ErrorKind::Disconnected, [] { parse_graph6("B?", true); });
  }
  SUBCASE("64 vertices use the long header") {
    const Graph g = graphs::cycle(64);
    const std::string code = to_graph6(g);
    CHECK(code[0] == '~');
    CHECK(parse_graph6(code) == g);
  }
}

TEST_CASE("graph6 agrees with the reference decoder on random graphs") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const Graph g = oracle::random_graph(rng, n, 0.4);
    const std::string code = to_graph6(g);
    const auto ref = oracle::decode_graph6(code);
    REQUIRE(ref);
    CHECK(oracle::adjacency(g) == *ref);
    CHECK(parse_graph6(code) == g);
  }
}

TEST_CASE("graph6 encoding fixtures") {
  CHECK(to_graph6(graphs::complete(2)) == "A_");
  const Graph p3 = graphs::path(3);
  CHECK(parse_graph6(to_graph6(p3)) == p3);
  const Graph c4 = graphs::cycle(4);
  CHECK(oracle::adjacency(parse_graph6(to_graph6(c4))) == oracle::adjacency(c4));
}

TEST_CASE("edge lists") {
  CHECK(parse_edge_list("0 1\n1 2") == graphs::path(3));
  CHECK(parse_edge_list("# square\n0 1\n1 2\n2 3\n3 0\n") == graphs::cycle(4));
  check_error(ErrorKind::SelfLoop, [] { parse_edge_list("0 0"); });
  check_error(ErrorKind::NonInteger, [] { parse_edge_list("0 x"); });
  check_error(ErrorKind::NonInteger, [] { parse_edge_list("0 -1"); });
  check_error(ErrorKind::MalformedEncoding, [] { parse_edge_list("0 1 2"); });
  check_error(ErrorKind::TooLarge, [] { parse_edge_list("0 64"); });
}

TEST_CASE("read_graphs reports per-record errors") {
  std::istringstream in("A_\n\nA`\nBw\n");
  const auto records = read_graphs(in, InputFormat::Graph6);
  REQUIRE(records.size() == 3);
  CHECK(records[0].graph);
  CHECK_FALSE(records[1].graph);
  CHECK(records[1].line == 3);
  CHECK(records[2].graph);
}

TEST_CASE("distance fixtures") {
  CHECK(apsp(graphs::cycle(5))(0, 2) == 2);
  CHECK(apsp(graphs::path(4))(0, 3) == 3);
  CHECK(apsp(graphs::petersen()).diameter() == 2);
  check_error(ErrorKind::Disconnected, [] { apsp(Graph(3, {{0, 1}})); });
}

TEST_CASE("apsp agrees with Floyd-Warshall") {
  std::mt19937_64 rng(11);
  const auto matches = [](const Graph& g) {
    const DistanceMatrix dm = apsp(g);
    const auto fw = oracle::floyd_warshall(g);
    for (int u = 0; u < g.order(); ++u)
      for (int v = 0; v < g.order(); ++v)
        if (dm(u, v) != fw[u][v]) return false;
    return true;
  };
  CHECK(matches(graphs::petersen()));
  for (int i = 0; i < 1000; ++i) {
    const int n = 1 + static_cast<int>(rng() % 12);
    CHECK(matches(oracle::random_connected(rng, n, 0.15)));
  }
}

TEST_CASE("distance matrix invariants on the corpus") {
  for (int n = 2; n <= 7; ++n) {
    for (const Graph& g : enumerate_connected(n)) {
      const DistanceMatrix dm = apsp(g);
      bool ok = true;
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
          ok &= dm(u, v) == dm(v, u);
          ok &= (dm(u, v) == 0) == (u == v);
          ok &= (dm(u, v) == 1) == g.adjacent(u, v);
          for (int w = 0; w < n; ++w) ok &= dm(u, w) <= dm(u, v) + dm(v, w);
        }
      CHECK(ok);
      CHECK(parse_graph6(to_graph6(g)) == g);
      CHECK(induced_subgraph(g, g.vertices()) == g);
    }
  }
}

TEST_CASE("common neighbours and induced subgraphs") {
  CHECK(common_neighbors(graphs::cycle(4), 0, 2) == VertexSet::of({1, 3}));
  CHECK(common_neighbors(graphs::complete(3), 0, 1) == VertexSet::of({2}));
  CHECK(common_neighbors(graphs::path(4), 0, 3).empty());
  CHECK(induced_subgraph(graphs::cycle(5), VertexSet::of({0, 1, 2, 3})) == graphs::path(4));
  CHECK(induced_subgraph(graphs::complete(4), VertexSet::of({0, 2, 3})) == graphs::complete(3));
  const Graph house = graphs::house();
  const Graph square = induced_subgraph(house, VertexSet::of({0, 1, 2, 3}));
  CHECK(square == graphs::cycle(4));
  check_error(ErrorKind::EmptySet, [&] { induced_subgraph(house, VertexSet{}); });
}
