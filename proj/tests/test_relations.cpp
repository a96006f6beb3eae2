#include "doctest.h"
#include "hhlines/corpus.hpp"
#include "hhlines/metric_lines.hpp"
#include "hhlines/relations.hpp"
#include "oracles.hpp"

using namespace hhlines;

namespace {

using oracle::Matrix;

bool oracle_parallelogram(const Matrix& d, int a, int b, int c, int e) {
  return oracle::between(d, b, a, c) && oracle::between(d, c, b, e) && oracle::between(d, e, c, a) &&
         oracle::between(d, a, e, b);
}

bool oracle_alpha(const Matrix& d, VertexPair p, VertexPair q) {
  std::vector<int> t{p.u, p.v, q.u, q.v};
  std::sort(t.begin(), t.end());
  t.erase(std::unique(t.begin(), t.end()), t.end());
  do {
    int walk = 0;
    for (std::size_t i = 0; i + 1 < t.size(); ++i) walk += d[t[i]][t[i + 1]];
    if (walk == d[t.front()][t.back()]) return true;
  } while (std::next_permutation(t.begin(), t.end()));
  return false;
}

bool oracle_beta(const Graph& g, const Matrix& d, VertexPair p, VertexPair q) {
  if (!g.adjacent(p.u, p.v) || !g.adjacent(q.u, q.v)) return false;
  if (VertexSet::of({p.u, p.v, q.u, q.v}).size() != 4) return false;
  return oracle_parallelogram(d, p.u, p.v, q.u, q.v) || oracle_parallelogram(d, p.u, p.v, q.v, q.u);
}

std::vector<VertexPair> all_pairs(int n) {
  std::vector<VertexPair> out;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) out.push_back({u, v});
  return out;
}

}  // namespace

TEST_CASE("parallelograms") {
  const DistanceMatrix c4 = apsp(graphs::cycle(4));
  CHECK(is_parallelogram(c4, 0, 1, 2, 3));
  const DistanceMatrix k4 = apsp(graphs::complete(4));
  std::vector<int> t{0, 1, 2, 3};
  do CHECK_FALSE(is_parallelogram(k4, t[0], t[1], t[2], t[3]));
  while (std::next_permutation(t.begin(), t.end()));
  const Graph c6 = graphs::cycle(6);
  CHECK(is_parallelogram(apsp(c6), 0, 1, 3, 4) == oracle_parallelogram(oracle::floyd_warshall(c6), 0, 1, 3, 4));
  CHECK_THROWS_AS(is_parallelogram(c4, 0, 1, 1, 3), Error);
}

TEST_CASE("alpha relation") {
  const DistanceMatrix p4 = apsp(graphs::path(4));
  CHECK(alpha_related(p4, {0, 1}, {2, 3}) == Ordering{0, 1, 2, 3});
  const Graph k3 = graphs::complete(3);
  CHECK(alpha_related(apsp(k3), {0, 1}, {0, 2}).has_value() ==
        oracle_alpha(oracle::floyd_warshall(k3), {0, 1}, {0, 2}));
  CHECK_FALSE(alpha_related(apsp(k3), {0, 1}, {0, 2}));
  const Graph c4 = graphs::cycle(4);
  CHECK(alpha_related(apsp(c4), {0, 1}, {2, 3}).has_value() ==
        oracle_alpha(oracle::floyd_warshall(c4), {0, 1}, {2, 3}));
}

TEST_CASE("beta relation") {
  const Graph c4 = graphs::cycle(4);
  const DistanceMatrix dm = apsp(c4);
  CHECK(beta_related(c4, dm, {0, 1}, VertexPair::of(3, 2)) == Ordering{0, 1, 2, 3});
  const Graph p4 = graphs::path(4);
  CHECK_FALSE(beta_related(p4, apsp(p4), {0, 1}, {2, 3}));
  CHECK_FALSE(beta_related(c4, dm, {0, 2}, {1, 3}));
}

TEST_CASE("gamma relation") {
  const Graph c4 = graphs::cycle(4);
  CHECK(gamma_related(c4, apsp(c4), {0, 2}, {1, 3}));
  const Graph k3 = graphs::complete(3);
  for (VertexPair p : all_pairs(3))
    for (VertexPair q : all_pairs(3)) CHECK_FALSE(gamma_related(k3, apsp(k3), p, q));
  // Diagonals of one square of the apex graph, decided on the oracle distance table.
  const Graph d = graphs::two_c4_plus_apex();
  const auto f = oracle::floyd_warshall(d);
  std::vector<int> i02, i13;
  for (int z = 0; z < 9; ++z) {
    if (oracle::between(f, z, 0, 2)) i02.push_back(z);
    if (oracle::between(f, z, 1, 3)) i13.push_back(z);
  }
  const bool expected = oracle_parallelogram(f, 0, 1, 2, 3) && oracle::naive_line(f, 0, 2) == i02 && i02 == i13 &&
                        oracle::naive_line(f, 1, 3) == i13;
  CHECK(expected);
  CHECK(gamma_related(d, apsp(d), {0, 2}, {1, 3}).has_value() == expected);
}

TEST_CASE("classification precedence") {
  const Graph p4 = graphs::path(4);
  CHECK(classify_relation(p4, apsp(p4), {0, 1}, {2, 3}).tag == RelationTag::Alpha);
  const Graph c4 = graphs::cycle(4);
  const auto f = oracle::floyd_warshall(c4);
  const bool alpha = oracle_alpha(f, {0, 1}, {2, 3});
  const bool beta = oracle_beta(c4, f, {0, 1}, {2, 3});
  CHECK_FALSE(alpha);
  CHECK(beta);
  CHECK(classify_relation(c4, apsp(c4), {0, 1}, VertexPair::of(3, 2)).tag == RelationTag::Beta);
  const Graph k3 = graphs::complete(3);
  CHECK(classify_relation(k3, apsp(k3), {0, 1}, {0, 2}).tag == RelationTag::None);
}

TEST_CASE("relations on the corpus: equal lines, parallelogram distances, symmetry") {
  for (int n = 2; n <= 7; ++n) {
    for (const Graph& g : enumerate_connected(n)) {
      const LineFamily fam(g);
      const DistanceMatrix& dm = fam.distances();
      const auto f = oracle::floyd_warshall(g);
      const auto pairs = all_pairs(n);
      bool ok = true;
      for (std::size_t i = 0; i < pairs.size(); ++i)
        for (std::size_t j = i + 1; j < pairs.size(); ++j) {
          const VertexPair p = pairs[i], q = pairs[j];
          ok &= alpha_related(dm, p, q).has_value() == oracle_alpha(f, p, q);
          ok &= beta_related(g, dm, p, q).has_value() == oracle_beta(g, f, p, q);
          ok &= alpha_related(dm, p, q).has_value() == alpha_related(dm, q, p).has_value();
          ok &= beta_related(g, dm, p, q).has_value() == beta_related(g, dm, q, p).has_value();
          ok &= gamma_related(g, dm, p, q).has_value() == gamma_related(g, dm, q, p).has_value();
          if (fam.line_of(p.u, p.v) == fam.line_of(q.u, q.v))
            ok &= classify_relation(g, dm, p, q).tag != RelationTag::None;
        }
      if (n >= 4)
        for (const auto& s : oracle::subsets(n, 4)) {
          std::vector<int> t = s;
          do {
            if (!is_parallelogram(dm, t[0], t[1], t[2], t[3])) continue;
            ok &= dm(t[0], t[1]) == dm(t[2], t[3]) && dm(t[0], t[3]) == dm(t[1], t[2]) &&
                  dm(t[0], t[2]) == dm(t[1], t[3]);
          } while (std::next_permutation(t.begin(), t.end()));
        }
      CHECK_MESSAGE(ok, to_graph6(g));
    }
  }
}
