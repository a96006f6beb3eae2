#include "doctest.h"
#include "hhlines/corpus.hpp"
#include "hhlines/discharging.hpp"
#include "hhlines/structure.hpp"
#include "oracles.hpp"

using namespace hhlines;

namespace {

const Graph& diamond() {
  static const Graph g(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
  return g;
}

std::vector<Graph> irreducible_corpus() {
  std::vector<Graph> out;
  for (int n = 2; n <= 8; ++n)
    for (const Graph& g : enumerate_connected(n)) {
      if (!is_hh_free(g) || find_c4_module(g)) continue;
      const LineFamily fam(g);
      if (!fam.universal_edge() && !fam.universal_2pair()) out.push_back(g);
    }
  return out;
}

}  // namespace

TEST_CASE("bipartitions of L1 generators") {
  const LineFamily k3(graphs::complete(3));
  const auto w = l1_generator_bipartition(k3, VertexSet::of({0, 1}));
  REQUIRE(w);
  CHECK(w.value().x_side == VertexSet::of({0}));
  CHECK(w.value().y_side == VertexSet::of({1}));

  const LineFamily d(diamond());
  const auto f = oracle::floyd_warshall(diamond());
  REQUIRE(oracle::naive_line(f, 0, 2) == oracle::naive_line(f, 0, 3));
  const VertexSet members = VertexSet::of(oracle::naive_line(f, 0, 2));
  const auto dw = l1_generator_bipartition(d, members);
  REQUIRE(dw);
  CHECK(dw.value().x_side == VertexSet::of({0}));
  CHECK(dw.value().y_side == VertexSet::of({2, 3}));

  const LineFamily c4(graphs::cycle(4));
  const auto universal = l1_generator_bipartition(c4, VertexSet::range(4));
  REQUIRE_FALSE(universal);
  CHECK(universal.violation().kind == ErrorKind::PreconditionUnmet);
}

TEST_CASE("discharge of the triangle") {
  const auto cert = discharge(graphs::complete(3));
  REQUIRE(cert);
  CHECK(cert.value().centers.empty());
  CHECK(cert.value().totals == std::vector<int>{2, 2, 2});
  CHECK(cert.value().transfers.size() == 3);
  for (const Transfer& t : cert.value().transfers) {
    CHECK(t.kind == LineKind::L1);
    REQUIRE(t.gifts.size() == 2);
    CHECK(t.gifts[0].half_units == 1);
    CHECK(t.gifts[1].half_units == 1);
  }
  CHECK(verify_certificate(graphs::complete(3), cert.value()).ok);

  DischargeCertificate forged = cert.value();
  forged.totals[1] = 1;
  CHECK_FALSE(verify_certificate(graphs::complete(3), forged).ok);

  DischargeCertificate dropped = cert.value();
  dropped.transfers.pop_back();
  CHECK_FALSE(verify_certificate(graphs::complete(3), dropped).ok);
}

TEST_CASE("discharge preconditions") {
  const auto p3 = discharge(graphs::path(3));
  REQUIRE_FALSE(p3);
  CHECK(p3.violation().kind == ErrorKind::PreconditionUnmet);
  const auto house = discharge(graphs::house());
  REQUIRE_FALSE(house);
  CHECK(house.violation().kind == ErrorKind::PreconditionUnmet);
  const auto apex = discharge(graphs::two_c4_plus_apex());
  REQUIRE_FALSE(apex);
  CHECK(apex.violation().kind == ErrorKind::PreconditionUnmet);
}

TEST_CASE("discharge of the reduced apex graph") {
  const Graph residue = reduce_c4_modules(graphs::two_c4_plus_apex()).result();
  const auto cert = discharge(residue);
  if (cert) {
    CHECK(verify_certificate(residue, cert.value()).ok);
    for (int t : cert.value().totals) CHECK(t >= 2);
  } else {
    CHECK(cert.violation().kind == ErrorKind::PreconditionUnmet);
  }
}

TEST_CASE("certificates on every irreducible HH-free graph up to 8 vertices") {
  const std::vector<Graph> corpus = irreducible_corpus();
  CHECK(corpus.size() > 100);
  for (const Graph& g : corpus) {
    const LineFamily fam(g);
    const auto cert = discharge(fam);
    REQUIRE_MESSAGE(cert, to_graph6(g) << ": " << cert.violation().detail);
    const DischargeCertificate& c = cert.value();
    const CertificateCheck check = verify_certificate(g, c);
    CHECK_MESSAGE(check.ok, to_graph6(g));

    const int lines = static_cast<int>(fam.l1_size() + fam.l2_size());
    int sum = 0;
    for (int t : c.totals) sum += t;
    CHECK(sum + c.unassigned() == 2 * lines);
    CHECK(lines >= g.order());

    // Vertices outside the centers collect at least a full unit from L1 lines.
    std::vector<int> from_l1(g.order(), 0);
    for (const Transfer& t : c.transfers)
      if (t.kind == LineKind::L1)
        for (const Gift& gift : t.gifts) from_l1[gift.vertex] += gift.half_units;
    for (Vertex v = 0; v < g.order(); ++v)
      if (!c.centers.contains(v)) CHECK(from_l1[v] >= 2);

    // L1 and L2 are disjoint without a universal line.
    if (!fam.has_universal_line())
      for (VertexSet l : fam.l2()) CHECK_FALSE(fam.at(l).in_l1());

    for (VertexSet l : fam.l2()) {
      const auto center = l2_star_center(fam, l);
      REQUIRE(center);
      const auto& gens = fam.at(l).good_generators;
      for (VertexPair p : gens) CHECK(p.as_set().contains(center.value()));
      if (gens.size() == 1) CHECK(center.value() == gens.front().u);
    }
  }
}
