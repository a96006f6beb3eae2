#include "hhlines/discharging.hpp"

#include <map>
#include <numeric>
#include <set>

#include "hhlines/structure.hpp"

namespace hhlines {
namespace {

std::string describe(VertexSet s) {
  std::string out = "{";
  for (Vertex v : s) {
    if (out.size() > 1) out += ',';
    out += std::to_string(v);
  }
  return out + "}";
}

Violation violation(ErrorKind kind, std::string detail, VertexSet witness = {}) {
  return Violation{kind, std::move(detail), witness.to_vector()};
}

// Bipartition without the precondition checks.
Checked<BipartitionWitness> bipartition_of(const LineFamily& fam, const FamilyLine& entry) {
  const Graph& g = fam.graph();
  VertexSet ends;
  std::vector<VertexSet> f_adj(g.order());
  for (const VertexPair& e : entry.edge_generators) {
    ends |= e.as_set();
    f_adj[e.u].insert(e.v);
    f_adj[e.v].insert(e.u);
  }
  // 2-colour the generator graph from its least vertex.
  VertexSet x = VertexSet::single(ends.first());
  VertexSet y;
  VertexSet frontier = x;
  VertexSet seen = x;
  bool on_x = true;
  while (!frontier.empty()) {
    VertexSet next;
    for (Vertex v : frontier) next |= f_adj[v];
    if (next.intersects(on_x ? x : y))
      return violation(ErrorKind::StructureViolation, "generating edges contain an odd cycle", entry.line.members);
    next -= seen;
    (on_x ? y : x) |= next;
    seen |= next;
    frontier = next;
    on_x = !on_x;
  }
  if (seen != ends)
    return violation(ErrorKind::StructureViolation, "generating edges are disconnected", ends);
  for (Vertex a : x)
    if (f_adj[a] != y)
      return violation(ErrorKind::StructureViolation,
                       "vertex " + std::to_string(a) + " misses a generating edge across the bipartition", ends);
  for (Vertex b : y)
    if (f_adj[b] != x)
      return violation(ErrorKind::StructureViolation,
                       "vertex " + std::to_string(b) + " misses a generating edge across the bipartition", ends);
  for (Vertex a : x)
    if (g.neighbors(a).intersects(x))
      return violation(ErrorKind::StructureViolation, "bipartition side is not independent", x);
  for (Vertex b : y)
    if (g.neighbors(b).intersects(y))
      return violation(ErrorKind::StructureViolation, "bipartition side is not independent", y);
  return BipartitionWitness{x, y};
}

Checked<Vertex> center_of(const FamilyLine& entry) {
  VertexSet common = VertexSet::range(kMaxVertices);
  for (const VertexPair& p : entry.good_generators) common &= p.as_set();
  if (common.empty())
    return violation(ErrorKind::NoCommonVertex, "good pairs generating " + describe(entry.line.members) +
                                                    " share no vertex",
                     entry.line.members);
  return common.first();
}

}  // namespace

Checked<BipartitionWitness> l1_generator_bipartition(const LineFamily& fam, VertexSet line) {
  const auto it = fam.lines().find(line);
  if (it == fam.lines().end() || !it->second.in_l1())
    return violation(ErrorKind::PreconditionUnmet, "line is not in L1", line);
  if (it->second.universal) return violation(ErrorKind::PreconditionUnmet, "line is universal", line);
  if (!is_hh_free(fam.graph())) return violation(ErrorKind::PreconditionUnmet, "graph is not house/hole-free");
  return bipartition_of(fam, it->second);
}

Checked<Vertex> l2_star_center(const LineFamily& fam, VertexSet line) {
  const auto it = fam.lines().find(line);
  if (it == fam.lines().end() || !it->second.in_l2())
    return violation(ErrorKind::PreconditionUnmet, "line is not in L2", line);
  if (it->second.universal) return violation(ErrorKind::PreconditionUnmet, "line is universal", line);
  if (auto e = fam.universal_edge())
    return violation(ErrorKind::PreconditionUnmet, "graph has a universal edge", e->as_set());
  if (auto m = find_c4_module(fam.graph()))
    return violation(ErrorKind::PreconditionUnmet, "graph has a C4-module", m->vertices());
  return center_of(it->second);
}

int DischargeCertificate::unassigned() const {
  int sum = 0;
  for (const Transfer& t : transfers) sum += t.unassigned;
  return sum;
}

int DischargeCertificate::distributed() const { return std::accumulate(totals.begin(), totals.end(), 0); }

Checked<DischargeCertificate> discharge(const Graph& g) {
  if (!g.is_connected()) return violation(ErrorKind::PreconditionUnmet, "graph is disconnected");
  return discharge(LineFamily(g));
}

Checked<DischargeCertificate> discharge(const LineFamily& fam) {
  const Graph& g = fam.graph();
  if (g.order() < 2) return violation(ErrorKind::PreconditionUnmet, "graph has fewer than two vertices");
  if (auto h = find_house(g)) return violation(ErrorKind::PreconditionUnmet, "graph contains a house", *h);
  if (auto h = find_hole(g)) return violation(ErrorKind::PreconditionUnmet, "graph contains a hole", *h);
  if (auto e = fam.universal_edge())
    return violation(ErrorKind::PreconditionUnmet, "graph has a universal edge", e->as_set());
  if (auto p = fam.universal_2pair())
    return violation(ErrorKind::PreconditionUnmet, "graph has a universal 2-pair", p->as_set());
  if (auto m = find_c4_module(g))
    return violation(ErrorKind::PreconditionUnmet, "graph has a C4-module", m->vertices());

  DischargeCertificate cert;
  cert.totals.assign(g.order(), 0);

  for (const auto& [members, entry] : fam.lines()) {
    if (!entry.in_l2()) continue;
    if (entry.in_l1())
      return violation(ErrorKind::StructureViolation, "line " + describe(members) + " lies in both L1 and L2",
                       members);
    const Checked<Vertex> center = center_of(entry);
    if (!center) return center.violation();
    cert.centers.insert(center.value());
    cert.transfers.push_back({members, LineKind::L2, {{center.value(), 2}}, 0});
    cert.totals[center.value()] += 2;
  }

  for (const auto& [members, entry] : fam.lines()) {
    if (!entry.in_l1()) continue;
    Transfer t{members, LineKind::L1, {}, 2};
    if (!entry.universal) {
      const Checked<BipartitionWitness> sides = bipartition_of(fam, entry);
      if (!sides) return sides.violation();
      for (VertexSet side : {sides.value().x_side, sides.value().y_side}) {
        const VertexSet outside = side - cert.centers;
        if (outside.size() > 1)
          return violation(ErrorKind::TwoOutsideC,
                           "line " + describe(members) + ": side " + describe(side) + " has " +
                               describe(outside) + " outside the centers",
                           outside);
        if (outside.size() == 1) {
          t.gifts.push_back({outside.first(), 1});
          cert.totals[outside.first()] += 1;
          t.unassigned -= 1;
        }
      }
    }
    cert.transfers.push_back(std::move(t));
  }
  return cert;
}

CertificateCheck verify_certificate(const Graph& g, const DischargeCertificate& cert) {
  CertificateCheck check;
  auto fail = [&](std::string msg) {
    check.ok = false;
    check.diagnostics.push_back(std::move(msg));
  };
  if (!g.is_connected()) {
    fail("graph is disconnected");
    return check;
  }
  const LineFamily fam(g);
  const int n = g.order();
  if (static_cast<int>(cert.totals.size()) != n) {
    fail("totals has " + std::to_string(cert.totals.size()) + " entries for " + std::to_string(n) + " vertices");
    return check;
  }

  std::set<VertexSet> l1, l2;
  for (const auto& [members, entry] : fam.lines()) {
    if (entry.in_l1()) l1.insert(members);
    if (entry.in_l2()) l2.insert(members);
    if (entry.in_l1() && entry.in_l2()) fail("line " + describe(members) + " lies in both L1 and L2");
  }

  std::vector<int> received(n, 0);
  VertexSet l2_recipients;
  std::set<std::pair<VertexSet, LineKind>> seen;
  int unassigned = 0;
  for (const Transfer& t : cert.transfers) {
    const std::string name = describe(t.line);
    if (!seen.insert({t.line, t.kind}).second) fail("line " + name + " transfers twice");
    const auto it = fam.lines().find(t.line);
    if (it == fam.lines().end()) {
      fail("transfer for " + name + " which is not a line");
      continue;
    }
    const FamilyLine& entry = it->second;
    int given = 0;
    for (const Gift& gift : t.gifts) {
      if (gift.vertex < 0 || gift.vertex >= n || gift.half_units <= 0) {
        fail("line " + name + ": malformed gift");
        continue;
      }
      received[gift.vertex] += gift.half_units;
      given += gift.half_units;
    }
    if (t.unassigned < 0) fail("line " + name + ": negative unassigned weight");
    unassigned += t.unassigned;
    if (given + t.unassigned != 2) fail("line " + name + ": gifts and unassigned weight do not sum to 2 half-units");

    if (t.kind == LineKind::L2) {
      if (!entry.in_l2()) fail("line " + name + " is tagged L2 but has no good-pair generator");
      if (t.gifts.size() != 1 || t.gifts[0].half_units != 2) {
        fail("L2 line " + name + " must give its whole weight to one center");
        continue;
      }
      const Vertex c = t.gifts[0].vertex;
      l2_recipients.insert(c);
      for (const VertexPair& p : entry.good_generators)
        if (!p.as_set().contains(c))
          fail("L2 line " + name + ": center " + std::to_string(c) + " misses good pair (" + std::to_string(p.u) +
               "," + std::to_string(p.v) + ")");
    } else {
      if (!entry.in_l1()) fail("line " + name + " is tagged L1 but has no edge generator");
      if (t.gifts.size() > 2) fail("L1 line " + name + " has more than two gifts");
      VertexSet ends;
      for (const VertexPair& e : entry.edge_generators) ends |= e.as_set();
      for (const Gift& gift : t.gifts) {
        if (gift.half_units != 1) fail("L1 line " + name + ": gifts must be one half-unit");
        if (cert.centers.contains(gift.vertex))
          fail("L1 line " + name + ": recipient " + std::to_string(gift.vertex) + " is a center");
        if (!ends.contains(gift.vertex))
          fail("L1 line " + name + ": recipient " + std::to_string(gift.vertex) + " is not on a generating edge");
      }
      if (t.gifts.size() == 2) {
        const VertexPair across = VertexPair::of(t.gifts[0].vertex, t.gifts[1].vertex);
        bool generating = false;
        for (const VertexPair& e : entry.edge_generators) generating = generating || e == across;
        if (!generating) fail("L1 line " + name + ": recipients are not on opposite sides");
      }
    }
  }
  for (const VertexSet& m : l1)
    if (!seen.contains({m, LineKind::L1})) fail("L1 line " + describe(m) + " has no transfer");
  for (const VertexSet& m : l2)
    if (!seen.contains({m, LineKind::L2})) fail("L2 line " + describe(m) + " has no transfer");
  if (l2_recipients != cert.centers) fail("center set differs from the L2 recipients");

  int total = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (received[v] != cert.totals[v])
      fail("vertex " + std::to_string(v) + ": recorded total " + std::to_string(cert.totals[v]) + " but received " +
           std::to_string(received[v]));
    if (cert.totals[v] < 2)
      fail("vertex " + std::to_string(v) + " holds " + std::to_string(cert.totals[v]) + " half-unit(s)");
    total += cert.totals[v];
  }
  const int weight = 2 * static_cast<int>(l1.size() + l2.size());
  if (total + unassigned != weight)
    fail("weight not conserved: " + std::to_string(total) + " distributed + " + std::to_string(unassigned) +
         " unassigned != " + std::to_string(weight));
  if (check.ok && static_cast<int>(l1.size() + l2.size()) < n)
    fail("count implication broken: |L1|+|L2| < n");
  return check;
}

}  // namespace hhlines
