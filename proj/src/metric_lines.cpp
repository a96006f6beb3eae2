#include "hhlines/metric_lines.hpp"

namespace hhlines {

VertexSet interval(const DistanceMatrix& dm, Vertex u, Vertex v) {
  VertexSet s;
  for (Vertex z = 0; z < dm.order(); ++z)
    if (is_between(dm, z, u, v)) s.insert(z);
  return s;
}

VertexSet line_members(const DistanceMatrix& dm, Vertex u, Vertex v) {
  VertexSet s;
  for (Vertex z = 0; z < dm.order(); ++z)
    if (collinear(dm, u, v, z)) s.insert(z);
  return s;
}

Line line(const DistanceMatrix& dm, Vertex u, Vertex v) {
  if (u == v) throw Error(ErrorKind::DegeneratePair, "line through a single vertex " + std::to_string(u));
  return Line{line_members(dm, u, v), {VertexPair::of(u, v)}};
}

bool is_universal_line(const Graph& g, const Line& ln) { return ln.members == g.vertices(); }

bool is_good_pair(const Graph& g, const DistanceMatrix& dm, Vertex u, Vertex v) {
  if (dm(u, v) != 2) return false;
  for (Vertex z : common_neighbors(g, u, v))
    if (line_members(dm, u, z) == line_members(dm, z, v)) return true;
  return false;
}

std::optional<VertexPair> universal_edge_exists(const Graph& g) {
  const DistanceMatrix dm = apsp(g);
  for (const VertexPair& e : g.edges())
    if (line_members(dm, e.u, e.v) == g.vertices()) return e;
  return std::nullopt;
}

std::optional<VertexPair> universal_2pair_exists(const Graph& g) {
  const DistanceMatrix dm = apsp(g);
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (dm(u, v) == 2 && line_members(dm, u, v) == g.vertices()) return VertexPair{u, v};
  return std::nullopt;
}

LineFamily::LineFamily(const Graph& g) : graph_(g), dm_(apsp(g)) {
  const int n = g.order();
  pair_line_.assign(static_cast<std::size_t>(n) * n, VertexSet{});
  good_.assign(static_cast<std::size_t>(n) * n, false);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pair_line_[index(u, v)] = pair_line_[index(v, u)] = line_members(dm_, u, v);

  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      if (dm_(u, v) != 2) continue;
      for (Vertex z : common_neighbors(g, u, v))
        if (line_of(u, z) == line_of(z, v)) {
          good_[index(u, v)] = good_[index(v, u)] = true;
          break;
        }
    }

  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      const VertexSet members = line_of(u, v);
      FamilyLine& entry = lines_[members];
      entry.line.members = members;
      entry.universal = members == g.vertices();
      entry.line.generators.push_back({u, v});
      const int d = dm_(u, v);
      if (d == 1) entry.edge_generators.push_back({u, v});
      if (d == 2) entry.has_2pair_generator = true;
      if (good(u, v)) entry.good_generators.push_back({u, v});
    }
}

std::vector<VertexSet> LineFamily::l1() const {
  std::vector<VertexSet> out;
  for (const auto& [members, entry] : lines_)
    if (entry.in_l1()) out.push_back(members);
  return out;
}

std::vector<VertexSet> LineFamily::l2() const {
  std::vector<VertexSet> out;
  for (const auto& [members, entry] : lines_)
    if (entry.in_l2()) out.push_back(members);
  return out;
}

std::optional<VertexPair> LineFamily::universal_edge() const {
  for (const VertexPair& e : graph_.edges())
    if (line_of(e.u, e.v) == graph_.vertices()) return e;
  return std::nullopt;
}

std::optional<VertexPair> LineFamily::universal_2pair() const {
  const int n = graph_.order();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (dm_(u, v) == 2 && line_of(u, v) == graph_.vertices()) return VertexPair{u, v};
  return std::nullopt;
}

std::vector<VertexPair> LineFamily::good_pairs() const {
  std::vector<VertexPair> out;
  const int n = graph_.order();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (good(u, v)) out.push_back({u, v});
  return out;
}

}  // namespace hhlines
