#include "hhlines/graph.hpp"

#include <algorithm>
#include <string>

namespace hhlines {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedEncoding: return "MalformedEncoding";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::NonInteger: return "NonInteger";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::EmptySet: return "EmptySet";
    case ErrorKind::DegeneratePair: return "DegeneratePair";
    case ErrorKind::NotDistinct: return "NotDistinct";
    case ErrorKind::ScaleLimit: return "ScaleLimit";
    case ErrorKind::PreconditionUnmet: return "PreconditionUnmet";
    case ErrorKind::DisconnectedAfterRemoval: return "DisconnectedAfterRemoval";
    case ErrorKind::StructureViolation: return "StructureViolation";
    case ErrorKind::NoCommonVertex: return "NoCommonVertex";
    case ErrorKind::TwoOutsideC: return "TwoOutsideC";
  }
  return "Unknown";
}

void Graph::check_order(int n) {
  if (n < 1 || n > kMaxVertices)
    throw Error(ErrorKind::TooLarge, "vertex count " + std::to_string(n) + " outside 1..64");
  n_ = n;
}

Graph::Graph(int n, std::span<const VertexPair> edges) {
  check_order(n);
  for (const VertexPair& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
      throw Error(ErrorKind::TooLarge, "edge endpoint outside 0.." + std::to_string(n - 1));
    if (e.u == e.v) throw Error(ErrorKind::SelfLoop, "self-loop at vertex " + std::to_string(e.u));
    adj_[e.u].insert(e.v);
    adj_[e.v].insert(e.u);
  }
}

Graph::Graph(int n, std::initializer_list<VertexPair> edges)
    : Graph(n, std::span<const VertexPair>(edges.begin(), edges.size())) {}

Graph Graph::from_adjacency(std::span<const VertexSet> rows) {
  Graph g;
  g.check_order(static_cast<int>(rows.size()));
  const VertexSet all = g.vertices();
  for (int v = 0; v < g.n_; ++v) {
    if (rows[v].contains(v)) throw Error(ErrorKind::SelfLoop, "self-loop at vertex " + std::to_string(v));
    if (!rows[v].subset_of(all)) throw Error(ErrorKind::TooLarge, "adjacency row references missing vertex");
    for (Vertex w : rows[v])
      if (!rows[w].contains(v)) throw Error(ErrorKind::MalformedEncoding, "adjacency is not symmetric");
    g.adj_[v] = rows[v];
  }
  return g;
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += adj_[v].size();
  return twice / 2;
}

std::vector<VertexPair> Graph::edges() const {
  std::vector<VertexPair> out;
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.push_back({u, v});
  return out;
}

VertexSet Graph::component(Vertex start, VertexSet within) const {
  VertexSet seen = VertexSet::single(start);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (Vertex v : frontier) next |= adj_[v];
    next = (next & within) - seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

bool Graph::is_connected() const { return component(0, vertices()) == vertices(); }

bool Graph::operator==(const Graph& other) const {
  return n_ == other.n_ && std::equal(adj_.begin(), adj_.begin() + n_, other.adj_.begin());
}

Graph induced_subgraph(const Graph& g, VertexSet subset) {
  if (subset.empty()) throw Error(ErrorKind::EmptySet, "induced subgraph of the empty set");
  std::vector<Vertex> index(g.order(), -1);
  int next = 0;
  for (Vertex v : subset) index[v] = next++;
  std::vector<VertexSet> rows(next);
  for (Vertex v : subset)
    for (Vertex w : g.neighbors(v) & subset) rows[index[v]].insert(index[w]);
  return Graph::from_adjacency(rows);
}

Graph permute(const Graph& g, std::span<const Vertex> relabel) {
  std::vector<VertexSet> rows(g.order());
  for (Vertex v = 0; v < g.order(); ++v)
    for (Vertex w : g.neighbors(v)) rows[relabel[v]].insert(relabel[w]);
  return Graph::from_adjacency(rows);
}

VertexSet common_neighbors(const Graph& g, Vertex u, Vertex v) { return g.neighbors(u) & g.neighbors(v); }

VertexSet DistanceMatrix::sphere(Vertex v, int k) const {
  VertexSet s;
  for (Vertex w = 0; w < n_; ++w)
    if ((*this)(v, w) == k) s.insert(w);
  return s;
}

int DistanceMatrix::diameter() const {
  return d_.empty() ? 0 : *std::max_element(d_.begin(), d_.end());
}

DistanceMatrix apsp(const Graph& g) {
  const int n = g.order();
  DistanceMatrix dm;
  dm.n_ = n;
  dm.d_.assign(static_cast<std::size_t>(n) * n, 0);
  for (Vertex s = 0; s < n; ++s) {
    VertexSet seen = VertexSet::single(s);
    VertexSet frontier = seen;
    int depth = 0;
    while (!frontier.empty()) {
      ++depth;
      VertexSet next;
      for (Vertex v : frontier) next |= g.neighbors(v);
      next -= seen;
      for (Vertex v : next) dm.d_[static_cast<std::size_t>(s) * n + v] = static_cast<std::uint8_t>(depth);
      seen |= next;
      frontier = next;
    }
    if (seen != g.vertices())
      throw Error(ErrorKind::Disconnected,
                  "vertex " + std::to_string((g.vertices() - seen).first()) + " unreachable from " +
                      std::to_string(s));
  }
  return dm;
}

namespace graphs {

Graph path(int n) {
  std::vector<VertexPair> e;
  for (Vertex v = 0; v + 1 < n; ++v) e.push_back({v, v + 1});
  return Graph(n, e);
}

Graph cycle(int n) {
  std::vector<VertexPair> e;
  for (Vertex v = 0; v < n; ++v) e.push_back(VertexPair::of(v, (v + 1) % n));
  return Graph(n, e);
}

Graph complete(int n) {
  std::vector<VertexPair> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) e.push_back({u, v});
  return Graph(n, e);
}

Graph house() {
  // 4-cycle 0-1-2-3 with roof vertex 4 on edge 2-3.
  return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {2, 4}, {3, 4}});
}

Graph petersen() {
  std::vector<VertexPair> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.push_back(VertexPair::of(i, (i + 1) % 5));
    e.push_back(VertexPair::of(i, i + 5));
    e.push_back(VertexPair::of(5 + i, 5 + (i + 2) % 5));
  }
  return Graph(10, e);
}

Graph two_c4_plus_apex() {
  std::vector<VertexPair> e;
  for (Vertex base : {0, 4})
    for (Vertex i = 0; i < 4; ++i) e.push_back(VertexPair::of(base + i, base + (i + 1) % 4));
  for (Vertex v = 0; v < 8; ++v) e.push_back({v, 8});
  return Graph(9, e);
}

}  // namespace graphs

}  // namespace hhlines
