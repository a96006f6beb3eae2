#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hhlines/error.hpp"
#include "hhlines/vertex_set.hpp"

namespace hhlines {

/// Simple undirected graph on vertices 0..n-1, n <= 64, adjacency as bitsets.
/// Immutable once built. May be disconnected; metric operations check.
class Graph {
 public:
  /// Throws Error{TooLarge} for n outside 1..64, Error{SelfLoop} for a loop.
  /// Duplicate edges are merged.
  Graph(int n, std::span<const VertexPair> edges);
  Graph(int n, std::initializer_list<VertexPair> edges);
  /// Edgeless graph on n vertices.
  explicit Graph(int n) : Graph(n, std::span<const VertexPair>{}) {}

  /// Adjacency rows must be symmetric and irreflexive.
  static Graph from_adjacency(std::span<const VertexSet> rows);

  int order() const { return n_; }
  VertexSet vertices() const { return VertexSet::range(n_); }
  VertexSet neighbors(Vertex v) const { return adj_[v]; }
  bool adjacent(Vertex u, Vertex v) const { return adj_[u].contains(v); }
  int degree(Vertex v) const { return adj_[v].size(); }
  int edge_count() const;
  /// Edges sorted lexicographically.
  std::vector<VertexPair> edges() const;
  bool is_connected() const;
  /// Set of vertices reachable from `start` inside `within`.
  VertexSet component(Vertex start, VertexSet within) const;

  bool operator==(const Graph& other) const;

 private:
  Graph() = default;
  void check_order(int n);

  int n_ = 0;
  std::array<VertexSet, kMaxVertices> adj_{};
};

/// Graph induced on `subset`, relabeled 0..|subset|-1 in increasing order.
/// Throws Error{EmptySet}.
Graph induced_subgraph(const Graph& g, VertexSet subset);

/// Graph with the same adjacency under `relabel`: vertex v becomes relabel[v].
Graph permute(const Graph& g, std::span<const Vertex> relabel);

/// { w : wu and wv are both edges }.
VertexSet common_neighbors(const Graph& g, Vertex u, Vertex v);

/// All-pairs shortest-path lengths of a connected graph.
class DistanceMatrix {
 public:
  int order() const { return n_; }
  int operator()(Vertex u, Vertex v) const { return d_[static_cast<std::size_t>(u) * n_ + v]; }
  /// Vertices at exactly distance k from v.
  VertexSet sphere(Vertex v, int k) const;
  int diameter() const;

  bool operator==(const DistanceMatrix&) const = default;

 private:
  friend DistanceMatrix apsp(const Graph& g);
  int n_ = 0;
  std::vector<std::uint8_t> d_;
};

/// BFS from every vertex. Throws Error{Disconnected}.
DistanceMatrix apsp(const Graph& g);

// Named fixtures used throughout tests and the CLI.
namespace graphs {
Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph house();
Graph petersen();
/// Two disjoint 4-cycles plus a vertex adjacent to all eight (9 vertices).
Graph two_c4_plus_apex();
}  // namespace graphs

}  // namespace hhlines
