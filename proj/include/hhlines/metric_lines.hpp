#pragma once

#include <map>
#include <optional>
#include <vector>

#include "hhlines/graph.hpp"

namespace hhlines {

/// d(u,v) = d(u,z) + d(z,v).
inline bool is_between(const DistanceMatrix& dm, Vertex z, Vertex u, Vertex v) {
  return dm(u, v) == dm(u, z) + dm(z, v);
}

/// One of u, v, z lies between the other two.
inline bool collinear(const DistanceMatrix& dm, Vertex u, Vertex v, Vertex z) {
  return is_between(dm, z, u, v) || is_between(dm, u, z, v) || is_between(dm, v, u, z);
}

/// I(u,v): every vertex between u and v, endpoints included.
VertexSet interval(const DistanceMatrix& dm, Vertex u, Vertex v);

/// Members of the line through u and v. No check on u != v.
VertexSet line_members(const DistanceMatrix& dm, Vertex u, Vertex v);

struct Line {
  VertexSet members;
  /// Pairs known to generate `members`, sorted.
  std::vector<VertexPair> generators;
};

/// Throws Error{DegeneratePair} when u == v.
Line line(const DistanceMatrix& dm, Vertex u, Vertex v);

bool is_universal_line(const Graph& g, const Line& ln);

/// Distance exactly 2 with a common neighbour z whose lines to u and to v coincide.
bool is_good_pair(const Graph& g, const DistanceMatrix& dm, Vertex u, Vertex v);

/// Lexicographically least edge whose line is V.
std::optional<VertexPair> universal_edge_exists(const Graph& g);
/// Lexicographically least pair at distance 2 whose line is V.
std::optional<VertexPair> universal_2pair_exists(const Graph& g);

enum class Family { L1, L2, Other };

/// A distinct line together with everything the proof needs to know about
/// how it is generated.
struct FamilyLine {
  Line line;
  /// Generators at distance 1 (edges) and good-pair generators.
  std::vector<VertexPair> edge_generators;
  std::vector<VertexPair> good_generators;
  bool has_2pair_generator = false;
  bool universal = false;

  bool in_l1() const { return !edge_generators.empty(); }
  bool in_l2() const { return !good_generators.empty(); }
  /// L1 takes precedence for display when a line belongs to both families.
  Family family() const { return in_l1() ? Family::L1 : in_l2() ? Family::L2 : Family::Other; }
};

/// Every line of a connected graph, keyed by member set, with L1 / L2 tagging.
/// Holds its own copy of the graph and distances.
class LineFamily {
 public:
  /// Throws Error{Disconnected}; requires n >= 2 for a nonempty family.
  explicit LineFamily(const Graph& g);

  const Graph& graph() const { return graph_; }
  const DistanceMatrix& distances() const { return dm_; }

  const std::map<VertexSet, FamilyLine>& lines() const { return lines_; }
  const FamilyLine& at(VertexSet members) const { return lines_.at(members); }
  std::size_t distinct() const { return lines_.size(); }

  /// Member sets of L1 / L2 lines in increasing order.
  std::vector<VertexSet> l1() const;
  std::vector<VertexSet> l2() const;
  std::size_t l1_size() const { return l1().size(); }
  std::size_t l2_size() const { return l2().size(); }

  VertexSet line_of(Vertex u, Vertex v) const { return pair_line_[index(u, v)]; }
  bool good(Vertex u, Vertex v) const { return good_[index(u, v)]; }

  bool has_universal_line() const { return lines_.contains(graph_.vertices()); }
  std::optional<VertexPair> universal_edge() const;
  std::optional<VertexPair> universal_2pair() const;

  /// All good pairs, sorted.
  std::vector<VertexPair> good_pairs() const;

 private:
  std::size_t index(Vertex u, Vertex v) const { return static_cast<std::size_t>(u) * graph_.order() + v; }

  Graph graph_;
  DistanceMatrix dm_;
  std::vector<VertexSet> pair_line_;
  std::vector<bool> good_;
  std::map<VertexSet, FamilyLine> lines_;
};

inline LineFamily all_lines(const Graph& g) { return LineFamily(g); }

}  // namespace hhlines
