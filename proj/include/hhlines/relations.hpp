#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "hhlines/graph.hpp"

namespace hhlines {

/// (a,b,c,d) with b in I(a,c), c in I(b,d), d in I(c,a) and a in I(d,b).
/// Throws Error{NotDistinct} unless the four vertices are pairwise distinct.
bool is_parallelogram(const DistanceMatrix& dm, Vertex a, Vertex b, Vertex c, Vertex d);

/// Vertex order along a shortest path through the union of two pairs
/// (2 to 4 vertices).
using Ordering = std::vector<Vertex>;

/// Least ordering (t1..tm) of p ∪ q with d(t1,tm) equal to the sum of the
/// consecutive distances, i.e. a shortest path visiting all of them.
std::optional<Ordering> alpha_related(const DistanceMatrix& dm, VertexPair p, VertexPair q);

/// Both pairs edges and (u,v,x,y) or (u,v,y,x) a parallelogram.
std::optional<Ordering> beta_related(const Graph& g, const DistanceMatrix& dm, VertexPair p, VertexPair q);

/// (u,x,v,y) a parallelogram and line(u,v) = I(u,v) = I(x,y) = line(x,y).
std::optional<Ordering> gamma_related(const Graph& g, const DistanceMatrix& dm, VertexPair p, VertexPair q);

enum class RelationTag { Alpha, Beta, Gamma, None };

std::string_view to_string(RelationTag tag);

struct RelationKind {
  RelationTag tag = RelationTag::None;
  Ordering witness;
};

/// First of Alpha, Beta, Gamma that holds.
RelationKind classify_relation(const Graph& g, const DistanceMatrix& dm, VertexPair p, VertexPair q);

}  // namespace hhlines
