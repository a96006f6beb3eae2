#include "hhlines/relations.hpp"

#include <algorithm>

#include "hhlines/metric_lines.hpp"

namespace hhlines {
namespace {

bool parallelogram_unchecked(const DistanceMatrix& dm, Vertex a, Vertex b, Vertex c, Vertex d) {
  return is_between(dm, b, a, c) && is_between(dm, c, b, d) && is_between(dm, d, c, a) && is_between(dm, a, d, b);
}

bool distinct4(Vertex a, Vertex b, Vertex c, Vertex d) {
  return VertexSet::of({a, b, c, d}).size() == 4;
}

}  // namespace

bool is_parallelogram(const DistanceMatrix& dm, Vertex a, Vertex b, Vertex c, Vertex d) {
  if (!distinct4(a, b, c, d)) throw Error(ErrorKind::NotDistinct, "parallelogram vertices must be distinct");
  return parallelogram_unchecked(dm, a, b, c, d);
}

std::optional<Ordering> alpha_related(const DistanceMatrix& dm, VertexPair p, VertexPair q) {
  Ordering t = (p.as_set() | q.as_set()).to_vector();
  do {
    int walk = 0;
    for (std::size_t i = 0; i + 1 < t.size(); ++i) walk += dm(t[i], t[i + 1]);
    if (walk == dm(t.front(), t.back())) return t;
  } while (std::next_permutation(t.begin(), t.end()));
  return std::nullopt;
}

std::optional<Ordering> beta_related(const Graph& g, const DistanceMatrix& dm, VertexPair p, VertexPair q) {
  if (!g.adjacent(p.u, p.v) || !g.adjacent(q.u, q.v)) return std::nullopt;
  if (!distinct4(p.u, p.v, q.u, q.v)) return std::nullopt;
  if (parallelogram_unchecked(dm, p.u, p.v, q.u, q.v)) return Ordering{p.u, p.v, q.u, q.v};
  if (parallelogram_unchecked(dm, p.u, p.v, q.v, q.u)) return Ordering{p.u, p.v, q.v, q.u};
  return std::nullopt;
}

std::optional<Ordering> gamma_related(const Graph& /*g*/, const DistanceMatrix& dm, VertexPair p, VertexPair q) {
  if (!distinct4(p.u, p.v, q.u, q.v)) return std::nullopt;
  if (!parallelogram_unchecked(dm, p.u, q.u, p.v, q.v)) return std::nullopt;
  const VertexSet span = interval(dm, p.u, p.v);
  if (line_members(dm, p.u, p.v) != span) return std::nullopt;
  if (interval(dm, q.u, q.v) != span) return std::nullopt;
  if (line_members(dm, q.u, q.v) != span) return std::nullopt;
  return Ordering{p.u, q.u, p.v, q.v};
}

std::string_view to_string(RelationTag tag) {
  switch (tag) {
    case RelationTag::Alpha: return "alpha";
    case RelationTag::Beta: return "beta";
    case RelationTag::Gamma: return "gamma";
    case RelationTag::None: return "none";
  }
  return "none";
}

RelationKind classify_relation(const Graph& g, const DistanceMatrix& dm, VertexPair p, VertexPair q) {
  if (auto w = alpha_related(dm, p, q)) return {RelationTag::Alpha, std::move(*w)};
  if (auto w = beta_related(g, dm, p, q)) return {RelationTag::Beta, std::move(*w)};
  if (auto w = gamma_related(g, dm, p, q)) return {RelationTag::Gamma, std::move(*w)};
  return {};
}

}  // namespace hhlines
