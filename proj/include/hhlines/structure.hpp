#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "hhlines/graph.hpp"

namespace hhlines {

/// Lexicographic order on the sorted vertex lists of two sets.
bool lex_less(VertexSet a, VertexSet b);

/// Lexicographically least 5-subset inducing a house (5-cycle plus one chord).
std::optional<VertexSet> find_house(const Graph& g);

/// Vertex count above which hole search by subset enumeration is refused.
inline constexpr int kHoleSearchLimit = 24;

/// Smallest induced chordless cycle of length >= 5 (ties broken
/// lexicographically), or nothing. Throws Error{ScaleLimit} for n > 24.
std::optional<VertexSet> find_hole(const Graph& g);

bool is_hh_free(const Graph& g);

/// Induced 4-cycle (x0,x1,x2,x3) in cyclic order that every other vertex sees
/// completely or not at all. x0 is the least vertex, x1 < x3.
struct C4Module {
  std::array<Vertex, 4> cycle{};

  VertexSet vertices() const { return VertexSet::of(cycle); }
  bool operator==(const C4Module&) const = default;
};

/// True if `s` (4 vertices) induces a C4 and is a module.
bool is_c4_module(const Graph& g, VertexSet s);

/// Lexicographically least C4-module by vertex set.
std::optional<C4Module> find_c4_module(const Graph& g);
std::vector<C4Module> find_c4_modules(const Graph& g);

struct ReductionStep {
  /// Original labels of the removed vertex and its module.
  Vertex vertex;
  C4Module module;
};

struct ReductionTrace {
  Graph original;
  std::vector<ReductionStep> removed;
  /// Original labels still present after each step (stages[0] = all).
  std::vector<VertexSet> stages;

  VertexSet remaining() const { return stages.back(); }
  /// Irreducible residue, relabeled 0..k-1 in increasing original order.
  Graph result() const { return induced_subgraph(original, remaining()); }
  Graph stage_graph(std::size_t i) const { return induced_subgraph(original, stages[i]); }
  /// residue vertex -> original label
  std::vector<Vertex> result_labels() const { return remaining().to_vector(); }
};

/// Repeatedly deletes x0 of the least C4-module until none remains.
/// Throws Error{Disconnected} on disconnected input and
/// Error{DisconnectedAfterRemoval} if a removal disconnects the graph.
ReductionTrace reduce_c4_modules(const Graph& g);

/// Hypotheses of the roof statement for `cycle` = (x1, ..., xk), k >= 5:
/// consecutive vertices adjacent (cyclically), x2xk an edge, x1 adjacent only
/// to x2 and xk in the cycle, x2 adjacent only to x1, x3 and xk.
bool roof_hypotheses_hold(const Graph& g, std::span<const Vertex> cycle);

/// Whether x3xk is an edge. Throws Error{PreconditionUnmet} when the graph is
/// not house/hole-free or the cycle fails roof_hypotheses_hold.
bool check_roof(const Graph& g, std::span<const Vertex> cycle);

struct RoofSearch {
  /// Some hypothesis-satisfying cycle, if any exists.
  std::optional<std::vector<Vertex>> instance;
  /// A hypothesis-satisfying cycle with x3xk missing, if any exists.
  std::optional<std::vector<Vertex>> violation;
};

/// Exhaustive search over all roof configurations of g.
RoofSearch search_roof_cycles(const Graph& g);

struct C4DistanceCounterexample {
  std::array<Vertex, 4> cycle;
  Vertex z;
  int k;
};

/// For every induced C4, vertex z and consecutive pair at common distance k
/// from z, one of the two other cycle vertices is within distance k of z.
/// Returns the first counterexample.
std::optional<C4DistanceCounterexample> find_c4_distance_counterexample(const Graph& g, const DistanceMatrix& dm);

inline bool check_c4_distance_lemma(const Graph& g, const DistanceMatrix& dm) {
  return !find_c4_distance_counterexample(g, dm).has_value();
}

/// Induced 4-cycles in cyclic order, sorted by vertex set.
std::vector<std::array<Vertex, 4>> induced_c4s(const Graph& g);

}  // namespace hhlines
