#include "hhlines/structure.hpp"

#include <algorithm>
#include <functional>

namespace hhlines {
namespace {

// Induced degree of every member of s is exactly 2.
bool two_regular(const Graph& g, VertexSet s) {
  for (Vertex v : s)
    if ((g.neighbors(v) & s).size() != 2) return false;
  return true;
}

std::array<Vertex, 4> orient_c4(const Graph& g, VertexSet s) {
  const Vertex x0 = s.first();
  const VertexSet nb = g.neighbors(x0) & s;
  const Vertex x1 = nb.first();
  const Vertex x3 = nb.without(x1).first();
  const Vertex x2 = (s - nb).without(x0).first();
  return {x0, x1, x2, x3};
}

bool induces_c4(const Graph& g, VertexSet s) { return s.size() == 4 && two_regular(g, s); }

// Hole search state: extend `chosen` with vertices >= next, all chosen
// vertices keep induced degree <= 2.
bool extend_hole(const Graph& g, int target, Vertex next, VertexSet chosen, VertexSet& found) {
  if (chosen.size() == target) {
    if (two_regular(g, chosen) && g.component(chosen.first(), chosen) == chosen) {
      found = chosen;
      return true;
    }
    return false;
  }
  const int missing = target - chosen.size();
  for (Vertex v = next; v <= g.order() - missing; ++v) {
    const VertexSet into = g.neighbors(v) & chosen;
    if (into.size() > 2) continue;
    bool ok = true;
    for (Vertex w : into)
      if ((g.neighbors(w) & chosen).size() >= 2) {
        ok = false;
        break;
      }
    if (!ok) continue;
    if (extend_hole(g, target, v + 1, chosen.with(v), found)) return true;
  }
  return false;
}

}  // namespace

bool lex_less(VertexSet a, VertexSet b) {
  const auto va = a.to_vector();
  const auto vb = b.to_vector();
  return std::lexicographical_compare(va.begin(), va.end(), vb.begin(), vb.end());
}

std::optional<VertexSet> find_house(const Graph& g) {
  const int n = g.order();
  // Degree sequence (2,2,2,3,3) with the two degree-3 vertices adjacent
  // characterizes the house; K_{2,3} shares the sequence but not the edge.
  auto is_house = [&](VertexSet s) {
    int deg3 = 0;
    Vertex a = -1, b = -1;
    for (Vertex v : s) {
      const int d = (g.neighbors(v) & s).size();
      if (d == 3) {
        (a < 0 ? a : b) = v;
        ++deg3;
      } else if (d != 2) {
        return false;
      }
    }
    return deg3 == 2 && g.adjacent(a, b);
  };
  std::function<std::optional<VertexSet>(int, Vertex, VertexSet)> rec =
      [&](int depth, Vertex from, VertexSet s) -> std::optional<VertexSet> {
    if (depth == 5) return is_house(s) ? std::optional<VertexSet>(s) : std::nullopt;
    for (Vertex v = from; v <= n - (5 - depth); ++v) {
      const VertexSet t = s.with(v);
      // a house has maximum degree 3
      if ((g.neighbors(v) & t).size() > 3) continue;
      if (auto hit = rec(depth + 1, v + 1, t)) return hit;
    }
    return std::nullopt;
  };
  return rec(0, 0, VertexSet{});
}

std::optional<VertexSet> find_hole(const Graph& g) {
  if (g.order() > kHoleSearchLimit)
    throw Error(ErrorKind::ScaleLimit, "hole search limited to " + std::to_string(kHoleSearchLimit) + " vertices");
  for (int size = 5; size <= g.order(); ++size) {
    VertexSet found;
    if (extend_hole(g, size, 0, VertexSet{}, found)) return found;
  }
  return std::nullopt;
}

bool is_hh_free(const Graph& g) { return !find_house(g) && !find_hole(g); }

bool is_c4_module(const Graph& g, VertexSet s) {
  if (!induces_c4(g, s)) return false;
  for (Vertex z : g.vertices() - s) {
    const VertexSet seen = g.neighbors(z) & s;
    if (!seen.empty() && seen != s) return false;
  }
  return true;
}

std::vector<std::array<Vertex, 4>> induced_c4s(const Graph& g) {
  std::vector<std::array<Vertex, 4>> out;
  const int n = g.order();
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c)
        for (Vertex d = c + 1; d < n; ++d) {
          const VertexSet s = VertexSet::of({a, b, c, d});
          if (induces_c4(g, s)) out.push_back(orient_c4(g, s));
        }
  return out;
}

std::vector<C4Module> find_c4_modules(const Graph& g) {
  std::vector<C4Module> out;
  for (const auto& c : induced_c4s(g))
    if (is_c4_module(g, VertexSet::of(c))) out.push_back({c});
  return out;
}

std::optional<C4Module> find_c4_module(const Graph& g) {
  const int n = g.order();
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c)
        for (Vertex d = c + 1; d < n; ++d) {
          const VertexSet s = VertexSet::of({a, b, c, d});
          if (is_c4_module(g, s)) return C4Module{orient_c4(g, s)};
        }
  return std::nullopt;
}

ReductionTrace reduce_c4_modules(const Graph& g) {
  if (!g.is_connected()) throw Error(ErrorKind::Disconnected, "reduction requires a connected graph");
  ReductionTrace trace{g, {}, {g.vertices()}};
  for (;;) {
    const VertexSet current = trace.stages.back();
    const std::vector<Vertex> labels = current.to_vector();
    const Graph h = induced_subgraph(g, current);
    const auto module = find_c4_module(h);
    if (!module) break;
    C4Module original{};
    for (int i = 0; i < 4; ++i) original.cycle[i] = labels[module->cycle[i]];
    const Vertex x0 = original.cycle[0];
    const VertexSet next = current.without(x0);
    if (g.component(next.first(), next) != next)
      throw Error(ErrorKind::DisconnectedAfterRemoval,
                  "removing vertex " + std::to_string(x0) + " of a C4-module disconnected the graph");
    trace.removed.push_back({x0, original});
    trace.stages.push_back(next);
  }
  return trace;
}

bool roof_hypotheses_hold(const Graph& g, std::span<const Vertex> cycle) {
  const std::size_t k = cycle.size();
  if (k < 5) return false;
  VertexSet members;
  for (Vertex v : cycle) {
    if (v < 0 || v >= g.order() || members.contains(v)) return false;
    members.insert(v);
  }
  for (std::size_t i = 0; i < k; ++i)
    if (!g.adjacent(cycle[i], cycle[(i + 1) % k])) return false;
  const Vertex x1 = cycle[0], x2 = cycle[1], x3 = cycle[2], xk = cycle[k - 1];
  if (!g.adjacent(x2, xk)) return false;
  if ((g.neighbors(x1) & members) != VertexSet::of({x2, xk})) return false;
  if ((g.neighbors(x2) & members) != VertexSet::of({x1, x3, xk})) return false;
  return true;
}

bool check_roof(const Graph& g, std::span<const Vertex> cycle) {
  if (!roof_hypotheses_hold(g, cycle)) throw Error(ErrorKind::PreconditionUnmet, "roof hypotheses fail on cycle");
  if (!is_hh_free(g)) throw Error(ErrorKind::PreconditionUnmet, "graph contains a house or a hole");
  return g.adjacent(cycle[2], cycle.back());
}

RoofSearch search_roof_cycles(const Graph& g) {
  RoofSearch result;
  const int n = g.order();
  for (Vertex x1 = 0; x1 < n; ++x1)
    for (Vertex x2 : g.neighbors(x1))
      for (Vertex xk : g.neighbors(x1) & g.neighbors(x2)) {
        const VertexSet blocked = g.neighbors(x1) | g.neighbors(x2) | VertexSet::of({x1, x2, xk});
        for (Vertex x3 : (g.neighbors(x2) - g.neighbors(x1)).without(x1).without(xk)) {
          const bool roof = g.adjacent(x3, xk);
          if (result.instance && (roof || result.violation)) continue;
          // BFS from x3 through vertices outside the blocked set towards N(xk).
          const VertexSet allowed = g.vertices() - blocked - VertexSet::single(x3);
          std::vector<Vertex> parent(n, -1);
          VertexSet seen = VertexSet::single(x3);
          VertexSet frontier = seen;
          Vertex target = -1;
          while (!frontier.empty() && target < 0) {
            VertexSet next;
            for (Vertex v : frontier)
              for (Vertex w : (g.neighbors(v) & allowed) - seen - next) {
                parent[w] = v;
                next.insert(w);
              }
            seen |= next;
            frontier = next;
            const VertexSet hit = next & g.neighbors(xk);
            if (!hit.empty()) target = hit.first();
          }
          if (target < 0) continue;
          std::vector<Vertex> tail;
          for (Vertex v = target; v != x3; v = parent[v]) tail.push_back(v);
          std::vector<Vertex> cyc{x1, x2, x3};
          cyc.insert(cyc.end(), tail.rbegin(), tail.rend());
          cyc.push_back(xk);
          if (!result.instance) result.instance = cyc;
          if (!roof && !result.violation) result.violation = cyc;
          if (result.violation) return result;
        }
      }
  return result;
}

std::optional<C4DistanceCounterexample> find_c4_distance_counterexample(const Graph& g, const DistanceMatrix& dm) {
  for (const auto& c : induced_c4s(g))
    for (Vertex z = 0; z < g.order(); ++z)
      for (int i = 0; i < 4; ++i) {
        const Vertex a = c[i], b = c[(i + 1) % 4];
        const int k = dm(z, a);
        if (dm(z, b) != k) continue;
        if (std::min(dm(z, c[(i + 2) % 4]), dm(z, c[(i + 3) % 4])) > k)
          return C4DistanceCounterexample{c, z, k};
      }
  return std::nullopt;
}

}  // namespace hhlines
