#include "hhlines/verifier.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <optional>

#include "hhlines/discharging.hpp"
#include "hhlines/graph_io.hpp"
#include "hhlines/json_report.hpp"
#include "hhlines/relations.hpp"
#include "hhlines/structure.hpp"

namespace hhlines {

using nlohmann::json;

namespace {

CheckOutcome pass(std::string name, json witness = nullptr) { return {std::move(name), Status::Pass, std::move(witness)}; }
CheckOutcome fail(std::string name, json witness) { return {std::move(name), Status::Fail, std::move(witness)}; }
CheckOutcome skip(std::string name, std::string reason) {
  return {std::move(name), Status::Skipped, json{{"reason", std::move(reason)}}};
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

// Everything the lemma checks share for one graph.
struct SuiteContext {
  const LineFamily& fam;
  const Graph& g;
  const DistanceMatrix& dm;
  bool house_free;
  bool hole_free;
  bool hh_free;
  bool universal_edge;
  bool c4_module;
};

// Runs `body` for every unordered pair of distinct generators in `gens`.
template <class Body>
std::optional<json> first_pair_failure(const std::vector<VertexPair>& gens, Body body) {
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (auto w = body(gens[i], gens[j])) return w;
  return std::nullopt;
}

CheckOutcome obs_distance(const SuiteContext& c) {
  const int n = c.g.order();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      for (Vertex z : c.g.vertices() - c.fam.line_of(u, v))
        if (std::abs(c.dm(z, u) - c.dm(z, v)) > c.dm(u, v) - 1)
          return fail("obs_distance", {{"pair", {u, v}}, {"z", z}});
  return pass("obs_distance");
}

CheckOutcome lem_distgood(const SuiteContext& c) {
  for (const VertexPair& p : c.fam.good_pairs())
    for (Vertex z : c.g.vertices() - c.fam.line_of(p.u, p.v))
      if (c.dm(z, p.u) != c.dm(z, p.v)) return fail("lem_distgood", {{"pair", to_json(p)}, {"z", z}});
  return pass("lem_distgood");
}

CheckOutcome lem_eqgood(const SuiteContext& c) {
  for (const VertexPair& p : c.fam.good_pairs())
    for (Vertex m : common_neighbors(c.g, p.u, p.v))
      if (c.fam.line_of(m, p.u) != c.fam.line_of(m, p.v))
        return fail("lem_eqgood", {{"pair", to_json(p)}, {"middle", m}});
  return pass("lem_eqgood");
}

CheckOutcome lem_1line(const SuiteContext& c) {
  if (!c.hh_free) return skip("lem_1line", "graph contains a house or a hole");
  for (const VertexPair& e : c.g.edges())
    for (Vertex z : c.g.vertices() - c.fam.line_of(e.u, e.v)) {
      const VertexSet w = common_neighbors(c.g, e.u, e.v) & interval(c.dm, z, e.u) & interval(c.dm, z, e.v);
      if (w.empty()) return fail("lem_1line", {{"edge", to_json(e)}, {"z", z}});
    }
  return pass("lem_1line");
}

CheckOutcome lem_2line(const SuiteContext& c) {
  if (!c.hole_free) return skip("lem_2line", "graph contains a hole");
  for (const VertexPair& p : c.fam.good_pairs())
    for (Vertex z : c.g.vertices() - c.fam.line_of(p.u, p.v)) {
      const VertexSet w = common_neighbors(c.g, p.u, p.v) & interval(c.dm, z, p.u) & interval(c.dm, z, p.v);
      if (w.empty()) return fail("lem_2line", {{"pair", to_json(p)}, {"z", z}});
    }
  return pass("lem_2line");
}

CheckOutcome lem_roof(const SuiteContext& c) {
  if (!c.hh_free) return skip("lem_roof", "graph contains a house or a hole");
  const RoofSearch search = search_roof_cycles(c.g);
  if (search.violation) return fail("lem_roof", {{"cycle", *search.violation}});
  if (!search.instance) return pass("lem_roof", {{"vacuous", true}});
  return pass("lem_roof", {{"vacuous", false}});
}

CheckOutcome lem_c4(const SuiteContext& c) {
  if (!c.hh_free) return skip("lem_c4", "graph contains a house or a hole");
  if (auto ce = find_c4_distance_counterexample(c.g, c.dm))
    return fail("lem_c4", {{"cycle", ce->cycle}, {"z", ce->z}, {"k", ce->k}});
  return pass("lem_c4");
}

CheckOutcome prop_eqlines1(const SuiteContext& c) {
  if (!c.hh_free) return skip("prop_eqlines1", "graph contains a house or a hole");
  for (const auto& [members, entry] : c.fam.lines()) {
    if (entry.universal) continue;
    auto bad = first_pair_failure(entry.edge_generators, [&](VertexPair e, VertexPair f) -> std::optional<json> {
      const VertexSet s = e.as_set() | f.as_set();
      const json w{{"edges", {to_json(e), to_json(f)}}, {"line", to_json(members)}};
      if (s.size() == 3) {
        // The two non-shared endpoints must be non-adjacent.
        const VertexSet ends = e.as_set() ^ f.as_set();
        if (c.g.adjacent(ends.first(), ends.without(ends.first()).first())) return w;
        return std::nullopt;
      }
      const auto c4s = induced_c4s(induced_subgraph(c.g, s));
      if (c4s.empty()) return w;
      const std::vector<Vertex> label = s.to_vector();
      const auto& cyc = c4s.front();
      for (int i = 0; i < 4; ++i)
        if (c.fam.line_of(label[cyc[i]], label[cyc[(i + 1) % 4]]) != members) return w;
      return std::nullopt;
    });
    if (bad) return fail("prop_eqlines1", *bad);
  }
  return pass("prop_eqlines1");
}

CheckOutcome coro_bipl1(const SuiteContext& c) {
  if (!c.hh_free) return skip("coro_bipl1", "graph contains a house or a hole");
  for (const auto& [members, entry] : c.fam.lines()) {
    if (!entry.in_l1() || entry.universal) continue;
    const auto sides = l1_generator_bipartition(c.fam, members);
    if (!sides) return fail("coro_bipl1", {{"line", to_json(members)}, {"violation", to_json(sides.violation())}});
  }
  return pass("coro_bipl1");
}

CheckOutcome prop_gammal2(const SuiteContext& c) {
  if (!c.hh_free) return skip("prop_gammal2", "graph contains a house or a hole");
  for (const auto& [members, entry] : c.fam.lines()) {
    auto bad = first_pair_failure(entry.good_generators, [&](VertexPair p, VertexPair q) -> std::optional<json> {
      const auto w = gamma_related(c.g, c.dm, p, q);
      if (w && !is_c4_module(c.g, p.as_set() | q.as_set()))
        return json{{"pairs", {to_json(p), to_json(q)}}, {"parallelogram", *w}};
      return std::nullopt;
    });
    if (bad) return fail("prop_gammal2", *bad);
  }
  return pass("prop_gammal2");
}

CheckOutcome prop_alphal2(const SuiteContext& c) {
  if (!c.hh_free) return skip("prop_alphal2", "graph contains a house or a hole");
  if (c.universal_edge) return skip("prop_alphal2", "graph has a universal edge");
  for (const auto& [members, entry] : c.fam.lines()) {
    if (entry.universal) continue;
    auto bad = first_pair_failure(entry.good_generators, [&](VertexPair p, VertexPair q) -> std::optional<json> {
      const auto w = alpha_related(c.dm, p, q);
      if (w && (p.as_set() | q.as_set()).size() != 3)
        return json{{"pairs", {to_json(p), to_json(q)}}, {"path", *w}};
      return std::nullopt;
    });
    if (bad) return fail("prop_alphal2", *bad);
  }
  return pass("prop_alphal2");
}

CheckOutcome coro_starl2(const SuiteContext& c) {
  if (!c.hh_free) return skip("coro_starl2", "graph contains a house or a hole");
  if (c.universal_edge) return skip("coro_starl2", "graph has a universal edge");
  if (c.c4_module) return skip("coro_starl2", "graph has a C4-module");
  for (const auto& [members, entry] : c.fam.lines()) {
    if (!entry.in_l2() || entry.universal) continue;
    const auto center = l2_star_center(c.fam, members);
    if (!center) return fail("coro_starl2", {{"line", to_json(members)}, {"violation", to_json(center.violation())}});
  }
  return pass("coro_starl2");
}

CheckOutcome prop_l1l2(const SuiteContext& c) {
  if (!c.hh_free) return skip("prop_l1l2", "graph contains a house or a hole");
  if (c.fam.has_universal_line()) return skip("prop_l1l2", "graph has a universal line");
  for (const auto& [members, entry] : c.fam.lines())
    if (entry.in_l1() && entry.in_l2())
      return fail("prop_l1l2", {{"line", to_json(members)},
                                {"edge", to_json(entry.edge_generators.front())},
                                {"good_pair", to_json(entry.good_generators.front())}});
  return pass("prop_l1l2");
}

CheckOutcome thm_trichotomy(const SuiteContext& c) {
  for (const auto& [members, entry] : c.fam.lines()) {
    auto bad = first_pair_failure(entry.line.generators, [&](VertexPair p, VertexPair q) -> std::optional<json> {
      if (classify_relation(c.g, c.dm, p, q).tag == RelationTag::None)
        return json{{"pairs", {to_json(p), to_json(q)}}, {"line", to_json(members)}};
      return std::nullopt;
    });
    if (bad) return fail("thm_trichotomy", *bad);
  }
  return pass("thm_trichotomy");
}

CheckOutcome prop_parallelogram(const SuiteContext& c) {
  const int n = c.g.order();
  const auto& d = c.dm;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = 0; b < n; ++b)
      for (Vertex cc = 0; cc < n; ++cc)
        for (Vertex e = 0; e < n; ++e) {
          if (VertexSet::of({a, b, cc, e}).size() != 4) continue;
          if (!is_parallelogram(d, a, b, cc, e)) continue;
          if (d(a, b) != d(cc, e) || d(a, e) != d(b, cc) || d(a, cc) != d(b, e))
            return fail("prop_parallelogram", {{"tuple", {a, b, cc, e}}});
        }
  return pass("prop_parallelogram");
}

bool dbe2_passes(const Graph& g) { return check_dbe2(g).status != Status::Fail; }

}  // namespace

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
  }
  return "skipped";
}

bool PropertyReport::any_fail() const {
  for (const CheckOutcome& c : checks)
    if (c.status == Status::Fail) return true;
  return false;
}

CheckOutcome check_dbe(const LineFamily& fam) {
  const int n = fam.graph().order();
  if (n < 2) return skip("dbe", "fewer than two vertices");
  const auto it = fam.lines().find(fam.graph().vertices());
  if (it != fam.lines().end())
    return pass("dbe", {{"universal_line", to_json(it->second.line.generators.front())}});
  const json w{{"lines", fam.distinct()}, {"n", n}};
  return static_cast<int>(fam.distinct()) >= n ? pass("dbe", w) : fail("dbe", w);
}

CheckOutcome check_dbe(const Graph& g) {
  if (g.order() < 2) return skip("dbe", "fewer than two vertices");
  return check_dbe(LineFamily(g));
}

CheckOutcome check_dbe2(const LineFamily& fam) {
  const int n = fam.graph().order();
  if (n < 2) return skip("dbe2", "fewer than two vertices");
  if (auto e = fam.universal_edge()) return pass("dbe2", {{"universal_edge", to_json(*e)}});
  if (auto p = fam.universal_2pair()) return pass("dbe2", {{"universal_2pair", to_json(*p)}});
  const json w{{"lines", fam.distinct()}, {"n", n}};
  return static_cast<int>(fam.distinct()) >= n ? pass("dbe2", w) : fail("dbe2", w);
}

CheckOutcome check_dbe2(const Graph& g) {
  if (g.order() < 2) return skip("dbe2", "fewer than two vertices");
  return check_dbe2(LineFamily(g));
}

PropertyReport check_proof_pipeline(const Graph& g) {
  const auto start = std::chrono::steady_clock::now();
  PropertyReport report{to_graph6(g), {}, 0.0};
  auto& out = report.checks;
  const char* steps[] = {"pipeline.universal_pair", "pipeline.reduce", "pipeline.residue", "pipeline.reembed",
                         "pipeline.dbe2"};
  auto skip_rest = [&](std::size_t from, const std::string& reason) {
    for (std::size_t i = from; i < std::size(steps); ++i) out.push_back(skip(steps[i], reason));
  };

  if (g.order() < 2 || !g.is_connected()) {
    skip_rest(0, g.order() < 2 ? "fewer than two vertices" : "graph is disconnected");
    report.ms = elapsed_ms(start);
    return report;
  }
  if (!is_hh_free(g)) {
    skip_rest(0, "graph contains a house or a hole");
    report.ms = elapsed_ms(start);
    return report;
  }

  const LineFamily fam(g);
  const auto uedge = fam.universal_edge();
  const auto upair = uedge ? std::nullopt : fam.universal_2pair();
  out.push_back(pass(steps[0], {{"universal_edge", uedge ? to_json(*uedge) : json(nullptr)},
                                {"universal_2pair", upair ? to_json(*upair) : json(nullptr)}}));

  if (uedge || upair) {
    skip_rest(1, "universal pair of distance at most 2");
  } else {
    std::optional<ReductionTrace> trace;
    try {
      trace = reduce_c4_modules(g);
      out.push_back(pass(steps[1], to_json(*trace)));
    } catch (const Error& e) {
      out.push_back(fail(steps[1], {{"error", to_string(e.kind())}, {"detail", e.what()}}));
      skip_rest(2, "reduction failed");
    }
    if (trace) {
      const Graph residue = trace->result();
      const LineFamily rfam(residue);
      if (auto e = rfam.universal_edge()) {
        out.push_back(pass(steps[2], {{"residue_graph6", to_graph6(residue)}, {"universal_edge", to_json(*e)}}));
      } else if (auto p = rfam.universal_2pair()) {
        out.push_back(pass(steps[2], {{"residue_graph6", to_graph6(residue)}, {"universal_2pair", to_json(*p)}}));
      } else {
        const auto cert = discharge(rfam);
        if (!cert) {
          out.push_back(fail(steps[2], {{"residue_graph6", to_graph6(residue)}, {"violation", to_json(cert.violation())}}));
        } else {
          const CertificateCheck check = verify_certificate(residue, cert.value());
          json w{{"residue_graph6", to_graph6(residue)},
                 {"l1", rfam.l1_size()},
                 {"l2", rfam.l2_size()},
                 {"certificate", to_json(cert.value(), check.ok)}};
          if (check.ok) {
            out.push_back(pass(steps[2], std::move(w)));
          } else {
            w["diagnostics"] = check.diagnostics;
            out.push_back(fail(steps[2], std::move(w)));
          }
        }
      }
      // Walk back from the residue: each stage regains one vertex of a C4-module.
      std::optional<json> broken;
      for (std::size_t i = trace->stages.size(); i-- > 0;) {
        const Graph stage = trace->stage_graph(i);
        if (!dbe2_passes(stage)) {
          broken = json{{"stage", i}, {"stage_graph6", to_graph6(stage)}};
          break;
        }
      }
      out.push_back(broken ? fail(steps[3], *broken) : pass(steps[3], {{"stages", trace->stages.size()}}));
    }
  }

  CheckOutcome final_check = check_dbe2(fam);
  final_check.name = steps[4];
  out.push_back(std::move(final_check));
  report.ms = elapsed_ms(start);
  return report;
}

const std::vector<std::string>& lemma_check_names() {
  static const std::vector<std::string> names{
      "obs_distance", "lem_distgood",  "lem_eqgood",   "lem_1line",    "lem_2line",
      "lem_roof",     "lem_c4",        "prop_eqlines1", "coro_bipl1",  "prop_gammal2",
      "prop_alphal2", "coro_starl2",   "prop_l1l2",    "thm_trichotomy", "prop_parallelogram"};
  return names;
}

PropertyReport run_lemma_suite(const Graph& g) {
  const auto start = std::chrono::steady_clock::now();
  PropertyReport report{to_graph6(g), {}, 0.0};
  if (!g.is_connected()) {
    for (const std::string& name : lemma_check_names()) report.checks.push_back(skip(name, "graph is disconnected"));
    report.ms = elapsed_ms(start);
    return report;
  }
  const LineFamily fam(g);
  const bool house_free = !find_house(g);
  const bool hole_free = !find_hole(g);
  const SuiteContext ctx{fam,
                         g,
                         fam.distances(),
                         house_free,
                         hole_free,
                         house_free && hole_free,
                         fam.universal_edge().has_value(),
                         find_c4_module(g).has_value()};
  using CheckFn = CheckOutcome (*)(const SuiteContext&);
  constexpr CheckFn checks[] = {obs_distance, lem_distgood, lem_eqgood,    lem_1line,   lem_2line,
                                lem_roof,     lem_c4,       prop_eqlines1, coro_bipl1,  prop_gammal2,
                                prop_alphal2, coro_starl2,  prop_l1l2,     thm_trichotomy, prop_parallelogram};
  for (CheckFn fn : checks) report.checks.push_back(fn(ctx));
  report.ms = elapsed_ms(start);
  return report;
}

json to_json(const CheckOutcome& c) {
  return {{"name", c.name}, {"status", to_string(c.status)}, {"witness", c.witness}};
}

json to_json(const PropertyReport& r, bool with_timing) {
  json checks = json::array();
  for (const CheckOutcome& c : r.checks) checks.push_back(to_json(c));
  json out{{"graph6", r.graph6}, {"checks", checks}};
  if (with_timing) out["ms"] = r.ms;
  return out;
}

}  // namespace hhlines
