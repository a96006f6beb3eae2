#include "hhlines/json_report.hpp"

#include "hhlines/graph_io.hpp"

namespace hhlines {

using nlohmann::json;

json to_json(VertexSet s) { return s.to_vector(); }

json to_json(VertexPair p) { return json::array({p.u, p.v}); }

json to_json(const FamilyLine& line) {
  json gens = json::array();
  for (const VertexPair& p : line.line.generators) gens.push_back(to_json(p));
  const char* family = line.family() == Family::L1 ? "L1" : line.family() == Family::L2 ? "L2" : "other";
  return {{"members", to_json(line.line.members)},
          {"generators", gens},
          {"family", family},
          {"universal", line.universal}};
}

json to_json(const LineFamily& fam) {
  json lines = json::array();
  for (const auto& [members, entry] : fam.lines()) lines.push_back(to_json(entry));
  return {{"graph6", to_graph6(fam.graph())},
          {"n", fam.graph().order()},
          {"distinct", fam.distinct()},
          {"l1", fam.l1_size()},
          {"l2", fam.l2_size()},
          {"lines", lines}};
}

json to_json(const RelationKind& r) { return {{"relation", to_string(r.tag)}, {"witness", r.witness}}; }

json to_json(const ReductionTrace& trace) {
  json removed = json::array();
  for (const ReductionStep& step : trace.removed)
    removed.push_back({{"vertex", step.vertex}, {"module", step.module.cycle}});
  return {{"removed", removed}, {"result_graph6", to_graph6(trace.result())}, {"result_labels", trace.result_labels()}};
}

json to_json(const DischargeCertificate& cert, bool ok) {
  json transfers = json::array();
  for (const Transfer& t : cert.transfers) {
    json gifts = json::array();
    for (const Gift& g : t.gifts) gifts.push_back({{"vertex", g.vertex}, {"half_units", g.half_units}});
    transfers.push_back({{"line", to_json(t.line)},
                         {"kind", t.kind == LineKind::L1 ? "L1" : "L2"},
                         {"gifts", gifts},
                         {"unassigned", t.unassigned}});
  }
  return {{"centers", to_json(cert.centers)},
          {"transfers", transfers},
          {"totals", cert.totals},
          {"unassigned", cert.unassigned()},
          {"ok", ok}};
}

json to_json(const Violation& v) {
  return {{"kind", to_string(v.kind)}, {"detail", v.detail}, {"witness", v.witness}};
}

}  // namespace hhlines
