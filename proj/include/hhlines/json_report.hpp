#pragma once

#include "json.hpp"

#include "hhlines/discharging.hpp"
#include "hhlines/metric_lines.hpp"
#include "hhlines/relations.hpp"
#include "hhlines/structure.hpp"

namespace hhlines {

// Report serialization. Vertex sets render as sorted arrays, pairs as [u,v].

nlohmann::json to_json(VertexSet s);
nlohmann::json to_json(VertexPair p);

/// {"members","generators","family","universal"}
nlohmann::json to_json(const FamilyLine& line);
/// {"graph6","n","distinct","l1","l2","lines":[...]}
nlohmann::json to_json(const LineFamily& fam);

/// {"relation","witness"}
nlohmann::json to_json(const RelationKind& r);

/// {"removed":[{"vertex","module"}],"result_graph6","result_labels"}
nlohmann::json to_json(const ReductionTrace& trace);

/// {"centers","transfers":[{"line","kind","gifts":[{"vertex","half_units"}],"unassigned"}],"totals","unassigned","ok"}
nlohmann::json to_json(const DischargeCertificate& cert, bool ok);

nlohmann::json to_json(const Violation& v);

}  // namespace hhlines
