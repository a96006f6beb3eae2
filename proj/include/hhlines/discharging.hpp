#pragma once

#include <string>
#include <vector>

#include "hhlines/error.hpp"
#include "hhlines/metric_lines.hpp"

namespace hhlines {

/// Sides of the complete bipartite graph formed by the edges generating one
/// L1 line. x_side holds the least endpoint.
struct BipartitionWitness {
  VertexSet x_side;
  VertexSet y_side;
};

/// Precondition: `line` is a non-universal L1 line of a house/hole-free graph
/// (Violation{PreconditionUnmet} otherwise). Violation{StructureViolation}
/// if the generating edges do not form an induced complete bipartite graph.
Checked<BipartitionWitness> l1_generator_bipartition(const LineFamily& fam, VertexSet line);

/// Least vertex shared by every good pair generating `line`.
/// Precondition: non-universal L2 line, no universal edge, no C4-module.
/// Violation{NoCommonVertex} if the good pairs do not form a star.
Checked<Vertex> l2_star_center(const LineFamily& fam, VertexSet line);

enum class LineKind { L1, L2 };

/// Weight is counted in half-units: every L1 and L2 line starts with 2.
struct Gift {
  Vertex vertex;
  int half_units;
};

struct Transfer {
  VertexSet line;
  LineKind kind;
  std::vector<Gift> gifts;
  /// Weight of the line not handed to any vertex.
  int unassigned = 0;
};

struct DischargeCertificate {
  VertexSet centers;
  std::vector<Transfer> transfers;
  std::vector<int> totals;

  int unassigned() const;
  int distributed() const;
};

/// Runs the weight transfer on an irreducible graph. Preconditions: connected,
/// house/hole-free, no universal edge, no universal 2-pair, no C4-module;
/// a failing one is reported as Violation{PreconditionUnmet}. A failing
/// structural step is reported as StructureViolation, NoCommonVertex or
/// TwoOutsideC.
Checked<DischargeCertificate> discharge(const Graph& g);
Checked<DischargeCertificate> discharge(const LineFamily& fam);

struct CertificateCheck {
  bool ok = true;
  std::vector<std::string> diagnostics;
};

/// Independent re-check: every transfer justified, weight conserved, every
/// vertex holding at least 2 half-units, L1 and L2 disjoint.
CertificateCheck verify_certificate(const Graph& g, const DischargeCertificate& cert);

}  // namespace hhlines
