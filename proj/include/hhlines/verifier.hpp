#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "hhlines/graph.hpp"
#include "hhlines/metric_lines.hpp"

namespace hhlines {

enum class Status { Pass, Fail, Skipped };

std::string_view to_string(Status s);

/// Result of one named check on one graph. A failure always carries a witness
/// that replays it on the same graph.
struct CheckOutcome {
  std::string name;
  Status status = Status::Pass;
  nlohmann::json witness;
};

struct PropertyReport {
  std::string graph6;
  std::vector<CheckOutcome> checks;
  double ms = 0.0;

  bool any_fail() const;
};

/// Universal line, or at least n distinct lines. Skipped for n < 2.
CheckOutcome check_dbe(const LineFamily& fam);
CheckOutcome check_dbe(const Graph& g);

/// Universal line generated by a pair at distance <= 2, or at least n lines.
CheckOutcome check_dbe2(const LineFamily& fam);
CheckOutcome check_dbe2(const Graph& g);

/// Replays the induction: universal pair, C4-module reduction, discharging on
/// the irreducible residue, then DBE-2 re-established on every stage back to g.
PropertyReport check_proof_pipeline(const Graph& g);

/// Names of the lemma-suite checks, in report order.
const std::vector<std::string>& lemma_check_names();

/// Every structural statement as an executable check; checks whose
/// hypotheses fail on g are reported as skipped.
PropertyReport run_lemma_suite(const Graph& g);

nlohmann::json to_json(const CheckOutcome& c);
/// Timing is omitted when `with_timing` is false so that reports compare
/// byte-for-byte.
nlohmann::json to_json(const PropertyReport& r, bool with_timing = true);

}  // namespace hhlines
