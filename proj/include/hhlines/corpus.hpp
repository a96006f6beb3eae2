#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "hhlines/graph.hpp"
#include "hhlines/graph_io.hpp"

namespace hhlines {

/// Largest order served by the builtin enumerator; larger corpora come in as
/// graph6 streams from an external generator.
inline constexpr int kMaxBuiltinOrder = 8;

/// Canonical relabeling: isomorphic graphs map to identical graphs.
/// Colour refinement plus exhaustive individualization, with twin pruning.
Graph canonical_form(const Graph& g);

/// graph6 string of the canonical form.
std::string canonical_key(const Graph& g);

/// Every connected graph on n vertices up to isomorphism, in canonical form,
/// sorted by canonical key. Built by adding one vertex at a time to the
/// connected graphs on n-1 vertices. Throws Error{ScaleLimit} outside 1..8.
std::vector<Graph> enumerate_connected(int n);

/// Every connected labeled graph on n vertices (no deduplication).
/// Throws Error{ScaleLimit} outside 1..8.
void for_each_labeled_connected(int n, const std::function<void(const Graph&)>& visit);

enum class CheckKind { Dbe, Dbe2, Pipeline, Suite };

std::optional<CheckKind> parse_check_kind(std::string_view name);

struct CorpusSpec {
  enum class Source { Builtin, Stream };
  Source source = Source::Builtin;
  /// Builtin: orders min_n..max_n.
  int min_n = 2;
  int max_n = 2;
  bool dedup = true;
  /// Stream: path, or "-" for standard input.
  std::string path = "-";
  InputFormat format = InputFormat::Graph6;
  bool hh_free = false;
  bool no_c4_module = false;
  std::optional<std::size_t> limit;
};

struct CheckTally {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t skipped = 0;
};

struct WitnessRecord {
  std::string graph6;
  std::string check;
  nlohmann::json witness;
};

struct SweepResult {
  std::size_t graphs = 0;
  std::size_t filtered_out = 0;
  std::map<std::string, CheckTally> tallies;
  std::vector<WitnessRecord> failures;
  /// Per-graph input or evaluation errors; they never abort a sweep.
  std::vector<std::string> errors;
  double ms = 0.0;

  bool any_fail() const { return !failures.empty(); }
};

struct Corpus {
  std::vector<Graph> graphs;
  std::size_t filtered_out = 0;
  std::vector<std::string> errors;
};

/// Materializes and filters the corpus. Stream I/O failures throw std::runtime_error.
Corpus load_corpus(const CorpusSpec& spec);

/// Applies `check` to every graph on `jobs` worker threads. Results are merged
/// in input order, so the aggregate does not depend on `jobs`.
SweepResult sweep_graphs(std::span<const Graph> graphs, CheckKind check, int jobs);

SweepResult sweep(const CorpusSpec& spec, CheckKind check, int jobs);

nlohmann::json to_json(const SweepResult& r, bool with_timing = true);

}  // namespace hhlines
