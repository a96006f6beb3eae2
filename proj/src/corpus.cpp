#include "hhlines/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <thread>

#include "hhlines/structure.hpp"
#include "hhlines/verifier.hpp"

namespace hhlines {
namespace {

using Colouring = std::vector<int>;

// Replaces every colour by the rank of its key; returns the number of colours.
template <class Key>
int rerank(std::vector<Key>& keys, Colouring& colour) {
  std::vector<Key> sorted = keys;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (std::size_t v = 0; v < keys.size(); ++v)
    colour[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), keys[v]) - sorted.begin());
  return static_cast<int>(sorted.size());
}

// Colour refinement until the partition is equitable. Keys start with the old
// colour, so the relative order of existing cells is kept.
int refine(const Graph& g, Colouring& colour) {
  const int n = g.order();
  int cells = *std::max_element(colour.begin(), colour.end()) + 1;
  for (;;) {
    std::vector<std::vector<int>> keys(n, std::vector<int>(cells + 1, 0));
    for (Vertex v = 0; v < n; ++v) {
      keys[v][0] = colour[v];
      for (Vertex w : g.neighbors(v)) ++keys[v][1 + colour[w]];
    }
    const int next = rerank(keys, colour);
    if (next == cells) return cells;
    cells = next;
  }
}

bool twins(const Graph& g, Vertex a, Vertex b) {
  return g.neighbors(a).without(b) == g.neighbors(b).without(a);
}

struct CanonSearch {
  const Graph& g;
  std::string best;
  std::vector<Vertex> best_perm;

  void run(Colouring colour) {
    const int n = g.order();
    const int cells = refine(g, colour);
    if (cells == n) {
      std::string code = to_graph6(permute(g, colour));
      if (best.empty() || code > best) {
        best = std::move(code);
        best_perm.assign(colour.begin(), colour.end());
      }
      return;
    }
    std::vector<int> size(cells, 0);
    for (int c : colour) ++size[c];
    int target = 0;
    while (size[target] == 1) ++target;
    std::vector<Vertex> tried;
    for (Vertex v = 0; v < n; ++v) {
      if (colour[v] != target) continue;
      // Swapping two twins is an automorphism that fixes every individualized vertex.
      if (std::any_of(tried.begin(), tried.end(), [&](Vertex u) { return twins(g, u, v); })) continue;
      tried.push_back(v);
      std::vector<std::pair<int, int>> keys(n);
      for (Vertex w = 0; w < n; ++w) keys[w] = {colour[w], w == v ? 0 : 1};
      Colouring child = colour;
      rerank(keys, child);
      run(std::move(child));
    }
  }
};

void check_builtin_order(int n) {
  if (n < 1 || n > kMaxBuiltinOrder)
    throw Error(ErrorKind::ScaleLimit,
                "builtin enumeration covers 1.." + std::to_string(kMaxBuiltinOrder) + " vertices, got " +
                    std::to_string(n));
}

PropertyReport evaluate(const Graph& g, CheckKind check) {
  switch (check) {
    case CheckKind::Dbe:
    case CheckKind::Dbe2: {
      const auto start = std::chrono::steady_clock::now();
      PropertyReport r{to_graph6(g), {}, 0.0};
      r.checks.push_back(check == CheckKind::Dbe ? check_dbe(g) : check_dbe2(g));
      r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      return r;
    }
    case CheckKind::Pipeline: return check_proof_pipeline(g);
    case CheckKind::Suite: return run_lemma_suite(g);
  }
  return {};
}

}  // namespace

Graph canonical_form(const Graph& g) {
  CanonSearch search{g, {}, {}};
  Colouring degree(g.order());
  for (Vertex v = 0; v < g.order(); ++v) degree[v] = g.degree(v);
  std::vector<int> keys = degree;
  rerank(keys, degree);
  search.run(std::move(degree));
  return permute(g, search.best_perm);
}

std::string canonical_key(const Graph& g) { return to_graph6(canonical_form(g)); }

std::vector<Graph> enumerate_connected(int n) {
  check_builtin_order(n);
  std::vector<Graph> level{Graph(1)};
  for (int k = 2; k <= n; ++k) {
    std::map<std::string, Graph> next;
    for (const Graph& h : level) {
      std::vector<VertexSet> rows(k);
      for (Vertex v = 0; v < k - 1; ++v) rows[v] = h.neighbors(v);
      // A connected graph always has a vertex whose removal keeps it connected,
      // so extending connected graphs by a non-isolated vertex reaches them all.
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << (k - 1)); ++mask) {
        const VertexSet attach{mask};
        std::vector<VertexSet> ext = rows;
        ext[k - 1] = attach;
        for (Vertex v : attach) ext[v].insert(k - 1);
        Graph canon = canonical_form(Graph::from_adjacency(ext));
        std::string key = to_graph6(canon);
        next.emplace(std::move(key), std::move(canon));
      }
    }
    level.clear();
    for (auto& [key, graph] : next) level.push_back(std::move(graph));
  }
  return level;
}

void for_each_labeled_connected(int n, const std::function<void(const Graph&)>& visit) {
  check_builtin_order(n);
  std::vector<VertexPair> slots;
  for (Vertex v = 1; v < n; ++v)
    for (Vertex u = 0; u < v; ++u) slots.push_back({u, v});
  const std::uint64_t count = std::uint64_t{1} << slots.size();
  std::vector<VertexPair> edges;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    edges.clear();
    for (std::size_t i = 0; i < slots.size(); ++i)
      if ((mask >> i) & 1U) edges.push_back(slots[i]);
    // A connected graph needs at least n-1 edges.
    if (static_cast<int>(edges.size()) + 1 < n) continue;
    const Graph g(n, edges);
    if (g.is_connected()) visit(g);
  }
}

std::optional<CheckKind> parse_check_kind(std::string_view name) {
  if (name == "dbe") return CheckKind::Dbe;
  if (name == "dbe2") return CheckKind::Dbe2;
  if (name == "pipeline") return CheckKind::Pipeline;
  if (name == "suite") return CheckKind::Suite;
  return std::nullopt;
}

Corpus load_corpus(const CorpusSpec& spec) {
  Corpus corpus;
  auto admit = [&](const Graph& g) {
    if (spec.limit && corpus.graphs.size() >= *spec.limit) return;
    if (!g.is_connected() || (spec.hh_free && !is_hh_free(g)) || (spec.no_c4_module && find_c4_module(g))) {
      ++corpus.filtered_out;
      return;
    }
    corpus.graphs.push_back(g);
  };
  if (spec.source == CorpusSpec::Source::Builtin) {
    for (int n = spec.min_n; n <= spec.max_n; ++n) {
      if (spec.dedup) {
        for (const Graph& g : enumerate_connected(n)) admit(g);
      } else {
        for_each_labeled_connected(n, admit);
      }
    }
    return corpus;
  }

  std::vector<InputRecord> records;
  if (spec.path == "-") {
    records = read_graphs(std::cin, spec.format);
  } else {
    std::ifstream in(spec.path);
    if (!in) throw std::runtime_error("cannot open " + spec.path);
    records = read_graphs(in, spec.format);
  }
  for (const InputRecord& rec : records) {
    if (rec.graph) {
      admit(*rec.graph);
    } else {
      corpus.errors.push_back("line " + std::to_string(rec.line) + ": " + rec.error);
    }
  }
  return corpus;
}

SweepResult sweep_graphs(std::span<const Graph> graphs, CheckKind check, int jobs) {
  const auto start = std::chrono::steady_clock::now();
  if (jobs <= 0) jobs = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  jobs = std::min<int>(jobs, static_cast<int>(std::max<std::size_t>(graphs.size(), 1)));

  struct Slot {
    std::optional<PropertyReport> report;
    std::string error;
  };
  std::vector<Slot> slots(graphs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < graphs.size(); i = next++) {
      try {
        slots[i].report = evaluate(graphs[i], check);
      } catch (const std::exception& e) {
        slots[i].error = to_graph6(graphs[i]) + ": " + e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  SweepResult result;
  result.graphs = graphs.size();
  for (const Slot& slot : slots) {
    if (!slot.report) {
      result.errors.push_back(slot.error);
      continue;
    }
    for (const CheckOutcome& c : slot.report->checks) {
      CheckTally& tally = result.tallies[c.name];
      switch (c.status) {
        case Status::Pass: ++tally.pass; break;
        case Status::Skipped: ++tally.skipped; break;
        case Status::Fail:
          ++tally.fail;
          result.failures.push_back({slot.report->graph6, c.name, c.witness});
          break;
      }
    }
  }
  result.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

SweepResult sweep(const CorpusSpec& spec, CheckKind check, int jobs) {
  Corpus corpus = load_corpus(spec);
  SweepResult result = sweep_graphs(corpus.graphs, check, jobs);
  result.filtered_out = corpus.filtered_out;
  result.errors.insert(result.errors.begin(), corpus.errors.begin(), corpus.errors.end());
  return result;
}

nlohmann::json to_json(const SweepResult& r, bool with_timing) {
  nlohmann::json checks = nlohmann::json::object();
  for (const auto& [name, t] : r.tallies) checks[name] = {{"pass", t.pass}, {"fail", t.fail}, {"skipped", t.skipped}};
  nlohmann::json failures = nlohmann::json::array();
  for (const WitnessRecord& w : r.failures)
    failures.push_back({{"graph6", w.graph6}, {"check", w.check}, {"witness", w.witness}});
  nlohmann::json out{{"graphs", r.graphs},
                     {"filtered_out", r.filtered_out},
                     {"checks", checks},
                     {"failures", failures},
                     {"errors", r.errors}};
  if (with_timing) out["ms"] = r.ms;
  return out;
}

}  // namespace hhlines
