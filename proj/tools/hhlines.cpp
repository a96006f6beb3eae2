// Command-line front end: lines, classify, reduce, discharge, check, sweep.
//
// Exit codes: 0 all pass, 1 a check failed (counterexample found),
// 2 usage or input format error.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "hhlines/corpus.hpp"
#include "hhlines/discharging.hpp"
#include "hhlines/graph_io.hpp"
#include "hhlines/json_report.hpp"
#include "hhlines/structure.hpp"
#include "hhlines/verifier.hpp"

namespace {

using hhlines::Graph;
using nlohmann::json;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct RunState {
  bool failed = false;
  bool bad_input = false;

  int exit_code() const { return bad_input ? kExitUsage : failed ? kExitFail : 0; }
};

hhlines::InputFormat to_format(const std::string& name) {
  return name == "edges" ? hhlines::InputFormat::EdgeList : hhlines::InputFormat::Graph6;
}

std::vector<hhlines::InputRecord> read_input(const std::string& path, const std::string& format) {
  if (path == "-") return hhlines::read_graphs(std::cin, to_format(format));
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return hhlines::read_graphs(in, to_format(format));
}

void emit(const json& j) { std::cout << j.dump() << '\n'; }

// Applies `body` to every graph of the input; parse and contract errors become
// error records on stdout.
template <class Body>
void for_each_graph(const std::string& path, const std::string& format, RunState& state, Body body) {
  for (const hhlines::InputRecord& rec : read_input(path, format)) {
    if (!rec.graph) {
      emit({{"line", rec.line}, {"input", rec.text}, {"error", rec.error}});
      state.bad_input = true;
      continue;
    }
    try {
      body(*rec.graph);
    } catch (const hhlines::Error& e) {
      emit({{"line", rec.line},
            {"input", rec.text},
            {"error", std::string(hhlines::to_string(e.kind())) + ": " + e.what()}});
      state.bad_input = true;
    }
  }
}

json classify(const Graph& g) {
  auto opt_set = [](const std::optional<hhlines::VertexSet>& s) { return s ? hhlines::to_json(*s) : json(nullptr); };
  auto opt_pair = [](const std::optional<hhlines::VertexPair>& p) { return p ? hhlines::to_json(*p) : json(nullptr); };
  const auto house = hhlines::find_house(g);
  const auto hole = hhlines::find_hole(g);
  json modules = json::array();
  for (const auto& m : hhlines::find_c4_modules(g)) modules.push_back(m.cycle);
  json out{{"graph6", hhlines::to_graph6(g)},
           {"n", g.order()},
           {"hh_free", !house && !hole},
           {"house", opt_set(house)},
           {"hole", opt_set(hole)},
           {"c4_modules", modules}};
  if (g.is_connected()) {
    const hhlines::LineFamily fam(g);
    out["universal_edge"] = opt_pair(fam.universal_edge());
    out["universal_2pair"] = opt_pair(fam.universal_2pair());
  } else {
    out["connected"] = false;
  }
  return out;
}

json discharge_report(const Graph& g, RunState& state) {
  const auto cert = hhlines::discharge(g);
  if (!cert) {
    if (cert.violation().kind != hhlines::ErrorKind::PreconditionUnmet) state.failed = true;
    return {{"graph6", hhlines::to_graph6(g)}, {"ok", false}, {"violation", hhlines::to_json(cert.violation())}};
  }
  const hhlines::CertificateCheck check = hhlines::verify_certificate(g, cert.value());
  if (!check.ok) state.failed = true;
  json out = hhlines::to_json(cert.value(), check.ok);
  out["graph6"] = hhlines::to_graph6(g);
  if (!check.ok) out["diagnostics"] = check.diagnostics;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lines of graph metrics: line families, house/hole structure, discharging certificates"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string format = "graph6";
  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("input", input, "graph6 file (one graph per line), edge-list file, or - for stdin");
    cmd->add_option("--format", format, "input format")->check(CLI::IsMember({"graph6", "edges"}));
  };

  CLI::App* lines_cmd = app.add_subcommand("lines", "print the line family of each graph");
  add_input(lines_cmd);
  CLI::App* classify_cmd = app.add_subcommand("classify", "house/hole freeness, C4-modules, universal pairs");
  add_input(classify_cmd);
  CLI::App* reduce_cmd = app.add_subcommand("reduce", "remove C4-module vertices until none remains");
  add_input(reduce_cmd);
  CLI::App* discharge_cmd = app.add_subcommand("discharge", "discharging certificate of an irreducible graph");
  add_input(discharge_cmd);

  std::string check_name;
  bool no_timing = false;
  CLI::App* check_cmd = app.add_subcommand("check", "run dbe, dbe2, pipeline or suite per graph");
  check_cmd->add_option("kind", check_name, "check to run")
      ->required()
      ->check(CLI::IsMember({"dbe", "dbe2", "pipeline", "suite"}));
  add_input(check_cmd);
  check_cmd->add_flag("--no-timing", no_timing, "omit timing fields");

  hhlines::CorpusSpec spec;
  int jobs = 1;
  std::size_t limit = 0;
  bool labeled = false;
  std::string stream;
  std::string sweep_check;
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "apply a check to a whole corpus");
  sweep_cmd->add_option("--n", spec.max_n, "largest order of the builtin enumeration")
      ->check(CLI::Range(1, hhlines::kMaxBuiltinOrder));
  sweep_cmd->add_option("--min-n", spec.min_n, "smallest order of the builtin enumeration")
      ->check(CLI::Range(1, hhlines::kMaxBuiltinOrder));
  sweep_cmd->add_option("--input", stream, "graph6 stream instead of the builtin enumeration (- for stdin)");
  sweep_cmd->add_option("--format", format, "stream format")->check(CLI::IsMember({"graph6", "edges"}));
  sweep_cmd->add_flag("--hh-free", spec.hh_free, "keep only house/hole-free graphs");
  sweep_cmd->add_flag("--no-c4-module", spec.no_c4_module, "keep only graphs without a C4-module");
  sweep_cmd->add_flag("--labeled", labeled, "enumerate labeled graphs (no isomorphism rejection)");
  sweep_cmd->add_option("--check", sweep_check, "check to run")
      ->required()
      ->check(CLI::IsMember({"dbe", "dbe2", "pipeline", "suite"}));
  sweep_cmd->add_option("--jobs", jobs, "worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);
  sweep_cmd->add_option("--limit", limit, "stop after this many corpus graphs");
  sweep_cmd->add_flag("--no-timing", no_timing, "omit timing fields");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  RunState state;
  try {
    if (*lines_cmd) {
      for_each_graph(input, format, state, [](const Graph& g) { emit(hhlines::to_json(hhlines::LineFamily(g))); });
    } else if (*classify_cmd) {
      for_each_graph(input, format, state, [](const Graph& g) { emit(classify(g)); });
    } else if (*reduce_cmd) {
      for_each_graph(input, format, state,
                     [](const Graph& g) { emit(hhlines::to_json(hhlines::reduce_c4_modules(g))); });
    } else if (*discharge_cmd) {
      for_each_graph(input, format, state, [&](const Graph& g) { emit(discharge_report(g, state)); });
    } else if (*check_cmd) {
      const hhlines::CheckKind kind = *hhlines::parse_check_kind(check_name);
      for_each_graph(input, format, state, [&](const Graph& g) {
        hhlines::PropertyReport report;
        switch (kind) {
          case hhlines::CheckKind::Dbe: report = {hhlines::to_graph6(g), {hhlines::check_dbe(g)}, 0.0}; break;
          case hhlines::CheckKind::Dbe2: report = {hhlines::to_graph6(g), {hhlines::check_dbe2(g)}, 0.0}; break;
          case hhlines::CheckKind::Pipeline: report = hhlines::check_proof_pipeline(g); break;
          case hhlines::CheckKind::Suite: report = hhlines::run_lemma_suite(g); break;
        }
        if (report.any_fail()) state.failed = true;
        emit(hhlines::to_json(report, !no_timing));
      });
    } else if (*sweep_cmd) {
      if (!stream.empty()) {
        spec.source = hhlines::CorpusSpec::Source::Stream;
        spec.path = stream;
        spec.format = to_format(format);
      } else if (sweep_cmd->count("--n") == 0) {
        std::cerr << "sweep: either --n or --input is required\n";
        return kExitUsage;
      }
      if (spec.min_n > spec.max_n && spec.source == hhlines::CorpusSpec::Source::Builtin) {
        std::cerr << "sweep: --min-n exceeds --n\n";
        return kExitUsage;
      }
      spec.dedup = !labeled;
      if (limit > 0) spec.limit = limit;
      const auto kind = *hhlines::parse_check_kind(sweep_check);
      const hhlines::SweepResult result = hhlines::sweep(spec, kind, jobs);
      emit(hhlines::to_json(result, !no_timing));
      if (result.any_fail()) state.failed = true;
      if (!result.errors.empty()) state.bad_input = true;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return state.exit_code();
}
