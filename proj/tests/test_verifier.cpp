#include "doctest.h"
#include "hhlines/corpus.hpp"
#include "hhlines/structure.hpp"
#include "hhlines/verifier.hpp"
#include "oracles.hpp"

using namespace hhlines;

namespace {

const CheckOutcome& find(const PropertyReport& r, const std::string& name) {
  for (const CheckOutcome& c : r.checks)
    if (c.name == name) return c;
  FAIL("missing check " << name);
  throw;
}

}  // namespace

TEST_CASE("dbe fixtures") {
  CHECK(check_dbe(graphs::complete(3)).status == Status::Pass);
  const CheckOutcome c5 = check_dbe(graphs::cycle(5));
  CHECK(c5.status == Status::Pass);
  CHECK(c5.witness["lines"] == 10);
  CHECK(check_dbe(Graph(1)).status == Status::Skipped);
}

TEST_CASE("dbe2 fixtures") {
  CHECK(check_dbe2(graphs::path(3)).status == Status::Pass);
  CHECK(check_dbe2(graphs::two_c4_plus_apex()).status == Status::Pass);
  CHECK(check_dbe2(graphs::petersen()).status == Status::Pass);
}

TEST_CASE("pipeline on the apex graph goes through the reduction") {
  const PropertyReport r = check_proof_pipeline(graphs::two_c4_plus_apex());
  CHECK_FALSE(r.any_fail());
  CHECK(find(r, "pipeline.reduce").status == Status::Pass);
  CHECK(find(r, "pipeline.reduce").witness["removed"].size() == 2);
  CHECK(find(r, "pipeline.residue").status == Status::Pass);
  CHECK(find(r, "pipeline.dbe2").status == Status::Pass);
}

TEST_CASE("pipeline skips graphs outside the class") {
  const PropertyReport r = check_proof_pipeline(graphs::house());
  for (const CheckOutcome& c : r.checks) CHECK(c.status == Status::Skipped);
}

TEST_CASE("lemma suite names and gating") {
  CHECK(lemma_check_names().size() == 15);
  const PropertyReport c5 = run_lemma_suite(graphs::cycle(5));
  REQUIRE(c5.checks.size() == 15);
  for (std::size_t i = 0; i < 15; ++i) CHECK(c5.checks[i].name == lemma_check_names()[i]);
  CHECK(find(c5, "obs_distance").status == Status::Pass);
  CHECK(find(c5, "lem_2line").status == Status::Skipped);
  CHECK(find(c5, "lem_1line").status == Status::Skipped);
  const PropertyReport house = run_lemma_suite(graphs::house());
  CHECK(find(house, "lem_2line").status == Status::Pass);
  CHECK(find(house, "lem_roof").status == Status::Skipped);
  CHECK_FALSE(run_lemma_suite(graphs::two_c4_plus_apex()).any_fail());
}

TEST_CASE("report JSON without timing is reproducible") {
  const Graph g = graphs::two_c4_plus_apex();
  CHECK(to_json(run_lemma_suite(g), false).dump() == to_json(run_lemma_suite(g), false).dump());
  CHECK_FALSE(to_json(run_lemma_suite(g), false).contains("ms"));
  CHECK(to_json(run_lemma_suite(g), true).contains("ms"));
}

TEST_CASE("suite over every connected graph on 8 vertices") {
  std::vector<Graph> all = enumerate_connected(8);
  const SweepResult r = sweep_graphs(all, CheckKind::Suite, 0);
  CHECK(r.graphs == 11117);
  CHECK(r.errors.empty());
  CHECK(r.failures.empty());
  CHECK(r.tallies.at("thm_trichotomy").pass == 11117);
  CHECK(r.tallies.at("prop_parallelogram").pass == 11117);
}
