#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cga/driver.hpp"
#include "cga/instances.hpp"
#include "cga/monolith.hpp"
#include "helpers.hpp"

using namespace cga;
using cga::test::toy_instance;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Instance small_instance(std::uint64_t seed) {
  InstanceSpec spec;
  spec.zones = 2;
  spec.periods = 2;
  spec.hours_per_period = 3;
  spec.seed = seed;
  return generate_instance(spec);
}

}  // namespace

TEST_CASE("config validation") {
  AlgoConfig config;
  CHECK(validate_config(config).empty());
  config.beta = -0.1;
  config.k_mga = 0;
  auto report = validate_config(config);
  CHECK(report.size() == 2);
  AlgoConfig fn;
  fn.cut_strategy = CutStrategy::FirstN;
  fn.first_n = 0;
  CHECK(!validate_config(fn).empty());
  fn.first_n = -1;  // adaptive default is allowed
  CHECK(validate_config(fn).empty());
}

TEST_CASE("run mode and strategy names round-trip") {
  for (auto m : {RunMode::Cga, RunMode::Monolithic, RunMode::Both})
    CHECK(run_mode_from_string(to_string(m)) == m);
  CHECK_THROWS_AS(run_mode_from_string("bogus"), std::invalid_argument);
  for (auto s : {CutStrategy::None, CutStrategy::LeastCostOnly, CutStrategy::All,
                 CutStrategy::FirstN})
    CHECK(cut_strategy_from_string(to_string(s)) == s);
}

TEST_CASE("full cga run on the toy: converged, budget-feasible, oracle-tight") {
  Instance inst = toy_instance();
  AlgoConfig config;
  config.vectors_total = 4;
  config.minmax_fraction = 0.5;
  auto report = run_cga(inst, config);
  CHECK(report.method == "cga");
  REQUIRE(report.least_cost.status == SolveOutcome::Converged);
  CHECK(report.budget.epsilon ==
        doctest::Approx((1 + config.beta) * report.least_cost.total_cost));
  REQUIRE(report.mga.size() == 4);
  for (const auto& wr : report.mga) {
    REQUIRE(wr.record.status == SolveOutcome::Converged);
    CHECK(wr.record.total_cost <=
          report.budget.epsilon * (1 + config.delta_mga) + 1e-9);
    auto loose = solve_monolith(
        inst, build_mga_monolith(inst, wr.weight.weights,
                                 report.budget.epsilon * (1 + config.delta_mga)));
    auto tight = solve_monolith(
        inst, build_mga_monolith(inst, wr.weight.weights, report.budget.epsilon));
    CHECK(*wr.record.mga_objective >= *loose.mga_objective - 1e-6);
    CHECK(*wr.record.mga_objective <= *tight.mga_objective + 1e-6);
  }
  CHECK(report.final_pool_size >= static_cast<int>(report.least_cost.trace.size()));
}

TEST_CASE("vectors_total = 0 yields a least-cost-only report") {
  Instance inst = toy_instance();
  AlgoConfig config;
  config.vectors_total = 0;
  auto report = run_cga(inst, config);
  CHECK(report.mga.empty());
  CHECK(report.median_mga_iterations == 0.0);
  REQUIRE(report.least_cost.status == SolveOutcome::Converged);
}

TEST_CASE("cut sharing changes iteration counts, not objectives") {
  Instance inst = small_instance(77);
  AlgoConfig lc;
  lc.vectors_total = 6;
  lc.cut_strategy = CutStrategy::LeastCostOnly;
  AlgoConfig none = lc;
  none.cut_strategy = CutStrategy::None;

  auto with_cuts = run_cga(inst, lc);
  auto without = run_cga(inst, none);
  REQUIRE(with_cuts.mga.size() == without.mga.size());
  size_t iters_with = 0, iters_without = 0;
  for (size_t i = 0; i < with_cuts.mga.size(); ++i) {
    REQUIRE(with_cuts.mga[i].record.status == SolveOutcome::Converged);
    REQUIRE(without.mga[i].record.status == SolveOutcome::Converged);
    // Same sandwich window, so objectives agree to its width.
    double span = std::abs(with_cuts.budget.epsilon * lc.delta_mga);
    double diff = std::abs(*with_cuts.mga[i].record.mga_objective -
                           *without.mga[i].record.mga_objective);
    CHECK(diff <= span + 1e-6);
    iters_with += with_cuts.mga[i].record.trace.size();
    iters_without += without.mga[i].record.trace.size();
  }
  CHECK(iters_without >= iters_with);
}

TEST_CASE("monolithic pipeline mirrors the cga report shape") {
  Instance inst = toy_instance();
  AlgoConfig config;
  config.vectors_total = 3;
  config.minmax_fraction = 1.0;
  auto mono = run_monolithic_mga(inst, config);
  auto cga = run_cga(inst, config);
  CHECK(mono.method == "monolithic");
  REQUIRE(mono.mga.size() == cga.mga.size());
  for (size_t i = 0; i < mono.mga.size(); ++i) {
    CHECK(mono.mga[i].weight.weights == cga.mga[i].weight.weights);
    // The two pipelines agree up to the budget tolerance window.
    CHECK(*cga.mga[i].record.mga_objective >=
          *mono.mga[i].record.mga_objective - config.delta_mga * cga.budget.epsilon - 1e-6);
    CHECK(*cga.mga[i].record.mga_objective <=
          *mono.mga[i].record.mga_objective + 1e-6);
  }
}

TEST_CASE("beta = 0 pins monolithic MGA costs to the optimum") {
  Instance inst = toy_instance();
  AlgoConfig config;
  config.beta = 0.0;
  config.vectors_total = 2;
  config.minmax_fraction = 1.0;
  auto report = run_monolithic_mga(inst, config);
  for (const auto& wr : report.mga) {
    REQUIRE(wr.record.status == SolveOutcome::Converged);
    CHECK(wr.record.total_cost ==
          doctest::Approx(report.least_cost.total_cost).epsilon(1e-6));
  }
}

TEST_CASE("partitioned run covers every weight exactly once") {
  Instance inst = small_instance(5);
  AlgoConfig config;
  config.vectors_total = 8;
  config.partition_k = 3;
  auto report = run_cga(inst, config);
  REQUIRE(report.mga.size() == 8);
  for (const auto& wr : report.mga) {
    CHECK(wr.record.status == SolveOutcome::Converged);
    CHECK(wr.partition_index >= 0);
    CHECK(wr.partition_index < 3);
  }
}

TEST_CASE("emit_reports writes deterministic documents with full traces") {
  Instance inst = toy_instance();
  AlgoConfig config;
  config.vectors_total = 3;
  auto report = run_cga(inst, config);
  auto dir = std::filesystem::temp_directory_path() / "cga_test_reports";
  std::filesystem::remove_all(dir);
  emit_reports(report, dir);

  std::string solutions = slurp(dir / "solutions.json");
  std::string trace = slurp(dir / "trace.csv");
  std::string cfg = slurp(dir / "config.json");
  CHECK(solutions.find("cga-solutions/1") != std::string::npos);
  CHECK(cfg.find("least-cost") != std::string::npos);

  size_t expected_rows = report.least_cost.trace.size();
  for (const auto& wr : report.mga) expected_rows += wr.record.trace.size();
  size_t rows = 0;
  for (char ch : trace)
    if (ch == '\n') ++rows;
  CHECK(rows == expected_rows + 1);  // header line

  emit_reports(report, dir);  // re-emit: byte-identical
  CHECK(slurp(dir / "solutions.json") == solutions);
  CHECK(slurp(dir / "trace.csv") == trace);
  CHECK(slurp(dir / "config.json") == cfg);
  std::filesystem::remove_all(dir);
}

TEST_CASE("worker count never leaks into the solutions document") {
  Instance inst = small_instance(21);
  AlgoConfig config;
  config.vectors_total = 4;
  auto base_dir = std::filesystem::temp_directory_path() / "cga_test_workers";
  std::filesystem::remove_all(base_dir);
  std::string docs[2];
  int workers[2] = {1, 3};
  for (int i = 0; i < 2; ++i) {
    AlgoConfig c = config;
    c.worker_count = workers[i];
    auto report = run_cga(inst, c);
    auto dir = base_dir / std::to_string(workers[i]);
    emit_reports(report, dir);
    docs[i] = slurp(dir / "solutions.json");
  }
  CHECK(docs[0] == docs[1]);
  std::filesystem::remove_all(base_dir);
}

TEST_CASE("concurrent partitions reproduce the sequential result") {
  Instance inst = small_instance(33);
  AlgoConfig config;
  config.vectors_total = 6;
  config.partition_k = 2;
  auto seq = run_cga(inst, config);
  AlgoConfig conc = config;
  conc.concurrent_partitions = true;
  auto par = run_cga(inst, conc);
  REQUIRE(seq.mga.size() == par.mga.size());
  for (size_t i = 0; i < seq.mga.size(); ++i) {
    CHECK(seq.mga[i].record.planning == par.mga[i].record.planning);
    CHECK(seq.mga[i].record.total_cost == par.mga[i].record.total_cost);
  }
}

TEST_CASE("invalid inputs are rejected up front") {
  Instance inst = toy_instance();
  AlgoConfig config;
  config.k_ls = 0;
  CHECK_THROWS_AS(run_cga(inst, config), std::invalid_argument);
  Instance broken = inst;
  broken.periods[0].slack_penalty = 0.0;
  CHECK_THROWS_AS(run_cga(broken, AlgoConfig{}), std::invalid_argument);
}
