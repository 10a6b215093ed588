#include <doctest.h>

#include <stdexcept>

#include "cga/instances.hpp"
#include "cga/model.hpp"
#include "cga/monolith.hpp"
#include "helpers.hpp"

using namespace cga;
using cga::test::toy_instance;
using cga::test::two_zone_instance;

TEST_CASE("well-formed instance validates cleanly") {
  CHECK(validate_instance(two_zone_instance(2, 2)).empty());
  CHECK(validate_instance(toy_instance()).empty());
}

TEST_CASE("coupling column beyond planning dimension is reported") {
  Instance inst = toy_instance();
  inst.periods[0].coupling.emplace_back(0, 1, 1.0);  // planning dim is 1
  auto report = validate_instance(inst);
  REQUIRE(report.size() == 1);
  CHECK(report.front().find("coupling") != std::string::npos);
}

TEST_CASE("zero slack penalty is reported") {
  Instance inst = toy_instance();
  inst.periods[0].slack_penalty = 0.0;
  auto report = validate_instance(inst);
  REQUIRE(!report.empty());
  CHECK(report.front().find("slack_penalty") != std::string::npos);
}

TEST_CASE("slack penalty below an operating cost is reported") {
  Instance inst = toy_instance();
  inst.periods[0].slack_penalty = 1.0;  // op cost is 2
  CHECK(!validate_instance(inst).empty());
}

TEST_CASE("non-contiguous period ids are reported") {
  Instance inst = two_zone_instance(1, 2);
  inst.periods[1].id = 5;
  CHECK(!validate_instance(inst).empty());
}

TEST_CASE("missing periods are reported") {
  Instance inst = toy_instance();
  inst.periods.clear();
  CHECK(!validate_instance(inst).empty());
}

TEST_CASE("evaluate_total_cost arithmetic") {
  Instance inst;
  inst.name = "arith";
  inst.planning_cost.resize(2);
  inst.planning_cost << 1.0, 2.0;
  inst.planning.dim = 2;
  inst.planning.lower = Eigen::VectorXd::Zero(2);
  inst.planning.upper = Eigen::VectorXd::Constant(2, 10.0);
  OperationalBlock blk;
  blk.id = 1;
  blk.op_cost = Eigen::VectorXd::Constant(1, 5.0);
  blk.op_constraints.dim = 1;
  blk.op_constraints.lower = Eigen::VectorXd::Zero(1);
  blk.op_constraints.upper = Eigen::VectorXd::Constant(1, cga::test::kInf);
  blk.slack_penalty = 10.0;
  inst.periods.push_back(blk);

  Eigen::VectorXd x(2);
  x << 3.0, 0.0;
  Eigen::VectorXd y = Eigen::VectorXd::Constant(1, 1.0);
  CHECK(evaluate_total_cost(inst, x, {y}) == doctest::Approx(8.0));
  CHECK(evaluate_total_cost(inst, Eigen::VectorXd::Zero(2),
                            {Eigen::VectorXd::Zero(1)}) == doctest::Approx(0.0));
}

TEST_CASE("evaluate_total_cost rejects dimension mismatches") {
  Instance inst = toy_instance();
  Eigen::VectorXd x2(2);
  x2 << 1.0, 1.0;
  CHECK_THROWS_AS(evaluate_total_cost(inst, x2, {Eigen::VectorXd::Zero(1)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      evaluate_total_cost(inst, Eigen::VectorXd::Zero(1), {}),
      std::invalid_argument);
}

TEST_CASE("evaluate_total_cost is positively homogeneous") {
  Instance inst = two_zone_instance(2, 1);
  Eigen::VectorXd x(3);
  x << 1.0, 2.0, 0.5;
  Eigen::VectorXd y = Eigen::VectorXd::Constant(inst.periods[0].num_op_vars(), 0.7);
  double base = evaluate_total_cost(inst, x, {y});
  for (double alpha : {0.0, 0.5, 2.0, 7.25}) {
    CHECK(evaluate_total_cost(inst, (alpha * x).eval(), {(alpha * y).eval()}) ==
          doctest::Approx(alpha * base));
  }
}

TEST_CASE("total cost matches the monolithic objective at its optimum") {
  for (std::uint64_t seed : {1ull, 7ull}) {
    InstanceSpec spec;
    spec.zones = 2;
    spec.periods = 2;
    spec.hours_per_period = 3;
    spec.seed = seed;
    Instance inst = generate_instance(spec);
    auto build = build_least_cost(inst);
    auto res = solve_lp(build.lp);
    REQUIRE(res.status == LpStatus::Optimal);
    // Optimal dispatch uses no slack, so the model-level cost over (x, y)
    // must reproduce the LP objective.
    Eigen::VectorXd x = res.primal.head(build.n);
    std::vector<Eigen::VectorXd> ys;
    for (int p = 0; p < inst.num_periods(); ++p)
      ys.push_back(res.primal.segment(build.period_y0[p], build.period_m[p]));
    CHECK(evaluate_total_cost(inst, x, ys) == doctest::Approx(res.objective).epsilon(1e-9));
  }
}

TEST_CASE("generator output validates for many seeds") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    InstanceSpec spec;
    spec.zones = 1 + static_cast<int>(seed % 3);
    spec.periods = 1 + static_cast<int>(seed % 2);
    spec.hours_per_period = 2 + static_cast<int>(seed % 4);
    spec.seed = seed;
    spec.integer_mode = (seed % 2) == 0;
    CHECK(validate_instance(generate_instance(spec)).empty());
  }
}
