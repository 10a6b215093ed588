#include "cga/monolith.hpp"

#include <stdexcept>

#include "assemble.hpp"

namespace cga {

namespace {

MonolithBuild assemble(const Instance& instance) {
  auto violations = validate_instance(instance);
  if (!violations.empty())
    throw std::invalid_argument("invalid instance: " + violations.front());
  MonolithBuild b;
  b.n = instance.planning_dim();
  b.lp.add_cols(b.n, 0.0, 0.0);
  for (int j = 0; j < b.n; ++j) {
    b.lp.objective(j) = instance.planning_cost(j);
    b.lp.lower(j) = instance.planning.lower(j);
    b.lp.upper(j) = instance.planning.upper(j);
  }
  detail::append_planning_rows(b.lp, instance, 0);
  for (const auto& blk : instance.periods) {
    auto pc = detail::append_period(b.lp, blk, 0, nullptr);
    b.period_y0.push_back(pc.y0);
    b.period_m.push_back(pc.m);
    b.period_slack0.push_back(pc.slack0);
    b.period_nslack.push_back(pc.nslack);
  }
  if (instance.has_integers()) {
    b.lp.integer_flags.assign(b.lp.num_cols(), 0);
    for (int j = 0; j < b.n; ++j) b.lp.integer_flags[j] = instance.integer_flags[j];
  }
  return b;
}

}  // namespace

MonolithBuild build_least_cost(const Instance& instance) { return assemble(instance); }

MonolithBuild build_mga_monolith(const Instance& instance,
                                 const Eigen::VectorXd& w, double epsilon) {
  if (w.size() != instance.planning_dim())
    throw std::invalid_argument("build_mga_monolith: weight dimension mismatch");
  MonolithBuild b = assemble(instance);
  // Objective becomes w.x over planning columns; operational costs move into
  // the budget row.
  Eigen::VectorXd total_cost_row = b.lp.objective;
  b.lp.objective.setZero();
  b.lp.objective.head(b.n) = w;
  b.budget_row = b.lp.add_row(RowSense::LessEqual, epsilon);
  for (int j = 0; j < b.lp.num_cols(); ++j)
    if (total_cost_row(j) != 0.0) b.lp.set_coeff(b.budget_row, j, total_cost_row(j));
  return b;
}

SolutionRecord solve_monolith(const Instance& instance, const MonolithBuild& build) {
  SolveResult res = build.lp.has_integers() ? solve_milp(build.lp) : solve_lp(build.lp);
  SolutionRecord rec;
  switch (res.status) {
    case LpStatus::Optimal:
      rec.status = SolveOutcome::Converged;
      break;
    case LpStatus::Limit:
      rec.status = SolveOutcome::IterationLimit;
      break;
    case LpStatus::Unbounded:
      throw std::runtime_error("monolithic problem is unbounded");
    default:
      rec.status = SolveOutcome::Infeasible;
      return rec;
  }
  rec.planning = res.primal.head(build.n);
  const int P = instance.num_periods();
  rec.period_costs.resize(P);
  for (int p = 0; p < P; ++p) {
    detail::PeriodCols pc;
    pc.y0 = build.period_y0[p];
    pc.m = build.period_m[p];
    pc.slack0 = build.period_slack0[p];
    pc.nslack = build.period_nslack[p];
    rec.period_costs(p) =
        detail::period_cost_from_primal(instance.periods[p], pc, res.primal);
  }
  rec.total_cost = instance.planning_cost.dot(rec.planning) + rec.period_costs.sum();
  if (build.budget_row >= 0) rec.mga_objective = res.objective;
  return rec;
}

}  // namespace cga
