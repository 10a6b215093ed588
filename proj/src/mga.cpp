#include "cga/mga.hpp"

#include <chrono>
#include <cmath>
#include <iostream>
#include <limits>
#include <stdexcept>

#include "assemble.hpp"

namespace cga {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}
}  // namespace

Budget compute_budget(double base_cost, double beta) {
  if (base_cost < 0.0) throw std::invalid_argument("compute_budget: base_cost must be >= 0");
  if (beta < 0.0) throw std::invalid_argument("compute_budget: beta must be >= 0");
  if (beta > 1.0)
    std::cerr << "warning: budget slack beta = " << beta << " exceeds 1\n";
  return Budget{(1.0 + beta) * base_cost, beta, base_cost};
}

LinearProgram build_mga_master(const Instance& instance, const Eigen::VectorXd& w,
                               const Budget& budget, const std::vector<Cut>& cuts,
                               bool integer_phase) {
  if (w.size() != instance.planning_dim())
    throw std::invalid_argument("build_mga_master: weight dimension mismatch");
  LinearProgram lp = build_master_least_cost(instance, cuts, integer_phase);
  const int n = instance.planning_dim();
  const int P = instance.num_periods();
  // Swap the cost objective for w.x; total cost moves into the budget row.
  int budget_row = lp.add_row(RowSense::LessEqual, budget.epsilon);
  for (int j = 0; j < n; ++j)
    if (instance.planning_cost(j) != 0.0)
      lp.set_coeff(budget_row, j, instance.planning_cost(j));
  for (int p = 0; p < P; ++p) lp.set_coeff(budget_row, n + p, 1.0);
  lp.objective.setZero();
  lp.objective.head(n) = w;
  return lp;
}

bool check_budget_termination(double true_cost, const Budget& budget,
                              double delta_mga) {
  return true_cost <= budget.epsilon * (1.0 + delta_mga);
}

SolutionRecord cga_solve_one(const Instance& instance, const Eigen::VectorXd& w,
                             const Budget& budget, const AlgoConfig& config,
                             CutPool& pool, int iterate_id) {
  if (config.delta_mga < 0 || config.k_mga < 1)
    throw std::invalid_argument("cga_solve_one: delta_mga >= 0 and k_mga >= 1 required");
  SolutionRecord rec;
  bool integer_phase = false;

  auto solve_master = [&](bool int_phase) -> SolveResult {
    LinearProgram master =
        build_mga_master(instance, w, budget, pool.cuts, int_phase);
    return master.has_integers() ? solve_milp(master) : solve_lp(master);
  };

  SolveResult master = solve_master(false);
  if (master.status != LpStatus::Optimal) {
    // The least-cost solution is always master-feasible, so this signals a
    // budget below the achievable cost or a malformed pool.
    rec.status = SolveOutcome::Infeasible;
    return rec;
  }
  const int n = instance.planning_dim();
  Eigen::VectorXd x = master.primal.head(n);
  double master_obj = master.objective;
  double master_seconds = 0.0;

  for (int k = 1; k <= config.k_mga; ++k) {
    auto t0 = std::chrono::steady_clock::now();
    auto subs = solve_all_subproblems(instance, x, config.worker_count, iterate_id, k);
    double sub_seconds = seconds_since(t0);
    double true_cost = instance.planning_cost.dot(x);
    for (const auto& s : subs) true_cost += s.cut.value;
    rec.trace.push_back({k, master_obj, true_cost, master_seconds, sub_seconds,
                         integer_phase});

    if (check_budget_termination(true_cost, budget, config.delta_mga)) {
      if (instance.has_integers() && !integer_phase) {
        // Phase switch: keep the pool, restore integrality, and re-solve the
        // master so the next iterate is integral.
        integer_phase = true;
        std::vector<Cut> cuts;
        for (auto& s : subs) cuts.push_back(s.cut);
        insert_cuts(pool, cuts);
        t0 = std::chrono::steady_clock::now();
        master = solve_master(true);
        master_seconds = seconds_since(t0);
        if (master.status != LpStatus::Optimal) {
          // Integrality can push the minimum cost above the budget.
          rec.status = SolveOutcome::Infeasible;
          return rec;
        }
        x = master.primal.head(n);
        master_obj = master.objective;
        continue;
      }
      rec.status = SolveOutcome::Converged;
      rec.planning = x;
      rec.period_costs.resize(instance.num_periods());
      for (int p = 0; p < instance.num_periods(); ++p)
        rec.period_costs(p) = subs[p].cut.value;
      rec.total_cost = true_cost;
      rec.mga_objective = w.dot(x);
      return rec;
    }

    std::vector<Cut> cuts;
    for (auto& s : subs) cuts.push_back(s.cut);
    insert_cuts(pool, cuts);
    t0 = std::chrono::steady_clock::now();
    master = solve_master(integer_phase);
    master_seconds = seconds_since(t0);
    if (master.status != LpStatus::Optimal) {
      rec.status = SolveOutcome::Infeasible;
      return rec;
    }
    x = master.primal.head(n);
    master_obj = master.objective;
  }
  rec.status = SolveOutcome::IterationLimit;
  rec.planning = x;
  rec.mga_objective = w.dot(x);
  return rec;
}

}  // namespace cga
