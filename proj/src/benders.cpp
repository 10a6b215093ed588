#include "cga/benders.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "assemble.hpp"

namespace cga {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

SubproblemSolution solve_subproblem(const Instance& instance, int period_id,
                                    const Eigen::VectorXd& x) {
  if (period_id < 1 || period_id > instance.num_periods())
    throw std::invalid_argument("solve_subproblem: period id out of range");
  const auto& blk = instance.periods[period_id - 1];
  if (x.size() != instance.planning_dim())
    throw std::invalid_argument("solve_subproblem: planning dimension mismatch");
  LinearProgram lp;
  auto pc = detail::append_period(lp, blk, -1, &x);
  SolveResult res = solve_lp(lp, /*need_duals=*/true);
  if (res.status != LpStatus::Optimal)
    throw std::runtime_error(std::string("subproblem solve failed: ") +
                             to_string(res.status));
  SubproblemSolution out;
  out.operational = res.primal.segment(pc.y0, pc.m);
  Cut& cut = out.cut;
  cut.period = period_id;
  cut.point = x;
  cut.value = detail::period_cost_from_primal(blk, pc, res.primal);
  // With A_p x folded into the coupling right-hand side, the sensitivity to
  // x is -A_p^T times the coupling-row duals.
  cut.subgradient = Eigen::VectorXd::Zero(x.size());
  for (const auto& t : blk.coupling)
    cut.subgradient(t.col()) -= t.value() * res.duals(pc.coupling_row0 + t.row());
  return out;
}

std::vector<SubproblemSolution> solve_all_subproblems(const Instance& instance,
                                                      const Eigen::VectorXd& x,
                                                      int workers, int mga_iterate,
                                                      int birth_iteration) {
  const int P = instance.num_periods();
  std::vector<SubproblemSolution> results(P);
  workers = std::max(1, std::min(workers, P));
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    for (int p = next.fetch_add(1); p < P; p = next.fetch_add(1)) {
      try {
        results[p] = solve_subproblem(instance, p + 1, x);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> threads;
    for (int t = 0; t < workers; ++t) threads.emplace_back(work);
    for (auto& t : threads) t.join();
  }
  if (error) std::rethrow_exception(error);
  for (auto& r : results) {
    r.cut.mga_iterate = mga_iterate;
    r.cut.birth_iteration = birth_iteration;
  }
  return results;
}

double compute_upper_bound(const std::vector<double>& planning_terms,
                           const std::vector<double>& operational_totals,
                           int* argmin) {
  if (planning_terms.empty() || planning_terms.size() != operational_totals.size())
    throw std::invalid_argument("compute_upper_bound: nonempty, equal-length history required");
  double best = kInf;
  int best_j = 0;
  for (size_t j = 0; j < planning_terms.size(); ++j) {
    double total = planning_terms[j] + operational_totals[j];
    if (total < best - 1e-15) {
      best = total;
      best_j = static_cast<int>(j);
    }
  }
  if (argmin) *argmin = best_j;
  return best;
}

LinearProgram build_master_least_cost(const Instance& instance,
                                      const std::vector<Cut>& cuts,
                                      bool integer_phase) {
  const int n = instance.planning_dim();
  const int P = instance.num_periods();
  LinearProgram lp;
  lp.add_cols(n, 0.0, 0.0);
  for (int j = 0; j < n; ++j) {
    lp.objective(j) = instance.planning_cost(j);
    lp.lower(j) = instance.planning.lower(j);
    lp.upper(j) = instance.planning.upper(j);
  }
  // theta_p, bounded below by zero so the cut-free master is bounded.
  int theta0 = lp.add_cols(P, 0.0, kInf);
  for (int p = 0; p < P; ++p) lp.objective(theta0 + p) = 1.0;
  detail::append_planning_rows(lp, instance, 0);
  for (const auto& cut : cuts) {
    int row = lp.add_row(RowSense::GreaterEqual,
                         cut.value - cut.point.dot(cut.subgradient));
    lp.set_coeff(row, theta0 + cut.period - 1, 1.0);
    for (int j = 0; j < n; ++j)
      if (cut.subgradient(j) != 0.0) lp.set_coeff(row, j, -cut.subgradient(j));
  }
  if (integer_phase && instance.has_integers()) {
    lp.integer_flags.assign(lp.num_cols(), 0);
    for (int j = 0; j < n; ++j) lp.integer_flags[j] = instance.integer_flags[j];
  }
  return lp;
}

SolutionRecord benders_least_cost(const Instance& instance,
                                  const AlgoConfig& config, CutPool& pool) {
  if (config.delta_ls < 0 || config.k_ls < 1)
    throw std::invalid_argument("benders_least_cost: delta_ls >= 0 and k_ls >= 1 required");
  const int n = instance.planning_dim();
  SolutionRecord rec;
  bool integer_phase = false;

  auto solve_master = [&](bool int_phase) -> SolveResult {
    LinearProgram master =
        build_master_least_cost(instance, view_for(pool, 0), int_phase);
    SolveResult r = master.has_integers() ? solve_milp(master) : solve_lp(master);
    if (r.status != LpStatus::Optimal)
      throw std::runtime_error(std::string("least-cost master solve failed: ") +
                               to_string(r.status));
    return r;
  };

  Eigen::VectorXd x = solve_master(false).primal.head(n);
  // Per-phase incumbent history.
  std::vector<double> planning_terms, op_totals;
  std::vector<Eigen::VectorXd> iterates;
  double last_ub = kInf;
  auto finish = [&](SolveOutcome status) {
    int best_j = 0;
    double ub = compute_upper_bound(planning_terms, op_totals, &best_j);
    rec.status = status;
    rec.planning = iterates[best_j];
    auto subs = solve_all_subproblems(instance, rec.planning, config.worker_count, 0, 0);
    rec.period_costs.resize(instance.num_periods());
    for (int p = 0; p < instance.num_periods(); ++p)
      rec.period_costs(p) = subs[p].cut.value;
    rec.total_cost = instance.planning_cost.dot(rec.planning) + rec.period_costs.sum();
    (void)ub;
    return rec;
  };

  for (int k = 1; k <= config.k_ls; ++k) {
    auto t0 = std::chrono::steady_clock::now();
    auto subs =
        solve_all_subproblems(instance, x, config.worker_count, 0, k);
    double sub_seconds = seconds_since(t0);
    double op_total = 0.0;
    std::vector<Cut> new_cuts;
    new_cuts.reserve(subs.size());
    for (auto& s : subs) {
      op_total += s.cut.value;
      new_cuts.push_back(s.cut);
    }
    planning_terms.push_back(instance.planning_cost.dot(x));
    op_totals.push_back(op_total);
    iterates.push_back(x);
    double ub = compute_upper_bound(planning_terms, op_totals);
    last_ub = ub;
    insert_cuts(pool, new_cuts);

    t0 = std::chrono::steady_clock::now();
    SolveResult master = solve_master(integer_phase);
    double master_seconds = seconds_since(t0);
    double lb = master.objective;
    rec.trace.push_back({k, lb, ub, master_seconds, sub_seconds, integer_phase});

    double gap = (ub - lb) / std::max(std::abs(lb), 1e-9);
    if (gap <= config.delta_ls) {
      if (instance.has_integers() && !integer_phase) {
        // Phase switch: restore integrality, reset the incumbent.
        integer_phase = true;
        planning_terms.clear();
        op_totals.clear();
        iterates.clear();
        master = solve_master(true);
        x = master.primal.head(n);
        continue;
      }
      return finish(SolveOutcome::Converged);
    }
    x = master.primal.head(n);
  }
  if (planning_terms.empty()) {
    rec.status = SolveOutcome::IterationLimit;
    return rec;
  }
  return finish(SolveOutcome::IterationLimit);
}

}  // namespace cga
