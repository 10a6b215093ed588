#pragma once

#include "cga/benders.hpp"
#include "cga/config.hpp"
#include "cga/cuts.hpp"
#include "cga/lp.hpp"
#include "cga/model.hpp"

namespace cga {

/// Cost budget for an MGA run: epsilon = (1 + beta) * base_cost.
struct Budget {
  double epsilon = 0.0;
  double beta = 0.0;
  double base_cost = 0.0;
};

/// Throws on negative inputs; beta > 1 is accepted (looser-than-double
/// budgets are occasionally useful) but flagged with a warning on stderr.
Budget compute_budget(double base_cost, double beta);

/// Approximated MGA master over (x, theta_p): minimize w.x subject to X,
/// the budget row c.x + sum theta_p <= epsilon, the cuts, and theta_p >= 0.
LinearProgram build_mga_master(const Instance& instance, const Eigen::VectorXd& w,
                               const Budget& budget, const std::vector<Cut>& cuts,
                               bool integer_phase);

/// True iff true_cost <= epsilon * (1 + delta_mga), inclusive.
bool check_budget_termination(double true_cost, const Budget& budget,
                              double delta_mga);

/// Cutting-plane solve of one MGA problem. The pool is the working pool for
/// this iterate: it is read for every master build and newly generated cuts
/// are appended with provenance mga(iterate_id).
SolutionRecord cga_solve_one(const Instance& instance, const Eigen::VectorXd& w,
                             const Budget& budget, const AlgoConfig& config,
                             CutPool& pool, int iterate_id);

}  // namespace cga
