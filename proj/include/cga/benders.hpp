#pragma once

#include "cga/config.hpp"
#include "cga/cuts.hpp"
#include "cga/lp.hpp"
#include "cga/model.hpp"

namespace cga {

struct SubproblemSolution {
  Cut cut;
  Eigen::VectorXd operational;  // optimal y_p (without slack columns)
};

/// Solves the period's cut-generating subproblem with the planning vector
/// fixed. Always feasible thanks to the penalized slack columns. The cut's
/// subgradient is the sensitivity of the optimal cost to the fixed planning
/// vector.
SubproblemSolution solve_subproblem(const Instance& instance, int period_id,
                                    const Eigen::VectorXd& x);

/// Solves all periods at x, in parallel with up to `workers` threads, and
/// reduces results in period order. Cuts are tagged with the given
/// provenance and birth iteration.
std::vector<SubproblemSolution> solve_all_subproblems(const Instance& instance,
                                                      const Eigen::VectorXd& x,
                                                      int workers, int mga_iterate,
                                                      int birth_iteration);

/// min_j (planning_terms[j] + operational_totals[j]); argmin (earliest on
/// ties) is written through when requested.
double compute_upper_bound(const std::vector<double>& planning_terms,
                           const std::vector<double>& operational_totals,
                           int* argmin = nullptr);

/// Least-cost master over (x, theta_p): minimize c.x + sum theta_p subject
/// to X, the cuts, and theta_p >= 0. Integer flags are applied only in the
/// integer phase.
LinearProgram build_master_least_cost(const Instance& instance,
                                      const std::vector<Cut>& cuts,
                                      bool integer_phase);

/// Multi-cut Benders with Kelley iterates and the two-phase integer scheme.
/// Newly generated cuts are appended to `pool` with least-cost provenance.
SolutionRecord benders_least_cost(const Instance& instance,
                                  const AlgoConfig& config, CutPool& pool);

}  // namespace cga
