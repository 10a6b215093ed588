#pragma once

#include "cga/lp.hpp"
#include "cga/model.hpp"

namespace cga {

/// A fully assembled monolithic LP/MILP plus the column bookkeeping needed
/// to map a primal solution back onto the instance structure.
struct MonolithBuild {
  LinearProgram lp;
  int n = 0;  // planning columns are 0..n-1
  std::vector<int> period_y0;
  std::vector<int> period_m;
  std::vector<int> period_slack0;
  std::vector<int> period_nslack;
  int budget_row = -1;  // >= 0 iff this is an MGA build
};

/// Single-LP least-cost problem over planning and all operational periods.
MonolithBuild build_least_cost(const Instance& instance);

/// Monolithic MGA problem: minimize w.x subject to the full least-cost
/// constraint system plus the budget row c.x + sum_p d_p.y_p <= epsilon.
MonolithBuild build_mga_monolith(const Instance& instance,
                                 const Eigen::VectorXd& w, double epsilon);

/// Solves the build and decomposes the primal into a SolutionRecord. Period
/// costs are recomputed from primal values, never read from the backend.
SolutionRecord solve_monolith(const Instance& instance, const MonolithBuild& build);

}  // namespace cga
