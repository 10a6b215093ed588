#pragma once

// Internal helpers shared by the monolithic builders and the cut-generating
// subproblem: appending one operational block to an LP under construction.

#include "cga/lp.hpp"
#include "cga/model.hpp"

namespace cga::detail {

struct PeriodCols {
  int y0 = 0;      // first operational column
  int m = 0;       // operational variables (without slacks)
  int slack0 = 0;  // first slack column
  int nslack = 0;
  int coupling_row0 = 0;  // first coupling row in the LP
};

/// Appends y columns, penalized slack pairs for Y_p equality rows, Y_p rows,
/// and coupling rows. With planning_col0 >= 0 the coupling rows reference
/// planning columns; otherwise A_p x is folded into the right-hand side
/// using *fixed_x.
PeriodCols append_period(LinearProgram& lp, const OperationalBlock& blk,
                         int planning_col0, const Eigen::VectorXd* fixed_x);

/// Realized period cost d_p.y + penalty * slacks for a primal slice of an LP
/// assembled with append_period.
double period_cost_from_primal(const OperationalBlock& blk, const PeriodCols& pc,
                               const Eigen::VectorXd& primal);

/// Appends the planning constraint rows of X (bounds are set on the columns
/// by the caller).
void append_planning_rows(LinearProgram& lp, const Instance& instance,
                          int planning_col0);

}  // namespace cga::detail
