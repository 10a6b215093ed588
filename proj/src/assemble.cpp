#include "assemble.hpp"

#include <limits>

namespace cga::detail {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

PeriodCols append_period(LinearProgram& lp, const OperationalBlock& blk,
                         int planning_col0, const Eigen::VectorXd* fixed_x) {
  PeriodCols pc;
  pc.m = blk.num_op_vars();
  pc.y0 = lp.add_cols(pc.m, 0.0, kInf);
  for (int j = 0; j < pc.m; ++j) {
    lp.objective(pc.y0 + j) = blk.op_cost(j);
    lp.lower(pc.y0 + j) = blk.op_constraints.lower(j);
    lp.upper(pc.y0 + j) = blk.op_constraints.upper(j);
  }
  // One shortfall/surplus slack pair per equality row of Y_p.
  int eq_rows = 0;
  for (auto s : blk.op_constraints.senses)
    if (s == RowSense::Equal) ++eq_rows;
  pc.nslack = 2 * eq_rows;
  pc.slack0 = lp.add_cols(pc.nslack, 0.0, kInf);
  for (int j = 0; j < pc.nslack; ++j)
    lp.objective(pc.slack0 + j) = blk.slack_penalty;

  // Y_p rows.
  int yrow0 = lp.num_rows();
  for (int i = 0; i < blk.op_constraints.num_rows(); ++i)
    lp.add_row(blk.op_constraints.senses[i], blk.op_constraints.rhs[i]);
  for (const auto& t : blk.op_constraints.coeffs)
    lp.set_coeff(yrow0 + t.row(), pc.y0 + t.col(), t.value());
  int slack = pc.slack0;
  for (int i = 0; i < blk.op_constraints.num_rows(); ++i) {
    if (blk.op_constraints.senses[i] != RowSense::Equal) continue;
    lp.set_coeff(yrow0 + i, slack++, 1.0);
    lp.set_coeff(yrow0 + i, slack++, -1.0);
  }

  // Coupling rows A_p x + B_p y <= b_p (sense per row).
  pc.coupling_row0 = lp.num_rows();
  Eigen::VectorXd rhs = blk.rhs;
  if (fixed_x) {
    for (const auto& t : blk.coupling) rhs(t.row()) -= t.value() * (*fixed_x)(t.col());
  }
  for (int i = 0; i < blk.num_coupling_rows(); ++i)
    lp.add_row(blk.senses[i], rhs(i));
  for (const auto& t : blk.op_matrix)
    lp.set_coeff(pc.coupling_row0 + t.row(), pc.y0 + t.col(), t.value());
  if (!fixed_x) {
    for (const auto& t : blk.coupling)
      lp.set_coeff(pc.coupling_row0 + t.row(), planning_col0 + t.col(), t.value());
  }
  return pc;
}

double period_cost_from_primal(const OperationalBlock& blk, const PeriodCols& pc,
                               const Eigen::VectorXd& primal) {
  double cost = blk.op_cost.dot(primal.segment(pc.y0, pc.m));
  cost += blk.slack_penalty * primal.segment(pc.slack0, pc.nslack).sum();
  return cost;
}

void append_planning_rows(LinearProgram& lp, const Instance& instance,
                          int planning_col0) {
  const auto& X = instance.planning;
  int row0 = lp.num_rows();
  for (int i = 0; i < X.num_rows(); ++i) lp.add_row(X.senses[i], X.rhs[i]);
  for (const auto& t : X.coeffs)
    lp.set_coeff(row0 + t.row(), planning_col0 + t.col(), t.value());
}

}  // namespace cga::detail
