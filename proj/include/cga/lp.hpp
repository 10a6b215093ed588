#pragma once

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include <string>
#include <vector>

#include "cga/model.hpp"

namespace cga {

/// Minimization LP/MILP in row form. Rows are sparse triplets; variable
/// bounds may be +-infinity. Nonempty integer_flags marks integral columns.
struct LinearProgram {
  Eigen::VectorXd objective;
  std::vector<Eigen::Triplet<double>> rows;
  std::vector<double> rhs;
  std::vector<RowSense> senses;
  Eigen::VectorXd lower;
  Eigen::VectorXd upper;
  std::vector<char> integer_flags;  // empty = fully continuous

  int num_cols() const { return static_cast<int>(objective.size()); }
  int num_rows() const { return static_cast<int>(rhs.size()); }
  bool has_integers() const;

  /// Appends `count` columns with identical bounds and zero objective;
  /// returns the index of the first new column.
  int add_cols(int count, double lo, double hi);
  /// Appends an empty row, returns its index.
  int add_row(RowSense sense, double rhs_value);
  void set_coeff(int row, int col, double value);
};

enum class LpStatus { Optimal, Infeasible, Unbounded, Limit };

/// Dual convention: duals[i] = d(objective)/d(rhs[i]) under minimization.
/// LessEqual rows have nonpositive duals, GreaterEqual rows nonnegative.
struct SolveResult {
  LpStatus status = LpStatus::Limit;
  Eigen::VectorXd primal;
  Eigen::VectorXd duals;  // empty for MILP solves
  double objective = 0.0;
  bool is_basic = false;
};

/// Solves a continuous LP with the configured backend. Integrality flags
/// must be absent or all zero. Basic (vertex) solutions are returned, so
/// duals are well defined for cut generation.
SolveResult solve_lp(const LinearProgram& lp, bool need_duals = false);

/// Branch-and-bound over solve_lp. Flagged columns are integral within 1e-6
/// in the result; no duals are returned.
SolveResult solve_milp(const LinearProgram& lp);

/// Active backend name. Selected via the CGA_LP_BACKEND environment
/// variable; the built-in dense simplex ("reference") is always available
/// and is the default.
std::string lp_backend_name();

const char* to_string(LpStatus s);

}  // namespace cga
