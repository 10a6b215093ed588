#pragma once

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include <optional>
#include <string>
#include <vector>

namespace cga {

enum class RowSense { LessEqual, Equal, GreaterEqual };

/// Sparse linear constraints over a fixed variable space: rows stored as
/// triplets plus per-variable bounds.
struct ConstraintSet {
  int dim = 0;
  std::vector<Eigen::Triplet<double>> coeffs;
  std::vector<double> rhs;
  std::vector<RowSense> senses;
  Eigen::VectorXd lower;  // size dim
  Eigen::VectorXd upper;  // size dim

  int num_rows() const { return static_cast<int>(rhs.size()); }
};

/// One operational period: dispatch costs, coupling to planning decisions,
/// and the operational-only constraint set. Equality rows of op_constraints
/// receive penalized slack columns when the period is assembled into an LP,
/// so the cut-generating subproblem is feasible for any planning vector.
struct OperationalBlock {
  int id = 0;  // 1-based, contiguous across the instance
  Eigen::VectorXd op_cost;                        // d_p
  std::vector<Eigen::Triplet<double>> coupling;   // A_p, r x n
  std::vector<Eigen::Triplet<double>> op_matrix;  // B_p, r x m
  Eigen::VectorXd rhs;                            // b_p, length r
  std::vector<RowSense> senses;                   // coupling row senses
  ConstraintSet op_constraints;                   // Y_p over m operational vars
  double slack_penalty = 0.0;

  int num_coupling_rows() const { return static_cast<int>(rhs.size()); }
  int num_op_vars() const { return static_cast<int>(op_cost.size()); }
};

/// Full two-block planning problem. Immutable after construction; shared
/// freely across worker threads.
struct Instance {
  std::string name;
  Eigen::VectorXd planning_cost;    // c
  ConstraintSet planning;           // X, including variable bounds
  std::vector<char> integer_flags;  // size n, nonzero = integral variable
  std::vector<OperationalBlock> periods;

  int planning_dim() const { return static_cast<int>(planning_cost.size()); }
  int num_periods() const { return static_cast<int>(periods.size()); }
  bool has_integers() const;
};

struct TraceEntry {
  int iteration = 0;
  double lb = 0.0;  // master objective / lower bound
  double ub = 0.0;  // incumbent cost (least-cost) or true cost (MGA)
  double master_seconds = 0.0;
  double subproblem_seconds = 0.0;
  bool integer_phase = false;
};

enum class SolveOutcome { Converged, IterationLimit, Infeasible };

struct SolutionRecord {
  Eigen::VectorXd planning;
  Eigen::VectorXd period_costs;  // realized f_p(x), one per period
  double total_cost = 0.0;
  std::optional<double> mga_objective;
  std::vector<TraceEntry> trace;
  SolveOutcome status = SolveOutcome::Infeasible;
};

/// Checks every structural invariant of an instance. Returns one message per
/// violation; an empty report means the instance is valid.
std::vector<std::string> validate_instance(const Instance& instance);

/// c.x + sum_p d_p.y_p. Throws std::invalid_argument on dimension mismatch.
double evaluate_total_cost(const Instance& instance,
                           const Eigen::VectorXd& planning,
                           const std::vector<Eigen::VectorXd>& op_decisions);

const char* to_string(SolveOutcome s);

}  // namespace cga
