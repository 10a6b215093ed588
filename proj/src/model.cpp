#include "cga/model.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace cga {

namespace {

int max_col(const std::vector<Eigen::Triplet<double>>& ts) {
  int c = -1;
  for (const auto& t : ts) c = std::max(c, t.col());
  return c;
}

int max_row(const std::vector<Eigen::Triplet<double>>& ts) {
  int r = -1;
  for (const auto& t : ts) r = std::max(r, t.row());
  return r;
}

void check_constraint_set(const ConstraintSet& cs, const std::string& where,
                          std::vector<std::string>& report) {
  if (cs.lower.size() != cs.dim || cs.upper.size() != cs.dim)
    report.push_back(where + ": bound vectors must have length dim");
  if (cs.senses.size() != cs.rhs.size())
    report.push_back(where + ": senses and rhs must have equal length");
  if (max_col(cs.coeffs) >= cs.dim)
    report.push_back(where + ": coefficient column exceeds dim");
  if (max_row(cs.coeffs) >= cs.num_rows())
    report.push_back(where + ": coefficient row exceeds row count");
}

}  // namespace

bool Instance::has_integers() const {
  for (char f : integer_flags)
    if (f) return true;
  return false;
}

std::vector<std::string> validate_instance(const Instance& instance) {
  std::vector<std::string> report;
  const int n = instance.planning_dim();
  if (n == 0) report.push_back("planning_cost: must be nonempty");
  if (instance.planning.dim != n)
    report.push_back("planning: constraint set dim must equal planning dimension");
  check_constraint_set(instance.planning, "planning", report);
  if (!instance.integer_flags.empty() &&
      static_cast<int>(instance.integer_flags.size()) != n)
    report.push_back("integer_flags: length must equal planning dimension");
  if (instance.periods.empty()) report.push_back("periods: at least one period required");
  int expect_id = 1;
  for (const auto& blk : instance.periods) {
    std::ostringstream tag;
    tag << "period " << blk.id;
    const std::string where = tag.str();
    if (blk.id != expect_id++)
      report.push_back(where + ": ids must be unique and contiguous from 1");
    const int r = blk.num_coupling_rows();
    const int m = blk.num_op_vars();
    if (static_cast<int>(blk.senses.size()) != r)
      report.push_back(where + ": coupling senses must match rhs length");
    if (max_col(blk.coupling) >= n)
      report.push_back(where + ": coupling_matrix has more than n columns");
    if (max_row(blk.coupling) >= r)
      report.push_back(where + ": coupling_matrix row exceeds rhs length");
    if (max_col(blk.op_matrix) >= m)
      report.push_back(where + ": op_matrix column exceeds operational dimension");
    if (max_row(blk.op_matrix) >= r)
      report.push_back(where + ": op_matrix row exceeds rhs length");
    if (blk.op_constraints.dim != m)
      report.push_back(where + ": op_constraints dim must equal operational dimension");
    check_constraint_set(blk.op_constraints, where + " op_constraints", report);
    if (!(blk.slack_penalty > 0.0))
      report.push_back(where + ": slack_penalty must be strictly positive");
    for (int j = 0; j < m; ++j) {
      if (blk.op_cost(j) >= blk.slack_penalty) {
        report.push_back(where +
                         ": slack_penalty must exceed every op_cost entry");
        break;
      }
    }
  }
  return report;
}

double evaluate_total_cost(const Instance& instance,
                           const Eigen::VectorXd& planning,
                           const std::vector<Eigen::VectorXd>& op_decisions) {
  if (planning.size() != instance.planning_dim())
    throw std::invalid_argument("evaluate_total_cost: planning dimension mismatch");
  if (op_decisions.size() != instance.periods.size())
    throw std::invalid_argument("evaluate_total_cost: one decision vector per period required");
  double total = instance.planning_cost.dot(planning);
  for (size_t p = 0; p < instance.periods.size(); ++p) {
    const auto& blk = instance.periods[p];
    if (op_decisions[p].size() != blk.num_op_vars())
      throw std::invalid_argument("evaluate_total_cost: operational dimension mismatch");
    total += blk.op_cost.dot(op_decisions[p]);
  }
  return total;
}

const char* to_string(SolveOutcome s) {
  switch (s) {
    case SolveOutcome::Converged:
      return "converged";
    case SolveOutcome::IterationLimit:
      return "iteration-limit";
    default:
      return "infeasible";
  }
}

}  // namespace cga
