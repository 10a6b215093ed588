#pragma once

// Test-only fixtures and independent oracles. The LP oracle enumerates
// vertices by active-set combinations and never touches the simplex code
// path it is used to check.

#include <cmath>
#include <limits>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "cga/lp.hpp"
#include "cga/model.hpp"
#include "cga/rng.hpp"

namespace cga::test {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// The one-zone toy: one generator (capex 1, varcost 2), one period, one
/// hour of demand 1, capacity bounded by 2. Least-cost optimum x=1, total 3.
inline Instance toy_instance(double demand = 1.0, double x_upper = 2.0,
                             double slack_penalty = 1e4) {
  Instance inst;
  inst.name = "toy";
  inst.planning_cost = Eigen::VectorXd::Constant(1, 1.0);
  inst.planning.dim = 1;
  inst.planning.lower = Eigen::VectorXd::Zero(1);
  inst.planning.upper = Eigen::VectorXd::Constant(1, x_upper);
  OperationalBlock blk;
  blk.id = 1;
  blk.op_cost = Eigen::VectorXd::Constant(1, 2.0);
  blk.op_constraints.dim = 1;
  blk.op_constraints.lower = Eigen::VectorXd::Zero(1);
  blk.op_constraints.upper = Eigen::VectorXd::Constant(1, kInf);
  blk.op_constraints.rhs = {demand};
  blk.op_constraints.senses = {RowSense::Equal};
  blk.op_constraints.coeffs.emplace_back(0, 0, 1.0);
  blk.coupling.emplace_back(0, 0, -1.0);  // y - x <= 0
  blk.op_matrix.emplace_back(0, 0, 1.0);
  blk.rhs = Eigen::VectorXd::Zero(1);
  blk.senses = {RowSense::LessEqual};
  blk.slack_penalty = slack_penalty;
  inst.periods.push_back(std::move(blk));
  return inst;
}

/// Two zones, one link, one period with `hours` hours; deterministic costs.
inline Instance two_zone_instance(int hours = 2, int periods = 1) {
  Instance inst;
  inst.name = "two-zone";
  const int n = 3;  // gen A (cheap, zone 1), gen B (pricey, zone 2), link
  inst.planning_cost.resize(n);
  inst.planning_cost << 2.0, 1.0, 0.5;
  inst.planning.dim = n;
  inst.planning.lower = Eigen::VectorXd::Zero(n);
  inst.planning.upper = Eigen::VectorXd::Constant(n, 50.0);
  for (int p = 0; p < periods; ++p) {
    OperationalBlock blk;
    blk.id = p + 1;
    const int m = 3 * hours;  // yA, yB per hour, flow per hour
    blk.op_cost = Eigen::VectorXd::Zero(m);
    blk.op_constraints.dim = m;
    blk.op_constraints.lower = Eigen::VectorXd::Zero(m);
    blk.op_constraints.upper = Eigen::VectorXd::Constant(m, kInf);
    for (int t = 0; t < hours; ++t) {
      blk.op_cost(t) = 1.0;              // zone-1 generator
      blk.op_cost(hours + t) = 6.0;      // zone-2 generator
      int f = 2 * hours + t;             // flow zone1 -> zone2, signed
      blk.op_constraints.lower(f) = -kInf;
      double d1 = 4.0 + t + p, d2 = 6.0 - t + p;
      int r1 = blk.op_constraints.num_rows();
      blk.op_constraints.rhs.push_back(d1);
      blk.op_constraints.senses.push_back(RowSense::Equal);
      blk.op_constraints.coeffs.emplace_back(r1, t, 1.0);
      blk.op_constraints.coeffs.emplace_back(r1, f, -1.0);
      int r2 = blk.op_constraints.num_rows();
      blk.op_constraints.rhs.push_back(d2);
      blk.op_constraints.senses.push_back(RowSense::Equal);
      blk.op_constraints.coeffs.emplace_back(r2, hours + t, 1.0);
      blk.op_constraints.coeffs.emplace_back(r2, f, 1.0);
      // Capacity and flow limits couple to planning.
      auto couple = [&blk](int pcol, int ocol, double ocoef) {
        int r = blk.num_coupling_rows();
        blk.rhs.conservativeResize(r + 1);
        blk.rhs(r) = 0.0;
        blk.senses.push_back(RowSense::LessEqual);
        blk.coupling.emplace_back(r, pcol, -1.0);
        blk.op_matrix.emplace_back(r, ocol, ocoef);
      };
      couple(0, t, 1.0);
      couple(1, hours + t, 1.0);
      couple(2, f, 1.0);
      couple(2, f, -1.0);
    }
    blk.slack_penalty = 1e4;
    inst.periods.push_back(std::move(blk));
  }
  return inst;
}

/// Vertex-enumeration LP oracle for small bounded problems. Enumerates
/// active sets (equality rows always active), solves the square system, and
/// keeps the best feasible point. Returns nullopt when infeasible.
inline std::optional<double> oracle_lp_minimize(const LinearProgram& lp,
                                                Eigen::VectorXd* arg = nullptr) {
  const int n = lp.num_cols();
  struct Plane {
    Eigen::VectorXd a;
    double b;
    bool mandatory;
  };
  std::vector<Plane> planes;
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(lp.num_rows(), n);
  for (const auto& t : lp.rows) A(t.row(), t.col()) += t.value();
  for (int i = 0; i < lp.num_rows(); ++i)
    planes.push_back({A.row(i).transpose(), lp.rhs[i],
                      lp.senses[i] == RowSense::Equal});
  for (int j = 0; j < n; ++j) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(n);
    e(j) = 1.0;
    if (std::isfinite(lp.lower(j))) planes.push_back({e, lp.lower(j), false});
    if (std::isfinite(lp.upper(j))) planes.push_back({e, lp.upper(j), false});
  }
  auto feasible = [&](const Eigen::VectorXd& x) {
    for (int i = 0; i < lp.num_rows(); ++i) {
      double v = A.row(i).dot(x);
      switch (lp.senses[i]) {
        case RowSense::LessEqual:
          if (v > lp.rhs[i] + 1e-7) return false;
          break;
        case RowSense::GreaterEqual:
          if (v < lp.rhs[i] - 1e-7) return false;
          break;
        case RowSense::Equal:
          if (std::abs(v - lp.rhs[i]) > 1e-7) return false;
          break;
      }
    }
    for (int j = 0; j < n; ++j) {
      if (x(j) < lp.lower(j) - 1e-7 || x(j) > lp.upper(j) + 1e-7) return false;
    }
    return true;
  };

  std::vector<int> mandatory, optional_ids;
  for (size_t i = 0; i < planes.size(); ++i)
    (planes[i].mandatory ? mandatory : optional_ids).push_back(static_cast<int>(i));
  int need = n - static_cast<int>(mandatory.size());
  std::optional<double> best;
  Eigen::VectorXd best_x;
  std::vector<int> pick(std::max(need, 0));
  auto try_set = [&](const std::vector<int>& active) {
    Eigen::MatrixXd M(n, n);
    Eigen::VectorXd rhs(n);
    for (int r = 0; r < n; ++r) {
      M.row(r) = planes[active[r]].a.transpose();
      rhs(r) = planes[active[r]].b;
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(M);
    if (!lu.isInvertible()) return;
    Eigen::VectorXd x = lu.solve(rhs);
    if (!feasible(x)) return;
    double obj = lp.objective.dot(x);
    if (!best || obj < *best - 1e-12) {
      best = obj;
      best_x = x;
    }
  };
  if (need < 0) return std::nullopt;
  std::vector<int> active(mandatory);
  active.resize(n);
  // Enumerate combinations of the optional planes.
  std::vector<int> idx(need);
  for (int i = 0; i < need; ++i) idx[i] = i;
  if (need == 0) {
    try_set(mandatory);
  } else {
    const int count = static_cast<int>(optional_ids.size());
    if (count < need) return std::nullopt;
    while (true) {
      for (int i = 0; i < need; ++i)
        active[mandatory.size() + i] = optional_ids[idx[i]];
      try_set(active);
      int i = need - 1;
      while (i >= 0 && idx[i] == count - need + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < need; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  if (best && arg) *arg = best_x;
  return best;
}

/// Random feasible, bounded LP on a box with <= rows through a known point.
inline LinearProgram random_box_lp(int n, int m, std::uint64_t seed) {
  Rng rng(seed);
  LinearProgram lp;
  lp.add_cols(n, 0.0, 10.0);
  for (int j = 0; j < n; ++j) lp.objective(j) = rng.uniform(-1.0, 1.0);
  Eigen::VectorXd x0(n);
  for (int j = 0; j < n; ++j) x0(j) = rng.uniform(0.0, 10.0);
  for (int i = 0; i < m; ++i) {
    Eigen::VectorXd a(n);
    for (int j = 0; j < n; ++j) a(j) = rng.uniform(-1.0, 1.0);
    double slackness = rng.uniform(0.0, 5.0);
    int row = lp.add_row(RowSense::LessEqual, a.dot(x0) + slackness);
    for (int j = 0; j < n; ++j)
      if (a(j) != 0.0) lp.set_coeff(row, j, a(j));
  }
  return lp;
}

}  // namespace cga::test
