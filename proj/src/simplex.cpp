// Reference dense simplex backend: two-phase primal simplex on bounded
// variables with an explicitly maintained basis inverse. Intended for
// desk-scale problems (a few thousand rows); periodically refactorizes the
// basis with a dense LU to control drift.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>

#include "cga/lp.hpp"

namespace cga {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kDualTol = 1e-8;
constexpr double kPivotTol = 1e-9;
constexpr double kFeasTol = 1e-8;

enum class VStat { Basic, AtLower, AtUpper, FreeZero };

class DenseSimplex {
 public:
  explicit DenseSimplex(const LinearProgram& lp, int refactor_period = 80)
      : m_(lp.num_rows()), refactor_period_(refactor_period) {
    nstruct_ = lp.num_cols();
    // Column layout: structural | slacks | artificials (added lazily).
    b_ = Eigen::Map<const Eigen::VectorXd>(lp.rhs.data(), m_);
    int base = nstruct_ + m_;
    A_ = Eigen::MatrixXd::Zero(m_, base);
    for (const auto& t : lp.rows) {
      if (t.row() < 0 || t.row() >= m_ || t.col() < 0 || t.col() >= nstruct_)
        throw std::invalid_argument("lp: triplet index out of range");
      A_(t.row(), t.col()) += t.value();
    }
    lo_.resize(base);
    hi_.resize(base);
    cost_ = Eigen::VectorXd::Zero(base);
    cost_.head(nstruct_) = lp.objective;
    lo_.head(nstruct_) = lp.lower;
    hi_.head(nstruct_) = lp.upper;
    for (int i = 0; i < m_; ++i) {
      int j = nstruct_ + i;
      A_(i, j) = 1.0;
      switch (lp.senses[i]) {
        case RowSense::LessEqual:
          lo_(j) = 0.0;
          hi_(j) = kInf;
          break;
        case RowSense::GreaterEqual:
          lo_(j) = -kInf;
          hi_(j) = 0.0;
          break;
        case RowSense::Equal:
          lo_(j) = 0.0;
          hi_(j) = 0.0;
          break;
      }
    }
  }

  SolveResult run() {
    init_basis();
    SolveResult out;
    if (num_art_ > 0) {
      Eigen::VectorXd phase1 = Eigen::VectorXd::Zero(ntot_);
      phase1.segment(nstruct_ + m_, num_art_).setOnes();
      LpStatus st = iterate(phase1, /*phase1=*/true);
      if (st == LpStatus::Limit) {
        out.status = LpStatus::Limit;
        return out;
      }
      double infeas = phase1_objective();
      if (infeas > 1e-6 * (1.0 + b_.cwiseAbs().maxCoeff())) {
        out.status = LpStatus::Infeasible;
        return out;
      }
      drive_out_artificials();
      // Artificials stay fixed at zero for phase 2.
      for (int j = nstruct_ + m_; j < ntot_; ++j) {
        lo_(j) = 0.0;
        hi_(j) = 0.0;
        if (vstat_[j] != VStat::Basic) vstat_[j] = VStat::AtLower;
      }
    }
    Eigen::VectorXd full_cost = Eigen::VectorXd::Zero(ntot_);
    full_cost.head(nstruct_ + m_) = cost_.head(nstruct_ + m_);
    // Optimize, then verify primal feasibility against a fresh factorization.
    // A pivot computed through an ill-conditioned basis can push a basic
    // variable truly out of bounds; dual-simplex pivots repair that without
    // giving up the (dual-feasible) optimal basis, after which we reoptimize.
    LpStatus st = LpStatus::Limit;
    for (int round = 0; round < 6; ++round) {
      st = iterate(full_cost, /*phase1=*/false);
      if (st != LpStatus::Optimal) break;
      refactorize();
      if (basic_violation() <= kFeasTol) break;
      if (!restore_feasibility(full_cost)) break;
    }
    out.status = st;
    if (st != LpStatus::Optimal) return out;
    Eigen::VectorXd x = nonbasic_values();
    for (int i = 0; i < m_; ++i) x(basis_[i]) = xB_(i);
    out.primal = x.head(nstruct_);
    out.objective = cost_.head(nstruct_).dot(out.primal);
    out.duals = binv_.transpose() * basic_costs(full_cost);
    out.is_basic = true;
    return out;
  }

 private:
  void init_basis() {
    vstat_.assign(nstruct_ + m_, VStat::AtLower);
    for (int j = 0; j < nstruct_; ++j) {
      if (std::isfinite(lo_(j)))
        vstat_[j] = VStat::AtLower;
      else if (std::isfinite(hi_(j)))
        vstat_[j] = VStat::AtUpper;
      else
        vstat_[j] = VStat::FreeZero;
    }
    // Slack basis; value of slack i is the row residual.
    basis_.resize(m_);
    Eigen::VectorXd resid = b_;
    for (int j = 0; j < nstruct_; ++j) {
      double v = nonbasic_value(j);
      if (v != 0.0) resid -= A_.col(j) * v;
    }
    // Rows whose residual falls outside the slack bounds get an artificial.
    std::vector<int> bad;
    for (int i = 0; i < m_; ++i) {
      int sj = nstruct_ + i;
      if (resid(i) < lo_(sj) - kFeasTol || resid(i) > hi_(sj) + kFeasTol)
        bad.push_back(i);
    }
    num_art_ = static_cast<int>(bad.size());
    ntot_ = nstruct_ + m_ + num_art_;
    A_.conservativeResize(Eigen::NoChange, ntot_);
    A_.rightCols(num_art_).setZero();
    lo_.conservativeResize(ntot_);
    hi_.conservativeResize(ntot_);
    cost_.conservativeResize(ntot_);
    vstat_.resize(ntot_, VStat::AtLower);
    xB_.resize(m_);
    for (int i = 0; i < m_; ++i) {
      int sj = nstruct_ + i;
      basis_[i] = sj;
      vstat_[sj] = VStat::Basic;
      xB_(i) = resid(i);
    }
    for (int a = 0; a < num_art_; ++a) {
      int i = bad[a];
      int sj = nstruct_ + i;
      int aj = nstruct_ + m_ + a;
      // Clamp the slack to its nearest bound; the artificial absorbs the rest.
      double sval = std::clamp(resid(i), lo_(sj), hi_(sj));
      vstat_[sj] = (sval == hi_(sj) && std::isfinite(hi_(sj))) ? VStat::AtUpper
                                                              : VStat::AtLower;
      double r = resid(i) - sval;
      A_(i, aj) = (r >= 0.0) ? 1.0 : -1.0;
      lo_(aj) = 0.0;
      hi_(aj) = kInf;
      cost_(aj) = 0.0;
      basis_[i] = aj;
      vstat_[aj] = VStat::Basic;
      xB_(i) = std::abs(r);
    }
    binv_ = Eigen::MatrixXd::Identity(m_, m_);
    for (int a = 0; a < num_art_; ++a) {
      int i = bad[a];
      if (A_(i, basis_[i]) < 0.0) binv_(i, i) = -1.0;
    }
  }

  double nonbasic_value(int j) const {
    switch (vstat_[j]) {
      case VStat::AtLower:
        return std::isfinite(lo_(j)) ? lo_(j) : 0.0;
      case VStat::AtUpper:
        return std::isfinite(hi_(j)) ? hi_(j) : 0.0;
      default:
        return 0.0;
    }
  }

  Eigen::VectorXd nonbasic_values() const {
    Eigen::VectorXd x = Eigen::VectorXd::Zero(ntot_);
    for (int j = 0; j < ntot_; ++j)
      if (vstat_[j] != VStat::Basic) x(j) = nonbasic_value(j);
    return x;
  }

  Eigen::VectorXd basic_costs(const Eigen::VectorXd& c) const {
    Eigen::VectorXd cb(m_);
    for (int i = 0; i < m_; ++i) cb(i) = c(basis_[i]);
    return cb;
  }

  double phase1_objective() const {
    double s = 0.0;
    for (int i = 0; i < m_; ++i)
      if (basis_[i] >= nstruct_ + m_) s += xB_(i);
    return s;
  }

  void refactorize() {
    Eigen::MatrixXd B(m_, m_);
    for (int i = 0; i < m_; ++i) B.col(i) = A_.col(basis_[i]);
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(B);
    binv_ = lu.inverse();
    Eigen::VectorXd rhs = b_;
    for (int j = 0; j < ntot_; ++j) {
      if (vstat_[j] == VStat::Basic) continue;
      double v = nonbasic_value(j);
      if (v != 0.0) rhs -= A_.col(j) * v;
    }
    // Solve with one step of iterative refinement; on ill-conditioned bases
    // the explicit inverse alone loses noticeably more accuracy.
    xB_ = lu.solve(rhs);
    xB_ += lu.solve(rhs - B * xB_);
    since_refactor_ = 0;
  }

  double basic_violation() const {
    double worst = 0.0;
    for (int i = 0; i < m_; ++i) {
      int bj = basis_[i];
      worst = std::max(worst, lo_(bj) - xB_(i));
      worst = std::max(worst, xB_(i) - hi_(bj));
    }
    return worst;
  }

  // Dual-simplex repair: while some basic variable sits outside its bounds,
  // drop it to the violated bound and bring in the column that best preserves
  // dual feasibility. Each pass refactorizes, so progress is measured against
  // exact basic values.
  bool restore_feasibility(const Eigen::VectorXd& c) {
    for (int iter = 0; iter < 50; ++iter) {
      int r = -1;
      bool below = false;
      double worst = kFeasTol;
      for (int i = 0; i < m_; ++i) {
        int bj = basis_[i];
        if (lo_(bj) - xB_(i) > worst) {
          worst = lo_(bj) - xB_(i);
          r = i;
          below = true;
        }
        if (xB_(i) - hi_(bj) > worst) {
          worst = xB_(i) - hi_(bj);
          r = i;
          below = false;
        }
      }
      if (r < 0) return true;

      Eigen::RowVectorXd rho = binv_.row(r);
      Eigen::VectorXd y = binv_.transpose() * basic_costs(c);
      int enter = -1;
      double enter_arj = 0.0;
      double best_ratio = kInf;
      for (int j = 0; j < ntot_; ++j) {
        if (vstat_[j] == VStat::Basic || lo_(j) == hi_(j)) continue;
        double arj = rho.dot(A_.col(j));
        if (std::abs(arj) <= kPivotTol) continue;
        // Direction the nonbasic variable may move and its effect on xB_(r):
        // delta xB_(r) = -s * t * arj with t >= 0.
        double s;
        if (vstat_[j] == VStat::AtLower)
          s = 1.0;
        else if (vstat_[j] == VStat::AtUpper)
          s = -1.0;
        else
          s = (below == (arj < 0.0)) ? 1.0 : -1.0;  // free: pick helping sign
        double effect = -s * arj;
        if (below ? (effect <= 0.0) : (effect >= 0.0)) continue;
        double d = c(j) - y.dot(A_.col(j));
        double ratio = std::abs(d) / std::abs(arj);
        if (ratio < best_ratio - 1e-12 ||
            (ratio < best_ratio + 1e-12 &&
             (enter < 0 || std::abs(arj) > std::abs(enter_arj)))) {
          best_ratio = ratio;
          enter = j;
          enter_arj = arj;
        }
      }
      if (enter < 0) return false;

      int leaving_var = basis_[r];
      vstat_[leaving_var] = below ? VStat::AtLower : VStat::AtUpper;
      if (!std::isfinite(lo_(leaving_var)) && !std::isfinite(hi_(leaving_var)))
        vstat_[leaving_var] = VStat::FreeZero;
      basis_[r] = enter;
      vstat_[enter] = VStat::Basic;
      refactorize();
    }
    return false;
  }

  LpStatus iterate(const Eigen::VectorXd& c, bool phase1) {
    const long iter_cap = 20000 + 200L * (m_ + nstruct_);
    const long bland_after = 2000 + 20L * (m_ + nstruct_);
    long iter = 0;
    bool bland = false;
    while (true) {
      if (++iter > iter_cap) return LpStatus::Limit;
      if (iter > bland_after) bland = true;
      if (since_refactor_ >= refactor_period_) refactorize();

      Eigen::VectorXd y = binv_.transpose() * basic_costs(c);
      int entering = -1;
      double entering_dir = 0.0;
      double best = kDualTol;
      for (int j = 0; j < ntot_; ++j) {
        if (vstat_[j] == VStat::Basic) continue;
        if (lo_(j) == hi_(j)) continue;  // fixed
        double d = c(j) - y.dot(A_.col(j));
        double dir = 0.0;
        if (vstat_[j] == VStat::AtLower && d < -kDualTol)
          dir = 1.0;
        else if (vstat_[j] == VStat::AtUpper && d > kDualTol)
          dir = -1.0;
        else if (vstat_[j] == VStat::FreeZero && std::abs(d) > kDualTol)
          dir = (d < 0.0) ? 1.0 : -1.0;
        if (dir == 0.0) continue;
        if (bland) {
          entering = j;
          entering_dir = dir;
          break;
        }
        if (std::abs(d) > best) {
          best = std::abs(d);
          entering = j;
          entering_dir = dir;
        }
      }
      if (entering < 0) {
        // Confirm with a fresh factorization before declaring optimality.
        if (since_refactor_ > 0) {
          refactorize();
          Eigen::VectorXd y2 = binv_.transpose() * basic_costs(c);
          bool clean = true;
          for (int j = 0; j < ntot_ && clean; ++j) {
            if (vstat_[j] == VStat::Basic || lo_(j) == hi_(j)) continue;
            double d = c(j) - y2.dot(A_.col(j));
            if ((vstat_[j] == VStat::AtLower && d < -10 * kDualTol) ||
                (vstat_[j] == VStat::AtUpper && d > 10 * kDualTol) ||
                (vstat_[j] == VStat::FreeZero && std::abs(d) > 10 * kDualTol))
              clean = false;
          }
          if (!clean) continue;
        }
        return LpStatus::Optimal;
      }

      Eigen::VectorXd alpha = binv_ * A_.col(entering);
      // Ratio test: smallest step at which a basic variable or the entering
      // variable itself hits a bound.
      double step = kInf;
      int leave = -1;
      double leave_pivot = 0.0;
      bool leave_to_upper = false;
      double range = hi_(entering) - lo_(entering);
      if (std::isfinite(range)) step = range;
      for (int i = 0; i < m_; ++i) {
        double a = entering_dir * alpha(i);
        int bj = basis_[i];
        double room = kInf;
        bool to_upper = false;
        if (a > kPivotTol) {
          if (std::isfinite(lo_(bj))) room = (xB_(i) - lo_(bj)) / a;
        } else if (a < -kPivotTol) {
          if (std::isfinite(hi_(bj))) {
            room = (hi_(bj) - xB_(i)) / (-a);
            to_upper = true;
          }
        } else {
          continue;
        }
        if (room < -1e-9) room = 0.0;
        bool better = false;
        if (room < step - 1e-9) {
          better = true;
        } else if (room < step + 1e-9 && leave >= 0) {
          if (bland)
            better = basis_[i] < basis_[leave];
          else
            better = std::abs(alpha(i)) > std::abs(leave_pivot);
        } else if (room < step + 1e-9 && leave < 0 && room <= step) {
          better = true;
        }
        if (better) {
          step = std::min(step, std::max(room, 0.0));
          leave = i;
          leave_pivot = alpha(i);
          leave_to_upper = to_upper;
        }
      }
      if (!std::isfinite(step)) {
        return phase1 ? LpStatus::Limit : LpStatus::Unbounded;
      }
      // Apply the step.
      double enter_val = nonbasic_value(entering) + entering_dir * step;
      xB_ -= (entering_dir * step) * alpha;
      if (leave < 0) {
        // Bound flip, basis unchanged.
        vstat_[entering] =
            (vstat_[entering] == VStat::AtLower) ? VStat::AtUpper : VStat::AtLower;
        continue;
      }
      int leaving_var = basis_[leave];
      vstat_[leaving_var] = leave_to_upper ? VStat::AtUpper : VStat::AtLower;
      if (!std::isfinite(lo_(leaving_var)) && !std::isfinite(hi_(leaving_var)))
        vstat_[leaving_var] = VStat::FreeZero;
      basis_[leave] = entering;
      vstat_[entering] = VStat::Basic;
      xB_(leave) = enter_val;
      // Product-form update of the inverse.
      double piv = leave_pivot;
      binv_.row(leave) /= piv;
      for (int i = 0; i < m_; ++i) {
        if (i == leave) continue;
        double f = alpha(i);
        if (f != 0.0) binv_.row(i) -= f * binv_.row(leave);
      }
      ++since_refactor_;
    }
  }

  // Pivot residual-zero artificials out of the basis where possible; rows
  // where no eligible pivot exists are redundant and keep the artificial
  // fixed at zero.
  void drive_out_artificials() {
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] < nstruct_ + m_) continue;
      Eigen::RowVectorXd row = binv_.row(i);
      int pick = -1;
      for (int j = 0; j < nstruct_ + m_; ++j) {
        if (vstat_[j] == VStat::Basic || lo_(j) == hi_(j)) continue;
        if (std::abs(row.dot(A_.col(j))) > 1e-7) {
          pick = j;
          break;
        }
      }
      if (pick < 0) continue;
      Eigen::VectorXd alpha = binv_ * A_.col(pick);
      int art = basis_[i];
      basis_[i] = pick;
      vstat_[art] = VStat::AtLower;
      vstat_[pick] = VStat::Basic;
      double entering_value = nonbasic_value(pick);
      xB_(i) = entering_value;
      double piv = alpha(i);
      binv_.row(i) /= piv;
      for (int r = 0; r < m_; ++r) {
        if (r == i) continue;
        double f = alpha(r);
        if (f != 0.0) binv_.row(r) -= f * binv_.row(i);
      }
      refactorize();
    }
  }

  int m_ = 0;
  int nstruct_ = 0;
  int ntot_ = 0;
  int num_art_ = 0;
  Eigen::MatrixXd A_;
  Eigen::MatrixXd binv_;
  Eigen::VectorXd b_, cost_, lo_, hi_, xB_;
  std::vector<int> basis_;
  std::vector<VStat> vstat_;
  int since_refactor_ = 0;
  int refactor_period_ = 80;
};

// Power-of-two row/column equilibration. Cut rows can mix coefficients of
// order 1 with penalty-driven values of order 1e8, which an absolute-
// tolerance simplex cannot handle; scaling by exact powers of two fixes the
// conditioning without introducing any rounding, so results stay
// deterministic.
struct Equilibration {
  Eigen::VectorXd row_scale;
  Eigen::VectorXd col_scale;
};

double pow2_scale(double magnitude) {
  if (magnitude <= 0.0 || !std::isfinite(magnitude)) return 1.0;
  int exp = 0;
  std::frexp(magnitude, &exp);  // magnitude ~ 2^exp
  exp = std::clamp(exp, -40, 40);
  return std::ldexp(1.0, -exp);
}

Equilibration equilibrate(LinearProgram& lp) {
  const int m = lp.num_rows();
  const int n = lp.num_cols();
  Equilibration eq;
  eq.row_scale = Eigen::VectorXd::Ones(m);
  eq.col_scale = Eigen::VectorXd::Ones(n);
  Eigen::VectorXd row_max = Eigen::VectorXd::Zero(m);
  for (const auto& t : lp.rows)
    row_max(t.row()) = std::max(row_max(t.row()), std::abs(t.value()));
  for (int i = 0; i < m; ++i) eq.row_scale(i) = pow2_scale(row_max(i));
  Eigen::VectorXd col_max = Eigen::VectorXd::Zero(n);
  for (const auto& t : lp.rows)
    col_max(t.col()) = std::max(col_max(t.col()),
                                eq.row_scale(t.row()) * std::abs(t.value()));
  for (int j = 0; j < n; ++j) eq.col_scale(j) = pow2_scale(col_max(j));

  for (auto& t : lp.rows)
    t = {t.row(), t.col(),
         t.value() * eq.row_scale(t.row()) * eq.col_scale(t.col())};
  for (int i = 0; i < m; ++i) lp.rhs[i] *= eq.row_scale(i);
  for (int j = 0; j < n; ++j) {
    lp.objective(j) *= eq.col_scale(j);
    lp.lower(j) /= eq.col_scale(j);
    lp.upper(j) /= eq.col_scale(j);
  }
  return eq;
}

void check_lp(const LinearProgram& lp) {
  int n = lp.num_cols();
  int m = lp.num_rows();
  if (lp.lower.size() != n || lp.upper.size() != n)
    throw std::invalid_argument("lp: bound vectors must match column count");
  if (static_cast<int>(lp.senses.size()) != m)
    throw std::invalid_argument("lp: sense count must match row count");
  if (!lp.integer_flags.empty() && static_cast<int>(lp.integer_flags.size()) != n)
    throw std::invalid_argument("lp: integer flag count must match column count");
}

}  // namespace

bool LinearProgram::has_integers() const {
  for (char f : integer_flags)
    if (f) return true;
  return false;
}

int LinearProgram::add_cols(int count, double lo, double hi) {
  int first = num_cols();
  objective.conservativeResize(first + count);
  lower.conservativeResize(first + count);
  upper.conservativeResize(first + count);
  objective.tail(count).setZero();
  lower.tail(count).setConstant(lo);
  upper.tail(count).setConstant(hi);
  if (!integer_flags.empty()) integer_flags.resize(first + count, 0);
  return first;
}

int LinearProgram::add_row(RowSense sense, double rhs_value) {
  rhs.push_back(rhs_value);
  senses.push_back(sense);
  return static_cast<int>(rhs.size()) - 1;
}

void LinearProgram::set_coeff(int row, int col, double value) {
  rows.emplace_back(row, col, value);
}

std::string lp_backend_name() {
  const char* env = std::getenv("CGA_LP_BACKEND");
  if (env && *env && std::string(env) != "reference")
    throw std::runtime_error(std::string("unknown LP backend: ") + env);
  return "reference";
}

SolveResult solve_lp(const LinearProgram& lp, bool need_duals) {
  check_lp(lp);
  if (lp.has_integers())
    throw std::invalid_argument("solve_lp: integrality flags set, use solve_milp");
  (void)lp_backend_name();
  if (lp.num_rows() == 0) {
    // Pure bound problem; solve column-wise.
    SolveResult out;
    out.primal.resize(lp.num_cols());
    for (int j = 0; j < lp.num_cols(); ++j) {
      double c = lp.objective(j);
      double v;
      if (c > 0)
        v = lp.lower(j);
      else if (c < 0)
        v = lp.upper(j);
      else
        v = std::isfinite(lp.lower(j)) ? lp.lower(j)
                                       : (std::isfinite(lp.upper(j)) ? lp.upper(j) : 0.0);
      if (!std::isfinite(v)) {
        out.status = LpStatus::Unbounded;
        return out;
      }
      out.primal(j) = v;
    }
    out.status = LpStatus::Optimal;
    out.objective = lp.objective.dot(out.primal);
    out.duals = Eigen::VectorXd();
    out.is_basic = true;
    return out;
  }
  LinearProgram scaled = lp;
  Equilibration eq = equilibrate(scaled);
  // An optimal claim whose basic values drifted out of bounds is retried with
  // more frequent refactorization; the schedule is fixed, so results stay
  // deterministic.
  SolveResult out;
  constexpr int kRefactorSchedule[] = {80, 20, 5};
  for (int attempt = 0; attempt < 3; ++attempt) {
    DenseSimplex solver(scaled, kRefactorSchedule[attempt]);
    out = solver.run();
    if (out.status != LpStatus::Optimal) break;
    bool clean = out.primal.allFinite();
    for (int j = 0; clean && j < lp.num_cols(); ++j)
      if (out.primal(j) < scaled.lower(j) - 1e-7 ||
          out.primal(j) > scaled.upper(j) + 1e-7)
        clean = false;
    if (clean) break;
  }
  if (out.status == LpStatus::Optimal) {
    if (!out.primal.allFinite())
      throw std::runtime_error("lp backend returned non-finite primal value");
    // Tiny negative values on nonnegative columns are numerical noise; the
    // check runs in the well-conditioned scaled space, before unscaling can
    // amplify round-off.
    for (int j = 0; j < lp.num_cols(); ++j) {
      if (scaled.lower(j) == 0.0 && out.primal(j) < 0.0) {
        if (out.primal(j) < -1e-6)
          throw std::runtime_error("lp backend returned infeasible primal value");
        out.primal(j) = 0.0;
      }
    }
  }
  if (out.primal.size() == lp.num_cols())
    out.primal = out.primal.cwiseProduct(eq.col_scale);
  if (out.duals.size() == lp.num_rows())
    out.duals = out.duals.cwiseProduct(eq.row_scale);
  if (out.status == LpStatus::Optimal && !need_duals) out.duals = Eigen::VectorXd();
  return out;
}

const char* to_string(LpStatus s) {
  switch (s) {
    case LpStatus::Optimal:
      return "optimal";
    case LpStatus::Infeasible:
      return "infeasible";
    case LpStatus::Unbounded:
      return "unbounded";
    default:
      return "limit";
  }
}

}  // namespace cga
