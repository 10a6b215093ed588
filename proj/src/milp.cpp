// Branch-and-bound MILP wrapper over the LP backend. Depth-first with
// best-incumbent pruning; each node is a pair of bound tightenings.

#include <cmath>
#include <limits>
#include <stdexcept>

#include "cga/lp.hpp"

namespace cga {

namespace {

constexpr double kIntTol = 1e-6;

struct BnB {
  LinearProgram lp;  // working copy, bounds mutated along the DFS path
  const std::vector<char>& flags;
  double best = std::numeric_limits<double>::infinity();
  Eigen::VectorXd best_primal;
  long nodes = 0;
  long node_cap = 200000;
  bool hit_cap = false;

  explicit BnB(const LinearProgram& in) : lp(in), flags(in.integer_flags) {
    lp.integer_flags.clear();
  }

  int most_fractional(const Eigen::VectorXd& x) const {
    int pick = -1;
    double best_frac = kIntTol;
    for (int j = 0; j < lp.num_cols(); ++j) {
      if (!flags[j]) continue;
      double frac = std::abs(x(j) - std::round(x(j)));
      if (frac > best_frac) {
        best_frac = frac;
        pick = j;
      }
    }
    return pick;
  }

  void dive() {
    if (++nodes > node_cap) {
      hit_cap = true;
      return;
    }
    SolveResult rel = solve_lp(lp);
    if (rel.status != LpStatus::Optimal) return;
    if (rel.objective >= best - 1e-9) return;
    int j = most_fractional(rel.primal);
    if (j < 0) {
      best = rel.objective;
      best_primal = rel.primal;
      for (int k = 0; k < lp.num_cols(); ++k)
        if (flags[k]) best_primal(k) = std::round(best_primal(k));
      return;
    }
    double v = rel.primal(j);
    double save_lo = lp.lower(j), save_hi = lp.upper(j);
    // Down branch first; planning variables tend to round down.
    lp.upper(j) = std::floor(v);
    dive();
    lp.upper(j) = save_hi;
    lp.lower(j) = std::ceil(v);
    dive();
    lp.lower(j) = save_lo;
  }
};

}  // namespace

SolveResult solve_milp(const LinearProgram& lp) {
  if (!lp.has_integers())
    throw std::invalid_argument("solve_milp: no integrality flags set");
  BnB bnb(lp);
  bnb.dive();
  SolveResult out;
  if (std::isfinite(bnb.best)) {
    out.status = bnb.hit_cap ? LpStatus::Limit : LpStatus::Optimal;
    out.primal = bnb.best_primal;
    out.objective = bnb.best;
    out.is_basic = true;
  } else {
    out.status = bnb.hit_cap ? LpStatus::Limit : LpStatus::Infeasible;
  }
  return out;
}

}  // namespace cga
