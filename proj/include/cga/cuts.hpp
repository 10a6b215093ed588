#pragma once

#include <Eigen/Core>

#include <filesystem>
#include <string>
#include <vector>

namespace cga {

/// One Benders cut: f_p(x) >= value + (x - point).subgradient.
struct Cut {
  int period = 0;  // 1-based period id
  Eigen::VectorXd point;
  double value = 0.0;
  Eigen::VectorXd subgradient;
  int mga_iterate = 0;  // 0 = least-cost provenance, otherwise MGA iterate id
  int birth_iteration = 0;

  bool from_least_cost() const { return mga_iterate == 0; }
};

double evaluate_cut(const Cut& cut, const Eigen::VectorXd& x);

enum class CutStrategy { None, LeastCostOnly, All, FirstN };

const char* to_string(CutStrategy s);
CutStrategy cut_strategy_from_string(const std::string& s);

/// Central cut store. Cuts are appended in deterministic period order by the
/// solvers; views filter by the sharing strategy.
struct CutPool {
  std::vector<Cut> cuts;
  CutStrategy strategy = CutStrategy::LeastCostOnly;
  int n_limit = 0;  // FirstN only

  int size() const { return static_cast<int>(cuts.size()); }
};

/// Cuts visible to the given phase. mga_iterate = 0 means the least-cost
/// phase, which always sees the whole pool; MGA iterates see the strategy's
/// selection in global insertion order.
std::vector<Cut> view_for(const CutPool& pool, int mga_iterate);

/// Appends cuts preserving order. Throws on subgradient dimension mismatch
/// with the existing pool.
void insert_cuts(CutPool& pool, const std::vector<Cut>& cuts);

void write_cut_pool(const CutPool& pool, const std::filesystem::path& path);
CutPool read_cut_pool(const std::filesystem::path& path);

}  // namespace cga
