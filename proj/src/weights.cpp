#include "cga/weights.hpp"

#include <cmath>
#include <stdexcept>

#include "cga/rng.hpp"

namespace cga {

MgaWeightVector random_vector(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_vector: n must be >= 1");
  Rng rng(seed);
  MgaWeightVector v;
  v.weights.resize(n);
  bool all_zero = true;
  for (int i = 0; i < n; ++i) {
    v.weights(i) = rng.uniform(-1.0, 1.0);
    if (v.weights(i) != 0.0) all_zero = false;
  }
  if (all_zero) v.weights(0) = 1.0;  // measure-zero, but the invariant is strict
  v.method = "random";
  v.seed = seed;
  v.has_seed = true;
  return v;
}

std::vector<MgaWeightVector> variable_minmax(
    int n, const std::vector<std::vector<int>>& groups) {
  if (groups.empty()) throw std::invalid_argument("variable_minmax: groups must be nonempty");
  std::vector<MgaWeightVector> out;
  for (size_t g = 0; g < groups.size(); ++g) {
    if (groups[g].empty())
      throw std::invalid_argument("variable_minmax: empty group");
    for (int sign : {+1, -1}) {
      MgaWeightVector v;
      v.weights = Eigen::VectorXd::Zero(n);
      for (int idx : groups[g]) {
        if (idx < 0 || idx >= n)
          throw std::invalid_argument("variable_minmax: index out of range");
        v.weights(idx) = sign;
      }
      v.method = "minmax";
      v.group = static_cast<int>(g);
      v.sign = sign;
      out.push_back(std::move(v));
    }
  }
  return out;
}

std::vector<MgaWeightVector> combination_set(
    int n, const std::vector<std::vector<int>>& groups, int total,
    double minmax_fraction, std::uint64_t seed) {
  if (total < 1) throw std::invalid_argument("combination_set: total must be >= 1");
  if (minmax_fraction < 0.0 || minmax_fraction > 1.0)
    throw std::invalid_argument("combination_set: minmax_fraction must lie in [0, 1]");
  int num_minmax = static_cast<int>(std::ceil(minmax_fraction * total));
  std::vector<MgaWeightVector> out;
  if (num_minmax > 0) {
    if (groups.empty())
      throw std::invalid_argument("combination_set: groups required when minmax_fraction > 0");
    auto base = variable_minmax(n, groups);
    for (int i = 0; i < num_minmax; ++i) {
      MgaWeightVector v = base[i % base.size()];
      v.method = "combination-member";
      out.push_back(std::move(v));
    }
  }
  for (int i = num_minmax; i < total; ++i) {
    MgaWeightVector v = random_vector(n, Rng::derive(seed, "random-" + std::to_string(i)));
    v.method = "combination-member";
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace cga
