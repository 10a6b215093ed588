#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <string>
#include <vector>

namespace cga {

/// One MGA objective weight vector with its generation metadata.
struct MgaWeightVector {
  Eigen::VectorXd weights;
  std::string method;  // "random", "minmax", "combination-member"
  int group = -1;      // minmax only
  int sign = 0;        // minmax only: +1 minimizes the group total, -1 maximizes
  std::uint64_t seed = 0;
  bool has_seed = false;
};

/// Independent uniform weights on [-1, 1], deterministic per seed.
MgaWeightVector random_vector(int n, std::uint64_t seed);

/// Two vectors per group: +1 on the group's members (minimize the group
/// total) and -1 (maximize). Throws on empty groups or invalid indices.
std::vector<MgaWeightVector> variable_minmax(
    int n, const std::vector<std::vector<int>>& groups);

/// The combination method: ceil(minmax_fraction * total) Variable Min/Max
/// vectors cycling the groups in order, remainder random vectors.
std::vector<MgaWeightVector> combination_set(
    int n, const std::vector<std::vector<int>>& groups, int total,
    double minmax_fraction, std::uint64_t seed);

}  // namespace cga
