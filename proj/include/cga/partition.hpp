#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <vector>

#include "cga/weights.hpp"

namespace cga {

/// Directional clustering of MGA weight vectors: Lloyd's k-means on
/// unit-normalized inputs with seeded k-means++ initialization.
struct WeightPartition {
  struct Cluster {
    Eigen::VectorXd centroid;  // unit norm
    std::vector<int> members;  // indices into the input list, input order
  };
  std::vector<Cluster> clusters;
  int k = 0;
  std::uint64_t seed = 0;
};

WeightPartition partition_weights(const std::vector<MgaWeightVector>& vectors,
                                  int k, std::uint64_t seed, int max_iters);

/// Work lists per solver instance: up to per_instance vector indices from
/// each nonempty cluster, preserving cluster-internal order.
std::vector<std::vector<int>> schedule(const WeightPartition& partition,
                                       int per_instance);

}  // namespace cga
