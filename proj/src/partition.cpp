#include "cga/partition.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "cga/rng.hpp"

namespace cga {

namespace {

Eigen::MatrixXd normalize_inputs(const std::vector<MgaWeightVector>& vectors) {
  const int n = static_cast<int>(vectors.front().weights.size());
  Eigen::MatrixXd pts(static_cast<int>(vectors.size()), n);
  for (size_t i = 0; i < vectors.size(); ++i) {
    double norm = vectors[i].weights.norm();
    if (norm == 0.0)
      throw std::invalid_argument("partition_weights: zero weight vector");
    pts.row(static_cast<int>(i)) = vectors[i].weights.transpose() / norm;
  }
  return pts;
}

}  // namespace

WeightPartition partition_weights(const std::vector<MgaWeightVector>& vectors,
                                  int k, std::uint64_t seed, int max_iters) {
  const int count = static_cast<int>(vectors.size());
  if (k < 1 || k > count)
    throw std::invalid_argument("partition_weights: k must lie in [1, |vectors|]");
  Eigen::MatrixXd pts = normalize_inputs(vectors);
  const int n = static_cast<int>(pts.cols());

  // k-means++ seeding.
  Rng rng(Rng::derive(seed, "kmeans++"));
  Eigen::MatrixXd centroids(k, n);
  std::vector<double> dist2(count, std::numeric_limits<double>::infinity());
  int first = static_cast<int>(rng.below(count));
  centroids.row(0) = pts.row(first);
  for (int c = 1; c < k; ++c) {
    double total = 0.0;
    for (int i = 0; i < count; ++i) {
      double d = (pts.row(i) - centroids.row(c - 1)).squaredNorm();
      dist2[i] = std::min(dist2[i], d);
      total += dist2[i];
    }
    int pick = 0;
    if (total > 0.0) {
      double r = rng.uniform01() * total;
      double acc = 0.0;
      for (int i = 0; i < count; ++i) {
        acc += dist2[i];
        if (acc >= r) {
          pick = i;
          break;
        }
      }
    } else {
      pick = static_cast<int>(rng.below(count));
    }
    centroids.row(c) = pts.row(pick);
  }

  std::vector<int> assignment(count, -1);
  for (int iter = 0; iter < max_iters; ++iter) {
    bool changed = false;
    for (int i = 0; i < count; ++i) {
      int best = 0;
      double best_d = (pts.row(i) - centroids.row(0)).squaredNorm();
      for (int c = 1; c < k; ++c) {
        double d = (pts.row(i) - centroids.row(c)).squaredNorm();
        if (d < best_d - 1e-15) {
          best_d = d;
          best = c;
        }
      }
      if (assignment[i] != best) {
        assignment[i] = best;
        changed = true;
      }
    }
    if (!changed && iter > 0) break;
    // Recompute centroids; an emptied cluster re-seeds at the point farthest
    // from its current centroid set.
    Eigen::MatrixXd sums = Eigen::MatrixXd::Zero(k, n);
    std::vector<int> counts(k, 0);
    for (int i = 0; i < count; ++i) {
      sums.row(assignment[i]) += pts.row(i);
      ++counts[assignment[i]];
    }
    for (int c = 0; c < k; ++c) {
      if (counts[c] == 0) {
        int far = 0;
        double far_d = -1.0;
        for (int i = 0; i < count; ++i) {
          double d = (pts.row(i) - centroids.row(assignment[i])).squaredNorm();
          if (d > far_d) {
            far_d = d;
            far = i;
          }
        }
        centroids.row(c) = pts.row(far);
        continue;
      }
      Eigen::RowVectorXd mean = sums.row(c) / counts[c];
      double norm = mean.norm();
      centroids.row(c) = (norm > 0.0) ? (mean / norm).eval() : mean;
    }
  }

  WeightPartition out;
  out.k = k;
  out.seed = seed;
  out.clusters.resize(k);
  for (int c = 0; c < k; ++c) out.clusters[c].centroid = centroids.row(c).transpose();
  for (int i = 0; i < count; ++i) out.clusters[assignment[i]].members.push_back(i);
  return out;
}

std::vector<std::vector<int>> schedule(const WeightPartition& partition,
                                       int per_instance) {
  if (per_instance < 1)
    throw std::invalid_argument("schedule: per_instance must be >= 1");
  std::vector<std::vector<int>> lists;
  for (const auto& cluster : partition.clusters) {
    if (cluster.members.empty()) continue;
    int take = std::min<int>(per_instance, static_cast<int>(cluster.members.size()));
    lists.emplace_back(cluster.members.begin(), cluster.members.begin() + take);
  }
  return lists;
}

}  // namespace cga
