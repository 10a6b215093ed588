#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "cga/partition.hpp"
#include "cga/rng.hpp"
#include "cga/weights.hpp"
#include "helpers.hpp"

using namespace cga;

namespace {

MgaWeightVector wv(std::initializer_list<double> entries) {
  MgaWeightVector v;
  v.weights.resize(static_cast<Eigen::Index>(entries.size()));
  int i = 0;
  for (double e : entries) v.weights(i++) = e;
  return v;
}

std::vector<MgaWeightVector> random_set(int count, int n, std::uint64_t seed) {
  std::vector<MgaWeightVector> out;
  for (int i = 0; i < count; ++i) out.push_back(random_vector(n, seed + i));
  return out;
}

std::vector<int> assignment_of(const WeightPartition& p, int count) {
  std::vector<int> a(count, -1);
  for (size_t c = 0; c < p.clusters.size(); ++c)
    for (int m : p.clusters[c].members) a[m] = static_cast<int>(c);
  return a;
}

// Plain re-derivation of the clustering: k-means++ seeding with the same
// labeled RNG stream and tie rules, then Lloyd with mean-renormalized
// centroids. Distances are recomputed from scratch each round rather than
// tracked incrementally, so agreement is a genuine cross-check.
std::vector<int> reference_kmeans(const std::vector<MgaWeightVector>& vectors,
                                  int k, std::uint64_t seed, int max_iters) {
  const int count = static_cast<int>(vectors.size());
  const int n = static_cast<int>(vectors.front().weights.size());
  std::vector<Eigen::VectorXd> pts(count);
  for (int i = 0; i < count; ++i) pts[i] = vectors[i].weights.normalized();

  Rng rng(Rng::derive(seed, "kmeans++"));
  std::vector<Eigen::VectorXd> centroids;
  centroids.push_back(pts[rng.below(count)]);
  while (static_cast<int>(centroids.size()) < k) {
    std::vector<double> d2(count);
    double total = 0.0;
    for (int i = 0; i < count; ++i) {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& c : centroids)
        best = std::min(best, (pts[i] - c).squaredNorm());
      d2[i] = best;
      total += best;
    }
    int pick = 0;
    if (total > 0.0) {
      double r = rng.uniform01() * total;
      double acc = 0.0;
      for (int i = 0; i < count; ++i) {
        acc += d2[i];
        if (acc >= r) {
          pick = i;
          break;
        }
      }
    } else {
      pick = static_cast<int>(rng.below(count));
    }
    centroids.push_back(pts[pick]);
  }

  std::vector<int> assignment(count, -1);
  for (int iter = 0; iter < max_iters; ++iter) {
    bool changed = false;
    for (int i = 0; i < count; ++i) {
      int best = 0;
      double best_d = (pts[i] - centroids[0]).squaredNorm();
      for (int c = 1; c < k; ++c) {
        double d = (pts[i] - centroids[c]).squaredNorm();
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
    std::vector<Eigen::VectorXd> sums(k, Eigen::VectorXd::Zero(n));
    std::vector<int> counts(k, 0);
    for (int i = 0; i < count; ++i) {
      sums[assignment[i]] += pts[i];
      ++counts[assignment[i]];
    }
    for (int c = 0; c < k; ++c) {
      if (counts[c] == 0) {
        int far = 0;
        double far_d = -1.0;
        for (int i = 0; i < count; ++i) {
          double d = (pts[i] - centroids[assignment[i]]).squaredNorm();
          if (d > far_d) {
            far_d = d;
            far = i;
          }
        }
        centroids[c] = pts[far];
        continue;
      }
      Eigen::VectorXd mean = sums[c] / counts[c];
      double norm = mean.norm();
      if (norm > 0.0) mean /= norm;
      centroids[c] = mean;
    }
  }
  return assignment;
}

}  // namespace

TEST_CASE("two well-separated direction bundles split cleanly") {
  std::vector<MgaWeightVector> vectors = {wv({1.0, 0.0}), wv({0.9, 0.1}),
                                          wv({0.0, 1.0}), wv({0.1, 0.9})};
  auto partition = partition_weights(vectors, 2, 3, 50);
  auto a = assignment_of(partition, 4);
  CHECK(a[0] == a[1]);
  CHECK(a[2] == a[3]);
  CHECK(a[0] != a[2]);
  for (const auto& c : partition.clusters)
    CHECK(c.centroid.norm() == doctest::Approx(1.0));
}

TEST_CASE("k equal to the vector count isolates every vector") {
  auto vectors = random_set(5, 3, 10);
  auto partition = partition_weights(vectors, 5, 1, 50);
  int nonempty = 0;
  for (const auto& c : partition.clusters) {
    CHECK(c.members.size() <= 1);
    if (!c.members.empty()) ++nonempty;
  }
  CHECK(nonempty == 5);
}

TEST_CASE("invalid inputs are rejected") {
  auto vectors = random_set(4, 2, 20);
  CHECK_THROWS_AS(partition_weights(vectors, 0, 1, 10), std::invalid_argument);
  CHECK_THROWS_AS(partition_weights(vectors, 5, 1, 10), std::invalid_argument);
  vectors[2].weights.setZero();
  CHECK_THROWS_AS(partition_weights(vectors, 2, 1, 10), std::invalid_argument);
}

TEST_CASE("320 vectors, k=6: assignment matches an independent rerun of the rule") {
  auto vectors = random_set(320, 6, 777);
  auto partition = partition_weights(vectors, 6, 99, 100);
  auto expect = reference_kmeans(vectors, 6, 99, 100);
  auto got = assignment_of(partition, 320);
  CHECK(got == expect);
}

TEST_CASE("same seed, same partition; rescaling is a no-op") {
  auto vectors = random_set(40, 4, 55);
  auto a = partition_weights(vectors, 4, 7, 100);
  auto b = partition_weights(vectors, 4, 7, 100);
  CHECK(assignment_of(a, 40) == assignment_of(b, 40));

  auto scaled = vectors;
  Rng rng(1);
  for (auto& v : scaled) v.weights *= rng.uniform(0.1, 10.0);
  auto c = partition_weights(scaled, 4, 7, 100);
  CHECK(assignment_of(a, 40) == assignment_of(c, 40));
}

TEST_CASE("clusters are tighter inside than across") {
  auto vectors = random_set(60, 3, 31);
  auto partition = partition_weights(vectors, 4, 13, 100);
  auto a = assignment_of(partition, 60);
  double within = 0.0, across = 0.0;
  int nw = 0, na = 0;
  for (int i = 0; i < 60; ++i) {
    for (int j = i + 1; j < 60; ++j) {
      double cos = vectors[i].weights.normalized().dot(vectors[j].weights.normalized());
      if (a[i] == a[j]) {
        within += cos;
        ++nw;
      } else {
        across += cos;
        ++na;
      }
    }
  }
  REQUIRE(nw > 0);
  REQUIRE(na > 0);
  CHECK(within / nw >= across / na);
}

TEST_CASE("schedule caps lists per cluster and drops empty clusters") {
  WeightPartition p;
  p.k = 3;
  p.clusters.resize(3);
  for (auto& c : p.clusters) c.centroid = Eigen::VectorXd::Ones(2).normalized();
  for (int i = 0; i < 20; ++i) p.clusters[0].members.push_back(i);
  p.clusters[2].members = {20, 21};

  auto lists = schedule(p, 16);
  REQUIRE(lists.size() == 2);  // empty cluster omitted
  CHECK(lists[0].size() == 16);
  for (int i = 0; i < 16; ++i) CHECK(lists[0][i] == i);  // order preserved
  CHECK(lists[1] == std::vector<int>{20, 21});

  auto single = schedule(p, 100);
  CHECK(single[0].size() == 20);
  CHECK_THROWS_AS(schedule(p, 0), std::invalid_argument);
}
