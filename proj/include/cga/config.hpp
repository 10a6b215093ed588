#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cga/cuts.hpp"

namespace cga {

enum class RunMode { Cga, Monolithic, Both };

struct AlgoConfig {
  double beta = 0.1;
  double delta_ls = 1e-3;
  double delta_mga = 0.005;
  int k_ls = 500;
  int k_mga = 500;
  CutStrategy cut_strategy = CutStrategy::LeastCostOnly;
  int first_n = -1;  // <0: adaptive default from pool history
  int partition_k = 1;
  int vectors_total = 8;
  double minmax_fraction = 0.75;
  std::uint64_t seed = 1;
  RunMode mode = RunMode::Cga;
  int worker_count = 1;
  bool concurrent_partitions = false;
};

/// Empty report iff the configuration satisfies its invariants.
std::vector<std::string> validate_config(const AlgoConfig& config);

const char* to_string(RunMode m);
RunMode run_mode_from_string(const std::string& s);

}  // namespace cga
