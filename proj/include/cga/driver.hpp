#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "cga/config.hpp"
#include "cga/cuts.hpp"
#include "cga/mga.hpp"
#include "cga/model.hpp"
#include "cga/weights.hpp"

namespace cga {

struct WeightedRecord {
  MgaWeightVector weight;
  SolutionRecord record;
  int partition_index = 0;
};

struct RunReport {
  std::string method;  // "cga" or "monolithic"
  SolutionRecord least_cost;
  Budget budget;
  std::vector<WeightedRecord> mga;
  double median_mga_iterations = 0.0;
  int final_pool_size = 0;
  std::uint64_t instance_hash = 0;
  AlgoConfig config;
};

/// Full parallelized cutting-plane run: Benders least cost, budget, weight
/// generation, optional objective partitioning, then one cutting-plane MGA
/// solve per weight vector with pool views per the cut-sharing strategy.
RunReport run_cga(const Instance& instance, const AlgoConfig& config);

/// Same pipeline with every solve monolithic; report shape matches run_cga
/// for diffing.
RunReport run_monolithic_mga(const Instance& instance, const AlgoConfig& config);

/// Writes solutions.json (deterministic, no timings), trace.csv (per-iterate
/// convergence rows, with timings), and config.json into out_dir.
void emit_reports(const RunReport& report, const std::filesystem::path& out_dir);

/// The weight set a run will use, before any partitioning.
std::vector<MgaWeightVector> generate_weight_set(const Instance& instance,
                                                 const AlgoConfig& config);

}  // namespace cga
