#include "cga/driver.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "cga/benders.hpp"
#include "cga/instances.hpp"
#include "cga/monolith.hpp"
#include "cga/partition.hpp"
#include "cga/rng.hpp"

namespace cga {

using nlohmann::json;

std::vector<std::string> validate_config(const AlgoConfig& c) {
  std::vector<std::string> report;
  if (c.beta < 0) report.push_back("beta must be >= 0");
  if (c.delta_ls < 0) report.push_back("delta_ls must be >= 0");
  if (c.delta_mga < 0) report.push_back("delta_mga must be >= 0");
  if (c.k_ls < 1) report.push_back("k_ls must be >= 1");
  if (c.k_mga < 1) report.push_back("k_mga must be >= 1");
  if (c.minmax_fraction < 0 || c.minmax_fraction > 1)
    report.push_back("minmax_fraction must lie in [0, 1]");
  if (c.partition_k < 1) report.push_back("partition_k must be >= 1");
  if (c.vectors_total < 0) report.push_back("vectors_total must be >= 0");
  if (c.worker_count < 1) report.push_back("worker_count must be >= 1");
  if (c.cut_strategy == CutStrategy::FirstN && c.first_n == 0)
    report.push_back("first_n must be nonzero for the first-n strategy");
  return report;
}

const char* to_string(RunMode m) {
  switch (m) {
    case RunMode::Cga:
      return "cga";
    case RunMode::Monolithic:
      return "monolithic";
    default:
      return "both";
  }
}

RunMode run_mode_from_string(const std::string& s) {
  if (s == "cga") return RunMode::Cga;
  if (s == "monolithic") return RunMode::Monolithic;
  if (s == "both") return RunMode::Both;
  throw std::invalid_argument("unknown mode: " + s);
}

std::vector<MgaWeightVector> generate_weight_set(const Instance& instance,
                                                 const AlgoConfig& config) {
  if (config.vectors_total == 0) return {};
  return combination_set(instance.planning_dim(), default_weight_groups(instance),
                         config.vectors_total, config.minmax_fraction,
                         Rng::derive(config.seed, "weights"));
}

namespace {

void check_inputs(const Instance& instance, const AlgoConfig& config) {
  auto iv = validate_instance(instance);
  if (!iv.empty()) throw std::invalid_argument("invalid instance: " + iv.front());
  auto cv = validate_config(config);
  if (!cv.empty()) throw std::invalid_argument("invalid config: " + cv.front());
}

double median_iterations(const std::vector<WeightedRecord>& records) {
  if (records.empty()) return 0.0;
  std::vector<double> counts;
  for (const auto& r : records) counts.push_back(static_cast<double>(r.record.trace.size()));
  std::sort(counts.begin(), counts.end());
  size_t mid = counts.size() / 2;
  return counts.size() % 2 ? counts[mid] : 0.5 * (counts[mid - 1] + counts[mid]);
}

// One partition's worth of sequential MGA solves over its own pool copy.
void run_partition(const Instance& instance, const AlgoConfig& config,
                   const Budget& budget, const CutPool& seed_pool,
                   const std::vector<MgaWeightVector>& weights,
                   const std::vector<int>& work_list, int partition_index,
                   int lc_iterations, std::vector<WeightedRecord>& out,
                   int& pool_size_out) {
  CutPool pool = seed_pool;
  std::vector<int> finished_iteration_counts;
  for (size_t pos = 0; pos < work_list.size(); ++pos) {
    int global_index = work_list[pos];
    int iterate_id = global_index + 1;
    CutPool working;
    working.strategy = pool.strategy;
    // Adaptive first-n default: least-cost iterations plus five average MGA
    // iterates worth of cuts.
    if (pool.strategy == CutStrategy::FirstN) {
      if (config.first_n > 0) {
        working.n_limit = config.first_n;
      } else {
        double avg = static_cast<double>(lc_iterations);
        if (!finished_iteration_counts.empty()) {
          double s = 0;
          for (int c : finished_iteration_counts) s += c;
          avg = s / finished_iteration_counts.size();
        }
        working.n_limit = static_cast<int>(instance.num_periods() *
                                           (lc_iterations + 5.0 * avg));
      }
      pool.n_limit = working.n_limit;
    }
    working.cuts = view_for(pool, iterate_id);
    size_t seeded = working.cuts.size();
    SolutionRecord rec = cga_solve_one(instance, weights[global_index].weights,
                                       budget, config, working, iterate_id);
    finished_iteration_counts.push_back(static_cast<int>(rec.trace.size()));
    // New cuts flow back to the partition pool in insertion order.
    std::vector<Cut> fresh(working.cuts.begin() + seeded, working.cuts.end());
    insert_cuts(pool, fresh);
    out[global_index] = WeightedRecord{weights[global_index], std::move(rec),
                                       partition_index};
  }
  pool_size_out = pool.size();
}

}  // namespace

RunReport run_cga(const Instance& instance, const AlgoConfig& config) {
  check_inputs(instance, config);
  RunReport report;
  report.method = "cga";
  report.config = config;
  report.instance_hash = instance_hash(instance);

  CutPool pool;
  pool.strategy = config.cut_strategy;
  pool.n_limit = std::max(config.first_n, 0);
  report.least_cost = benders_least_cost(instance, config, pool);
  if (report.least_cost.status == SolveOutcome::Infeasible)
    throw std::runtime_error("least-cost problem infeasible");
  int lc_iterations = static_cast<int>(report.least_cost.trace.size());
  report.budget = compute_budget(report.least_cost.total_cost, config.beta);

  auto weights = generate_weight_set(instance, config);
  std::vector<std::vector<int>> work_lists;
  if (config.partition_k > 1 && static_cast<int>(weights.size()) >= config.partition_k) {
    auto partition = partition_weights(weights, config.partition_k,
                                       Rng::derive(config.seed, "clustering"), 100);
    work_lists = schedule(partition, std::max(config.vectors_total, 1));
  } else if (!weights.empty()) {
    std::vector<int> all(weights.size());
    for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    work_lists.push_back(std::move(all));
  }

  report.mga.resize(weights.size());
  std::vector<int> pool_sizes(work_lists.size(), 0);
  auto run_one = [&](int li) {
    run_partition(instance, config, report.budget, pool, weights, work_lists[li],
                  li, lc_iterations, report.mga, pool_sizes[li]);
  };
  if (config.concurrent_partitions && work_lists.size() > 1) {
    std::vector<std::thread> threads;
    for (size_t li = 0; li < work_lists.size(); ++li)
      threads.emplace_back(run_one, static_cast<int>(li));
    for (auto& t : threads) t.join();
  } else {
    for (size_t li = 0; li < work_lists.size(); ++li) run_one(static_cast<int>(li));
  }
  report.final_pool_size = pool.size();
  for (size_t li = 0; li < work_lists.size(); ++li)
    report.final_pool_size += pool_sizes[li] - pool.size() >= 0
                                  ? pool_sizes[li] - pool.size()
                                  : 0;
  report.median_mga_iterations = median_iterations(report.mga);
  return report;
}

RunReport run_monolithic_mga(const Instance& instance, const AlgoConfig& config) {
  check_inputs(instance, config);
  RunReport report;
  report.method = "monolithic";
  report.config = config;
  report.instance_hash = instance_hash(instance);
  report.least_cost = solve_monolith(instance, build_least_cost(instance));
  if (report.least_cost.status == SolveOutcome::Infeasible)
    throw std::runtime_error("least-cost problem infeasible");
  report.budget = compute_budget(report.least_cost.total_cost, config.beta);

  auto weights = generate_weight_set(instance, config);
  for (size_t i = 0; i < weights.size(); ++i) {
    auto build = build_mga_monolith(instance, weights[i].weights, report.budget.epsilon);
    SolutionRecord rec = solve_monolith(instance, build);
    report.mga.push_back(WeightedRecord{weights[i], std::move(rec), 0});
  }
  report.median_mga_iterations = median_iterations(report.mga);
  return report;
}

namespace {

json vec_to_json(const Eigen::VectorXd& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

json record_to_json(const SolutionRecord& rec) {
  json j;
  j["status"] = to_string(rec.status);
  j["planning"] = vec_to_json(rec.planning);
  j["period_costs"] = vec_to_json(rec.period_costs);
  j["total_cost"] = rec.total_cost;
  if (rec.mga_objective) j["mga_objective"] = *rec.mga_objective;
  j["iterations"] = rec.trace.size();
  return j;
}

json config_to_json(const AlgoConfig& c) {
  json j;
  j["beta"] = c.beta;
  j["delta_ls"] = c.delta_ls;
  j["delta_mga"] = c.delta_mga;
  j["k_ls"] = c.k_ls;
  j["k_mga"] = c.k_mga;
  j["cut_strategy"] = to_string(c.cut_strategy);
  j["first_n"] = c.first_n;
  j["partition_k"] = c.partition_k;
  j["vectors_total"] = c.vectors_total;
  j["minmax_fraction"] = c.minmax_fraction;
  j["seed"] = c.seed;
  j["mode"] = to_string(c.mode);
  j["worker_count"] = c.worker_count;
  j["concurrent_partitions"] = c.concurrent_partitions;
  return j;
}

}  // namespace

void emit_reports(const RunReport& report, const std::filesystem::path& out_dir) {
  std::filesystem::create_directories(out_dir);

  // Solutions document: deterministic for a given report; worker counts and
  // timings must not leak in.
  json sol;
  sol["schema_version"] = "cga-solutions/1";
  sol["method"] = report.method;
  char hashbuf[20];
  std::snprintf(hashbuf, sizeof hashbuf, "%016llx",
                static_cast<unsigned long long>(report.instance_hash));
  sol["instance_hash"] = hashbuf;
  sol["budget"] = {{"epsilon", report.budget.epsilon},
                   {"beta", report.budget.beta},
                   {"base_cost", report.budget.base_cost}};
  sol["least_cost"] = record_to_json(report.least_cost);
  json mga = json::array();
  for (const auto& wr : report.mga) {
    json e;
    e["weights"] = vec_to_json(wr.weight.weights);
    e["weight_method"] = wr.weight.method;
    e["partition"] = wr.partition_index;
    e["record"] = record_to_json(wr.record);
    mga.push_back(std::move(e));
  }
  sol["mga"] = std::move(mga);
  sol["median_mga_iterations"] = report.median_mga_iterations;
  sol["final_pool_size"] = report.final_pool_size;
  {
    std::ofstream out(out_dir / "solutions.json", std::ios::binary);
    if (!out) throw std::runtime_error("cannot write solutions.json");
    out << sol.dump(2) << "\n";
  }

  {
    std::ofstream out(out_dir / "trace.csv", std::ios::binary);
    if (!out) throw std::runtime_error("cannot write trace.csv");
    out << "record,iteration,phase,master_objective,true_or_upper_cost,"
           "budget_ratio,master_seconds,subproblem_seconds\n";
    auto emit_trace = [&](const std::string& id, const SolutionRecord& rec,
                          bool mga_phase) {
      for (const auto& t : rec.trace) {
        double ratio = mga_phase && report.budget.epsilon > 0
                           ? t.ub / report.budget.epsilon
                           : 0.0;
        out << id << ',' << t.iteration << ','
            << (t.integer_phase ? "integer" : "relaxed") << ',' << t.lb << ','
            << t.ub << ',' << ratio << ',' << t.master_seconds << ','
            << t.subproblem_seconds << '\n';
      }
    };
    emit_trace("least-cost", report.least_cost, false);
    for (size_t i = 0; i < report.mga.size(); ++i)
      emit_trace("mga-" + std::to_string(i), report.mga[i].record, true);
  }

  {
    std::ofstream out(out_dir / "config.json", std::ios::binary);
    if (!out) throw std::runtime_error("cannot write config.json");
    out << config_to_json(report.config).dump(2) << "\n";
  }
}

}  // namespace cga
