// Command-line front end: instance generation and full MGA runs with either
// the cutting-plane or the monolithic pipeline (or both, for diffing).

#include <CLI11.hpp>

#include <exception>
#include <iostream>

#include "cga/driver.hpp"
#include "cga/instances.hpp"

namespace {

int run_generate(const cga::InstanceSpec& spec, const std::string& out_path) {
  cga::Instance inst = cga::generate_instance(spec);
  auto violations = cga::validate_instance(inst);
  if (!violations.empty()) {
    std::cerr << "generated instance failed validation: " << violations.front() << "\n";
    return 1;
  }
  cga::write_instance(inst, out_path);
  std::cout << "wrote " << out_path << " (" << inst.planning_dim()
            << " planning variables, " << inst.num_periods() << " periods)\n";
  return 0;
}

void print_summary(const cga::RunReport& report) {
  std::cout << report.method << ": least-cost total " << report.least_cost.total_cost
            << " (" << cga::to_string(report.least_cost.status) << ", "
            << report.least_cost.trace.size() << " iterations), budget epsilon "
            << report.budget.epsilon << "\n";
  for (size_t i = 0; i < report.mga.size(); ++i) {
    const auto& wr = report.mga[i];
    std::cout << "  mga-" << i << ": "
              << cga::to_string(wr.record.status);
    if (wr.record.mga_objective)
      std::cout << ", objective " << *wr.record.mga_objective;
    std::cout << ", cost " << wr.record.total_cost << ", "
              << wr.record.trace.size() << " iterations\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cutting-plane MGA solver for two-block planning problems"};
  app.require_subcommand(1);

  // generate
  cga::InstanceSpec spec;
  std::string gen_out = "instance.json";
  auto* gen = app.add_subcommand("generate", "Generate a synthetic instance");
  gen->add_option("--name", spec.name, "Instance name");
  gen->add_option("--zones", spec.zones, "Number of zones");
  gen->add_option("--periods", spec.periods, "Number of operational periods");
  gen->add_option("--hours", spec.hours_per_period, "Hours per period");
  gen->add_option("--seed", spec.seed, "Generator seed");
  gen->add_flag("--integer", spec.integer_mode, "Integral unit-block capacities");
  gen->add_option("-o,--out", gen_out, "Output path");

  // run
  cga::AlgoConfig config;
  std::string instance_path;
  std::string out_dir = "out";
  std::string mode = "cga";
  std::string strategy = "least-cost";
  auto* run = app.add_subcommand("run", "Solve least-cost and MGA iterates");
  run->add_option("--instance", instance_path, "Instance file")->required();
  run->add_option("--mode", mode, "cga | monolithic | both");
  run->add_option("--beta", config.beta, "Budget slack");
  run->add_option("--delta-ls", config.delta_ls, "Least-cost convergence tolerance");
  run->add_option("--delta-mga", config.delta_mga, "MGA budget tolerance");
  run->add_option("--k-ls", config.k_ls, "Least-cost iteration cap");
  run->add_option("--k-mga", config.k_mga, "MGA iteration cap");
  run->add_option("--cut-strategy", strategy, "none | least-cost | all | first-n");
  run->add_option("--first-n", config.first_n, "Cut cap for first-n (<0 = adaptive)");
  run->add_option("--partition-k", config.partition_k, "Objective partition count");
  run->add_option("--vectors", config.vectors_total, "MGA weight vector count");
  run->add_option("--minmax-fraction", config.minmax_fraction,
                  "Share of Variable Min/Max vectors");
  run->add_option("--seed", config.seed, "Root seed");
  run->add_option("--workers", config.worker_count, "Subproblem worker threads");
  run->add_flag("--concurrent-partitions", config.concurrent_partitions,
                "Run partition instances concurrently");
  run->add_option("-o,--out", out_dir, "Report output directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) return run_generate(spec, gen_out);

    config.mode = cga::run_mode_from_string(mode);
    config.cut_strategy = cga::cut_strategy_from_string(strategy);
    cga::Instance inst = cga::read_instance(instance_path);
    auto violations = cga::validate_instance(inst);
    if (!violations.empty()) {
      std::cerr << "{\"error\":\"invalid instance\",\"detail\":\"" << violations.front()
                << "\"}\n";
      return 1;
    }
    std::filesystem::path out(out_dir);
    if (config.mode == cga::RunMode::Cga || config.mode == cga::RunMode::Both) {
      cga::RunReport report = cga::run_cga(inst, config);
      cga::emit_reports(report, config.mode == cga::RunMode::Both ? out / "cga" : out);
      print_summary(report);
    }
    if (config.mode == cga::RunMode::Monolithic || config.mode == cga::RunMode::Both) {
      cga::RunReport report = cga::run_monolithic_mga(inst, config);
      cga::emit_reports(report,
                        config.mode == cga::RunMode::Both ? out / "monolithic" : out);
      print_summary(report);
    }
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "{\"error\":\"run failed\",\"detail\":\"" << e.what() << "\"}\n";
    return 1;
  }
}
