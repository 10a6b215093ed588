#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "cga/model.hpp"

namespace cga {

/// Synthetic desk-scale capacity expansion instance: zones with a small
/// generator fleet each, a transmission chain between adjacent zones, and
/// seeded sinusoid-plus-noise demand and availability profiles.
struct InstanceSpec {
  std::string name = "desk";
  int zones = 2;
  int periods = 2;
  int hours_per_period = 6;
  std::uint64_t seed = 1;
  bool integer_mode = false;  // planning variables become integral unit counts
};

/// Deterministic per seed; the result always passes validate_instance and
/// has a finite least-cost optimum.
Instance generate_instance(const InstanceSpec& spec);

/// Schema-versioned JSON document, strict on read (unknown fields are
/// rejected, missing fields reported by name). Round-trips structurally,
/// including sparse entry order.
std::string serialize_instance(const Instance& instance);
void write_instance(const Instance& instance, const std::filesystem::path& path);
Instance read_instance(const std::filesystem::path& path);
Instance parse_instance(const std::string& text);

/// FNV-1a over the serialized document.
std::uint64_t instance_hash(const Instance& instance);

/// Default aggregation for Variable Min/Max weights: one group per planning
/// variable (each variable is one zone-technology capacity at desk scale).
std::vector<std::vector<int>> default_weight_groups(const Instance& instance);

}  // namespace cga
