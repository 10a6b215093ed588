#include "cga/instances.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "cga/rng.hpp"

namespace cga {

using nlohmann::json;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr const char* kSchema = "cga-instance/1";

struct Tech {
  const char* name;
  double capex_lo, capex_hi;
  double var_lo, var_hi;
  bool variable_availability;
};

constexpr Tech kTechs[] = {
    {"baseload", 80.0, 120.0, 5.0, 15.0, false},
    {"peaker", 30.0, 50.0, 60.0, 100.0, false},
    {"wind", 50.0, 70.0, 0.5, 2.0, true},
};
constexpr int kNumTechs = 3;

}  // namespace

Instance generate_instance(const InstanceSpec& spec) {
  if (spec.zones < 1 || spec.periods < 1 || spec.hours_per_period < 1)
    throw std::invalid_argument("generate_instance: zones, periods, hours must be >= 1");
  const int Z = spec.zones;
  const int P = spec.periods;
  const int H = spec.hours_per_period;
  const int L = Z - 1;  // transmission chain
  const int G = kNumTechs;
  const int n = Z * G + L;

  Rng cost_rng(Rng::derive(spec.seed, "costs"));
  Rng demand_rng(Rng::derive(spec.seed, "demand"));
  Rng avail_rng(Rng::derive(spec.seed, "availability"));

  std::vector<double> capex(n), varcost(Z * G), max_cap(n), block(n, 1.0);
  std::vector<double> zone_base(Z);
  for (int z = 0; z < Z; ++z) zone_base[z] = cost_rng.uniform(50.0, 100.0);
  for (int z = 0; z < Z; ++z) {
    for (int g = 0; g < G; ++g) {
      int j = z * G + g;
      capex[j] = cost_rng.uniform(kTechs[g].capex_lo, kTechs[g].capex_hi);
      varcost[j] = cost_rng.uniform(kTechs[g].var_lo, kTechs[g].var_hi);
      max_cap[j] = 3.0 * zone_base[z];
    }
  }
  for (int l = 0; l < L; ++l) {
    int j = Z * G + l;
    capex[j] = cost_rng.uniform(10.0, 20.0);
    max_cap[j] = 1.5 * 0.5 * (zone_base[l] + zone_base[l + 1]);
  }
  if (spec.integer_mode) {
    // Planning variables count unit blocks; keep the grids small.
    for (int j = 0; j < n; ++j) block[j] = max_cap[j] / 3.0;
  }

  double max_varcost = 1.0;
  for (double v : varcost) max_varcost = std::max(max_varcost, v);
  const double penalty = 1e4 * max_varcost;

  Instance inst;
  inst.name = spec.name;
  inst.planning_cost.resize(n);
  inst.planning.dim = n;
  inst.planning.lower = Eigen::VectorXd::Zero(n);
  inst.planning.upper.resize(n);
  for (int j = 0; j < n; ++j) {
    inst.planning_cost(j) = capex[j] * block[j];
    inst.planning.upper(j) =
        spec.integer_mode ? std::ceil(max_cap[j] / block[j]) : max_cap[j];
  }
  if (spec.integer_mode) inst.integer_flags.assign(n, 1);

  for (int p = 0; p < P; ++p) {
    OperationalBlock blk;
    blk.id = p + 1;
    const int m = Z * G * H + L * H;  // dispatch then flows
    blk.op_cost = Eigen::VectorXd::Zero(m);
    blk.op_constraints.dim = m;
    blk.op_constraints.lower = Eigen::VectorXd::Zero(m);
    blk.op_constraints.upper = Eigen::VectorXd::Constant(m, kInf);
    for (int l = 0; l < L; ++l)
      for (int t = 0; t < H; ++t)
        blk.op_constraints.lower(Z * G * H + l * H + t) = -kInf;  // flows are signed
    for (int z = 0; z < Z; ++z)
      for (int g = 0; g < G; ++g)
        for (int t = 0; t < H; ++t)
          blk.op_cost(((z * G) + g) * H + t) = varcost[z * G + g];
    blk.slack_penalty = penalty;

    // Balance rows (equality, slack pair added at assembly): one per zone-hour.
    const double two_pi = 2.0 * std::numbers::pi;
    for (int z = 0; z < Z; ++z) {
      for (int t = 0; t < H; ++t) {
        int row = blk.op_constraints.num_rows();
        double phase = 0.31 * z + 0.57 * p;
        double demand = zone_base[z] *
                        (0.7 + 0.3 * std::sin(two_pi * (t + 1.0) / H + phase));
        demand *= 1.0 + 0.1 * demand_rng.uniform(-1.0, 1.0);
        demand = std::max(demand, 0.0);
        blk.op_constraints.rhs.push_back(demand);
        blk.op_constraints.senses.push_back(RowSense::Equal);
        for (int g = 0; g < G; ++g)
          blk.op_constraints.coeffs.emplace_back(row, (z * G + g) * H + t, 1.0);
        for (int l = 0; l < L; ++l) {
          int fcol = Z * G * H + l * H + t;
          if (l + 1 == z) blk.op_constraints.coeffs.emplace_back(row, fcol, 1.0);
          if (l == z) blk.op_constraints.coeffs.emplace_back(row, fcol, -1.0);
        }
      }
    }

    // Coupling rows: generator availability limits and signed flow limits.
    auto add_coupling = [&blk](int plan_col, double plan_coeff, int op_col) {
      int row = blk.num_coupling_rows();
      blk.rhs.conservativeResize(row + 1);
      blk.rhs(row) = 0.0;
      blk.senses.push_back(RowSense::LessEqual);
      blk.op_matrix.emplace_back(row, op_col, 1.0);
      blk.coupling.emplace_back(row, plan_col, plan_coeff);
    };
    for (int z = 0; z < Z; ++z) {
      for (int g = 0; g < G; ++g) {
        for (int t = 0; t < H; ++t) {
          double avail = 1.0;
          if (kTechs[g].variable_availability) {
            avail = 0.4 + 0.4 * std::sin(two_pi * (t + 1.0) / H + 0.8 * z + p) +
                    avail_rng.uniform(-0.15, 0.15);
            avail = std::clamp(avail, 0.05, 1.0);
          }
          add_coupling(z * G + g, -avail * block[z * G + g], (z * G + g) * H + t);
        }
      }
    }
    for (int l = 0; l < L; ++l) {
      for (int t = 0; t < H; ++t) {
        int fcol = Z * G * H + l * H + t;
        int pcol = Z * G + l;
        add_coupling(pcol, -block[pcol], fcol);
        // Reverse direction: -f - cap <= 0.
        int row = blk.num_coupling_rows();
        blk.rhs.conservativeResize(row + 1);
        blk.rhs(row) = 0.0;
        blk.senses.push_back(RowSense::LessEqual);
        blk.op_matrix.emplace_back(row, fcol, -1.0);
        blk.coupling.emplace_back(row, pcol, -block[pcol]);
      }
    }
    inst.periods.push_back(std::move(blk));
  }
  return inst;
}

namespace {

json bound_to_json(double v) {
  if (v == kInf) return "inf";
  if (v == -kInf) return "-inf";
  return v;
}

double bound_from_json(const json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf") return kInf;
    if (s == "-inf") return -kInf;
    throw std::runtime_error("instance file: bad bound value '" + s + "'");
  }
  return j.get<double>();
}

json vec_to_json(const Eigen::VectorXd& v, bool bounds = false) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i)
    a.push_back(bounds ? bound_to_json(v(i)) : json(v(i)));
  return a;
}

Eigen::VectorXd vec_from_json(const json& a, bool bounds = false) {
  Eigen::VectorXd v(a.size());
  for (size_t i = 0; i < a.size(); ++i)
    v(static_cast<Eigen::Index>(i)) =
        bounds ? bound_from_json(a[i]) : a[i].get<double>();
  return v;
}

const char* sense_name(RowSense s) {
  switch (s) {
    case RowSense::LessEqual:
      return "<=";
    case RowSense::Equal:
      return "=";
    default:
      return ">=";
  }
}

RowSense sense_from_name(const std::string& s) {
  if (s == "<=") return RowSense::LessEqual;
  if (s == "=") return RowSense::Equal;
  if (s == ">=") return RowSense::GreaterEqual;
  throw std::runtime_error("instance file: bad row sense '" + s + "'");
}

json triplets_to_json(const std::vector<Eigen::Triplet<double>>& ts) {
  json a = json::array();
  for (const auto& t : ts) a.push_back({t.row(), t.col(), t.value()});
  return a;
}

std::vector<Eigen::Triplet<double>> triplets_from_json(const json& a) {
  std::vector<Eigen::Triplet<double>> ts;
  for (const auto& e : a)
    ts.emplace_back(e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<double>());
  return ts;
}

void require_keys(const json& j, std::initializer_list<const char*> allowed,
                  const std::string& where) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* k : allowed)
      if (it.key() == k) ok = true;
    if (!ok)
      throw std::runtime_error("instance file: unknown field '" + it.key() +
                               "' in " + where);
  }
  for (const char* k : allowed)
    if (!j.contains(k))
      throw std::runtime_error("instance file: missing field '" + std::string(k) +
                               "' in " + where);
}

json constraint_set_to_json(const ConstraintSet& cs) {
  json j;
  j["dim"] = cs.dim;
  j["lower"] = vec_to_json(cs.lower, true);
  j["upper"] = vec_to_json(cs.upper, true);
  j["rhs"] = cs.rhs;
  json senses = json::array();
  for (auto s : cs.senses) senses.push_back(sense_name(s));
  j["senses"] = std::move(senses);
  j["coeffs"] = triplets_to_json(cs.coeffs);
  return j;
}

ConstraintSet constraint_set_from_json(const json& j, const std::string& where) {
  require_keys(j, {"dim", "lower", "upper", "rhs", "senses", "coeffs"}, where);
  ConstraintSet cs;
  cs.dim = j.at("dim").get<int>();
  cs.lower = vec_from_json(j.at("lower"), true);
  cs.upper = vec_from_json(j.at("upper"), true);
  cs.rhs = j.at("rhs").get<std::vector<double>>();
  for (const auto& s : j.at("senses"))
    cs.senses.push_back(sense_from_name(s.get<std::string>()));
  cs.coeffs = triplets_from_json(j.at("coeffs"));
  return cs;
}

}  // namespace

std::string serialize_instance(const Instance& inst) {
  json j;
  j["schema_version"] = kSchema;
  j["name"] = inst.name;
  j["planning_cost"] = vec_to_json(inst.planning_cost);
  j["planning"] = constraint_set_to_json(inst.planning);
  json flags = json::array();
  for (char f : inst.integer_flags) flags.push_back(static_cast<int>(f));
  j["integer_flags"] = std::move(flags);
  json periods = json::array();
  for (const auto& blk : inst.periods) {
    json b;
    b["id"] = blk.id;
    b["op_cost"] = vec_to_json(blk.op_cost);
    b["coupling"] = triplets_to_json(blk.coupling);
    b["op_matrix"] = triplets_to_json(blk.op_matrix);
    b["rhs"] = vec_to_json(blk.rhs);
    json senses = json::array();
    for (auto s : blk.senses) senses.push_back(sense_name(s));
    b["senses"] = std::move(senses);
    b["op_constraints"] = constraint_set_to_json(blk.op_constraints);
    b["slack_penalty"] = blk.slack_penalty;
    periods.push_back(std::move(b));
  }
  j["periods"] = std::move(periods);
  return j.dump(2) + "\n";
}

Instance parse_instance(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(std::string("instance file: parse error: ") + e.what());
  }
  require_keys(j,
               {"schema_version", "name", "planning_cost", "planning",
                "integer_flags", "periods"},
               "document root");
  if (j.at("schema_version").get<std::string>() != kSchema)
    throw std::runtime_error("instance file: unsupported schema_version '" +
                             j.at("schema_version").get<std::string>() + "'");
  Instance inst;
  inst.name = j.at("name").get<std::string>();
  inst.planning_cost = vec_from_json(j.at("planning_cost"));
  inst.planning = constraint_set_from_json(j.at("planning"), "planning");
  for (const auto& f : j.at("integer_flags"))
    inst.integer_flags.push_back(static_cast<char>(f.get<int>()));
  for (const auto& b : j.at("periods")) {
    require_keys(b,
                 {"id", "op_cost", "coupling", "op_matrix", "rhs", "senses",
                  "op_constraints", "slack_penalty"},
                 "period");
    OperationalBlock blk;
    blk.id = b.at("id").get<int>();
    blk.op_cost = vec_from_json(b.at("op_cost"));
    blk.coupling = triplets_from_json(b.at("coupling"));
    blk.op_matrix = triplets_from_json(b.at("op_matrix"));
    blk.rhs = vec_from_json(b.at("rhs"));
    for (const auto& s : b.at("senses"))
      blk.senses.push_back(sense_from_name(s.get<std::string>()));
    blk.op_constraints =
        constraint_set_from_json(b.at("op_constraints"), "period op_constraints");
    blk.slack_penalty = b.at("slack_penalty").get<double>();
    inst.periods.push_back(std::move(blk));
  }
  return inst;
}

void write_instance(const Instance& inst, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  out << serialize_instance(inst);
}

Instance read_instance(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

std::uint64_t instance_hash(const Instance& inst) {
  std::string doc = serialize_instance(inst);
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : doc) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::vector<std::vector<int>> default_weight_groups(const Instance& inst) {
  std::vector<std::vector<int>> groups;
  for (int j = 0; j < inst.planning_dim(); ++j) groups.push_back({j});
  return groups;
}

}  // namespace cga
