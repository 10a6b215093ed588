#include "cga/cuts.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace cga {

using nlohmann::json;

double evaluate_cut(const Cut& cut, const Eigen::VectorXd& x) {
  if (x.size() != cut.point.size())
    throw std::invalid_argument("evaluate_cut: dimension mismatch");
  return cut.value + (x - cut.point).dot(cut.subgradient);
}

const char* to_string(CutStrategy s) {
  switch (s) {
    case CutStrategy::None:
      return "none";
    case CutStrategy::LeastCostOnly:
      return "least-cost";
    case CutStrategy::All:
      return "all";
    default:
      return "first-n";
  }
}

CutStrategy cut_strategy_from_string(const std::string& s) {
  if (s == "none") return CutStrategy::None;
  if (s == "least-cost") return CutStrategy::LeastCostOnly;
  if (s == "all") return CutStrategy::All;
  if (s == "first-n") return CutStrategy::FirstN;
  throw std::invalid_argument("unknown cut strategy: " + s);
}

std::vector<Cut> view_for(const CutPool& pool, int mga_iterate) {
  if (mga_iterate == 0) return pool.cuts;  // least-cost phase sees everything
  std::vector<Cut> out;
  switch (pool.strategy) {
    case CutStrategy::None:
      break;
    case CutStrategy::LeastCostOnly:
      for (const auto& c : pool.cuts)
        if (c.from_least_cost()) out.push_back(c);
      break;
    case CutStrategy::All:
      out = pool.cuts;
      break;
    case CutStrategy::FirstN: {
      int n = std::min<int>(pool.n_limit, pool.size());
      out.assign(pool.cuts.begin(), pool.cuts.begin() + std::max(n, 0));
      break;
    }
  }
  return out;
}

void insert_cuts(CutPool& pool, const std::vector<Cut>& cuts) {
  Eigen::Index dim = -1;
  if (!pool.cuts.empty()) dim = pool.cuts.front().subgradient.size();
  for (const auto& c : cuts) {
    if (c.subgradient.size() != c.point.size())
      throw std::invalid_argument("insert_cuts: cut point/subgradient mismatch");
    if (dim < 0) dim = c.subgradient.size();
    if (c.subgradient.size() != dim)
      throw std::invalid_argument("insert_cuts: cut dimension mismatch with pool");
  }
  pool.cuts.insert(pool.cuts.end(), cuts.begin(), cuts.end());
}

namespace {

json vec_to_json(const Eigen::VectorXd& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

Eigen::VectorXd vec_from_json(const json& a) {
  Eigen::VectorXd v(a.size());
  for (size_t i = 0; i < a.size(); ++i) v(static_cast<Eigen::Index>(i)) = a[i].get<double>();
  return v;
}

}  // namespace

void write_cut_pool(const CutPool& pool, const std::filesystem::path& path) {
  json j;
  j["schema_version"] = "cga-cutpool/1";
  j["strategy"] = to_string(pool.strategy);
  j["n_limit"] = pool.n_limit;
  json cuts = json::array();
  for (const auto& c : pool.cuts) {
    cuts.push_back({{"period", c.period},
                    {"point", vec_to_json(c.point)},
                    {"value", c.value},
                    {"subgradient", vec_to_json(c.subgradient)},
                    {"mga_iterate", c.mga_iterate},
                    {"birth_iteration", c.birth_iteration}});
  }
  j["cuts"] = std::move(cuts);
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  out << j.dump(2) << "\n";
}

CutPool read_cut_pool(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path.string());
  json j = json::parse(in);
  if (j.value("schema_version", "") != "cga-cutpool/1")
    throw std::runtime_error("cut pool file: unsupported schema_version");
  CutPool pool;
  pool.strategy = cut_strategy_from_string(j.at("strategy").get<std::string>());
  pool.n_limit = j.at("n_limit").get<int>();
  for (const auto& cj : j.at("cuts")) {
    Cut c;
    c.period = cj.at("period").get<int>();
    c.point = vec_from_json(cj.at("point"));
    c.value = cj.at("value").get<double>();
    c.subgradient = vec_from_json(cj.at("subgradient"));
    c.mga_iterate = cj.at("mga_iterate").get<int>();
    c.birth_iteration = cj.at("birth_iteration").get<int>();
    pool.cuts.push_back(std::move(c));
  }
  return pool;
}

}  // namespace cga
