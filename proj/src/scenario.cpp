#include "meco/scenario.hpp"

#include <cmath>

#include "json.hpp"
#include "meco/rng.hpp"

namespace meco {

void GenSpec::validate() const {
  if (K < 1) throw std::domain_error("K must be >= 1");
  if (!(slot_T > 0) || !(bandwidth_B > 0) || !(noise_N0 > 0) || !(avg_path_gain > 0)) {
    throw std::domain_error("slot_T, bandwidth_B, noise_N0, avg_path_gain must be > 0");
  }
  if (fk_choices.empty()) throw std::domain_error("fk_choices must be nonempty");
  auto range_ok = [](const std::pair<double, double>& r) {
    return std::isfinite(r.first) && std::isfinite(r.second) && r.first <= r.second;
  };
  if (!range_ok(p_range) || !range_ok(r_range) || !range_ok(c_range)) {
    throw std::domain_error("ranges must satisfy lo <= hi");
  }
  if (std::isnan(cloud_F) || cloud_F <= 0.0) {
    throw std::domain_error("cloud_F must be > 0 (or infinite)");
  }
}

GenSpec default_spec() {
  GenSpec spec;
  spec.K = 30;
  spec.slot_T = 0.1;
  spec.bandwidth_B = 1e7;
  spec.noise_N0 = 1e-9;
  spec.avg_path_gain = 1e-6;
  spec.fk_choices.clear();
  for (int i = 1; i <= 10; ++i) spec.fk_choices.push_back(i * 1e8);
  spec.p_range = {0.0, 20e-11};
  spec.r_range = {100.0 * 8192.0, 500.0 * 8192.0};
  spec.c_range = {500.0, 1500.0};
  spec.cloud_F = 6e9;
  spec.seed = 1;
  return spec;
}

GenSpec desk_spec() {
  GenSpec spec = default_spec();
  spec.r_range = {1e5, 5e5};
  spec.fk_choices.clear();
  for (int i = 1; i <= 10; ++i) spec.fk_choices.push_back(i * 4e9);
  return spec;
}

Scenario generate(const GenSpec& spec) {
  spec.validate();
  Scenario s;
  s.sys.slot_T = spec.slot_T;
  s.sys.rc.bandwidth_B = spec.bandwidth_B;
  s.sys.rc.noise_N0 = spec.noise_N0;
  s.sys.cloud_F = spec.cloud_F;
  s.users.reserve(spec.K);
  for (int k = 0; k < spec.K; ++k) {
    SplitMix64 rng(SplitMix64::derive(spec.seed, static_cast<std::uint64_t>(k)));
    UserParams u;
    u.beta = 1.0;
    u.gain_h2 = rng.exponential(spec.avg_path_gain);
    u.local_speed = spec.fk_choices[rng.pick(spec.fk_choices.size())];
    u.energy_per_cycle = rng.uniform(spec.p_range.first, spec.p_range.second);
    u.data_bits = rng.uniform(spec.r_range.first, spec.r_range.second);
    u.cycles_per_bit = rng.uniform(spec.c_range.first, spec.c_range.second);
    s.users.push_back(u);
  }
  s.validate();
  return s;
}

namespace {

nlohmann::json cloud_to_json(double cloud_F) {
  if (std::isinf(cloud_F)) return "inf";
  return cloud_F;
}

double cloud_from_json(const nlohmann::json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") {
      return std::numeric_limits<double>::infinity();
    }
    throw std::invalid_argument("cloud capacity must be a number or \"inf\"");
  }
  return j.get<double>();
}

}  // namespace

std::string genspec_to_json(const GenSpec& spec) {
  nlohmann::json j;
  j["K"] = spec.K;
  j["T"] = spec.slot_T;
  j["B"] = spec.bandwidth_B;
  j["N0"] = spec.noise_N0;
  j["avg_path_gain"] = spec.avg_path_gain;
  j["Fk_choices"] = spec.fk_choices;
  j["P_range"] = {spec.p_range.first, spec.p_range.second};
  j["R_range"] = {spec.r_range.first, spec.r_range.second};
  j["C_range"] = {spec.c_range.first, spec.c_range.second};
  j["cloud_F"] = cloud_to_json(spec.cloud_F);
  j["seed"] = spec.seed;
  return j.dump(2);
}

GenSpec genspec_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  GenSpec spec = default_spec();
  spec.K = j.at("K").get<int>();
  spec.slot_T = j.at("T").get<double>();
  spec.bandwidth_B = j.at("B").get<double>();
  spec.noise_N0 = j.at("N0").get<double>();
  spec.avg_path_gain = j.at("avg_path_gain").get<double>();
  spec.fk_choices = j.at("Fk_choices").get<std::vector<double>>();
  auto pair_of = [&](const char* key) {
    const auto& arr = j.at(key);
    return std::pair<double, double>{arr.at(0).get<double>(), arr.at(1).get<double>()};
  };
  spec.p_range = pair_of("P_range");
  spec.r_range = pair_of("R_range");
  spec.c_range = pair_of("C_range");
  spec.cloud_F = cloud_from_json(j.at("cloud_F"));
  spec.seed = j.at("seed").get<std::uint64_t>();
  spec.validate();
  return spec;
}

}  // namespace meco
