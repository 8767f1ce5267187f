#include "meco/model.hpp"

#include <cmath>

#include "json.hpp"

namespace meco {

void SystemParams::validate() const {
  if (!std::isfinite(slot_T) || slot_T <= 0.0) {
    throw std::domain_error("slot_T must be finite and > 0");
  }
  rc.validate();
  if (std::isnan(cloud_F) || cloud_F <= 0.0) {
    throw std::domain_error("cloud_F must be > 0 (or infinite)");
  }
}

void UserParams::validate() const {
  auto positive = [](double x, const char* name) {
    if (!std::isfinite(x) || x <= 0.0) {
      throw std::domain_error(std::string(name) + " must be finite and > 0");
    }
  };
  auto nonneg = [](double x, const char* name) {
    if (!std::isfinite(x) || x < 0.0) {
      throw std::domain_error(std::string(name) + " must be finite and >= 0");
    }
  };
  positive(beta, "beta");
  positive(cycles_per_bit, "cycles_per_bit");
  nonneg(energy_per_cycle, "energy_per_cycle");
  positive(gain_h2, "gain_h2");
  positive(data_bits, "data_bits");
  nonneg(local_speed, "local_speed");
}

void Scenario::validate() const {
  sys.validate();
  if (users.empty()) throw std::domain_error("scenario needs at least one user");
  for (const auto& u : users) u.validate();
}

double min_offload(const UserParams& u, const SystemParams& sys) {
  return std::max(u.data_bits - u.local_speed * sys.slot_T / u.cycles_per_bit, 0.0);
}

bool check_feasible(const Scenario& s) {
  if (s.sys.cloud_unlimited()) return true;
  double forced_cycles = 0.0;
  for (const auto& u : s.users) {
    forced_cycles += u.cycles_per_bit * min_offload(u, s.sys);
  }
  return forced_cycles <= s.sys.cloud_F;
}

EnergyBreakdown evaluate(const Scenario& s, const Allocation& a) {
  const std::size_t n = s.size();
  if (a.offload_bits.size() != n || a.airtime.size() != n) {
    throw std::invalid_argument("allocation size does not match scenario");
  }
  EnergyBreakdown eb;
  eb.local_energy.resize(n);
  eb.offload_energy.resize(n);
  eb.tx_power_w.resize(n);
  eb.offload_rate.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto& u = s.users[k];
    const double ell = a.offload_bits[k];
    const double t = a.airtime[k];
    if (ell > 0.0 && t <= 0.0) {
      throw InfeasibleError("user " + std::to_string(k) +
                            " offloads bits with zero airtime");
    }
    eb.local_energy[k] = (u.data_bits - ell) * u.cycles_per_bit * u.energy_per_cycle;
    if (t > 0.0) {
      const double rate = ell / t;
      const double p = tx_power(rate, s.sys.rc) / u.gain_h2;
      eb.offload_rate[k] = rate;
      eb.tx_power_w[k] = p;
      eb.offload_energy[k] = p * t;
    } else {
      eb.offload_rate[k] = 0.0;
      eb.tx_power_w[k] = 0.0;
      eb.offload_energy[k] = 0.0;
    }
    eb.weighted_total += u.beta * (eb.local_energy[k] + eb.offload_energy[k]);
  }
  return eb;
}

std::string to_string(ConstraintKind kind) {
  switch (kind) {
    case ConstraintKind::TimeBudget: return "time_budget";
    case ConstraintKind::CloudCapacity: return "cloud_capacity";
    case ConstraintKind::OffloadLower: return "offload_lower";
    case ConstraintKind::OffloadUpper: return "offload_upper";
    case ConstraintKind::AirtimeNegative: return "airtime_negative";
  }
  return "unknown";
}

std::vector<ConstraintViolation> check_constraints(const Scenario& s,
                                                   const Allocation& a,
                                                   double tol) {
  std::vector<ConstraintViolation> out;
  const std::size_t n = s.size();
  if (a.offload_bits.size() != n || a.airtime.size() != n) {
    throw std::invalid_argument("allocation size does not match scenario");
  }
  auto slack_tol = [tol](double rhs) { return tol * std::max(1.0, std::abs(rhs)); };

  double total_t = 0.0;
  double total_cycles = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const auto& u = s.users[k];
    const double ell = a.offload_bits[k];
    const double t = a.airtime[k];
    total_t += t;
    total_cycles += u.cycles_per_bit * ell;
    const double lo = min_offload(u, s.sys);
    if (lo - ell > slack_tol(lo)) {
      out.push_back({ConstraintKind::OffloadLower, static_cast<int>(k), lo - ell});
    }
    if (ell - u.data_bits > slack_tol(u.data_bits)) {
      out.push_back({ConstraintKind::OffloadUpper, static_cast<int>(k), ell - u.data_bits});
    }
    if (-t > slack_tol(0.0)) {
      out.push_back({ConstraintKind::AirtimeNegative, static_cast<int>(k), -t});
    }
  }
  if (total_t - s.sys.slot_T > slack_tol(s.sys.slot_T)) {
    out.push_back({ConstraintKind::TimeBudget, -1, total_t - s.sys.slot_T});
  }
  if (!s.sys.cloud_unlimited() &&
      total_cycles - s.sys.cloud_F > slack_tol(s.sys.cloud_F)) {
    out.push_back({ConstraintKind::CloudCapacity, -1, total_cycles - s.sys.cloud_F});
  }
  return out;
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

std::string scenario_to_json(const Scenario& s) {
  nlohmann::json j;
  j["system"] = {{"T", s.sys.slot_T},
                 {"B", s.sys.rc.bandwidth_B},
                 {"N0", s.sys.rc.noise_N0},
                 {"F", cloud_to_json(s.sys.cloud_F)}};
  j["users"] = nlohmann::json::array();
  for (const auto& u : s.users) {
    j["users"].push_back({{"beta", u.beta},
                          {"C", u.cycles_per_bit},
                          {"P", u.energy_per_cycle},
                          {"h2", u.gain_h2},
                          {"R", u.data_bits},
                          {"Fk", u.local_speed}});
  }
  return j.dump(2);
}

Scenario scenario_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  Scenario s;
  const auto& sys = j.at("system");
  s.sys.slot_T = sys.at("T").get<double>();
  s.sys.rc.bandwidth_B = sys.at("B").get<double>();
  s.sys.rc.noise_N0 = sys.at("N0").get<double>();
  s.sys.cloud_F = cloud_from_json(sys.at("F"));
  for (const auto& ju : j.at("users")) {
    UserParams u;
    u.beta = ju.at("beta").get<double>();
    u.cycles_per_bit = ju.at("C").get<double>();
    u.energy_per_cycle = ju.at("P").get<double>();
    u.gain_h2 = ju.at("h2").get<double>();
    u.data_bits = ju.at("R").get<double>();
    u.local_speed = ju.at("Fk").get<double>();
    s.users.push_back(u);
  }
  s.validate();
  return s;
}

}  // namespace meco
