#pragma once

#include <limits>
#include <string>
#include <vector>

#include "meco/errors.hpp"
#include "meco/scalarfn.hpp"

namespace meco {

/// Slot-level constants. cloud_F is the CPU-cycle budget the edge cloud
/// grants per slot; an unlimited cloud is represented as +infinity.
struct SystemParams {
  double slot_T = 0.0;  // s
  RadioConstants rc;
  double cloud_F = std::numeric_limits<double>::infinity();  // cycles/slot

  bool cloud_unlimited() const { return std::isinf(cloud_F); }
  void validate() const;
};

struct UserParams {
  double beta = 1.0;             // fairness weight
  double cycles_per_bit = 0.0;   // C
  double energy_per_cycle = 0.0; // J/cycle
  double gain_h2 = 0.0;          // channel power gain
  double data_bits = 0.0;        // R, input size
  double local_speed = 0.0;      // cycles/s

  void validate() const;
};

struct Scenario {
  SystemParams sys;
  std::vector<UserParams> users;

  std::size_t size() const { return users.size(); }
  void validate() const;
};

/// Solver output: offloaded bits and airtime per user.
struct Allocation {
  std::vector<double> offload_bits;  // ell_k
  std::vector<double> airtime;       // t_k, seconds
};

struct EnergyBreakdown {
  std::vector<double> local_energy;    // (R - ell) * C * P, J
  std::vector<double> offload_energy;  // t/h2 * tx_power(ell/t), J
  std::vector<double> tx_power_w;      // transmit power while active, W
  std::vector<double> offload_rate;    // ell/t, bits/s (0 when idle)
  double weighted_total = 0.0;         // sum beta*(E_loc + E_off), J
};

/// Bits the user must offload because the local CPU cannot finish the
/// whole input within the slot: max(R - Fk*T/C, 0).
double min_offload(const UserParams& u, const SystemParams& sys);

/// Feasibility of the capacity-bounded problem: the forced offloads alone
/// must fit the cloud budget.
bool check_feasible(const Scenario& s);

/// Energy accounting for a given allocation. Throws InfeasibleError if some
/// user has offloaded bits but zero airtime.
EnergyBreakdown evaluate(const Scenario& s, const Allocation& a);

enum class ConstraintKind {
  TimeBudget,     // sum t <= T
  CloudCapacity,  // sum C*ell <= F
  OffloadLower,   // ell >= min_offload
  OffloadUpper,   // ell <= R
  AirtimeNegative // t >= 0
};

struct ConstraintViolation {
  ConstraintKind kind;
  int user;          // -1 for the aggregate constraints
  double magnitude;  // raw amount by which the constraint is exceeded
};

std::string to_string(ConstraintKind kind);

/// Audits an allocation against every constraint. Detection threshold for
/// each constraint is tol * max(1, |rhs|), so slot times (~1e-1) and cycle
/// budgets (~1e9) are treated uniformly; the reported magnitude is raw.
std::vector<ConstraintViolation> check_constraints(const Scenario& s,
                                                   const Allocation& a,
                                                   double tol);

/// JSON interchange (schema documented in the README):
///   {"system": {"T","B","N0","F" (number or "inf")},
///    "users": [{"beta","C","P","h2","R","Fk"}, ...]}
std::string scenario_to_json(const Scenario& s);
Scenario scenario_from_json(const std::string& text);

}  // namespace meco
