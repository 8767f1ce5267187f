#pragma once

#include <stdexcept>

namespace meco {

/// Channel constants shared by every rate/power formula.
struct RadioConstants {
  double bandwidth_B = 0.0;  // Hz
  double noise_N0 = 0.0;     // W

  /// Throws std::domain_error unless both fields are finite and positive.
  void validate() const;
};

/// Transmit power (W) required to sustain `rate` bits/s over a unit-gain
/// channel: N0 * (2^(rate/B) - 1). Strictly increasing and convex, zero at
/// zero rate.
double tx_power(double rate, const RadioConstants& rc);

/// Derivative of tx_power with respect to the rate, W per (bit/s).
double tx_power_slope(double rate, const RadioConstants& rc);

/// Inverse of tx_power_slope. Defined for slope >= N0*ln2/B (the slope at
/// zero rate); throws std::domain_error below that.
double rate_for_slope(double slope, const RadioConstants& rc);

/// Marginal change of the offload energy t * tx_power(bits/t) with respect
/// to the airtime t, expressed as a function of the rate:
/// tx_power(x) - x * tx_power_slope(x). Zero at x = 0, strictly decreasing
/// and nonpositive for x >= 0: extra airtime never costs energy.
double airtime_gradient(double rate, const RadioConstants& rc);

/// Inverse of airtime_gradient on y <= 0, in Lambert form:
/// B * (W0((y + N0) / (-N0*e)) + 1) / ln2. Monotone decreasing in y.
double rate_for_airtime_gradient(double grad, const RadioConstants& rc);

/// Principal branch of the Lambert W function: w * e^w = z for z >= -1/e.
/// Inputs within 1e-12 below -1/e clamp to the branch point (absorbs float
/// noise from upstream subtraction); anything lower throws.
double lambert_w0(double z);

/// Dimensionless offloading gain: B*C*P*h2 / (N0*ln2). Values above 1 mean
/// offloading can beat local computing at some rate.
double offload_gain(double cycles_per_bit, double energy_per_cycle,
                    double gain_h2, const RadioConstants& rc);

/// Offloading priority (J, comparable with the time-sharing multiplier):
/// beta*N0/h2 * (v*ln v - v + 1) for gain v >= 1, zero below. Monotone
/// nondecreasing in beta, C, P and h.
double offload_priority(double beta, double cycles_per_bit,
                        double energy_per_cycle, double gain_h2,
                        const RadioConstants& rc);

/// Priority with the computation energy discounted by the cloud-capacity
/// multiplier: energy_per_cycle replaced by max(P - mu, 0).
double effective_offload_priority(double beta, double cycles_per_bit,
                                  double energy_per_cycle, double gain_h2,
                                  double mu, const RadioConstants& rc);

}  // namespace meco
