#include "meco/scalarfn.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace meco {

namespace {
constexpr double kLn2 = std::numbers::ln2;
constexpr double kE = std::numbers::e;

void require_finite_nonneg(double x, const char* name) {
  if (!std::isfinite(x) || x < 0.0) {
    throw std::domain_error(std::string(name) + " must be finite and >= 0");
  }
}
}  // namespace

void RadioConstants::validate() const {
  if (!std::isfinite(bandwidth_B) || bandwidth_B <= 0.0) {
    throw std::domain_error("bandwidth_B must be finite and > 0");
  }
  if (!std::isfinite(noise_N0) || noise_N0 <= 0.0) {
    throw std::domain_error("noise_N0 must be finite and > 0");
  }
}

double tx_power(double rate, const RadioConstants& rc) {
  require_finite_nonneg(rate, "rate");
  return rc.noise_N0 * (std::exp2(rate / rc.bandwidth_B) - 1.0);
}

double tx_power_slope(double rate, const RadioConstants& rc) {
  require_finite_nonneg(rate, "rate");
  return rc.noise_N0 * kLn2 / rc.bandwidth_B * std::exp2(rate / rc.bandwidth_B);
}

double rate_for_slope(double slope, const RadioConstants& rc) {
  if (!std::isfinite(slope)) throw std::domain_error("slope must be finite");
  double arg = slope * rc.bandwidth_B / (rc.noise_N0 * kLn2);
  if (arg < 1.0) {
    // Tolerate rounding at the zero-rate slope itself.
    if (arg > 1.0 - 1e-12) {
      arg = 1.0;
    } else {
      throw std::domain_error("slope below the zero-rate slope N0*ln2/B");
    }
  }
  return rc.bandwidth_B * std::log2(arg);
}

double airtime_gradient(double rate, const RadioConstants& rc) {
  require_finite_nonneg(rate, "rate");
  const double x = rate / rc.bandwidth_B;
  return rc.noise_N0 * ((1.0 - x * kLn2) * std::exp2(x) - 1.0);
}

double rate_for_airtime_gradient(double grad, const RadioConstants& rc) {
  if (!std::isfinite(grad) || grad > 0.0) {
    throw std::domain_error("airtime gradient must be <= 0");
  }
  const double arg = (grad + rc.noise_N0) / (-rc.noise_N0 * kE);
  return rc.bandwidth_B * (lambert_w0(arg) + 1.0) / kLn2;
}

double lambert_w0(double z) {
  if (std::isnan(z)) throw std::domain_error("lambert_w0: nan input");
  const double branch = -std::exp(-1.0);
  if (z < branch) {
    if (z < branch - 1e-12) {
      throw std::domain_error("lambert_w0: input below -1/e");
    }
    z = branch;
  }
  if (z == branch) return -1.0;
  if (z == 0.0) return 0.0;

  double w;
  if (z < -0.25) {
    // Series in sqrt(2*(1 + e*z)) around the branch point.
    const double p = std::sqrt(2.0 * (1.0 + kE * z));
    w = -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * 11.0 / 72.0));
  } else {
    w = std::log1p(z);
  }

  // Halley iteration; cubic convergence from either guess.
  for (int i = 0; i < 50; ++i) {
    const double ew = std::exp(w);
    const double res = w * ew - z;
    const double wp1 = w + 1.0;
    const double denom = ew * wp1 - (w + 2.0) * res / (2.0 * wp1);
    const double step = res / denom;
    w -= step;
    if (std::abs(step) <= 1e-14 ||
        std::abs(step) <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(w)) {
      break;
    }
  }
  return w < -1.0 ? -1.0 : w;
}

double offload_gain(double cycles_per_bit, double energy_per_cycle,
                    double gain_h2, const RadioConstants& rc) {
  if (!std::isfinite(cycles_per_bit) || cycles_per_bit <= 0.0) {
    throw std::domain_error("cycles_per_bit must be > 0");
  }
  if (!std::isfinite(gain_h2) || gain_h2 <= 0.0) {
    throw std::domain_error("gain_h2 must be > 0");
  }
  require_finite_nonneg(energy_per_cycle, "energy_per_cycle");
  return rc.bandwidth_B * cycles_per_bit * energy_per_cycle * gain_h2 /
         (rc.noise_N0 * kLn2);
}

double offload_priority(double beta, double cycles_per_bit,
                        double energy_per_cycle, double gain_h2,
                        const RadioConstants& rc) {
  if (!std::isfinite(beta) || beta <= 0.0) {
    throw std::domain_error("beta must be > 0");
  }
  const double v = offload_gain(cycles_per_bit, energy_per_cycle, gain_h2, rc);
  if (v <= 1.0) return 0.0;
  return beta * rc.noise_N0 / gain_h2 * (v * std::log(v) - v + 1.0);
}

double effective_offload_priority(double beta, double cycles_per_bit,
                                  double energy_per_cycle, double gain_h2,
                                  double mu, const RadioConstants& rc) {
  if (!std::isfinite(mu) || mu < 0.0) {
    throw std::domain_error("mu must be >= 0");
  }
  const double discounted = std::max(energy_per_cycle - mu, 0.0);
  return offload_priority(beta, cycles_per_bit, discounted, gain_h2, rc);
}

}  // namespace meco
