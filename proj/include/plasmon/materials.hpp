#pragma once

#include <cmath>
#include <complex>

#include "plasmon/errors.hpp"
#include "plasmon/linalg.hpp"

namespace plasmon {

/// Background sigma0 and the plasmonic shell sigma1 = -sigma_star + i delta.
/// Odd layers carry sigma1, even layers (and the exterior) carry sigma0.
struct MaterialConfig {
  double sigma0 = 1.0;
  double sigma_star = 1.0;
  double delta = 0.0;

  MaterialConfig() = default;
  MaterialConfig(double s0, double s_star, double d) : sigma0(s0), sigma_star(s_star), delta(d) {
    if (!(sigma0 > 0.0)) throw ConfigError("sigma0 must be > 0");
    if (!(sigma_star > 0.0)) throw ConfigError("sigma_star must be > 0");
    if (!(delta >= 0.0)) throw ConfigError("delta must be >= 0");
  }

  cdouble sigma1() const { return {-sigma_star, delta}; }
  /// Conductivity of layer k in {0..N}.
  cdouble layer_sigma(int k) const { return (k % 2 == 1) ? sigma1() : cdouble(sigma0, 0.0); }
};

/// Drude dispersion sigma1(omega) = sigma' (1 - omega_p^2 / (omega (omega + i tau))).
struct DrudeParams {
  double sigma_prime = 9e-12;
  double omega_p = 2e15;
  double tau = 1e14;

  DrudeParams() = default;
  DrudeParams(double sp, double wp, double t) : sigma_prime(sp), omega_p(wp), tau(t) {
    if (!(sigma_prime > 0.0) || !(omega_p > 0.0) || !(tau >= 0.0))
      throw ConfigError("Drude parameters must be positive");
  }

  /// Background conductivity used alongside the default Drude constants.
  static double default_background() { return 1.33 * 1.33 * 9e-12; }
};

inline cdouble lambda_from_sigma(cdouble sigma1, double sigma0) {
  const cdouble diff = sigma1 - sigma0;
  if (diff == cdouble(0.0, 0.0)) throw ContrastSingular("sigma1 == sigma0: no contrast");
  return (sigma1 + sigma0) / (2.0 * diff);
}

inline cdouble sigma_from_lambda(cdouble lambda, double sigma0) {
  const cdouble denom = 2.0 * lambda - 1.0;
  if (denom == cdouble(0.0, 0.0)) throw InfiniteConductivity("lambda = 1/2 maps to infinite conductivity");
  return sigma0 * (2.0 * lambda + 1.0) / denom;
}

inline cdouble drude_sigma(double omega, const DrudeParams& p) {
  if (!(omega > 0.0)) throw ConfigError("frequency must be > 0");
  return p.sigma_prime * (1.0 - p.omega_p * p.omega_p / (omega * cdouble(omega, p.tau)));
}

/// Lossless (tau = 0) frequency at which the Drude sigma1 hits the value
/// resonant with lambda_star.
inline double resonant_frequency(double lambda_star, const DrudeParams& p, double sigma0) {
  const double target = sigma_from_lambda(lambda_star, sigma0).real();
  if (!(target < p.sigma_prime))
    throw NoRealFrequency("resonant conductivity is not below sigma'; no real frequency exists");
  return p.omega_p * std::sqrt(p.sigma_prime / (p.sigma_prime - target));
}

}  // namespace plasmon
