#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "plasmon/charpoly.hpp"
#include "plasmon/errors.hpp"
#include "plasmon/geometry.hpp"
#include "plasmon/linalg.hpp"
#include "plasmon/materials.hpp"
#include "plasmon/npcore.hpp"

namespace plasmon {

struct SpectrumTolerances {
  double cross_route = 1e-8;
  double realness = 1e-9;
  double spectral_slack = 1e-10;
};

struct PlasmonMode {
  double lambda = 0.0;
  Parity parity = Parity::Even;
  int n = 1;
  int rank = 0;  // 0-based position in descending order
  std::optional<double> sigma1;  // empty when lambda == 1/2
};

struct ModeSet {
  LayerStack stack;
  int n = 1;
  std::vector<PlasmonMode> even;
  std::vector<PlasmonMode> odd;
  /// Largest root distance between the companion and NP-eigenvalue routes.
  double route_deviation = 0.0;

  std::vector<double> lambdas(Parity p) const {
    std::vector<double> out;
    for (const auto& m : p == Parity::Even ? even : odd) out.push_back(m.lambda);
    return out;
  }
};

namespace detail {

inline std::vector<double> real_parts_checked(const std::vector<cdouble>& v, double tol, const char* route) {
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& z : v) {
    if (std::abs(z.imag()) > tol)
      throw NumericalInstability(std::string(route) + ": root with imaginary part " + plasmon::detail::num(z.imag()));
    out.push_back(z.real());
  }
  return sorted_descending(std::move(out));
}

}  // namespace detail

/// Roots of f+ (even) or f- (odd) by two routes, cross-checked.
inline std::vector<double> parity_roots(const LayerStack& stack, int n, Parity parity, const SpectrumTolerances& tol,
                                        double* deviation = nullptr) {
  const CharPoly p = build_charpoly(stack, n, parity);
  const auto poly = detail::real_parts_checked(companion_roots(p), tol.realness, "companion");
  std::vector<cdouble> ev = eigenvalues(build_np(stack, n, parity).entries);
  for (auto& z : ev) z = -z;
  const auto np = detail::real_parts_checked(ev, tol.realness, "NP matrix");
  const double dev = multiset_distance(poly, np);
  if (!(dev <= tol.cross_route))
    throw CrossValidationFailure("companion roots and NP eigenvalues differ by " + plasmon::detail::num(dev) + " (n=" +
                                 std::to_string(n) + ", " + std::string(to_string(parity)) + ")");
  for (double r : poly) {
    if (std::abs(r) > 0.5 + tol.spectral_slack)
      throw NumericalInstability("root " + plasmon::detail::num(r) + " outside [-1/2, 1/2]");
  }
  if (deviation) *deviation = dev;
  return poly;
}

inline ModeSet modes(const LayerStack& stack, int n, const SpectrumTolerances& tol = {}, double sigma0 = 1.0) {
  ModeSet set{stack, n, {}, {}, 0.0};
  for (Parity parity : {Parity::Even, Parity::Odd}) {
    double dev = 0.0;
    const auto roots = parity_roots(stack, n, parity, tol, &dev);
    set.route_deviation = std::max(set.route_deviation, dev);
    auto& dst = parity == Parity::Even ? set.even : set.odd;
    for (std::size_t j = 0; j < roots.size(); ++j) {
      PlasmonMode m;
      m.lambda = roots[j];
      m.parity = parity;
      m.n = n;
      m.rank = static_cast<int>(j);
      if (roots[j] != 0.5) m.sigma1 = sigma_from_lambda(roots[j], sigma0).real();
      dst.push_back(m);
    }
  }
  return set;
}

/// max_j |lambda+_j + lambda-_{N+1-j}| with both lists in descending order.
inline double verify_root_symmetry(const ModeSet& set) {
  const auto plus = set.lambdas(Parity::Even);
  const auto minus = set.lambdas(Parity::Odd);
  if (plus.size() != minus.size()) return std::numeric_limits<double>::infinity();
  double d = 0.0;
  const std::size_t N = plus.size();
  for (std::size_t j = 0; j < N; ++j) d = std::max(d, std::abs(plus[j] + minus[N - 1 - j]));
  return d;
}

/// xi_1 = first, xi_{i+1} = ratio * xi_i.
inline LayerStack geometric_stack(int N, double first, double ratio, double focal = 1.0) {
  if (N < 1) throw ConfigError("layer count must be >= 1");
  if (!(ratio > 0.0 && ratio < 1.0)) throw ConfigError("decay ratio must lie in (0, 1)");
  std::vector<double> xi(static_cast<std::size_t>(N));
  xi[0] = first;
  for (std::size_t k = 1; k < xi.size(); ++k) xi[k] = ratio * xi[k - 1];
  return LayerStack(focal, std::move(xi));
}

struct SweepPoint {
  double scale = 0.0;
  double min_xi = 0.0;
  double gap = 0.0;
};

/// Euclidean distance between the descending even and odd root vectors as
/// xi_1 = L*N grows.
inline std::vector<SweepPoint> disk_degeneration_sweep(int N, double ratio, const std::vector<double>& scales, int n,
                                                       const SpectrumTolerances& tol = {}) {
  std::vector<SweepPoint> out;
  for (double L : scales) {
    const LayerStack stack = geometric_stack(N, L * N, ratio);
    const auto plus = parity_roots(stack, n, Parity::Even, tol);
    const auto minus = parity_roots(stack, n, Parity::Odd, tol);
    double g2 = 0.0;
    for (std::size_t j = 0; j < plus.size(); ++j) g2 += (plus[j] - minus[j]) * (plus[j] - minus[j]);
    out.push_back({L, stack.xi().back(), std::sqrt(g2)});
  }
  return out;
}

/// Least-squares slope of log(gap) against the smallest radius.
inline double sweep_log_slope(const std::vector<SweepPoint>& pts) {
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  int m = 0;
  for (const auto& p : pts) {
    if (!(p.gap > 0.0)) continue;
    const double y = std::log(p.gap);
    sx += p.min_xi;
    sy += y;
    sxx += p.min_xi * p.min_xi;
    sxy += p.min_xi * y;
    ++m;
  }
  if (m < 2) return std::nan("");
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

struct ResonantMaterial {
  double sigma1 = 0.0;
  std::optional<double> omega;
};

inline ResonantMaterial mode_to_material(const PlasmonMode& mode, double sigma0,
                                         const std::optional<DrudeParams>& drude = std::nullopt) {
  ResonantMaterial r;
  r.sigma1 = sigma_from_lambda(mode.lambda, sigma0).real();
  if (drude) r.omega = resonant_frequency(mode.lambda, *drude, sigma0);
  return r;
}

}  // namespace plasmon
