#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <utility>
#include <vector>

#include "plasmon/errors.hpp"

namespace plasmon {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Wrap an angle into [0, 2*pi).
inline double wrap_angle(double eta) {
  double w = std::fmod(eta, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  if (w >= kTwoPi) w = 0.0;
  return w;
}

struct EllipticPoint {
  double xi = 0.0;
  double eta = 0.0;

  EllipticPoint() = default;
  EllipticPoint(double xi_, double eta_) : xi(xi_), eta(wrap_angle(eta_)) {
    if (!(xi_ >= 0.0)) throw InvalidGeometry("elliptic radius must be >= 0");
  }
};

struct Cartesian {
  double x1 = 0.0;
  double x2 = 0.0;
};

/// Confocal layer stack: focal half-distance R and strictly decreasing
/// elliptic radii xi_1 > ... > xi_N > 0 (outermost first).
class LayerStack {
 public:
  LayerStack(double focal, std::vector<double> radii) : focal_(focal), xi_(std::move(radii)) {
    if (!(focal_ > 0.0) || !std::isfinite(focal_)) throw InvalidGeometry("focal parameter R must be > 0");
    if (xi_.empty()) throw InvalidGeometry("layer stack needs at least one interface");
    for (std::size_t k = 0; k < xi_.size(); ++k) {
      if (!(xi_[k] > 0.0) || !std::isfinite(xi_[k]))
        throw InvalidGeometry("elliptic radii must be finite and > 0");
      if (k > 0 && !(xi_[k] < xi_[k - 1]))
        throw InvalidGeometry("elliptic radii must be strictly decreasing");
    }
  }

  double focal() const noexcept { return focal_; }
  const std::vector<double>& xi() const noexcept { return xi_; }
  /// 1-based interface radius xi_k.
  double xi(int k) const { return xi_.at(static_cast<std::size_t>(k - 1)); }
  int layers() const noexcept { return static_cast<int>(xi_.size()); }

 private:
  double focal_;
  std::vector<double> xi_;
};

inline Cartesian elliptic_to_cartesian(const EllipticPoint& p, double focal) {
  return {focal * std::cosh(p.xi) * std::cos(p.eta), focal * std::sinh(p.xi) * std::sin(p.eta)};
}

/// Principal inverse of x1 + i x2 = R cosh(xi + i eta).
inline EllipticPoint cartesian_to_elliptic(double x1, double x2, double focal) {
  if (!(focal > 0.0)) throw InvalidGeometry("focal parameter R must be > 0");
  const double u = x1 / focal;
  if (x2 == 0.0 && std::abs(u) <= 1.0) return {0.0, std::acos(u)};
  const std::complex<double> z(u, x2 / focal);
  // acosh(z) = log(z + sqrt(z - 1) sqrt(z + 1)) keeps the branch cut on (-inf, 1].
  const std::complex<double> w = std::log(z + std::sqrt(z - 1.0) * std::sqrt(z + 1.0));
  double xi = w.real();
  double eta = w.imag();
  if (xi < 0.0) {
    xi = -xi;
    eta = -eta;
  }
  return {xi, eta};
}

inline double xi_from_semimajor(double semimajor, double focal) {
  if (!(focal > 0.0)) throw InvalidGeometry("focal parameter R must be > 0");
  if (!(semimajor >= focal)) throw InvalidGeometry("semi-major axis must be >= R");
  return std::acosh(semimajor / focal);
}

/// Scale factor gamma = R sqrt(sinh^2 xi + sin^2 eta); ds = gamma d(eta).
inline double metric_factor(double xi, double eta, double focal) {
  const double sh = std::sinh(xi);
  const double s = std::sin(eta);
  return focal * std::sqrt(sh * sh + s * s);
}

inline double curvature(double xi, double eta, double focal) {
  if (!(xi > 0.0)) throw SingularGeometry("curvature is singular on the focal segment (xi = 0)");
  const double sh = std::sinh(xi);
  const double s = std::sin(eta);
  const double q = sh * sh + s * s;
  return std::cosh(xi) * sh / (focal * q * std::sqrt(q));
}

inline double max_curvature(double xi, double focal) {
  if (!(xi > 0.0)) throw SingularGeometry("curvature is singular on the focal segment (xi = 0)");
  const double sh = std::sinh(xi);
  return std::cosh(xi) / (focal * sh * sh);
}

/// Outward unit normal of the confocal ellipse through (xi, eta), xi > 0.
inline Cartesian outward_normal(double xi, double eta, double focal) {
  const double g = metric_factor(xi, eta, focal);
  return {focal * std::sinh(xi) * std::cos(eta) / g, focal * std::cosh(xi) * std::sin(eta) / g};
}

/// Layer index l in {0..N} containing radius xi, using xi_{l+1} < xi <= xi_l
/// with xi_0 = +inf. Points on an interface belong to the inner region.
inline int region_of(const LayerStack& stack, double xi) {
  const auto& r = stack.xi();
  int l = 0;
  while (l < static_cast<int>(r.size()) && xi <= r[static_cast<std::size_t>(l)]) ++l;
  return l;
}

/// Closed polyline sampling interface k (1-based).
inline std::vector<Cartesian> interface_polyline(const LayerStack& stack, int k, int samples) {
  std::vector<Cartesian> pts;
  pts.reserve(static_cast<std::size_t>(samples) + 1);
  for (int j = 0; j <= samples; ++j) {
    const double eta = kTwoPi * j / samples;
    pts.push_back({stack.focal() * std::cosh(stack.xi(k)) * std::cos(eta),
                   stack.focal() * std::sinh(stack.xi(k)) * std::sin(eta)});
  }
  return pts;
}

}  // namespace plasmon
