#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "plasmon/errors.hpp"
#include "plasmon/geometry.hpp"
#include "plasmon/linalg.hpp"
#include "plasmon/npcore.hpp"

namespace plasmon::bie {

inline constexpr double kPi = std::numbers::pi;

/// Smooth closed curve, counter-clockwise in its parameter t in [0, 2pi).
/// Confocal: (R cosh xi cos t, R sinh xi sin t).
/// Polar: r(t) = scale * (c_0 + sum_k c_k cos(k t)).
struct CurveSpec {
  enum class Kind { Confocal, Polar };
  Kind kind = Kind::Polar;
  double focal = 1.0;
  double xi = 1.0;
  double scale = 1.0;
  std::vector<double> coeffs{1.0};

  static CurveSpec confocal(double focal, double xi) {
    if (!(focal > 0.0) || !(xi > 0.0)) throw InvalidGeometry("confocal curve needs R > 0 and xi > 0");
    CurveSpec c;
    c.kind = Kind::Confocal;
    c.focal = focal;
    c.xi = xi;
    return c;
  }

  static CurveSpec polar(std::vector<double> coeffs, double scale = 1.0) {
    if (coeffs.empty()) throw InvalidGeometry("polar curve needs at least one coefficient");
    if (!(scale > 0.0)) throw InvalidGeometry("polar scale must be > 0");
    CurveSpec c;
    c.kind = Kind::Polar;
    c.coeffs = std::move(coeffs);
    c.scale = scale;
    return c;
  }

  static CurveSpec circle(double radius) { return polar({1.0}, radius); }

  /// Polar radius at t (unused for confocal curves).
  double radius(double t) const {
    double r = 0.0;
    for (std::size_t k = 0; k < coeffs.size(); ++k) r += coeffs[k] * std::cos(static_cast<double>(k) * t);
    return scale * r;
  }

  /// Point, first and second derivative with respect to t.
  std::array<Cartesian, 3> eval(double t) const {
    if (kind == Kind::Confocal) {
      const double a = focal * std::cosh(xi);
      const double b = focal * std::sinh(xi);
      const double c = std::cos(t), s = std::sin(t);
      return {Cartesian{a * c, b * s}, Cartesian{-a * s, b * c}, Cartesian{-a * c, -b * s}};
    }
    double r = 0.0, r1 = 0.0, r2 = 0.0;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      const double kk = static_cast<double>(k);
      r += coeffs[k] * std::cos(kk * t);
      r1 -= kk * coeffs[k] * std::sin(kk * t);
      r2 -= kk * kk * coeffs[k] * std::cos(kk * t);
    }
    r *= scale;
    r1 *= scale;
    r2 *= scale;
    const double c = std::cos(t), s = std::sin(t);
    return {Cartesian{r * c, r * s}, Cartesian{r1 * c - r * s, r1 * s + r * c},
            Cartesian{r2 * c - 2.0 * r1 * s - r * c, r2 * s + 2.0 * r1 * c - r * s}};
  }
};

struct DiscretizedCurve {
  int M = 0;
  std::vector<double> t;
  std::vector<Cartesian> x;
  std::vector<Cartesian> tangent;  // x'(t)
  std::vector<Cartesian> normal;   // outward unit normal
  std::vector<double> jacobian;    // |x'(t)|
  std::vector<double> curvature;
  std::vector<double> weight;      // jacobian * 2pi / M

  double length() const {
    double s = 0.0;
    for (double w : weight) s += w;
    return s;
  }
};

inline DiscretizedCurve discretize(const CurveSpec& spec, int M) {
  if (M < 8 || M % 2 != 0) throw ConfigError("node count must be even and >= 8");
  DiscretizedCurve c;
  c.M = M;
  double area = 0.0;
  for (int j = 0; j < M; ++j) {
    const double t = kTwoPi * j / M;
    const auto [p, d1, d2] = spec.eval(t);
    const double jac = std::hypot(d1.x1, d1.x2);
    if (spec.kind == CurveSpec::Kind::Polar && !(spec.radius(t) > 0.0))
      throw DegenerateCurve("polar radius must stay positive");
    if (!(jac > 1e-14 * std::max(1.0, std::hypot(p.x1, p.x2))) || !std::isfinite(jac))
      throw DegenerateCurve("curve has a vanishing tangent");
    c.t.push_back(t);
    c.x.push_back(p);
    c.tangent.push_back(d1);
    c.normal.push_back({d1.x2 / jac, -d1.x1 / jac});
    c.jacobian.push_back(jac);
    c.curvature.push_back((d1.x1 * d2.x2 - d1.x2 * d2.x1) / (jac * jac * jac));
    c.weight.push_back(jac * kTwoPi / M);
    area += 0.5 * (p.x1 * d1.x2 - p.x2 * d1.x1) * kTwoPi / M;
  }
  if (!(area > 0.0)) throw DegenerateCurve("curve must be positively oriented");
  return c;
}

namespace detail {

inline double dist2(const Cartesian& a, const Cartesian& b) {
  const double dx = a.x1 - b.x1, dy = a.x2 - b.x2;
  return dx * dx + dy * dy;
}

/// Winding number of the closed polygon through `poly` around p.
inline int winding(const std::vector<Cartesian>& poly, const Cartesian& p) {
  int wn = 0;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Cartesian& a = poly[i];
    const Cartesian& b = poly[(i + 1) % n];
    const double cross = (b.x1 - a.x1) * (p.x2 - a.x2) - (p.x1 - a.x1) * (b.x2 - a.x2);
    if (a.x2 <= p.x2) {
      if (b.x2 > p.x2 && cross > 0) ++wn;
    } else if (b.x2 <= p.x2 && cross < 0) {
      --wn;
    }
  }
  return wn;
}

}  // namespace detail

/// Outermost curve first; each curve must lie strictly inside the previous one.
inline void check_nesting(const std::vector<DiscretizedCurve>& curves) {
  for (std::size_t k = 1; k < curves.size(); ++k) {
    const auto& outer = curves[k - 1].x;
    const auto& inner = curves[k].x;
    for (const auto& p : inner)
      if (detail::winding(outer, p) == 0)
        throw InvalidNesting("curve " + std::to_string(k + 1) + " is not inside curve " + std::to_string(k));
    for (const auto& p : outer)
      if (detail::winding(inner, p) != 0)
        throw InvalidNesting("curves " + std::to_string(k) + " and " + std::to_string(k + 1) + " intersect");
  }
}

/// Trapezoid Nystrom matrix of K* on one curve. The diagonal carries the
/// kernel limit kappa / (4 pi), which makes the circle spectrum {1/2, 0}.
inline RMatrix assemble_kstar_block(const DiscretizedCurve& c) {
  const int M = c.M;
  RMatrix k(M, M);
  for (int i = 0; i < M; ++i) {
    for (int j = 0; j < M; ++j) {
      if (i == j) {
        k(i, j) = c.curvature[static_cast<std::size_t>(i)] / (4.0 * kPi) * c.weight[static_cast<std::size_t>(j)];
        continue;
      }
      const auto& xi = c.x[static_cast<std::size_t>(i)];
      const auto& yj = c.x[static_cast<std::size_t>(j)];
      const double r2 = detail::dist2(xi, yj);
      if (r2 == 0.0) throw DegenerateCurve("two distinct nodes coincide");
      const auto& nu = c.normal[static_cast<std::size_t>(i)];
      k(i, j) = ((xi.x1 - yj.x1) * nu.x1 + (xi.x2 - yj.x2) * nu.x2) / (2.0 * kPi * r2) *
                c.weight[static_cast<std::size_t>(j)];
    }
  }
  return k;
}

/// nu_target . grad S_source on disjoint curves (smooth kernel).
inline RMatrix assemble_normal_derivative_block(const DiscretizedCurve& target, const DiscretizedCurve& source) {
  RMatrix k(target.M, source.M);
  for (int i = 0; i < target.M; ++i) {
    const auto& xi = target.x[static_cast<std::size_t>(i)];
    const auto& nu = target.normal[static_cast<std::size_t>(i)];
    for (int j = 0; j < source.M; ++j) {
      const auto& yj = source.x[static_cast<std::size_t>(j)];
      const double r2 = detail::dist2(xi, yj);
      if (r2 == 0.0) throw InvalidNesting("curves touch");
      k(i, j) = ((xi.x1 - yj.x1) * nu.x1 + (xi.x2 - yj.x2) * nu.x2) / (2.0 * kPi * r2) *
                source.weight[static_cast<std::size_t>(j)];
    }
  }
  return k;
}

/// Kress weights R_d for the periodic log singularity, d = 0..M-1.
inline std::vector<double> kress_weights(int M) {
  const int n = M / 2;
  std::vector<double> w(static_cast<std::size_t>(M));
  for (int d = 0; d < M; ++d) {
    const double td = kTwoPi * d / M;
    double s = 0.0;
    for (int m = 1; m < n; ++m) s += std::cos(m * td) / m;
    w[static_cast<std::size_t>(d)] = -(2.0 * kPi / n) * s - kPi / (static_cast<double>(n) * n) * std::cos(n * td);
  }
  return w;
}

/// Single layer ln|x - y| / (2 pi) on one curve, Kress splitting of the log.
inline RMatrix assemble_s_block(const DiscretizedCurve& c) {
  const int M = c.M;
  const auto rw = kress_weights(M);
  RMatrix s(M, M);
  for (int i = 0; i < M; ++i) {
    for (int j = 0; j < M; ++j) {
      const auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
      double L;
      if (i == j) {
        L = std::log(c.jacobian[ui] * c.jacobian[ui]);
      } else {
        const double sn = std::sin(0.5 * (c.t[ui] - c.t[uj]));
        L = std::log(detail::dist2(c.x[ui], c.x[uj]) / (4.0 * sn * sn));
      }
      s(i, j) = (rw[static_cast<std::size_t>(std::abs(i - j))] + kTwoPi / M * L) / (4.0 * kPi) * c.jacobian[uj];
    }
  }
  return s;
}

inline RMatrix assemble_s_cross(const DiscretizedCurve& target, const DiscretizedCurve& source) {
  RMatrix s(target.M, source.M);
  for (int i = 0; i < target.M; ++i)
    for (int j = 0; j < source.M; ++j)
      s(i, j) = std::log(detail::dist2(target.x[static_cast<std::size_t>(i)], source.x[static_cast<std::size_t>(j)])) /
                (4.0 * kPi) * source.weight[static_cast<std::size_t>(j)];
  return s;
}

inline std::vector<DiscretizedCurve> discretize_all(const std::vector<CurveSpec>& specs, int M) {
  if (specs.empty()) throw ConfigError("need at least one curve");
  std::vector<DiscretizedCurve> out;
  for (const auto& s : specs) out.push_back(discretize(s, M));
  check_nesting(out);
  return out;
}

inline std::vector<CurveSpec> confocal_curves(const LayerStack& stack) {
  std::vector<CurveSpec> out;
  for (double xi : stack.xi()) out.push_back(CurveSpec::confocal(stack.focal(), xi));
  return out;
}

/// Block NP operator; block row l (1-based) carries the sign (-1)^l.
inline RMatrix assemble_block_np(const std::vector<DiscretizedCurve>& curves) {
  const int N = static_cast<int>(curves.size());
  const int M = curves.front().M;
  RMatrix k(N * M, N * M);
  for (int l = 0; l < N; ++l) {
    const double sign = (l % 2 == 0) ? -1.0 : 1.0;
    for (int c = 0; c < N; ++c) {
      const RMatrix b = l == c ? assemble_kstar_block(curves[static_cast<std::size_t>(l)])
                               : assemble_normal_derivative_block(curves[static_cast<std::size_t>(l)],
                                                                  curves[static_cast<std::size_t>(c)]);
      k.block(l * M, c * M, M, M) = sign * b;
    }
  }
  return k;
}

inline RMatrix assemble_block_s(const std::vector<DiscretizedCurve>& curves) {
  const int N = static_cast<int>(curves.size());
  const int M = curves.front().M;
  RMatrix s(N * M, N * M);
  for (int l = 0; l < N; ++l)
    for (int c = 0; c < N; ++c)
      s.block(l * M, c * M, M, M) = l == c ? assemble_s_block(curves[static_cast<std::size_t>(l)])
                                           : assemble_s_cross(curves[static_cast<std::size_t>(l)],
                                                              curves[static_cast<std::size_t>(c)]);
  return s;
}

inline RVector quadrature_weights(const std::vector<DiscretizedCurve>& curves) {
  const int M = curves.front().M;
  RVector w(static_cast<Eigen::Index>(curves.size()) * M);
  for (std::size_t k = 0; k < curves.size(); ++k)
    for (int j = 0; j < M; ++j) w(static_cast<Eigen::Index>(k) * M + j) = curves[k].weight[static_cast<std::size_t>(j)];
  return w;
}

/// Projection onto densities with zero weighted mean on every curve.
inline RMatrix deflation_projector(const std::vector<DiscretizedCurve>& curves) {
  const int M = curves.front().M;
  const Eigen::Index dim = static_cast<Eigen::Index>(curves.size()) * M;
  RMatrix p = RMatrix::Identity(dim, dim);
  for (std::size_t k = 0; k < curves.size(); ++k) {
    const auto& w = curves[k].weight;
    const double len = curves[k].length();
    const Eigen::Index off = static_cast<Eigen::Index>(k) * M;
    for (int i = 0; i < M; ++i)
      for (int j = 0; j < M; ++j) p(off + i, off + j) -= w[static_cast<std::size_t>(j)] / len;
  }
  return p;
}

inline std::vector<cdouble> block_np_spectrum(const std::vector<DiscretizedCurve>& curves, bool deflate = true) {
  RMatrix k = assemble_block_np(curves);
  if (deflate) {
    const RMatrix p = deflation_projector(curves);
    k = p * k * p;
  }
  return eigenvalues(k);
}

/// ||S K* - K S||_F / (||S|| ||K*||) with K the weighted adjoint of K*.
inline double calderon_residual(const std::vector<CurveSpec>& specs, int M) {
  const auto curves = discretize_all(specs, M);
  const RMatrix k = assemble_block_np(curves);
  const RMatrix s = assemble_block_s(curves);
  const RVector w = quadrature_weights(curves);
  const RMatrix kadj = w.cwiseInverse().asDiagonal() * k.transpose() * w.asDiagonal();
  return (s * k - kadj * s).norm() / (s.norm() * k.norm());
}

/// Relative asymmetry of W (-S) K*, the discrete form of the twisted inner product.
inline double self_adjointness_residual(const std::vector<CurveSpec>& specs, int M) {
  const auto curves = discretize_all(specs, M);
  const RMatrix k = assemble_block_np(curves);
  const RMatrix s = assemble_block_s(curves);
  const RVector w = quadrature_weights(curves);
  const RMatrix a = -(w.asDiagonal() * s * k);
  return (a - a.transpose()).norm() / a.norm();
}

/// Matrix of the discrete block NP operator on span{ cos(n t)/|x'| } (even)
/// or span{ sin(n t)/|x'| } (odd), one function per curve, by least squares.
inline RMatrix fourier_restriction(const std::vector<DiscretizedCurve>& curves, int n, Parity parity) {
  const int N = static_cast<int>(curves.size());
  const int M = curves.front().M;
  RMatrix b = RMatrix::Zero(N * M, N);
  for (int k = 0; k < N; ++k) {
    const auto& c = curves[static_cast<std::size_t>(k)];
    for (int j = 0; j < M; ++j) {
      const double t = c.t[static_cast<std::size_t>(j)];
      b(k * M + j, k) = (parity == Parity::Even ? std::cos(n * t) : std::sin(n * t)) / c.jacobian[static_cast<std::size_t>(j)];
    }
  }
  const RMatrix kb = assemble_block_np(curves) * b;
  return b.colPivHouseholderQr().solve(kb);
}

/// Largest distance from a target value to its nearest discrete eigenvalue.
inline double worst_containment(const std::vector<cdouble>& discrete, const std::vector<double>& targets) {
  double worst = 0.0;
  for (double t : targets) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& z : discrete) best = std::min(best, std::abs(z - cdouble(t, 0.0)));
    worst = std::max(worst, best);
  }
  return worst;
}

}  // namespace plasmon::bie
