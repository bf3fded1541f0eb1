#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "plasmon/errors.hpp"
#include "plasmon/geometry.hpp"
#include "plasmon/linalg.hpp"
#include "plasmon/npcore.hpp"

namespace plasmon {

/// One multipole order of H: a_even cosh(n xi) cos(n eta) + a_odd sinh(n xi) sin(n eta).
struct FieldTerm {
  int n = 1;
  double a_even = 0.0;
  double a_odd = 0.0;
};

struct BackgroundField {
  std::vector<FieldTerm> terms;

  BackgroundField() = default;
  explicit BackgroundField(std::vector<FieldTerm> t) : terms(std::move(t)) {
    std::set<int> seen;
    for (const auto& term : terms) {
      if (term.n < 1) throw ConfigError("background field orders must be >= 1");
      if (!seen.insert(term.n).second) throw ConfigError("background field orders must be distinct");
      if (!std::isfinite(term.a_even) || !std::isfinite(term.a_odd))
        throw ConfigError("background field coefficients must be finite");
    }
  }

  static BackgroundField single(int n, Parity parity, double a = 1.0) {
    return BackgroundField({{n, parity == Parity::Even ? a : 0.0, parity == Parity::Odd ? a : 0.0}});
  }
};

struct FieldTolerances {
  double max_condition = 1e14;
  double residual = 1e-10;
};

/// Solution vectors x = M^{-1} s (even) and M^{-1} c (odd) per order; the
/// interface densities are n a x_k times the Fourier weight.
struct OrderSolution {
  int n = 1;
  double a_even = 0.0;
  double a_odd = 0.0;
  CVector x_even;
  CVector x_odd;

  CVector phi(Parity p) const {
    return p == Parity::Even ? CVector(x_even * (n * a_even)) : CVector(x_odd * (n * a_odd));
  }
};

struct DensitySolution {
  LayerStack stack;
  cdouble lambda;
  BackgroundField field;
  std::vector<OrderSolution> orders;
};

namespace detail {

inline CVector solve_checked(const LayerStack& stack, cdouble lambda, int n, Parity parity, const RVector& rhs,
                             const FieldTolerances& tol) {
  const CMatrix m = build_gpm(stack, lambda, n, parity).entries;
  const double cond = condition_number(m);
  if (!(cond <= tol.max_condition))
    throw AtResonance("density system is singular at this contrast (n=" + std::to_string(n) + ", " +
                          std::string(to_string(parity)) + ", cond=" + detail::num(cond) + ")",
                      n, parity == Parity::Odd);
  const CVector b = rhs.cast<cdouble>();
  const CVector x = m.partialPivLu().solve(b);
  const double scale = m.norm() * x.norm() + b.norm();
  if (scale > 0.0 && (m * x - b).norm() > tol.residual * scale)
    throw NumericalInstability("density solve residual above tolerance");
  return x;
}

}  // namespace detail

inline DensitySolution solve_densities(const LayerStack& stack, cdouble lambda, const BackgroundField& h,
                                       const FieldTolerances& tol = {}) {
  DensitySolution sol{stack, lambda, h, {}};
  for (const auto& term : h.terms) {
    const StructureVectors sv(stack, term.n);
    if (!sv.s.allFinite() || !sv.c.allFinite())
      throw NumericalInstability("n*xi too large for the closed-form field representation");
    OrderSolution o;
    o.n = term.n;
    o.a_even = term.a_even;
    o.a_odd = term.a_odd;
    const int N = stack.layers();
    o.x_even = term.a_even != 0.0 ? detail::solve_checked(stack, lambda, term.n, Parity::Even, sv.s, tol)
                                  : CVector(CVector::Zero(N));
    o.x_odd = term.a_odd != 0.0 ? detail::solve_checked(stack, lambda, term.n, Parity::Odd, sv.c, tol)
                                : CVector(CVector::Zero(N));
    sol.orders.push_back(std::move(o));
  }
  return sol;
}

/// Which side of an interface to use for a point lying exactly on it.
enum class Side { Auto, Inside, Outside };

namespace detail {

/// Region index, honouring the side override on interfaces. Auto on an
/// interface throws when `strict` is set.
inline int resolve_region(const LayerStack& stack, double xi, Side side, bool strict) {
  const int l = region_of(stack, xi);
  const bool on_interface = l >= 1 && xi == stack.xi(l);
  if (!on_interface) return l;
  if (side == Side::Outside) return l - 1;
  if (side == Side::Auto && strict)
    throw AmbiguousRegion("point lies on interface " + std::to_string(l) + "; specify a side");
  return l;
}

/// Coefficients (inner, outer) such that the order-n part of u - H in
/// region l reads -a [inner * G_n(xi) + outer * e^{-n xi}] times the angular factor.
struct RegionCoeffs {
  cdouble inner;
  cdouble outer;
};

inline RegionCoeffs region_coeffs(const LayerStack& stack, int n, Parity parity, const CVector& x, int l) {
  RegionCoeffs c{0.0, 0.0};
  for (int k = 1; k <= stack.layers(); ++k) {
    const double a = n * stack.xi(k);
    if (k <= l) {
      c.inner += std::exp(-a) * x(k - 1);
    } else {
      c.outer += (parity == Parity::Even ? std::cosh(a) : std::sinh(a)) * x(k - 1);
    }
  }
  return c;
}

/// Complex Cartesian gradient (d/dx1, d/dx2) for a complex combination.
using Grad = std::array<cdouble, 2>;

/// For an analytic F(z): grad Re F = (Re F', -Im F'), grad Im F = (Im F', Re F').
inline std::array<double, 2> grad_re(cdouble fp) { return {fp.real(), -fp.imag()}; }
inline std::array<double, 2> grad_im(cdouble fp) { return {fp.imag(), fp.real()}; }

/// U_{n-1}(q) by the three-term recurrence.
inline cdouble chebyshev_u(int m, cdouble q) {
  if (m == 0) return 1.0;
  cdouble u0 = 1.0;
  cdouble u1 = 2.0 * q;
  for (int k = 1; k < m; ++k) {
    const cdouble u2 = 2.0 * q * u1 - u0;
    u0 = u1;
    u1 = u2;
  }
  return u1;
}

}  // namespace detail

/// u - H at an elliptic point, closed form over the region's F-weights.
inline cdouble perturbed_potential(const DensitySolution& sol, const EllipticPoint& p, Side side = Side::Auto) {
  const int l = detail::resolve_region(sol.stack, p.xi, side, false);
  cdouble u = 0.0;
  for (const auto& o : sol.orders) {
    const int n = o.n;
    if (o.a_even != 0.0) {
      const auto c = detail::region_coeffs(sol.stack, n, Parity::Even, o.x_even, l);
      u -= o.a_even * std::cos(n * p.eta) * (std::cosh(n * p.xi) * c.inner + std::exp(-n * p.xi) * c.outer);
    }
    if (o.a_odd != 0.0) {
      const auto c = detail::region_coeffs(sol.stack, n, Parity::Odd, o.x_odd, l);
      u -= o.a_odd * std::sin(n * p.eta) * (std::sinh(n * p.xi) * c.inner + std::exp(-n * p.xi) * c.outer);
    }
  }
  return u;
}

/// Same quantity summed interface by interface from the single layer action.
inline cdouble perturbed_potential_by_layers(const DensitySolution& sol, const EllipticPoint& p) {
  cdouble u = 0.0;
  for (const auto& o : sol.orders) {
    for (int k = 1; k <= sol.stack.layers(); ++k) {
      const double src = sol.stack.xi(k);
      u += o.phi(Parity::Even)(k - 1) * single_layer_action(o.n, Parity::Even, src, p.xi) * std::cos(o.n * p.eta);
      u += o.phi(Parity::Odd)(k - 1) * single_layer_action(o.n, Parity::Odd, src, p.xi) * std::sin(o.n * p.eta);
    }
  }
  return u;
}

inline double background_potential(const BackgroundField& h, const EllipticPoint& p) {
  double v = 0.0;
  for (const auto& t : h.terms) {
    v += t.a_even * std::cosh(t.n * p.xi) * std::cos(t.n * p.eta);
    v += t.a_odd * std::sinh(t.n * p.xi) * std::sin(t.n * p.eta);
  }
  return v;
}

/// Cartesian gradient of u - H via complex derivatives of cosh(n w) and e^{-n w}.
inline detail::Grad perturbed_gradient(const DensitySolution& sol, const EllipticPoint& p, Side side = Side::Auto) {
  const int l = detail::resolve_region(sol.stack, p.xi, side, true);
  const double R = sol.stack.focal();
  const cdouble w(p.xi, p.eta);
  const cdouble q = std::cosh(w);
  const cdouble sw = std::sinh(w);
  detail::Grad g{0.0, 0.0};
  for (const auto& o : sol.orders) {
    const int n = o.n;
    // d/dz cosh(n w) = n U_{n-1}(z/R) / R ; d/dz e^{-n w} = -n e^{-n w} / (R sinh w).
    const cdouble d_inner = static_cast<double>(n) * detail::chebyshev_u(n - 1, q) / R;
    const bool needs_outer = l < sol.stack.layers();
    const cdouble d_outer = needs_outer ? -static_cast<double>(n) * std::exp(-static_cast<double>(n) * w) / (R * sw)
                                        : cdouble(0.0, 0.0);
    if (o.a_even != 0.0) {
      const auto c = detail::region_coeffs(sol.stack, n, Parity::Even, o.x_even, l);
      const auto gi = detail::grad_re(d_inner);
      const auto go = detail::grad_re(d_outer);
      for (int j = 0; j < 2; ++j) g[static_cast<std::size_t>(j)] -= o.a_even * (c.inner * gi[j] + c.outer * go[j]);
    }
    if (o.a_odd != 0.0) {
      const auto c = detail::region_coeffs(sol.stack, n, Parity::Odd, o.x_odd, l);
      const auto gi = detail::grad_im(d_inner);
      const auto go = detail::grad_im(d_outer);
      // e^{-n xi} sin(n eta) = -Im e^{-n w}
      for (int j = 0; j < 2; ++j) g[static_cast<std::size_t>(j)] -= o.a_odd * (c.inner * gi[j] - c.outer * go[j]);
    }
  }
  return g;
}

inline std::array<double, 2> background_gradient(const BackgroundField& h, const EllipticPoint& p, double focal) {
  const cdouble q = std::cosh(cdouble(p.xi, p.eta));
  std::array<double, 2> g{0.0, 0.0};
  for (const auto& t : h.terms) {
    const cdouble d = static_cast<double>(t.n) * detail::chebyshev_u(t.n - 1, q) / focal;
    const auto gr = detail::grad_re(d);
    const auto gi = detail::grad_im(d);
    for (int j = 0; j < 2; ++j) g[static_cast<std::size_t>(j)] += t.a_even * gr[j] + t.a_odd * gi[j];
  }
  return g;
}

/// Normal derivative of the total potential u on interface k (1-based) from
/// the chosen side, at angle eta.
inline cdouble interface_flux(const DensitySolution& sol, int k, double eta, Side side) {
  const EllipticPoint p(sol.stack.xi(k), eta);
  const auto g = perturbed_gradient(sol, p, side);
  const auto gh = background_gradient(sol.field, p, sol.stack.focal());
  const Cartesian nu = outward_normal(p.xi, p.eta, sol.stack.focal());
  return (g[0] + gh[0]) * nu.x1 + (g[1] + gh[1]) * nu.x2;
}

enum class GridQuantity { RealPart, GradientMagnitude };

struct BoundingBox {
  double x1_min = -1.0;
  double x1_max = 1.0;
  double x2_min = -1.0;
  double x2_max = 1.0;
};

struct FieldGrid {
  GridQuantity quantity = GridQuantity::RealPart;
  int nx = 0;
  int ny = 0;
  std::vector<double> x1;
  std::vector<double> x2;
  /// Row-major (iy * nx + ix). Real part or gradient magnitude.
  std::vector<double> values;
  /// Imaginary part, only for RealPart grids.
  std::vector<double> imag;
  double normalization = 1.0;
  std::vector<std::vector<Cartesian>> interfaces;
};

inline int thread_count() {
  if (const char* env = std::getenv("PLASMON_THREADS")) {
    const int t = std::atoi(env);
    if (t >= 1) return t;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

/// Samples u - H (or |grad(u - H)|) on a Cartesian grid. Points on an
/// interface use the inner region.
inline FieldGrid field_grid(const DensitySolution& sol, const BoundingBox& box, int nx, int ny, GridQuantity quantity,
                            bool normalize, int polyline_samples = 256) {
  if (nx < 2 || ny < 2) throw ConfigError("grid resolution must be >= 2 per axis");
  if (!(box.x1_max > box.x1_min) || !(box.x2_max > box.x2_min)) throw ConfigError("empty bounding box");
  FieldGrid g;
  g.quantity = quantity;
  g.nx = nx;
  g.ny = ny;
  for (int i = 0; i < nx; ++i) g.x1.push_back(box.x1_min + (box.x1_max - box.x1_min) * i / (nx - 1));
  for (int j = 0; j < ny; ++j) g.x2.push_back(box.x2_min + (box.x2_max - box.x2_min) * j / (ny - 1));
  const std::size_t total = static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny);
  g.values.assign(total, 0.0);
  if (quantity == GridQuantity::RealPart) g.imag.assign(total, 0.0);

  const double R = sol.stack.focal();
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t idx = begin; idx < end; ++idx) {
      const auto ix = static_cast<int>(idx % static_cast<std::size_t>(nx));
      const auto iy = static_cast<int>(idx / static_cast<std::size_t>(nx));
      const EllipticPoint p = cartesian_to_elliptic(g.x1[static_cast<std::size_t>(ix)], g.x2[static_cast<std::size_t>(iy)], R);
      if (quantity == GridQuantity::RealPart) {
        const cdouble u = perturbed_potential(sol, p, Side::Inside);
        g.values[idx] = u.real();
        g.imag[idx] = u.imag();
      } else {
        const auto d = perturbed_gradient(sol, p, Side::Inside);
        g.values[idx] = std::sqrt(std::norm(d[0]) + std::norm(d[1]));
      }
    }
  };
  const int threads = std::max(1, std::min(thread_count(), ny));
  if (threads == 1) {
    work(0, total);
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (total + static_cast<std::size_t>(threads) - 1) / static_cast<std::size_t>(threads);
    for (int t = 0; t < threads; ++t) {
      const std::size_t b = static_cast<std::size_t>(t) * chunk;
      const std::size_t e = std::min(total, b + chunk);
      if (b < e) pool.emplace_back(work, b, e);
    }
    for (auto& th : pool) th.join();
  }

  g.normalization = 1.0;
  if (normalize) {
    double m = 0.0;
    for (double v : g.values) m = std::max(m, std::abs(v));
    if (m > 0.0) {
      g.normalization = m;
      for (double& v : g.values) v /= m;
      for (double& v : g.imag) v /= m;
    }
  }
  for (int k = 1; k <= sol.stack.layers(); ++k) g.interfaces.push_back(interface_polyline(sol.stack, k, polyline_samples));
  return g;
}

/// Same densities obtained through the NP matrix system (-lambda I - K^T) y = s~
/// (odd: c~). Relation to the GPM route: y = -x.
inline CVector solve_via_np(const LayerStack& stack, cdouble lambda, int n, Parity parity) {
  const StructureVectors sv(stack, n);
  const int N = stack.layers();
  const CMatrix a = -lambda * CMatrix::Identity(N, N) - build_np(stack, n, parity).entries.cast<cdouble>();
  const RVector& rhs = parity == Parity::Even ? sv.s_alt : sv.c_alt;
  return a.partialPivLu().solve(rhs.cast<cdouble>());
}

}  // namespace plasmon
