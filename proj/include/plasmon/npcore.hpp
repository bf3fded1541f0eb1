#pragma once

#include <cmath>
#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

#include "plasmon/errors.hpp"
#include "plasmon/geometry.hpp"
#include "plasmon/linalg.hpp"

namespace plasmon {

/// Even modes pair with cos(n eta) densities, odd modes with sin(n eta).
enum class Parity { Even, Odd };

inline std::string_view to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

inline Parity parse_parity(std::string_view s) {
  if (s == "even" || s == "c" || s == "+") return Parity::Even;
  if (s == "odd" || s == "s" || s == "-") return Parity::Odd;
  throw ConfigError("unknown parity '" + std::string(s) + "' (expected even|odd)");
}

namespace detail {

inline void require_order(int n) {
  if (n < 1) throw ConfigError("Fourier order n must be >= 1");
}

/// sinh(a) e^{-b} and cosh(a) e^{-b} without forming sinh(a) or cosh(a).
inline double sinh_over_exp(double a, double b) { return 0.5 * (std::exp(a - b) - std::exp(-a - b)); }
inline double cosh_over_exp(double a, double b) { return 0.5 * (std::exp(a - b) + std::exp(-a - b)); }

}  // namespace detail

/// s, c and their alternating-sign versions for a given order n.
struct StructureVectors {
  RVector s;
  RVector c;
  RVector s_alt;
  RVector c_alt;

  StructureVectors(const LayerStack& stack, int n) {
    detail::require_order(n);
    const int N = stack.layers();
    s.resize(N);
    c.resize(N);
    s_alt.resize(N);
    c_alt.resize(N);
    for (int k = 0; k < N; ++k) {
      const double a = n * stack.xi()[static_cast<std::size_t>(k)];
      const double sign = (k % 2 == 0) ? 1.0 : -1.0;
      s(k) = std::sinh(a);
      c(k) = std::cosh(a);
      s_alt(k) = sign * s(k);
      c_alt(k) = sign * c(k);
    }
  }

  /// Right-hand side vector matched to a parity: s for even, c for odd.
  const RVector& rhs(Parity p) const { return p == Parity::Even ? s : c; }
};

/// e_{i:j}: indicator of the 1-based index range [i, j] in dimension N.
inline RVector indicator_range(int N, int i, int j) {
  RVector e = RVector::Zero(N);
  for (int k = std::max(i, 1); k <= std::min(j, N); ++k) e(k - 1) = 1.0;
  return e;
}

/// Coefficient of cos(n eta) (even) or sin(n eta) (odd) in the single layer
/// potential of gamma^{-1} cos(n eta) (resp. sin) on the ellipse xi = source,
/// evaluated at elliptic radius eval.
inline double single_layer_action(int n, Parity parity, double source, double eval) {
  detail::require_order(n);
  const double a = n * source;
  const double b = n * eval;
  if (eval <= source) {
    return parity == Parity::Even ? -detail::cosh_over_exp(b, a) / n : -detail::sinh_over_exp(b, a) / n;
  }
  return parity == Parity::Even ? -detail::cosh_over_exp(a, b) / n : -detail::sinh_over_exp(a, b) / n;
}

/// Coefficient multiplying gamma(eval, eta)^{-1} cos(n eta) (resp. sin) in the
/// normal derivative of the same single layer potential. On the source curve
/// the principal value (the NP operator) is returned.
inline double normal_derivative_action(int n, Parity parity, double source, double eval) {
  detail::require_order(n);
  const double a = n * source;
  const double b = n * eval;
  if (eval < source) {
    return parity == Parity::Even ? -detail::sinh_over_exp(b, a) : -detail::cosh_over_exp(b, a);
  }
  if (eval > source) {
    return parity == Parity::Even ? detail::cosh_over_exp(a, b) : detail::sinh_over_exp(a, b);
  }
  const double np = 0.5 * std::exp(-2.0 * a);
  return parity == Parity::Even ? np : -np;
}

/// n-order generalized polarization matrix M^{(n)}_{N,c|s}(lambda).
struct GPMatrix {
  int n = 1;
  Parity parity = Parity::Even;
  cdouble lambda;
  CMatrix entries;

  int size() const { return static_cast<int>(entries.rows()); }
};

/// n-order NP matrix (K^{(n)}_{N,c|s})^T.
struct NPMatrix {
  int n = 1;
  Parity parity = Parity::Even;
  RMatrix entries;

  int size() const { return static_cast<int>(entries.rows()); }
};

namespace detail {

/// GPM at lambda = 0; the full GPM adds (-1)^{k-1} lambda on the diagonal.
inline RMatrix gpm_base(const LayerStack& stack, int n, Parity parity) {
  require_order(n);
  const int N = stack.layers();
  const auto& xi = stack.xi();
  RMatrix m(N, N);
  const bool even = parity == Parity::Even;
  for (int r = 0; r < N; ++r) {
    const double ar = n * xi[static_cast<std::size_t>(r)];
    for (int c = 0; c < N; ++c) {
      const double ac = n * xi[static_cast<std::size_t>(c)];
      if (r == c) {
        const double np = 0.5 * std::exp(-2.0 * ar);
        m(r, c) = even ? -np : np;
      } else if (r > c) {
        m(r, c) = even ? sinh_over_exp(ar, ac) : cosh_over_exp(ar, ac);
      } else {
        m(r, c) = even ? -cosh_over_exp(ac, ar) : -sinh_over_exp(ac, ar);
      }
    }
  }
  return m;
}

inline double alternating_sign(int k0) { return (k0 % 2 == 0) ? 1.0 : -1.0; }

}  // namespace detail

inline GPMatrix build_gpm(const LayerStack& stack, cdouble lambda, int n, Parity parity) {
  GPMatrix g;
  g.n = n;
  g.parity = parity;
  g.lambda = lambda;
  g.entries = detail::gpm_base(stack, n, parity).cast<cdouble>();
  for (int k = 0; k < stack.layers(); ++k) g.entries(k, k) += detail::alternating_sign(k) * lambda;
  return g;
}

/// The NP matrix equals D M(0) with D = diag((-1)^{k-1}), which reproduces the
/// alternating row signs of the printed matrices.
inline NPMatrix build_np(const LayerStack& stack, int n, Parity parity) {
  NPMatrix k;
  k.n = n;
  k.parity = parity;
  k.entries = detail::gpm_base(stack, n, parity);
  for (int r = 0; r < stack.layers(); ++r) k.entries.row(r) *= detail::alternating_sign(r);
  return k;
}

inline RMatrix sign_matrix(int N) {
  RMatrix d = RMatrix::Zero(N, N);
  for (int k = 0; k < N; ++k) d(k, k) = detail::alternating_sign(k);
  return d;
}

/// Row-major CSV dump of a real matrix, 17 significant digits.
inline std::string to_csv(const RMatrix& m) {
  std::string out;
  char buf[64];
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      std::snprintf(buf, sizeof buf, "%.17g", m(r, c));
      if (c) out += ',';
      out += buf;
    }
    out += '\n';
  }
  return out;
}

}  // namespace plasmon
