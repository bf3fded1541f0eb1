#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "plasmon/errors.hpp"
#include "plasmon/geometry.hpp"
#include "plasmon/linalg.hpp"
#include "plasmon/npcore.hpp"

namespace plasmon {

inline constexpr int kDefaultCombinatorialCap = 24;

/// Monic polynomial sum_k coeffs[k] lambda^{N-k}. sign = +1 for f+, -1 for f-.
struct CharPoly {
  int sign = 1;
  int n = 1;
  std::vector<double> xi;
  std::vector<double> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

/// Odometer over ascending combinations i_1 < ... < i_k of {1..N}.
class Combinations {
 public:
  Combinations(int N, int k) : N_(N), idx_(static_cast<std::size_t>(k)) {
    for (int j = 0; j < k; ++j) idx_[static_cast<std::size_t>(j)] = j + 1;
    done_ = k > N;
  }

  bool done() const { return done_; }
  const std::vector<int>& indices() const { return idx_; }

  void next() {
    const int k = static_cast<int>(idx_.size());
    int j = k - 1;
    while (j >= 0 && idx_[static_cast<std::size_t>(j)] == N_ - k + j + 1) --j;
    if (j < 0) {
      done_ = true;
      return;
    }
    ++idx_[static_cast<std::size_t>(j)];
    for (int m = j + 1; m < k; ++m) idx_[static_cast<std::size_t>(m)] = idx_[static_cast<std::size_t>(m - 1)] + 1;
  }

 private:
  int N_;
  std::vector<int> idx_;
  bool done_ = false;
};

/// tau = (-1)^{sum of indices}.
inline int combination_sign(const std::vector<int>& idx) {
  int s = 0;
  for (int i : idx) s += i;
  return (s % 2 == 0) ? 1 : -1;
}

inline CharPoly build_charpoly(const LayerStack& stack, int n, int sign, int cap = kDefaultCombinatorialCap) {
  detail::require_order(n);
  if (sign != 1 && sign != -1) throw ConfigError("charpoly sign must be +1 or -1");
  const int N = stack.layers();
  if (N > cap) throw CombinatorialExplosion("N = " + std::to_string(N) + " exceeds the combinatorial cap " + std::to_string(cap));

  CharPoly p;
  p.sign = sign;
  p.n = n;
  p.xi = stack.xi();
  p.coeffs.assign(static_cast<std::size_t>(N) + 1, 0.0);
  p.coeffs[0] = 1.0;
  for (int k = 1; k <= N; ++k) {
    KahanSum acc;
    for (Combinations comb(N, k); !comb.done(); comb.next()) {
      const auto& idx = comb.indices();
      double e = 0.0;
      for (int l = 0; l < k; ++l) {
        // l is 0-based here, so the 1-based exponent sign (-1)^{l+1} flips.
        const double x = p.xi[static_cast<std::size_t>(idx[static_cast<std::size_t>(l)] - 1)];
        e += (l % 2 == 0) ? -x : x;
      }
      acc.add(combination_sign(idx) * std::exp(2.0 * n * e));
    }
    p.coeffs[static_cast<std::size_t>(k)] = acc.value() / std::pow(2.0 * sign, k);
  }
  return p;
}

inline CharPoly build_charpoly(const LayerStack& stack, int n, Parity parity, int cap = kDefaultCombinatorialCap) {
  return build_charpoly(stack, n, parity == Parity::Even ? 1 : -1, cap);
}

inline cdouble eval(const CharPoly& p, cdouble lambda) {
  cdouble v = 0.0;
  for (double c : p.coeffs) v = v * lambda + c;
  return v;
}

inline double eval(const CharPoly& p, double lambda) { return eval(p, cdouble(lambda, 0.0)).real(); }

/// Roots via eigenvalues of the (balanced) companion matrix.
inline std::vector<cdouble> companion_roots(const CharPoly& p) {
  const int N = p.degree();
  RMatrix c = RMatrix::Zero(N, N);
  for (int k = 0; k < N; ++k) c(0, k) = -p.coeffs[static_cast<std::size_t>(k) + 1];
  for (int k = 1; k < N; ++k) c(k, k - 1) = 1.0;
  return eigenvalues(c);
}

/// |M_{i:N}| by the two-term recursion, i in 1..N+1. The diagonal keeps the
/// global signs lambda_k = (-1)^{k-1} lambda.
inline cdouble recursion_determinant(const LayerStack& stack, cdouble lambda, int n, Parity parity, int i) {
  detail::require_order(n);
  const int N = stack.layers();
  if (i < 1 || i > N + 1) throw ConfigError("recursion index out of range");
  auto lam = [&](int k) { return detail::alternating_sign(k - 1) * lambda; };
  const double np = 0.5 * std::exp(-2.0 * n * stack.xi(N));
  cdouble next = 1.0;  // |M_{N+1:N}|
  cdouble cur = lam(N) + (parity == Parity::Even ? -np : np);
  if (i == N + 1) return next;
  for (int k = N - 1; k >= i; --k) {
    const double E = std::exp(2.0 * n * (stack.xi(k + 1) - stack.xi(k)));
    const cdouble val = (lam(k) + lam(k + 1) * E) * cur - (lambda * lambda - 0.25) * E * next;
    next = cur;
    cur = val;
  }
  return cur;
}

/// h_{N,k}: signed count of k-subsets of {1..N} with sign (-1)^{sum}. Built
/// by splitting on whether N belongs to the subset.
inline std::int64_t h_coeff(int N, int k) {
  if (N < 0 || k < 0 || k > N) throw ConfigError("h_coeff needs 0 <= k <= N");
  std::vector<std::int64_t> row{1};
  for (int m = 1; m <= N; ++m) {
    std::vector<std::int64_t> nxt(static_cast<std::size_t>(m) + 1, 0);
    const std::int64_t s = (m % 2 == 0) ? 1 : -1;
    for (int j = 0; j <= m; ++j) {
      const std::int64_t keep = j < m ? row[static_cast<std::size_t>(j)] : 0;
      const std::int64_t take = j > 0 ? row[static_cast<std::size_t>(j - 1)] : 0;
      nxt[static_cast<std::size_t>(j)] = keep + s * take;
    }
    row = std::move(nxt);
  }
  return row[static_cast<std::size_t>(k)];
}

/// Keeps the even-k coefficients of f+; these depend only on differences
/// of radii so they survive a common shift xi_k = xi~ + c_k.
inline CharPoly disk_limit_poly(const LayerStack& stack, int n) {
  CharPoly p = build_charpoly(stack, n, 1);
  for (std::size_t k = 1; k < p.coeffs.size(); k += 2) p.coeffs[k] = 0.0;
  return p;
}

/// Expanded (lambda^2 - 1/4)^{floor(N/2)} (lambda -+ 1/2)^{N mod 2}.
inline std::vector<double> thin_strip_limit(int N, int sign) {
  if (N < 1) throw ConfigError("thin_strip_limit needs N >= 1");
  std::vector<double> c{1.0};
  auto mul = [&c](const std::vector<double>& f) {
    std::vector<double> out(c.size() + f.size() - 1, 0.0);
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = 0; j < f.size(); ++j) out[i + j] += c[i] * f[j];
    c = std::move(out);
  };
  for (int k = 0; k < N / 2; ++k) mul({1.0, 0.0, -0.25});
  if (N % 2 == 1) mul({1.0, sign > 0 ? -0.5 : 0.5});
  return c;
}

/// Roots of the thin-strip limit polynomial as a multiset.
inline std::vector<double> thin_strip_roots(int N, int sign) {
  std::vector<double> r;
  for (int k = 0; k < N / 2; ++k) {
    r.push_back(0.5);
    r.push_back(-0.5);
  }
  if (N % 2 == 1) r.push_back(sign > 0 ? 0.5 : -0.5);
  return r;
}

}  // namespace plasmon
