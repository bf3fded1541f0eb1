#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace plasmon {

using cdouble = std::complex<double>;
using RMatrix = Eigen::MatrixXd;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;
using CVector = Eigen::VectorXcd;

/// Neumaier variant of Kahan summation.
class KahanSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// Diagonal similarity scaling by powers of two (Parlett-Reinsch) so that
/// row and column norms are comparable. Eigenvalues are unchanged.
inline RMatrix balance(RMatrix a) {
  const Eigen::Index n = a.rows();
  constexpr double radix = 2.0;
  bool converged = false;
  while (!converged) {
    converged = true;
    for (Eigen::Index i = 0; i < n; ++i) {
      double c = 0.0;
      double r = 0.0;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (j == i) continue;
        c += std::abs(a(j, i));
        r += std::abs(a(i, j));
      }
      if (c == 0.0 || r == 0.0) continue;
      double g = r / radix;
      double f = 1.0;
      const double s = c + r;
      while (c < g) {
        f *= radix;
        c *= radix * radix;
      }
      g = r * radix;
      while (c > g) {
        f /= radix;
        c /= radix * radix;
      }
      if ((c + r) / f < 0.95 * s) {
        converged = false;
        a.row(i) /= f;
        a.col(i) *= f;
      }
    }
  }
  return a;
}

/// All eigenvalues of a real square matrix (balanced Hessenberg-QR).
inline std::vector<cdouble> eigenvalues(const RMatrix& a) {
  if (a.rows() == 0) return {};
  Eigen::EigenSolver<RMatrix> solver(balance(a), /*computeEigenvectors=*/false);
  const CVector ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

inline cdouble determinant(const CMatrix& a) {
  if (a.rows() == 0) return {1.0, 0.0};
  return a.partialPivLu().determinant();
}

/// 2-norm condition number via singular values.
template <class Matrix>
double condition_number(const Matrix& a) {
  Eigen::JacobiSVD<Matrix> svd(a);
  const auto& s = svd.singularValues();
  if (s.size() == 0) return 1.0;
  const double smin = s(s.size() - 1);
  if (smin == 0.0) return std::numeric_limits<double>::infinity();
  return s(0) / smin;
}

/// Sort descending by real part; stable so ties keep input order.
inline std::vector<cdouble> sorted_descending(std::vector<cdouble> v) {
  std::stable_sort(v.begin(), v.end(),
                   [](const cdouble& a, const cdouble& b) { return a.real() > b.real(); });
  return v;
}

inline std::vector<double> sorted_descending(std::vector<double> v) {
  std::stable_sort(v.begin(), v.end(), std::greater<>());
  return v;
}

/// Max elementwise distance between two equally sized real multisets after
/// sorting both.
inline double multiset_distance(std::vector<double> a, std::vector<double> b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

}  // namespace plasmon
