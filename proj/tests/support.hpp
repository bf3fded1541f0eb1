#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "plasmon/geometry.hpp"
#include "plasmon/linalg.hpp"

namespace plasmon::proptest {

/// Seeded generators for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng_); }
  int integer(int a, int b) { return std::uniform_int_distribution<int>(a, b)(rng_); }
  cdouble complex_in(double r) { return {uniform(-r, r), uniform(-r, r)}; }

  /// Distinct radii drawn from (lo, hi), sorted descending.
  std::vector<double> radii(int N, double lo, double hi) {
    std::vector<double> xi;
    while (static_cast<int>(xi.size()) < N) {
      const double v = uniform(lo, hi);
      bool clash = false;
      for (double w : xi) clash = clash || std::abs(v - w) < 1e-9;
      if (!clash) xi.push_back(v);
    }
    std::sort(xi.begin(), xi.end(), std::greater<>());
    return xi;
  }

  LayerStack stack(int N, double lo, double hi, double focal = 1.0) { return LayerStack(focal, radii(N, lo, hi)); }

 private:
  std::mt19937_64 rng_;
};

inline double rel_err(cdouble a, cdouble b) {
  const double s = std::max(std::abs(a), std::abs(b));
  return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

}  // namespace plasmon::proptest
