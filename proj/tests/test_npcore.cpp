#include <gtest/gtest.h>

#include <cmath>

#include "plasmon/charpoly.hpp"
#include "plasmon/npcore.hpp"
#include "support.hpp"

using namespace plasmon;

TEST(NpCore, SingleLayerActionExamples) {
  EXPECT_DOUBLE_EQ(single_layer_action(3, Parity::Odd, 1.0, 0.0), 0.0);
  const double xi0 = 0.8;
  for (int n = 1; n <= 5; ++n) {
    const double inside = single_layer_action(n, Parity::Even, xi0, xi0);
    const double expected = -std::cosh(n * xi0) / (n * std::exp(n * xi0));
    EXPECT_NEAR(inside, expected, 1e-15);
    EXPECT_NEAR(single_layer_action(n, Parity::Even, xi0, xi0 + 1e-12), expected, 1e-11);
  }
}

TEST(NpCore, SingleLayerBranches) {
  // inside: -cosh(n e)/(n e^{n s}); outside: -cosh(n s)/(n e^{n e}).
  EXPECT_NEAR(single_layer_action(2, Parity::Even, 1.0, 0.5), -std::cosh(1.0) / (2 * std::exp(2.0)), 1e-15);
  EXPECT_NEAR(single_layer_action(2, Parity::Even, 1.0, 1.5), -std::cosh(2.0) / (2 * std::exp(3.0)), 1e-15);
  EXPECT_NEAR(single_layer_action(2, Parity::Odd, 1.0, 0.5), -std::sinh(1.0) / (2 * std::exp(2.0)), 1e-15);
  EXPECT_NEAR(single_layer_action(2, Parity::Odd, 1.0, 1.5), -std::sinh(2.0) / (2 * std::exp(3.0)), 1e-15);
}

TEST(NpCore, NormalDerivativeOnSurface) {
  EXPECT_NEAR(normal_derivative_action(1, Parity::Even, 1.0, 1.0), 1.0 / (2 * std::exp(2.0)), 1e-16);
  for (int n = 1; n <= 6; ++n) {
    EXPECT_DOUBLE_EQ(normal_derivative_action(n, Parity::Odd, 0.7, 0.7), -normal_derivative_action(n, Parity::Even, 0.7, 0.7));
  }
}

// d/dnu S[phi]|+ - d/dnu S[phi]|- = phi, with phi = gamma^{-1} cos(n eta): the
// coefficient jump across the source is 1; the average is the principal value.
TEST(NpCore, NormalDerivativeJump) {
  for (Parity p : {Parity::Even, Parity::Odd}) {
    for (int n = 1; n <= 6; ++n) {
      const double xi0 = 0.9;
      const double out = normal_derivative_action(n, p, xi0, xi0 + 1e-9);
      const double in = normal_derivative_action(n, p, xi0, xi0 - 1e-9);
      EXPECT_NEAR(out - in, 1.0, 1e-7);
      EXPECT_NEAR(0.5 * (out + in), normal_derivative_action(n, p, xi0, xi0), 1e-7);
    }
  }
}

// The normal derivative branches equal xi-derivatives of the single layer ones.
TEST(NpCore, NormalDerivativeIsXiDerivative) {
  const double h = 1e-5;
  for (Parity p : {Parity::Even, Parity::Odd}) {
    for (double e : {0.3, 1.7}) {
      const double fd = (single_layer_action(3, p, 1.0, e + h) - single_layer_action(3, p, 1.0, e - h)) / (2 * h);
      EXPECT_NEAR(fd, normal_derivative_action(3, p, 1.0, e), 1e-8);
    }
  }
}

TEST(NpCore, GpmSingleLayer) {
  const LayerStack s(1.0, {0.6});
  const cdouble lam(0.1, 0.2);
  const auto m = build_gpm(s, lam, 2, Parity::Even);
  EXPECT_NEAR(std::abs(m.entries(0, 0) - (lam - 0.5 * std::exp(-2.4))), 0.0, 1e-16);
  const auto k = build_np(s, 2, Parity::Even);
  EXPECT_NEAR(k.entries(0, 0), -0.5 * std::exp(-2.4), 1e-16);
}

TEST(NpCore, GpmTwoLayerHandInstantiation) {
  const LayerStack s(1.0, {2.0, 1.0});
  const auto m = build_gpm(s, 0.0, 1, Parity::Even).entries;
  EXPECT_NEAR(m(0, 0).real(), -0.009157819444367090, 1e-16);
  EXPECT_NEAR(m(0, 1).real(), -0.20883325476965313, 1e-16);
  EXPECT_NEAR(m(1, 0).real(), 0.15904618640178919, 1e-16);
  EXPECT_NEAR(m(1, 1).real(), -0.067667641618306346, 1e-16);
  const auto ml = build_gpm(s, 0.3, 1, Parity::Even).entries;
  EXPECT_NEAR(ml(0, 0).real() - m(0, 0).real(), 0.3, 1e-15);
  EXPECT_NEAR(ml(1, 1).real() - m(1, 1).real(), -0.3, 1e-15);
}

TEST(NpCore, GpmIsAffineInLambda) {
  proptest::Gen g(21);
  for (int trial = 0; trial < 50; ++trial) {
    const int N = g.integer(1, 8);
    const auto s = g.stack(N, 0.05, 6.0);
    const int n = g.integer(1, 6);
    const Parity p = trial % 2 ? Parity::Odd : Parity::Even;
    const cdouble a = g.complex_in(1.0), b = g.complex_in(1.0);
    const CMatrix m0 = build_gpm(s, 0.0, n, p).entries;
    const CMatrix ma = build_gpm(s, a, n, p).entries;
    const CMatrix mb = build_gpm(s, b, n, p).entries;
    const CMatrix d = sign_matrix(N).cast<cdouble>();
    ASSERT_LE((ma - m0 - a * d).norm(), 1e-14);
    ASSERT_LE((mb - m0 - b * d).norm(), 1e-14);
  }
}

TEST(NpCore, SignConjugationIdentity) {
  proptest::Gen g(22);
  for (int trial = 0; trial < 100; ++trial) {
    const int N = g.integer(1, 10);
    const auto s = g.stack(N, 0.01, 10.0);
    const int n = g.integer(1, 8);
    const Parity p = trial % 2 ? Parity::Odd : Parity::Even;
    const cdouble lam = g.complex_in(0.6);
    const CMatrix lhs = -lam * CMatrix::Identity(N, N) - build_np(s, n, p).entries.cast<cdouble>();
    const CMatrix rhs = -(sign_matrix(N).cast<cdouble>() * build_gpm(s, lam, n, p).entries);
    ASSERT_LE((lhs - rhs).cwiseAbs().maxCoeff(), 1e-14);
  }
}

TEST(NpCore, NpEntriesBoundedByOne) {
  proptest::Gen g(23);
  for (int trial = 0; trial < 100; ++trial) {
    const auto s = g.stack(g.integer(1, 12), 1e-6, 20.0);
    for (Parity p : {Parity::Even, Parity::Odd}) {
      const auto k = build_np(s, g.integer(1, 8), p);
      ASSERT_TRUE(k.entries.allFinite());
      ASSERT_LE(k.entries.cwiseAbs().maxCoeff(), 1.0);
    }
  }
}

TEST(NpCore, NoOverflowForLargeArguments) {
  const LayerStack s(1.0, {400.0, 399.5, 2.0});
  const auto k = build_np(s, 5, Parity::Even);
  EXPECT_TRUE(k.entries.allFinite());
  const auto m = build_gpm(s, 0.1, 5, Parity::Odd);
  EXPECT_TRUE(m.entries.allFinite());
}

TEST(NpCore, NpSpectrumRealBoundedAndParitySymmetric) {
  proptest::Gen g(24);
  for (int trial = 0; trial < 100; ++trial) {
    const auto s = g.stack(g.integer(1, 10), 0.01, 8.0);
    const int n = g.integer(1, 6);
    std::vector<double> even, odd;
    for (const auto& z : eigenvalues(build_np(s, n, Parity::Even).entries)) {
      ASSERT_LE(std::abs(z.imag()), 1e-10);
      ASSERT_LE(std::abs(z.real()), 0.5 + 1e-10);
      even.push_back(z.real());
    }
    for (const auto& z : eigenvalues(build_np(s, n, Parity::Odd).entries)) {
      ASSERT_LE(std::abs(z.imag()), 1e-10);
      odd.push_back(-z.real());
    }
    ASSERT_LE(multiset_distance(even, odd), 1e-10);
  }
}

TEST(NpCore, StructureVectors) {
  const LayerStack s(1.0, {1.0, 0.5, 0.25});
  const StructureVectors v(s, 2);
  EXPECT_DOUBLE_EQ(v.s(1), std::sinh(1.0));
  EXPECT_DOUBLE_EQ(v.c(2), std::cosh(0.5));
  EXPECT_DOUBLE_EQ(v.s_alt(1), -v.s(1));
  EXPECT_DOUBLE_EQ(v.c_alt(2), v.c(2));
  const RVector e = indicator_range(5, 2, 4);
  EXPECT_EQ(e.sum(), 3.0);
  EXPECT_EQ(e(0), 0.0);
  EXPECT_EQ(e(4), 0.0);
}

TEST(NpCore, OrderValidationAndCsv) {
  const LayerStack s(1.0, {1.0});
  EXPECT_THROW(build_np(s, 0, Parity::Even), ConfigError);
  EXPECT_THROW(parse_parity("sideways"), ConfigError);
  EXPECT_EQ(parse_parity("odd"), Parity::Odd);
  RMatrix m(1, 2);
  m << 0.5, -1.0;
  EXPECT_EQ(to_csv(m), "0.5,-1\n");
}
