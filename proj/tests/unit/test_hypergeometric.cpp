#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "specfun/hypergeometric.hpp"

using namespace specfun;

namespace {

struct Ref {
  double a, b, c, z, value;
};

// 40-digit reference values, rounded to 20 significant digits
constexpr Ref refs[] = {
    {0.5, 0.5, 1.0, 0.5, 1.180340599016096226},
    {1.5, 2.25, 3.1, -3.0, 0.19822633281628401392},
    {0.3, 0.7, 1.0, 0.95, 1.7008562689954479655},
    {0.3, 0.7, 1.0, 0.999999, 4.476599516555332193},
    {1.2, 0.8, 1.5, 0.97, 7.7683409098899848021},
    {0.25, 1.75, 3.0, 0.98, 1.3324150041635392579},
    {0.5, 1.5, 1.2, 0.9, 4.7989530761535610661},
    {2.5, -1.5, 1.5, 0.6, -0.1264911064067351487},
    {0.7, 0.4, 2.3, -0.7, 0.9308981743222986994},
    {0.1, 0.2, 0.3, 0.5, 1.0464328112173520811},
};

double rel(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace

TEST(Gauss2F1, ReferenceValuesAcrossRegimes) {
  for (const Ref& r : refs) {
    // z < -1 goes through the overload taking the complement explicitly
    const auto s = gauss_2f1(HypTriple(r.a, r.b, r.c), r.z, 1.0 - r.z);
    EXPECT_LT(rel(s.value, r.value), 1e-12) << r.a << ' ' << r.b << ' ' << r.c << ' ' << r.z;
    EXPECT_GT(s.terms_used, 0u);
  }
}

TEST(Gauss2F1, ElementaryClosedForms) {
  for (double z : {-0.9, -0.3, 0.2, 0.6, 0.85, 0.93, 0.99}) {
    EXPECT_NEAR(f21_value(1, 1, 2, z), -std::log1p(-z) / z, 1e-13 * std::abs(std::log1p(-z) / z)) << z;
    EXPECT_NEAR(f21_value(0.7, 1.3, 1.3, z), std::pow(1.0 - z, -0.7), 1e-13 * std::pow(1.0 - z, -0.7)) << z;
  }
  for (double x : {0.1, 0.5, 0.9, 0.99}) EXPECT_NEAR(f21_value(0.5, 0.5, 1.5, x * x), std::asin(x) / x, 1e-13) << x;
  // terminating series is a polynomial: F(-2,b;c;z) = 1 - 2bz/c + b(b+1)z^2/(c(c+1))
  const double b = 1.3, c = 2.1, z = 0.4;
  EXPECT_NEAR(f21_value(-2, b, c, z), 1 - 2 * b * z / c + b * (b + 1) * z * z / (c * (c + 1)), 1e-15);
}

TEST(Gauss2F1, RejectsBadParameters) {
  EXPECT_THROW(HypTriple(1, 1, -2), specfun::error);
  EXPECT_THROW(HypTriple(1, 1, 0), specfun::error);
  EXPECT_THROW(gauss_2f1(HypTriple(0.5, 0.5, 1.0), 1.0), specfun::error);
  EXPECT_THROW(gauss_2f1(HypTriple(0.5, 0.5, 1.0), 1.5), specfun::error);
}

TEST(Gauss2F1, ValueAtOneIsGaussSum) {
  const double a = 0.3, b = 0.9, c = 2.2;
  const double expect = std::tgamma(c) * std::tgamma(c - a - b) / (std::tgamma(c - a) * std::tgamma(c - b));
  EXPECT_NEAR(gauss_value_at_1(HypTriple(a, b, c)), expect, 1e-14);
  // approached from below
  EXPECT_NEAR(f21_value(a, b, c, 1.0 - 1e-9), expect, 1e-8);
  EXPECT_THROW(gauss_value_at_1(HypTriple(1.0, 1.0, 1.5)), specfun::error);
}

TEST(ZeroBalanced, LogarithmicLimit) {
  // B(a,b) F(a,b;a+b;z) + log(1-z) -> R(a,b)
  for (auto [a, b] : {std::pair{0.5, 0.5}, std::pair{0.3, 1.7}, std::pair{2.0, 1.0}}) {
    const double z = 1.0 - 1e-9;
    const double B = std::tgamma(a) * std::tgamma(b) / std::tgamma(a + b);
    const double lhs = B * f21_value(a, b, a + b, z, 1e-9) + std::log(1e-9);
    EXPECT_NEAR(lhs, zero_balanced_R(a, b), 1e-6) << a << ' ' << b;
    const auto est = zero_balanced_near_one(a, b, z);
    EXPECT_NEAR(est.value, f21_value(a, b, a + b, z, 1e-9), 1e-6 * est.value);
  }
  // R(1/2,1/2) = log 16
  EXPECT_NEAR(zero_balanced_R(0.5, 0.5), std::log(16.0), 1e-14);
  EXPECT_THROW(zero_balanced_near_one(0.5, 0.5, 0.5), specfun::error);
}

TEST(Gauss2F1, DerivativesMatchFiniteDifferences) {
  const HypTriple t(0.7, 1.4, 2.1);
  for (double z : {-0.5, 0.1, 0.5, 0.8}) {
    const double h = 1e-5;
    const double fd1 = (f21_value(t, z + h, 1 - z - h) - f21_value(t, z - h, 1 - z + h)) / (2 * h);
    const double fd2 = (f21_value(t, z + h, 1 - z - h) - 2 * f21_value(t, z, 1 - z) + f21_value(t, z - h, 1 - z + h)) /
                       (h * h);
    EXPECT_NEAR(gauss_2f1_derivative(t, z, 1), fd1, 1e-8 * std::abs(fd1));
    EXPECT_NEAR(gauss_2f1_derivative(t, z, 2), fd2, 1e-4 * std::abs(fd2));
  }
  EXPECT_THROW(gauss_2f1_derivative(t, 0.5, 3), specfun::error);
}

TEST(Contiguous, ResidualsVanish) {
  for (auto [a, b, c] : {std::array{0.5, 0.5, 1.0}, std::array{1.3, 0.4, 2.2}, std::array{2.5, 1.5, 0.7}}) {
    for (double z : {0.05, 0.4, 0.9}) {
      const auto r = contiguous_residuals(HypTriple(a, b, c), z);
      for (const auto& x : r.r) EXPECT_LT(x.relative(), 1e-12) << a << ' ' << b << ' ' << c << ' ' << z;
    }
  }
}

TEST(Contiguous, ProductConstant) {
  for (double a : {0.2, 0.5, 0.8})
    for (double z : {0.1, 0.5, 0.9}) {
      const auto s = corollary_313(a, 1.5, z);
      EXPECT_NEAR(s.lhs, s.rhs, 1e-12 * std::abs(s.rhs));
    }
  // a = 1/2, c = 1: Gamma(1)^2 / (Gamma(1/2) Gamma(3/2)) = 2/pi
  EXPECT_NEAR(corollary_313(0.5, 1.0, 0.3).rhs, 2.0 / std::numbers::pi, 1e-15);
  EXPECT_NEAR(corollary_313(0.5, 1.0, 0.3).lhs, 2.0 / std::numbers::pi, 1e-13);
  EXPECT_THROW(corollary_313(0.5, 0.4, 0.3), specfun::error);
}

TEST(Compositions, ShapeOfK) {
  // k(x) = F(1/2,1/2;1;1-e^{-x}) is increasing and convex with slope in (1/4, 1/pi)
  double prev = theorem31_k(0.5, 0.5, 0.01);
  double prev_slope = theorem31_k_slope(0.5, 0.5, 0.01);
  for (double x = 0.02; x < 30.0; x *= 1.3) {
    const double k = theorem31_k(0.5, 0.5, x), s = theorem31_k_slope(0.5, 0.5, x);
    EXPECT_GT(k, prev);
    EXPECT_GE(s, prev_slope);
    EXPECT_GT(s, 0.25);
    EXPECT_LT(s, 1.0 / std::numbers::pi);
    prev = k;
    prev_slope = s;
  }
}

TEST(Compositions, EllLinearCase) {
  // a = b = c = 1/2: F(1/2,1/2;1/2;z) = (1-z)^{-1/2} and l(x) = 1 + x
  for (double x : {0.1, 1.0, 7.0}) {
    EXPECT_NEAR(theorem32_ell(0.5, 0.5, 0.5, x), 1.0 + x, 1e-13 * (1.0 + x));
    EXPECT_NEAR(theorem32_ell_slope(0.5, 0.5, 0.5, x), 1.0, 1e-13);
  }
  EXPECT_THROW(theorem32_ell(0.5, 0.5, 1.0, 1.0), specfun::error);
}

TEST(Ode, ResidualsAreSmall) {
  for (auto kind : {OdeKind::hypergeometric, OdeKind::quadratic, OdeKind::radical})
    for (double z : {0.2, 0.5, 0.8}) EXPECT_LT(ode_residual(kind, HypTriple(0.6, 1.1, 1.9), z).relative(), 1e-11);
  // second solution needs 2c = a + b + 1
  EXPECT_LT(ode_residual(OdeKind::hypergeometric, HypTriple(0.5, 0.5, 1.0), 0.3, true).relative(), 1e-11);
  EXPECT_LT(ode_residual(OdeKind::quadratic, HypTriple(0.5, 0.5, 1.0), 0.3, true).relative(), 1e-11);
  EXPECT_THROW(ode_residual(OdeKind::hypergeometric, HypTriple(0.5, 0.5, 1.5), 0.3, true), specfun::error);
}

TEST(Identities, WronskianElliottKummer) {
  for (double z : {0.2, 0.5, 0.7}) {
    const auto w = wronskian_identity(HypTriple(0.5, 0.5, 1.0), z);
    EXPECT_NEAR(w.lhs, w.rhs, 1e-11 * std::abs(w.rhs));
  }
  for (double x : {0.1, 0.5, 0.9}) {
    const auto e = elliott_identity(0.4, 0.7, 1.1, x);
    EXPECT_NEAR(e.lhs, e.rhs, 1e-11);
    const auto k = kummer_form30(0.4, 0.7, 1.6, x);
    EXPECT_NEAR(k.lhs, k.rhs, 1e-10 * std::max(1.0, std::abs(k.rhs)));
  }
}

TEST(Terminating3F2, BruteForceSum) {
  const int n = 7;
  const double a = 0.6, b = 1.3, e = 0.45;
  // term k: (-n)_k (a)_k (b)_k / ((1+a+b)_k (1+e-n)_k k!)
  double sum = 0.0;
  for (int k = 0; k <= n; ++k) {
    double t = 1.0;
    for (int j = 0; j < k; ++j) t *= (-n + j) * (a + j) * (b + j) / ((1 + a + b + j) * (1 + e - n + j) * (j + 1.0));
    sum += t;
  }
  EXPECT_NEAR(pfq_terminating_3f2(n, a, b, e), sum, 1e-13 * std::max(1.0, std::abs(sum)));
  EXPECT_THROW(pfq_terminating_3f2(0, a, b, e), specfun::error);
}
