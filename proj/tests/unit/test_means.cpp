#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "specfun/elliptic.hpp"
#include "specfun/means.hpp"

using namespace specfun;

TEST(Agm, GaussConstant) {
  // AGM(1, sqrt 2), 1/G = Gauss's constant
  const auto r = agm(MeanPair(1.0, std::sqrt(2.0)));
  EXPECT_NEAR(r.value, 1.19814023473559220744, 1e-15);
  EXPECT_GT(r.trace.iterations, 0);
  EXPECT_LT(r.trace.iterations, 10);
  // iterates bracket the limit
  for (std::size_t i = 0; i < r.trace.a_n.size(); ++i) {
    EXPECT_GE(r.trace.a_n[i], r.value - 1e-15);
    EXPECT_LE(r.trace.b_n[i], r.value + 1e-15);
  }
}

TEST(Agm, GaussIdentityForK) {
  for (double r : {0.1, 0.5, 0.9}) {
    const double rp = std::sqrt(1 - r * r);
    EXPECT_NEAR(std::numbers::pi / (2 * agm_value(1.0, rp)), std::comp_ellint_1(r), 1e-14);
  }
  EXPECT_EQ(agm_value(3.0, 3.0), 3.0);
}

TEST(PowerMean, LimitsAndSpecialCases) {
  const MeanPair p(2.0, 8.0);
  EXPECT_NEAR(power_mean(1.0, p), 5.0, 1e-15);
  EXPECT_NEAR(power_mean(-1.0, p), 3.2, 1e-15);
  EXPECT_NEAR(power_mean(2.0, p), std::sqrt(34.0), 1e-14);
  EXPECT_NEAR(power_mean(0.0, p, true), 4.0, 1e-15);
  EXPECT_THROW(power_mean(0.0, p), specfun::error);
  EXPECT_NEAR(power_mean(1e-8, p), 4.0, 1e-6);
  // no overflow for large exponents
  EXPECT_NEAR(power_mean(400.0, MeanPair(10.0, 20.0)), 20.0 * std::pow(0.5, 1.0 / 400.0), 1e-12);
}

TEST(LogMean, ValuesAndSymmetry) {
  EXPECT_NEAR(log_mean(MeanPair(1.0, std::numbers::e)), std::numbers::e - 1.0, 1e-15);
  EXPECT_EQ(log_mean(MeanPair(3.0, 3.0)), 3.0);
  EXPECT_EQ(log_mean(MeanPair(2.0, 5.0)), log_mean(MeanPair(5.0, 2.0)));
  // close arguments: L(1, 1+d) = 1 + d/2 - d^2/12 + ...
  const double d = 1e-9;
  EXPECT_NEAR(log_mean(MeanPair(1.0, 1.0 + d)), 1.0 + d / 2, 1e-16);
  // extreme ratio still finite and positive
  const double huge = log_mean(MeanPair(1e-300, 1e300));
  EXPECT_NEAR(huge, 1e300 / (600 * std::log(10.0)), 1e286);
  EXPECT_THROW(MeanPair(0.0, 1.0), specfun::error);
  EXPECT_THROW(MeanPair(-1.0, 1.0), specfun::error);
}

TEST(Means, HomogeneityAndOrdering) {
  const MeanPair p(0.7, 3.1);
  const double lam = 4.5;
  const MeanPair q(lam * p.a, lam * p.b);
  EXPECT_NEAR(agm_value(q.a, q.b), lam * agm_value(p.a, p.b), 1e-14 * lam);
  EXPECT_NEAR(log_mean(q), lam * log_mean(p), 1e-14 * lam);
  EXPECT_NEAR(power_mean(1.5, q), lam * power_mean(1.5, p), 1e-14 * lam);
  const double g = geometric_mean(p), L = log_mean(p), M = agm_value(p.a, p.b), A = 0.5 * (p.a + p.b);
  EXPECT_LT(g, L);
  EXPECT_LT(L, M);
  EXPECT_LT(M, A);
}

TEST(Means, BorweinChainAndLtMonotone) {
  for (double x : {0.01, 0.5, 0.99, 1.01, 2.0, 100.0}) {
    const auto [upper, lower] = borwein_chain_margins(x);
    EXPECT_GT(upper, 0.0) << x;
    EXPECT_GT(lower, 0.0) << x;
  }
  const auto at_one = borwein_chain_margins(1.0);
  EXPECT_EQ(at_one.first, 0.0);
  std::vector<double> ts;
  for (double t = 0.05; t < 5.0; t *= 1.1) ts.push_back(t);
  for (double x : {0.1, 3.0, 50.0}) EXPECT_TRUE(lt_monotone_check(x, ts));
  EXPECT_NEAR(log_mean_t(1.0, 5.0), log_mean(MeanPair(1.0, 5.0)), 1e-15);
  EXPECT_THROW(lt_monotone_check(2.0, std::vector<double>{-1.0, 1.0}), specfun::error);
}
