#pragma once

// Gamma-family primitives, Euler-Mascheroni estimators and the
// special-purpose functions built on log-gamma.

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <string>

#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/trigamma.hpp>

#include "specfun/errors.hpp"
#include "specfun/series.hpp"

namespace specfun {

inline constexpr double pi = std::numbers::pi;
/// Euler-Mascheroni constant, correctly rounded.
inline constexpr double euler_gamma = 0.57721566490153286060651209008240243;

namespace detail {

inline void require_positive(double x, const char* what) {
  if (!(x > 0.0)) fail(errc::domain, std::string(what) + " requires x > 0, got " + std::to_string(x));
}

/// Bernoulli numbers B_2, B_4, ..., B_20.
inline constexpr std::array<double, 10> bernoulli_even = {
    1.0 / 6.0,        -1.0 / 30.0,    1.0 / 42.0,         -1.0 / 30.0,   5.0 / 66.0,
    -691.0 / 2730.0,  7.0 / 6.0,      -3617.0 / 510.0,    43867.0 / 798.0, -174611.0 / 330.0};

/// ln Gamma(x) - [(x - 1/2) ln x - x + ln(2 pi)/2] for x >= 10; with
/// first > 1 the leading terms of the expansion are left out.
inline double stirling_remainder(double x, std::size_t first = 1) {
  double sum = 0.0;
  const double inv_x2 = 1.0 / (x * x);
  double pw = std::pow(x, 1.0 - 2.0 * static_cast<double>(first));
  for (std::size_t k = first; k <= bernoulli_even.size(); ++k) {
    const double term = bernoulli_even[k - 1] / (2.0 * k * (2.0 * k - 1.0)) * pw;
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    pw *= inv_x2;
  }
  return sum;
}

/// 1/Gamma(x), zero at the poles.
inline double rgamma(double x) {
  if (is_nonpositive_integer(x)) return 0.0;
  return 1.0 / boost::math::tgamma(x);
}

/// Digamma on the whole real line minus the poles (reflection for x < 0).
inline double digamma_any(double x) {
  if (is_nonpositive_integer(x)) fail(errc::pole, "digamma at a nonpositive integer");
  return boost::math::digamma(x);
}

inline double ball_volume_real(double n) {
  return std::exp(0.5 * n * std::log(pi) - boost::math::lgamma(0.5 * n + 1.0));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Gamma family

inline double ln_gamma(double x) {
  detail::require_positive(x, "ln_gamma");
  return boost::math::lgamma(x);
}

/// Gamma on the real line. Negative arguments are reduced onto (0,1) with
/// the recurrence Gamma(x) = Gamma(x+1)/x.
inline double gamma(double x) {
  if (std::isnan(x)) fail(errc::domain, "gamma of NaN");
  if (detail::is_nonpositive_integer(x)) fail(errc::pole, "gamma has a pole at " + std::to_string(x));
  if (x > 0.0) return boost::math::tgamma(x);
  const auto shift = static_cast<int>(std::ceil(-x));
  double denom = 1.0;
  for (int k = 0; k < shift; ++k) denom *= (x + k);
  return boost::math::tgamma(x + shift) / denom;
}

inline double digamma(double x) {
  detail::require_positive(x, "digamma");
  return boost::math::digamma(x);
}

inline double trigamma(double x) {
  detail::require_positive(x, "trigamma");
  return boost::math::trigamma(x);
}

inline double beta(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) fail(errc::domain, "beta requires a, b > 0");
  return std::exp(boost::math::lgamma(a) + boost::math::lgamma(b) - boost::math::lgamma(a + b));
}

/// Rising factorial (a, n) = a (a+1) ... (a+n-1); (a, 0) = 1.
inline double pochhammer(double a, unsigned n) {
  double p = 1.0;
  for (unsigned k = 0; k < n; ++k) p *= (a + k);
  return p;
}

// ---------------------------------------------------------------------------
// Euler-Mascheroni procedures
/// R_n - gamma, evaluated without cancellation against the constant.
///
/// Uses R_n - gamma = psi(n+1) - log(n+1/2) and, for n >= 10, the expansion
/// psi(x+1/2) - log x = sum_k (1 - 2^{1-2k}) B_2k / (2k x^2k) at x = n + 1/2.
inline double detemple_excess(std::int64_t n) {
  if (n < 1) fail(errc::domain, "detemple_excess requires n >= 1");
  const double nd = static_cast<double>(n);
  if (n < 10) return boost::math::digamma(nd + 1.0) - std::log(nd + 0.5);
  const double x = nd + 0.5;
  const double inv_x2 = 1.0 / (x * x);
  double pw = inv_x2;
  double sum = 0.0;
  double two_pow = 2.0;  // 2^{2k-1}
  for (std::size_t k = 1; k <= detail::bernoulli_even.size(); ++k) {
    const double term = (1.0 - 1.0 / two_pow) * detail::bernoulli_even[k - 1] / (2.0 * k) * pw;
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    pw *= inv_x2;
    two_pow *= 4.0;
  }
  return sum;
}

/// R_n = sum_{k<=n} 1/k - log(n + 1/2).
inline double detemple_R(std::int64_t n) {
  if (n < 1) fail(errc::domain, "detemple_R requires n >= 1");
  // summing H_n in double drifts by ~1e-14 at n ~ 1e4; the excess is accurate to rounding
  return detemple_excess(n) + euler_gamma;
}

/// H(n) = n^2 (R_n - gamma).
inline double bigH(std::int64_t n) {
  if (n < 1) fail(errc::domain, "bigH requires n >= 1");
  const double nd = static_cast<double>(n);
  return nd * nd * detemple_excess(n);
}

struct GammaEstimate {
  double estimate = 0.0;
  double error_bound = 0.0;  // c_k = 2/(12k)! + 2 k^2 e^{-k}
  int k = 0;
};

/// Exponentially convergent estimate of gamma built from the alternating
/// sums of d(k,r) = (-1)^{r-1} k^{r+1} / ((r-1)! (r+1)), r = 1..12k+1.
///
/// The terms peak near e^k, so the sums are carried in long double and the
/// terms are generated by ratio, never through factorials.
inline GammaEstimate karatsuba_gamma_estimate(int k) {
  if (k < 1) fail(errc::domain, "karatsuba_gamma_estimate requires k >= 1");
  const long double kk = k;
  long double d = kk * kk / 2.0L;  // d(k,1)
  long double sum_d = 0.0L;
  long double sum_d_shift = 0.0L;
  const int last = 12 * k + 1;
  for (int r = 1; r <= last; ++r) {
    if (!std::isfinite(static_cast<double>(d)))
      fail(errc::computation, "karatsuba_gamma_estimate: term overflow at r=" + std::to_string(r));
    sum_d += d;
    sum_d_shift += d / (r + 1);
    d *= -kk * (r + 1) / (static_cast<long double>(r) * (r + 2));
  }
  GammaEstimate out;
  out.k = k;
  out.estimate = static_cast<double>(1.0L - std::log(kk) * sum_d + sum_d_shift);
  const double log_fact = boost::math::lgamma(12.0 * k + 1.0);
  out.error_bound = 2.0 * std::exp(-log_fact) + 2.0 * k * static_cast<double>(k) * std::exp(-static_cast<double>(k));
  return out;
}

// ---------------------------------------------------------------------------
// Functions built on log-gamma

/// f(x) = log Gamma(x+1) / (x log x); the removable singularity at x = 1
/// is filled with its limit 1 - gamma.
inline double anderson_f(double x) {
  detail::require_positive(x, "anderson_f");
  if (x == 1.0) return 1.0 - euler_gamma;
  // log Gamma(x+1) = log Gamma(x) + log x keeps full relative accuracy near 1,
  // where forming x + 1 would round away the offset from 2
  if (std::abs(x - 1.0) < 0.5) return 1.0 / x + boost::math::lgamma(x) / (x * std::log(x));
  return boost::math::lgamma(x + 1.0) / (x * std::log(x));
}

/// g(x) = sum_{n>=1} (n - x)/(n + x)^3 for x > -1.
///
/// A block of terms is summed directly and the remainder is closed with an
/// Euler-Maclaurin tail built on the exact antiderivative.
inline SeriesEval lemma_g(double x) {
  if (!(x > -1.0)) fail(errc::domain, "lemma_g requires x > -1");
  const SeriesOptions opt = SeriesOptions::with_cap(10'000'000);
  const auto n_direct = static_cast<std::size_t>(1000.0 + 16.0 * std::abs(x));
  if (n_direct > opt.term_cap) {
    SeriesEval partial{0.0, 0, std::numeric_limits<double>::infinity(), false};
    throw convergence_error("lemma_g: direct block exceeds term cap", partial);
  }
  double sum = 0.0;
  for (std::size_t n = n_direct; n >= 1; --n) {
    const double u = static_cast<double>(n) + x;
    sum += (static_cast<double>(n) - x) / (u * u * u);
  }
  // sum_{n>N} f(n) = int_N^inf f - f(N)/2 - f'(N)/12 + f'''(N)/720 - f^(5)(N)/30240
  const double u = static_cast<double>(n_direct) + x;
  const double iu = 1.0 / u;
  const double integral = iu - x * iu * iu;
  const double f0 = iu * iu - 2.0 * x * iu * iu * iu;
  const double f1 = -2.0 * std::pow(iu, 3) + 6.0 * x * std::pow(iu, 4);
  const double f3 = -24.0 * std::pow(iu, 5) + 120.0 * x * std::pow(iu, 6);
  const double f5 = -720.0 * std::pow(iu, 7) + 5040.0 * x * std::pow(iu, 8);
  const double tail = integral - f0 / 2.0 - f1 / 12.0 + f3 / 720.0 - f5 / 30240.0;
  SeriesEval out;
  out.value = sum + tail;
  out.terms_used = n_direct;
  out.est_error = std::abs(f5) / 30240.0 + 4.0 * std::numeric_limits<double>::epsilon() *
                                               std::sqrt(static_cast<double>(n_direct)) * std::abs(out.value);
  detail::finish(out, opt);
  return out;
}

/// h(x) = x^2 psi'(1+x) - x psi(1+x) + log Gamma(1+x).
inline double lemma_h(double x) {
  if (!(x > -1.0)) fail(errc::domain, "lemma_h requires x > -1");
  if (x == 0.0) return 0.0;
  return x * x * boost::math::trigamma(1.0 + x) - x * boost::math::digamma(1.0 + x) +
         boost::math::lgamma(1.0 + x);
}

/// theta_x = 30 (G(x)^6 - 8x^3 - 4x^2 - x) with G(x) = (e/x)^x Gamma(1+x)/sqrt(pi).
///
/// G^6 = 8x^3 exp(6S) where S is the Stirling remainder, so for x >= 10 the
/// polynomial part is cancelled analytically rather than numerically.
inline double ramanujan_theta(double x) {
  if (!(x >= 0.0)) fail(errc::domain, "ramanujan_theta requires x >= 0");
  if (x == 0.0) return 30.0 / (pi * pi * pi);
  if (std::isinf(x)) return 1.0;
  if (x < 10.0) {
    const double g6 = std::exp(6.0 * (boost::math::lgamma(1.0 + x) + x - x * std::log(x)) - 3.0 * std::log(pi));
    return 30.0 * (g6 - 8.0 * x * x * x - 4.0 * x * x - x);
  }
  // 6S = 1/(2x) + delta
  const double delta = 6.0 * detail::stirling_remainder(x, 2);
  const double y = 1.0 / (2.0 * x) + delta;
  // exp(y) - 1 - y - y^2/2
  double e3 = 0.0;
  double term = y * y * y / 6.0;
  for (int j = 3; j < 40 && term != 0.0; ++j) {
    e3 += term;
    if (std::abs(term) < 1e-18 * std::abs(e3)) break;
    term *= y / (j + 1);
  }
  const double x2 = x * x;
  const double x3 = x2 * x;
  const double h = 8.0 * x3 * e3 + 8.0 * x3 * delta + 4.0 * x2 * delta + 4.0 * x3 * delta * delta;
  return 30.0 * h;
}

/// Correction coefficients of the sextic-root expansion of Gamma(x+1):
/// 1/30, -11/240, 79/3360, 3539/201600, -9511/403200, -10051/716800,
/// 47474887/1277337600.
inline constexpr std::array<double, 7> karatsuba_coefficients = {
    1.0 / 30.0,           -11.0 / 240.0,          79.0 / 3360.0,  3539.0 / 201600.0,
    -9511.0 / 403200.0,   -10051.0 / 716800.0,    47474887.0 / 1277337600.0};

/// Gamma(x+1) ~ sqrt(pi) (x/e)^x (8x^3 + 4x^2 + x + sum_{j<n_terms} a_j x^-j)^{1/6}.
inline double karatsuba_asymptotic_gamma(double x, int n_terms) {
  if (n_terms < 1 || n_terms > static_cast<int>(karatsuba_coefficients.size()))
    fail(errc::configuration, "karatsuba_asymptotic_gamma: n_terms must lie in [1,7]");
  if (!(x >= 1.0)) fail(errc::domain, "karatsuba_asymptotic_gamma requires x >= 1");
  double poly = 8.0 * x * x * x + 4.0 * x * x + x;
  double inv = 1.0;
  for (int j = 0; j < n_terms; ++j) {
    poly += karatsuba_coefficients[j] * inv;
    inv /= x;
  }
  return std::exp(0.5 * std::log(pi) + x * (std::log(x) - 1.0) + std::log(poly) / 6.0);
}

/// Volume of the unit ball in R^n.
inline double ball_volume(int n) {
  if (n < 1) fail(errc::domain, "ball_volume requires n >= 1");
  return detail::ball_volume_real(n);
}

/// Surface area of the unit sphere S^{n-1} in R^n, n * Omega_n.
inline double sphere_area(int n) {
  if (n < 1) fail(errc::domain, "sphere_area requires n >= 1");
  return n * detail::ball_volume_real(n);
}

/// Best constants for the ball-volume inequalities, n >= 1:
///   a Omega_{n+1}^{n/(n+1)} <= Omega_n <= b Omega_{n+1}^{n/(n+1)}
///   sqrt((n+A)/(2 pi)) <= Omega_{n-1}/Omega_n <= sqrt((n+B)/(2 pi))
///   (1+1/n)^alpha <= Omega_n^2/(Omega_{n-1} Omega_{n+1}) <= (1+1/n)^beta
struct BallConstants {
  double a = 2.0 / std::sqrt(pi);
  double b = std::sqrt(std::numbers::e);
  double A = 0.5;
  double B = pi / 2.0 - 1.0;
  double alpha = 2.0 - std::log(pi) / std::log(2.0);
  double beta = 0.5;
};

/// Density of the representing measure of 1/f (f = anderson_f): on
/// (k-1, k) it is t (L + (k-1) log t) / (L^2 + (k-1)^2 pi^2) with
/// L = log|Gamma(1-t)|, and 0 at the positive integers.
inline double berg_pedersen_density(double t) {
  if (!(t > 0.0)) fail(errc::domain, "berg_pedersen_density requires t > 0");
  if (std::nearbyint(t) == t) return 0.0;
  const double k = std::ceil(t);
  // log|Gamma(1-t)|; for small t the argument 1 - t would round
  const double L = t < 0.5 ? std::log1p(boost::math::tgamma1pm1(-t)) : boost::math::lgamma(1.0 - t);
  const double km1 = k - 1.0;
  return t * (L + km1 * std::log(t)) / (L * L + km1 * km1 * pi * pi);
}

}  // namespace specfun
