#pragma once

// Complete and generalized elliptic integrals, the Grötzsch ring modulus
// and the distortion function, plus the classical identities and bounds
// written as residuals and margins.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <string_view>
#include <utility>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "specfun/errors.hpp"
#include "specfun/gamma.hpp"
#include "specfun/hypergeometric.hpp"
#include "specfun/means.hpp"

namespace specfun {

/// Modulus r together with r' = sqrt(1 - r^2). Both are stored so that
/// values close to 1 keep their complement to full relative precision.
class Modulus {
 public:
  Modulus() = default;

  static Modulus from_r(double r) {
    check(r, "r");
    return Modulus(r, std::sqrt((1.0 - r) * (1.0 + r)));
  }
  static Modulus from_complement(double rp) {
    check(rp, "r'");
    return Modulus(std::sqrt((1.0 - rp) * (1.0 + rp)), rp);
  }
  /// Both values supplied; they must satisfy r^2 + r'^2 = 1.
  static Modulus from_pair(double r, double rp) {
    check(r, "r");
    check(rp, "r'");
    if (std::abs(r * r + rp * rp - 1.0) > 4e-15) fail(errc::domain, "modulus pair violates r^2 + r'^2 = 1");
    return Modulus(r, rp);
  }
  /// The modulus with log(r/r') = s.
  static Modulus from_log_ratio(double s) {
    if (std::isnan(s)) fail(errc::domain, "log ratio is NaN");
    const double t = std::exp(-2.0 * std::abs(s));
    const double small = std::exp(-std::abs(s)) / std::sqrt(1.0 + t);
    const double large = 1.0 / std::sqrt(1.0 + t);
    return s < 0.0 ? Modulus(small, large) : Modulus(large, small);
  }

  double r() const noexcept { return r_; }
  double r_prime() const noexcept { return rp_; }
  Modulus complement() const noexcept { return Modulus(rp_, r_); }
  bool interior() const noexcept { return r_ > 0.0 && rp_ > 0.0; }

 private:
  Modulus(double r, double rp) : r_(r), rp_(rp) {}

  static void check(double v, const char* name) {
    if (!(v >= 0.0 && v <= 1.0)) fail(errc::domain, std::string(name) + " must lie in [0,1]");
  }

  double r_ = 0.0;
  double rp_ = 1.0;
};

// ---------------------------------------------------------------------------
// Complete integrals

/// K(r) = pi / (2 AGM(1, r')); +infinity at r = 1.
inline double ellint_K(const Modulus& m) {
  if (m.r_prime() == 0.0) return std::numeric_limits<double>::infinity();
  return pi / (2.0 * agm_value(1.0, m.r_prime()));
}

/// K(r) = (pi/2) F(1/2,1/2;1;r^2), the series route kept for cross-checks.
inline double ellint_K_series(const Modulus& m) {
  if (m.r_prime() == 0.0) return std::numeric_limits<double>::infinity();
  return 0.5 * pi * f21_value(0.5, 0.5, 1.0, m.r() * m.r(), m.r_prime() * m.r_prime());
}

/// E(r) = (pi/2) F(1/2,-1/2;1;r^2) on [0,1].
inline double ellint_E(const Modulus& m) {
  if (m.r_prime() == 0.0) return 1.0;
  return 0.5 * pi * f21_value(0.5, -0.5, 1.0, m.r() * m.r(), m.r_prime() * m.r_prime());
}

inline double ellint_Kp(const Modulus& m) { return ellint_K(m.complement()); }
inline double ellint_Ep(const Modulus& m) { return ellint_E(m.complement()); }

namespace detail {

inline void require_a(double a) {
  if (!(a > 0.0 && a < 1.0)) fail(errc::parameter, "generalized elliptic integrals need a in (0,1)");
}

}  // namespace detail

/// K_a(r) = (pi/2) F(a,1-a;1;r^2).
inline double gen_K(double a, const Modulus& m) {
  detail::require_a(a);
  if (m.r_prime() == 0.0) return std::numeric_limits<double>::infinity();
  return 0.5 * pi * f21_value(a, 1.0 - a, 1.0, m.r() * m.r(), m.r_prime() * m.r_prime());
}

/// E_a(r) = (pi/2) F(a-1,1-a;1;r^2); E_a(1) = sin(pi a)/(2(1-a)).
inline double gen_E(double a, const Modulus& m) {
  detail::require_a(a);
  if (m.r_prime() == 0.0) return std::sin(pi * a) / (2.0 * (1.0 - a));
  return 0.5 * pi * f21_value(a - 1.0, 1.0 - a, 1.0, m.r() * m.r(), m.r_prime() * m.r_prime());
}

/// sin(pi a) int_0^{pi/2} (tan t)^{1-2a} (1 - r^2 sin^2 t)^{-a} dt by tanh-sinh.
///
/// Near t = pi/2 the integrand is rewritten in the distance to the endpoint
/// so the (tan t)^{1-2a} singularity is resolved without cancellation.
inline double gen_K_quadrature(double a, const Modulus& m) {
  detail::require_a(a);
  if (m.r_prime() == 0.0) fail(errc::boundary, "K_a diverges at r = 1");
  const double r2 = m.r() * m.r();
  const double rp2 = m.r_prime() * m.r_prime();
  const double p = 1.0 - 2.0 * a;
  auto integrand = [&](double t, double tc) {
    double tan_t, cos_t;
    if (tc > 0.0) {  // t is nearer pi/2; tc = pi/2 - t
      tan_t = 1.0 / std::tan(tc);
      cos_t = std::sin(tc);
    } else {
      tan_t = std::tan(t);
      cos_t = std::cos(t);
    }
    // 1 - r^2 sin^2 t = r'^2 + r^2 cos^2 t
    return std::pow(tan_t, p) * std::pow(rp2 + r2 * cos_t * cos_t, -a);
  };
  boost::math::quadrature::tanh_sinh<double> integrator(15);
  double err = 0.0;
  double l1 = 0.0;
  const double value = integrator.integrate(integrand, 0.0, 0.5 * pi, 1e-13, &err, &l1);
  if (!std::isfinite(value) || err > 1e-10 * std::max(1.0, l1))
    fail(errc::computation, "tanh-sinh quadrature for K_a: estimated error " + std::to_string(err) +
                                " against L1 norm " + std::to_string(l1));
  return std::sin(pi * a) * value;
}

// ---------------------------------------------------------------------------
// Grötzsch modulus and distortion

namespace detail {

inline void require_interior(const Modulus& m, const char* what) {
  if (!m.interior()) fail(errc::boundary, std::string(what) + " is only finite for r in (0,1)");
}

}  // namespace detail

/// mu(r) = pi K'(r) / (2 K(r)).
inline double mu(const Modulus& m) {
  detail::require_interior(m, "mu");
  return 0.5 * pi * ellint_Kp(m) / ellint_K(m);
}

/// mu_a(r) = pi / (2 sin(pi a)) K_a'(r) / K_a(r).
inline double mu_a(double a, const Modulus& m) {
  detail::require_a(a);
  detail::require_interior(m, "mu_a");
  return 0.5 * pi / std::sin(pi * a) * gen_K(a, m.complement()) / gen_K(a, m);
}

/// The modulus with mu(r) = y.
///
/// Works in s = log(r/r'), where mu is decreasing with mu'(s) = -pi^2/(4K^2).
/// Uses mu(r) mu(r') = pi^2/4 to reduce to y >= pi/2, then bisects in s and
/// finishes with one interpolation step.
inline Modulus mu_inverse(double y) {
  if (!(y > 0.0) || std::isnan(y)) fail(errc::domain, "mu_inverse needs y > 0");
  if (std::isinf(y)) return Modulus::from_r(0.0);
  if (y < 0.5 * pi) return mu_inverse(pi * pi / (4.0 * y)).complement();
  if (y == 0.5 * pi) return Modulus::from_log_ratio(0.0);

  auto g = [&](double s) { return mu(Modulus::from_log_ratio(s)) - y; };
  constexpr double s_floor = -740.0;
  // mu(r) ~ log(4/r) for small r, so s ~ log 4 - y
  double hi = std::clamp(std::log(4.0) - y + 1.0, s_floor, 0.0);
  double lo = std::max(s_floor, std::log(4.0) - y - 1.0);
  if (hi == s_floor || g(hi) > 0.0) hi = 0.0;
  double g_lo = g(lo);
  while (g_lo < 0.0) {
    if (lo == s_floor) {
      // r underflows; fall back to r ~ 4 e^{-y}
      return Modulus::from_r(std::min(1.0, 4.0 * std::exp(-y)));
    }
    lo = std::max(s_floor, lo - 8.0);
    g_lo = g(lo);
  }
  double g_hi = g(hi);
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi || hi - lo <= 1e-15 * std::max(1.0, std::abs(mid))) break;
    const double gm = g(mid);
    if (gm == 0.0) return Modulus::from_log_ratio(mid);
    if (gm > 0.0) {
      lo = mid;
      g_lo = gm;
    } else {
      hi = mid;
      g_hi = gm;
    }
  }
  double s = 0.5 * (lo + hi);
  if (g_lo != g_hi) s = lo - g_lo * (hi - lo) / (g_hi - g_lo);
  return Modulus::from_log_ratio(s);
}

/// phi_K(r) = mu^{-1}(mu(r)/K); K < 1 gives the inverse family.
inline double phi_K(double K, double r) {
  if (!(K > 0.0) || !std::isfinite(K)) fail(errc::domain, "phi_K needs K > 0");
  if (!(r > 0.0 && r < 1.0)) fail(errc::domain, "phi_K needs r in (0,1)");
  if (K == 1.0) return r;
  return mu_inverse(mu(Modulus::from_r(r)) / K).r();
}

// ---------------------------------------------------------------------------
// Identities

/// E K' + E' K - K K' - pi/2.
inline Residual legendre_residual(const Modulus& m) {
  detail::require_interior(m, "Legendre's relation");
  const double K = ellint_K(m), Kp = ellint_Kp(m), E = ellint_E(m), Ep = ellint_Ep(m);
  const double lhs = E * Kp + Ep * K - K * Kp;
  return {lhs - 0.5 * pi, std::abs(E * Kp) + std::abs(Ep * K) + std::abs(K * Kp)};
}

/// E_a K_a' + E_a' K_a - K_a K_a' - pi sin(pi a)/(4(1-a)).
inline Residual gen_legendre_residual(double a, const Modulus& m) {
  detail::require_a(a);
  detail::require_interior(m, "generalized Legendre relation");
  const Modulus c = m.complement();
  const double K = gen_K(a, m), Kp = gen_K(a, c), E = gen_E(a, m), Ep = gen_E(a, c);
  const double lhs = E * Kp + Ep * K - K * Kp;
  return {lhs - pi * std::sin(pi * a) / (4.0 * (1.0 - a)), std::abs(E * Kp) + std::abs(Ep * K) + std::abs(K * Kp)};
}

/// Relative residuals of K(2 sqrt r/(1+r)) = (1+r)K(r) and
/// K((1-r)/(1+r)) = ((1+r)/2) K'(r).
inline std::pair<double, double> landen_residuals(double r) {
  if (!(r > 0.0 && r < 1.0)) fail(errc::boundary, "Landen identities are checked for r in (0,1)");
  const Modulus m = Modulus::from_r(r);
  // the two transformed moduli are each other's complements
  const double up = 2.0 * std::sqrt(r) / (1.0 + r);
  const double down = (1.0 - r) / (1.0 + r);
  const Modulus mu_up = Modulus::from_pair(up, down);
  const double rhs1 = (1.0 + r) * ellint_K(m);
  const double rhs2 = 0.5 * (1.0 + r) * ellint_Kp(m);
  return {(ellint_K(mu_up) - rhs1) / rhs1, (ellint_K(mu_up.complement()) - rhs2) / rhs2};
}

/// Margins of the zero-balanced Landen-type inequalities for c = a + b:
///   [0] (1+r)F(r^2) - F(s^2)
///   [1] F(s^2) + (R - log 16)/B - (1+r)F(r^2)
///   [2] F(t^2) - ((1+r)/2) F(1-r^2)
///   [3] ((1+r)/2)[F(1-r^2) + (R - log 16)/B] - F(t^2)
/// with s = 2 sqrt r/(1+r), t = (1-r)/(1+r), F = F(a,b;a+b;.).
inline std::array<double, 4> landen_inequality_margins(double a, double b, double c, double r) {
  if (!(a > 0.0 && b > 0.0)) fail(errc::domain, "Landen-type inequalities need a, b > 0");
  if (std::abs(c - a - b) > 1e-12 * std::max(1.0, c)) fail(errc::parameter, "Landen-type inequalities need c = a + b");
  if (!(r > 0.0 && r < 1.0)) fail(errc::boundary, "Landen-type inequalities are checked for r in (0,1)");
  const HypTriple t(a, b, a + b);
  auto F = [&](double z, double zc) { return f21_value(t, z, zc); };
  const double s = 2.0 * std::sqrt(r) / (1.0 + r);
  const double d = (1.0 - r) / (1.0 + r);
  const double rp2 = (1.0 - r) * (1.0 + r);
  const double shift = (zero_balanced_R(a, b) - std::log(16.0)) / beta(a, b);
  const double f_r = F(r * r, rp2);
  const double f_rc = F(rp2, r * r);
  const double f_s = F(s * s, d * d);
  const double f_d = F(d * d, s * s);
  return {(1.0 + r) * f_r - f_s, f_s + shift - (1.0 + r) * f_r, f_d - 0.5 * (1.0 + r) * f_rc,
          0.5 * (1.0 + r) * (f_rc + shift) - f_d};
}

inline std::array<double, 4> landen_inequality_margins(double a, double b, double r) {
  return landen_inequality_margins(a, b, a + b, r);
}

// ---------------------------------------------------------------------------
// Bounds for K and E

namespace detail {

/// F(1/2,1/2;1;r^2) - 1 without cancellation for small r.
inline double K_excess(const Modulus& m) {
  const double z = m.r() * m.r();
  if (z > 0.5) return ellint_K(m) / (0.5 * pi) - 1.0;
  double term = 1.0;
  double sum = 0.0;
  for (int n = 0; n < 200; ++n) {
    term *= (0.5 + n) * (0.5 + n) / ((n + 1.0) * (n + 1.0)) * z;
    sum += term;
    if (std::abs(term) <= 1e-18 * sum) break;
  }
  return sum;
}

/// arth(r)/r - 1.
inline double arth_excess(double r) {
  if (r > 0.5) return std::atanh(r) / r - 1.0;
  const double z = r * r;
  double pw = 1.0;
  double sum = 0.0;
  for (int k = 1; k < 200; ++k) {
    pw *= z;
    const double term = pw / (2.0 * k + 1.0);
    sum += term;
    if (term <= 1e-18 * sum) break;
  }
  return sum;
}

}  // namespace detail

/// K(r) - (pi/2)(arth r / r)^p, evaluated in excess form so the
/// cancellation as r -> 0 is analytic.
inline double arth_power_margin(double r, double p) {
  if (!(r > 0.0 && r < 1.0)) fail(errc::boundary, "K bounds are checked for r in (0,1)");
  const Modulus m = Modulus::from_r(r);
  const double fk = detail::K_excess(m);
  const double q = detail::arth_excess(r);
  return 0.5 * pi * (fk - std::expm1(p * std::log1p(q)));
}

struct KBoundMargins {
  double arth_lower = 0.0;          // K - (pi/2)(arth r/r)^{1/2}
  double arth_upper = 0.0;          // (pi/2)(arth r/r) - K
  double arth_three_quarter = 0.0;  // K - (pi/2)(arth r/r)^{3/4}
  double kuhnau = 0.0;              // K/log(4/r') - 9/(8+r^2)
  double qiu_vamanamurthy = 0.0;    // 1 + r'^2/4 - K/log(4/r')
  double alzer = 0.0;               // K/log(4/r') - 1 - (pi/(4 log 2) - 1) r'^2

  static constexpr std::array<std::string_view, 6> names = {
      "arth-lower", "arth-upper", "arth-three-quarter", "kuhnau", "qiu-vamanamurthy", "alzer-K"};
  std::array<double, 6> as_array() const {
    return {arth_lower, arth_upper, arth_three_quarter, kuhnau, qiu_vamanamurthy, alzer};
  }
};

inline KBoundMargins k_bound_margins(double r) {
  if (!(r > 0.0 && r < 1.0)) fail(errc::boundary, "K bounds are checked for r in (0,1)");
  const Modulus m = Modulus::from_r(r);
  const double K = ellint_K(m);
  const double fk = detail::K_excess(m);
  const double log_rp = 0.5 * std::log1p(-r * r);
  const double L = std::log(4.0) - log_rp;
  const double ratio = K / L;
  const double rp2 = m.r_prime() * m.r_prime();
  const double c_alzer = pi / (4.0 * std::log(2.0)) - 1.0;
  KBoundMargins out;
  out.arth_lower = arth_power_margin(r, 0.5);
  out.arth_upper = -arth_power_margin(r, 1.0);
  out.arth_three_quarter = arth_power_margin(r, 0.75);
  out.kuhnau = ratio - 9.0 / (8.0 + r * r);
  out.qiu_vamanamurthy = 1.0 + 0.25 * rp2 - ratio;
  // K/L - (1 + c) + c r^2, with K/L - (1 + c) = (pi/2)(fk + log r'/log 4)/L
  out.alzer = 0.5 * pi * (fk + log_rp / std::log(4.0)) / L + c_alzer * r * r;
  return out;
}

struct EBoundMargins {
  double muir = 0.0;   // (2/pi)E - ((1 + r'^{3/2})/2)^{2/3}
  double upper = 0.0;  // ((1 + r'^2)/2)^{1/2} - (2/pi)E
};

namespace detail {

/// Maclaurin coefficients (in z = r^2) of the differences behind the two E bounds.
struct EBoundCoefficients {
  static constexpr int n_terms = 80;
  std::array<long double, n_terms> muir{};
  std::array<long double, n_terms> upper{};

  EBoundCoefficients() {
    std::array<long double, n_terms> e{}, p{}, q{}, u{};
    e[0] = 1.0L;
    long double w = 1.0L;  // coefficients of (1-z)^{3/4}
    p[0] = 1.0L;
    u[0] = 1.0L;
    for (int n = 0; n + 1 < n_terms; ++n) {
      e[n + 1] = e[n] * (n - 0.5L) * (n + 0.5L) / ((n + 1.0L) * (n + 1.0L));
      w = w * (n - 0.75L) / (n + 1.0L);
      p[n + 1] = 0.5L * w;
      u[n + 1] = u[n] * (n - 0.5L) / (2.0L * (n + 1.0L));
    }
    // q = p^{2/3}: n q_n = sum_{k=1}^{n} ((alpha+1)k - n) p_k q_{n-k}
    const long double alpha = 2.0L / 3.0L;
    q[0] = 1.0L;
    for (int n = 1; n < n_terms; ++n) {
      long double s = 0.0L;
      for (int k = 1; k <= n; ++k) s += ((alpha + 1.0L) * k - n) * p[k] * q[n - k];
      q[n] = s / n;
    }
    for (int n = 0; n < n_terms; ++n) {
      muir[n] = n <= 3 ? 0.0L : e[n] - q[n];
      upper[n] = n <= 1 ? 0.0L : u[n] - e[n];
    }
  }
};

inline const EBoundCoefficients& e_bound_coefficients() {
  static const EBoundCoefficients coeffs;
  return coeffs;
}

}  // namespace detail

/// Muir's lower bound and the companion upper bound for (2/pi)E(r), r in [0,1].
inline EBoundMargins e_bound_margins(double r) {
  if (!(r >= 0.0 && r <= 1.0)) fail(errc::domain, "E bounds need r in [0,1]");
  const double z = r * r;
  if (z <= 0.25) {
    // coefficient differences; low orders agree exactly
    const auto& c = detail::e_bound_coefficients();
    long double muir = 0.0L, upper = 0.0L, pw = 1.0L;
    for (int n = 0; n < detail::EBoundCoefficients::n_terms; ++n) {
      muir += c.muir[n] * pw;
      upper += c.upper[n] * pw;
      pw *= z;
    }
    return {static_cast<double>(muir), static_cast<double>(upper)};
  }
  const Modulus m = Modulus::from_r(r);
  const double e2 = ellint_E(m) / (0.5 * pi);
  const double rp = m.r_prime();
  const double rp2 = rp * rp;
  return {e2 - std::cbrt(std::pow(0.5 * (1.0 + rp * std::sqrt(rp)), 2.0)), std::sqrt(0.5 * (1.0 + rp2)) - e2};
}

/// Perimeter of the ellipse with semi-axes 1 and b: 4 E(sqrt(1 - b^2)).
inline double ellipse_perimeter(double b) {
  if (!(b > 0.0 && b <= 1.0)) fail(errc::domain, "ellipse_perimeter needs b in (0,1]");
  return 4.0 * ellint_E(Modulus::from_complement(b));
}

// ---------------------------------------------------------------------------
// Differential equations in r

/// Residuals of
///   r r'^2 K_a'' + (1 - 3r^2) K_a' - 4a(1-a) r K_a = 0
///   r r'^2 E_a'' + r'^2 E_a' + 4(1-a)^2 r E_a = 0
/// with the r-derivatives taken analytically through z = r^2.
inline std::pair<Residual, Residual> elliptic_ode_residuals(double a, double r) {
  detail::require_a(a);
  if (!(r > 0.0 && r < 1.0)) fail(errc::domain, "elliptic ODE residuals need r in (0,1)");
  const double z = r * r;
  const double zc = (1.0 - r) * (1.0 + r);
  auto pack = [&](const HypTriple& t) {
    const double f = f21_value(t, z, zc);
    const double f1 = gauss_2f1_derivative(t, z, zc, 1);
    const double f2 = gauss_2f1_derivative(t, z, zc, 2);
    // w(r) = (pi/2) F(r^2)
    return std::array<double, 3>{0.5 * pi * f, 0.5 * pi * 2.0 * r * f1, 0.5 * pi * (2.0 * f1 + 4.0 * z * f2)};
  };
  const auto k = pack(HypTriple(a, 1.0 - a, 1.0));
  const auto e = pack(HypTriple(a - 1.0, 1.0 - a, 1.0));
  const double k1 = r * zc * k[2], k2 = (1.0 - 3.0 * z) * k[1], k3 = -4.0 * a * (1.0 - a) * r * k[0];
  const double e1 = r * zc * e[2], e2 = zc * e[1], e3 = 4.0 * (1.0 - a) * (1.0 - a) * r * e[0];
  return {Residual{k1 + k2 + k3, std::abs(k1) + std::abs(k2) + std::abs(k3)},
          Residual{e1 + e2 + e3, std::abs(e1) + std::abs(e2) + std::abs(e3)}};
}

struct SchwarzianCheck {
  double numeric = 0.0;
  double closed_form = 0.0;
  double relative_error() const { return std::abs(numeric - closed_form) / std::abs(closed_form); }
};

/// Closed form of the Schwarzian of mu_a:
/// -8a(1-a)/r'^2 + (1 + 6r^2 - 3r^4)/(2 r^2 r'^4).
inline double schwarzian_mu_closed_form(double a, double r) {
  const double r2 = r * r;
  const double rp2 = (1.0 - r) * (1.0 + r);
  return -8.0 * a * (1.0 - a) / rp2 + (1.0 + 6.0 * r2 - 3.0 * r2 * r2) / (2.0 * r2 * rp2 * rp2);
}

/// Schwarzian derivative of mu_a from central stencils with step 1e-3,
/// against the closed form. First and second derivatives use five points;
/// the third derivative uses seven so that all three are fourth order.
inline SchwarzianCheck schwarzian_mu_residual(double a, double r) {
  detail::require_a(a);
  constexpr double h = 1e-3;
  if (!(r - 3 * h > 0.0 && r + 3 * h < 1.0)) fail(errc::domain, "Schwarzian stencil leaves (0,1)");
  std::array<double, 7> f{};
  for (int i = 0; i < 7; ++i) f[i] = mu_a(a, Modulus::from_r(r + (i - 3) * h));
  const double d1 = (-f[5] + 8.0 * f[4] - 8.0 * f[2] + f[1]) / (12.0 * h);
  const double d2 = (-f[5] + 16.0 * f[4] - 30.0 * f[3] + 16.0 * f[2] - f[1]) / (12.0 * h * h);
  const double d3 =
      (-f[6] + 8.0 * f[5] - 13.0 * f[4] + 13.0 * f[2] - 8.0 * f[1] + f[0]) / (8.0 * h * h * h);
  const double ratio = d2 / d1;
  return {d3 / d1 - 1.5 * ratio * ratio, schwarzian_mu_closed_form(a, r)};
}

}  // namespace specfun
