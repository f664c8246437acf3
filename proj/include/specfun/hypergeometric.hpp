#pragma once

// Gauss hypergeometric function on the real line and the identities built
// on it: contiguous relations, hypergeometric ODEs, Wronskian constants,
// Elliott's identity, a Kummer connection product and a terminating 3F2.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "specfun/errors.hpp"
#include "specfun/gamma.hpp"
#include "specfun/series.hpp"

namespace specfun {

/// Parameter triple (a, b, c) of F(a,b;c;z). c may not be 0 or a negative integer.
struct HypTriple {
  enum class Regime { c_above, zero_balanced, c_below };

  double a = 0.0;
  double b = 0.0;
  double c = 1.0;

  HypTriple() = default;
  HypTriple(double a_, double b_, double c_) : a(a_), b(b_), c(c_) { validate(); }

  void validate() const {
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c))
      fail(errc::parameter, "hypergeometric parameters must be finite");
    if (detail::is_nonpositive_integer(c))
      fail(errc::parameter, "c = " + std::to_string(c) + " is zero or a negative integer");
  }

  /// c - a - b; the sign decides the behaviour at z = 1.
  double excess() const { return c - a - b; }

  Regime regime() const {
    const double m = excess();
    if (std::abs(m) <= 1e-12 * std::max(1.0, std::abs(c))) return Regime::zero_balanced;
    return m > 0.0 ? Regime::c_above : Regime::c_below;
  }

  bool is_polynomial() const { return detail::is_nonpositive_integer(a) || detail::is_nonpositive_integer(b); }
};

namespace detail {

constexpr double eps = std::numeric_limits<double>::epsilon();

/// Running sum with the bookkeeping needed for a rounding estimate.
struct Accumulator {
  double sum = 0.0;
  double max_abs = 0.0;
  std::size_t n = 0;

  void add(double t) {
    sum += t;
    max_abs = std::max(max_abs, std::abs(t));
    ++n;
  }
  double rounding() const { return 4.0 * eps * std::sqrt(static_cast<double>(n) + 1.0) * max_abs; }
};

[[noreturn]] inline void series_cap_hit(const char* what, const Accumulator& acc, double tail) {
  SeriesEval partial{acc.sum, acc.n, tail + acc.rounding(), false};
  throw convergence_error(std::string(what) + ": term cap of " + std::to_string(acc.n) + " reached", partial);
}

/// Plain Maclaurin series; needs |z| < 1 (or a terminating series).
inline SeriesEval f21_direct(double a, double b, double c, double z, const SeriesOptions& opt) {
  Accumulator acc;
  double term = 1.0;
  const double n_min = std::max({std::abs(a), std::abs(b), std::abs(c)}) + 2.0;
  double tail = 0.0;
  for (std::size_t n = 0;; ++n) {
    acc.add(term);
    const double nd = static_cast<double>(n);
    const double ratio = (a + nd) * (b + nd) / ((c + nd) * (nd + 1.0)) * z;
    if (ratio == 0.0) {  // terminating series, or z = 0
      tail = 0.0;
      break;
    }
    term *= ratio;
    if (nd >= n_min) {
      const double rho = std::max(std::abs(ratio), std::abs(z));
      if (rho < 1.0) {
        tail = std::abs(term) / (1.0 - rho);
        if (tail <= opt.stop_rel * std::abs(acc.sum) || term == 0.0) break;
      }
    }
    if (acc.n >= opt.term_cap) series_cap_hit("2F1 series", acc, std::abs(term));
  }
  SeriesEval out{acc.sum, acc.n, tail + acc.rounding(), false};
  finish(out, opt);
  return out;
}

/// 1/Gamma(x) with the sign kept; zero at the poles.
inline double rgamma_signed(double x) {
  if (is_nonpositive_integer(x)) return 0.0;
  return 1.0 / boost::math::tgamma(x);
}

/// Zero-balanced case c = a + b near z = 1 (logarithmic connection series).
inline SeriesEval f21_log0(double a, double b, double zc, const SeriesOptions& opt) {
  const double pref = boost::math::tgamma(a + b) * rgamma_signed(a) * rgamma_signed(b);
  const double lzc = std::log(zc);
  double psi_n1 = -euler_gamma;  // psi(n+1)
  double psi_a = boost::math::digamma(a);
  double psi_b = boost::math::digamma(b);
  double coef = 1.0;
  Accumulator acc;
  const double n_min = std::max(std::abs(a), std::abs(b)) + 2.0;
  double tail = 0.0;
  for (std::size_t n = 0;; ++n) {
    const double nd = static_cast<double>(n);
    acc.add(coef * (2.0 * psi_n1 - psi_a - psi_b - lzc));
    const double ratio = (a + nd) * (b + nd) / ((nd + 1.0) * (nd + 1.0)) * zc;
    psi_n1 += 1.0 / (nd + 1.0);
    psi_a += 1.0 / (a + nd);
    psi_b += 1.0 / (b + nd);
    coef *= ratio;
    if (coef == 0.0) break;
    if (nd >= n_min) {
      const double rho = std::max(std::abs(ratio), zc);
      if (rho < 1.0) {
        // the bracket grows like log n; a factor 2 covers it
        tail = 2.0 * std::abs(coef * (2.0 * psi_n1 - psi_a - psi_b - lzc)) / (1.0 - rho);
        if (tail <= opt.stop_rel * std::abs(acc.sum)) break;
      }
    }
    if (acc.n >= opt.term_cap) series_cap_hit("2F1 log series", acc, tail);
  }
  SeriesEval out{pref * acc.sum, acc.n, std::abs(pref) * (tail + acc.rounding()), false};
  finish(out, opt);
  return out;
}

/// c = a + b + m with m a positive integer, near z = 1.
inline SeriesEval f21_logm(double a, double b, int m, double zc, const SeriesOptions& opt) {
  const double c = a + b + m;
  const double gc = boost::math::tgamma(c);

  // finite part: Gamma(m) Gamma(c) / (Gamma(a+m) Gamma(b+m)) sum_{n<m} (a)_n (b)_n / (n! (1-m)_n) zc^n
  double finite = 0.0;
  {
    double t = 1.0;
    for (int n = 0; n < m; ++n) {
      finite += t;
      t *= (a + n) * (b + n) / ((n + 1.0) * (1.0 - m + n)) * zc;
    }
    finite *= boost::math::tgamma(static_cast<double>(m)) * gc * rgamma_signed(a + m) * rgamma_signed(b + m);
  }

  // log part: -(-zc)^m Gamma(c)/(Gamma(a)Gamma(b)) sum (a+m)_n (b+m)_n / (n! (n+m)!) zc^n
  //           * [ln zc - psi(n+1) - psi(n+m+1) + psi(a+n+m) + psi(b+n+m)]
  const double sign = (m % 2 == 0) ? 1.0 : -1.0;
  const double pref = -sign * std::pow(zc, m) * gc * rgamma_signed(a) * rgamma_signed(b);
  const double lzc = std::log(zc);
  double psi_n1 = -euler_gamma;
  double psi_nm1 = boost::math::digamma(m + 1.0);
  double psi_a = boost::math::digamma(a + m);
  double psi_b = boost::math::digamma(b + m);
  double coef = std::exp(-boost::math::lgamma(m + 1.0));  // 1/m!
  Accumulator acc;
  const double n_min = std::max(std::abs(a), std::abs(b)) + 2.0;
  double tail = 0.0;
  if (pref != 0.0) {
    for (std::size_t n = 0;; ++n) {
      const double nd = static_cast<double>(n);
      acc.add(coef * (lzc - psi_n1 - psi_nm1 + psi_a + psi_b));
      const double ratio = (a + m + nd) * (b + m + nd) / ((nd + 1.0) * (nd + m + 1.0)) * zc;
      psi_n1 += 1.0 / (nd + 1.0);
      psi_nm1 += 1.0 / (nd + m + 1.0);
      psi_a += 1.0 / (a + m + nd);
      psi_b += 1.0 / (b + m + nd);
      coef *= ratio;
      if (coef == 0.0) break;
      if (nd >= n_min) {
        const double rho = std::max(std::abs(ratio), zc);
        if (rho < 1.0) {
          tail = 2.0 * std::abs(coef * (lzc - psi_n1 - psi_nm1 + psi_a + psi_b)) / (1.0 - rho);
          if (tail <= opt.stop_rel * std::abs(acc.sum)) break;
        }
      }
      if (acc.n >= opt.term_cap) series_cap_hit("2F1 log series", acc, tail);
    }
  }
  const double log_part = pref * acc.sum;
  SeriesEval out;
  out.value = finite + log_part;
  out.terms_used = acc.n + static_cast<std::size_t>(m);
  out.est_error = std::abs(pref) * (tail + acc.rounding()) + 4.0 * eps * (std::abs(finite) + std::abs(log_part));
  finish(out, opt);
  return out;
}

/// Non-integer c - a - b near z = 1: two-term connection formula in 1 - z.
inline SeriesEval f21_connection(double a, double b, double c, double zc, const SeriesOptions& opt) {
  const double m = c - a - b;
  const double gc = boost::math::tgamma(c);
  const double A1 = gc * boost::math::tgamma(m) * rgamma_signed(c - a) * rgamma_signed(c - b);
  const double A2 = gc * boost::math::tgamma(-m) * rgamma_signed(a) * rgamma_signed(b);
  SeriesEval out{0.0, 0, 0.0, false};
  double mag = 0.0;
  if (A1 != 0.0) {
    const SeriesEval s1 = f21_direct(a, b, 1.0 - m, zc, opt);
    out.value += A1 * s1.value;
    out.terms_used += s1.terms_used;
    out.est_error += std::abs(A1) * s1.est_error;
    mag += std::abs(A1 * s1.value);
  }
  if (A2 != 0.0) {
    const SeriesEval s2 = f21_direct(c - a, c - b, 1.0 + m, zc, opt);
    const double w = A2 * std::pow(zc, m);
    out.value += w * s2.value;
    out.terms_used += s2.terms_used;
    out.est_error += std::abs(w) * s2.est_error;
    mag += std::abs(w * s2.value);
  }
  // the two parts cancel when m is close to an integer
  out.est_error += 8.0 * eps * mag;
  finish(out, opt);
  return out;
}

/// Routing on z in (-inf, 1) with the complement zc = 1 - z supplied exactly.
inline SeriesEval f21(double a, double b, double c, double z, double zc, const SeriesOptions& opt) {
  if (z == 0.0) return SeriesEval{1.0, 1, 0.0, true};
  const bool polynomial = is_nonpositive_integer(a) || is_nonpositive_integer(b);
  if (polynomial) return f21_direct(a, b, c, z, opt);
  if (z < -0.5) {
    // Pfaff: (1-z)^{-a} F(a, c-b; c; z/(z-1))
    const double w = z / (z - 1.0);
    const double wc = 1.0 / zc;
    SeriesEval s = f21(a, c - b, c, w, wc, opt);
    const double scale = std::pow(zc, -a);
    s.value *= scale;
    s.est_error *= std::abs(scale);
    finish(s, opt);
    return s;
  }
  if (z <= 0.9) return f21_direct(a, b, c, z, opt);

  const double m = c - a - b;
  const double m_int = std::nearbyint(m);
  if (zc == 0.0) {
    if (m > 0.0) {
      const double v = boost::math::tgamma(c) * boost::math::tgamma(m) * rgamma_signed(c - a) * rgamma_signed(c - b);
      return SeriesEval{v, 0, 4.0 * eps * std::abs(v), true};
    }
    fail(errc::boundary, "2F1 diverges at z = 1 when c <= a + b");
  }
  if (std::abs(m - m_int) <= 1e-12 * std::max(1.0, std::abs(m))) {
    if (m_int < 0.0) {
      // Euler: (1-z)^{c-a-b} F(c-a, c-b; c; z)
      SeriesEval s = f21(c - a, c - b, c, z, zc, opt);
      const double scale = std::pow(zc, m);
      s.value *= scale;
      s.est_error *= std::abs(scale);
      finish(s, opt);
      return s;
    }
    if (m_int == 0.0) return f21_log0(a, b, zc, opt);
    return f21_logm(a, b, static_cast<int>(m_int), zc, opt);
  }
  if (std::abs(m - m_int) > 1e-4) return f21_connection(a, b, c, zc, opt);
  // nearly integer c - a - b: both connection routes lose too much; sum directly
  return f21_direct(a, b, c, z, opt);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Evaluation

/// F(a,b;c;z) for z < 1, with the complement zc = 1 - z supplied by the caller.
/// Near z = 1 the complement carries the precision, so callers that know it
/// exactly (r'^2, e^{-x}, ...) should pass it.
inline SeriesEval gauss_2f1(const HypTriple& t, double z, double zc) {
  t.validate();
  // z may round to 1 while the supplied complement is still positive
  if (!(z < 1.0 || (z == 1.0 && zc > 0.0))) fail(errc::domain, "gauss_2f1 requires z < 1");
  const SeriesOptions opt = default_hypergeometric_options();
  SeriesEval s = detail::f21(t.a, t.b, t.c, z, zc, opt);
  if (t.regime() == HypTriple::Regime::c_below && !t.is_polynomial() && z > -0.5 && z <= 0.9) {
    // cross-check against (1-z)^{c-a-b} F(c-a, c-b; c; z)
    const SeriesEval e = detail::f21_direct(t.c - t.a, t.c - t.b, t.c, z, opt);
    const double alt = std::pow(zc, t.excess()) * e.value;
    s.est_error = std::max(s.est_error, std::abs(alt - s.value));
    s.terms_used = std::max(s.terms_used, e.terms_used);
    detail::finish(s, opt);
  }
  return s;
}

/// F(a,b;c;z) for |z| < 1.
inline SeriesEval gauss_2f1(const HypTriple& t, double z) {
  if (!(std::abs(z) < 1.0)) fail(errc::domain, "gauss_2f1 requires |z| < 1, got " + std::to_string(z));
  return gauss_2f1(t, z, 1.0 - z);
}

/// Value of F(a,b;c;z), throwing if the evaluation did not converge.
inline double f21_value(const HypTriple& t, double z, double zc) {
  const SeriesEval s = gauss_2f1(t, z, zc);
  if (!s.converged) throw convergence_error("2F1 evaluation did not reach the accepted tolerance", s);
  return s.value;
}

inline double f21_value(double a, double b, double c, double z, double zc) {
  return f21_value(HypTriple(a, b, c), z, zc);
}

inline double f21_value(double a, double b, double c, double z) { return f21_value(HypTriple(a, b, c), z, 1.0 - z); }

/// F(a,b;c;1) = Gamma(c) Gamma(c-a-b) / (Gamma(c-a) Gamma(c-b)) for c > a + b.
inline double gauss_value_at_1(const HypTriple& t) {
  t.validate();
  if (!(t.c > t.a + t.b)) fail(errc::regime, "F(a,b;c;1) is finite only for c > a + b");
  if (detail::is_nonpositive_integer(t.c - t.a) || detail::is_nonpositive_integer(t.c - t.b)) return 0.0;
  int s1 = 1, s2 = 1, s3 = 1, s4 = 1;
  const double lg = boost::math::lgamma(t.c, &s1) + boost::math::lgamma(t.excess(), &s2) -
                    boost::math::lgamma(t.c - t.a, &s3) - boost::math::lgamma(t.c - t.b, &s4);
  return s1 * s2 * s3 * s4 * std::exp(lg);
}

/// R(a,b) = -2 gamma - psi(a) - psi(b).
inline double zero_balanced_R(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) fail(errc::domain, "zero_balanced_R requires a, b > 0");
  return -2.0 * euler_gamma - boost::math::digamma(a) - boost::math::digamma(b);
}

struct NearOneEstimate {
  double value = 0.0;
  /// (1-z)|log(1-z)|, the size of the neglected term (constant not claimed).
  double error_scale = 0.0;
};

/// Leading behaviour B(a,b) F(a,b;a+b;z) + log(1-z) ~ R(a,b) as z -> 1.
inline NearOneEstimate zero_balanced_near_one(double a, double b, double z) {
  if (!(a > 0.0) || !(b > 0.0)) fail(errc::domain, "zero_balanced_near_one requires a, b > 0");
  if (!(z > 0.9 && z < 1.0)) fail(errc::regime, "zero_balanced_near_one covers z in (0.9, 1); use gauss_2f1");
  const double zc = 1.0 - z;
  const double lzc = std::log(zc);
  return {(zero_balanced_R(a, b) - lzc) / beta(a, b), zc * std::abs(lzc)};
}

/// d/dz F and d^2/dz^2 F from (ab/c) F(a+1,b+1;c+1;z) applied once or twice.
inline double gauss_2f1_derivative(const HypTriple& t, double z, double zc, int order) {
  t.validate();
  if (order == 1) return t.a * t.b / t.c * f21_value(t.a + 1, t.b + 1, t.c + 1, z, zc);
  if (order == 2)
    return t.a * t.b / t.c * (t.a + 1) * (t.b + 1) / (t.c + 1) * f21_value(t.a + 2, t.b + 2, t.c + 2, z, zc);
  fail(errc::parameter, "derivative order must be 1 or 2");
}

inline double gauss_2f1_derivative(const HypTriple& t, double z, int order) {
  if (!(std::abs(z) < 1.0)) fail(errc::domain, "gauss_2f1_derivative requires |z| < 1");
  return gauss_2f1_derivative(t, z, 1.0 - z, order);
}

// ---------------------------------------------------------------------------
// Contiguous relations

/// u = F(a-1,b;c;z), v = F(a,b;c;z) and their reflections at 1 - z.
struct ContiguousQuad {
  double u = 0.0, v = 0.0, u1 = 0.0, v1 = 0.0;
};

inline ContiguousQuad contiguous_quad(const HypTriple& t, double z) {
  const double zc = 1.0 - z;
  return {f21_value(t.a - 1, t.b, t.c, z, zc), f21_value(t.a, t.b, t.c, z, zc),
          f21_value(t.a - 1, t.b, t.c, zc, z), f21_value(t.a, t.b, t.c, zc, z)};
}

/// Signed residual of an identity together with the magnitude it is measured against.
struct Residual {
  double value = 0.0;
  double scale = 1.0;
  double relative() const { return std::abs(value) / std::max(1.0, scale); }
};

struct ContiguousResiduals {
  /// z u' = (a-1)(v-u); z(1-z) v' = (c-a)u + (a-c+bz)v;
  /// (ab/c) z(1-z) F(a+1,b+1;c+1;z) = (c-a)u + (a-c+bz)v;
  /// z(1-z) (uv1 + u1v - vv1)' = (1-a-b)[(1-z)uv1 - z u1 v - (1-2z)vv1];
  /// z(1-z) F' = (c-b)F(a,b-1;c;z) + (b-c+az)F.
  std::array<Residual, 5> r;
};

inline ContiguousResiduals contiguous_residuals(const HypTriple& t, double z) {
  if (!(t.a > 0.0 && t.b > 0.0 && t.c > 0.0)) fail(errc::parameter, "contiguous relations need a, b, c > 0");
  if (!(z > 0.0 && z < 1.0)) fail(errc::domain, "contiguous relations need z in (0,1)");
  const double a = t.a, b = t.b, c = t.c;
  const double zc = 1.0 - z;
  const ContiguousQuad q = contiguous_quad(t, z);
  // analytic derivatives of u, v at z and at 1-z
  const HypTriple tu(a - 1, b, c);
  const double du = gauss_2f1_derivative(tu, z, zc, 1);
  const double dv = gauss_2f1_derivative(t, z, zc, 1);
  const double du_c = gauss_2f1_derivative(tu, zc, z, 1);
  const double dv_c = gauss_2f1_derivative(t, zc, z, 1);
  const double f_up = f21_value(a + 1, b + 1, c + 1, z, zc);
  const double right = (c - a) * q.u + (a - c + b * z) * q.v;
  const double right_scale = std::abs((c - a) * q.u) + std::abs((a - c + b * z) * q.v);

  ContiguousResiduals out;
  {
    const double lhs = z * du;
    const double rhs = (a - 1) * (q.v - q.u);
    out.r[0] = {lhs - rhs, std::abs(lhs) + std::abs(a - 1) * (std::abs(q.v) + std::abs(q.u))};
  }
  {
    const double lhs = z * zc * dv;
    out.r[1] = {lhs - right, std::abs(lhs) + right_scale};
  }
  {
    const double lhs = a * b / c * z * zc * f_up;
    out.r[2] = {lhs - right, std::abs(lhs) + right_scale};
  }
  {
    // d/dz of u1 = u(1-z) is -u'(1-z)
    const double d_prod = du * q.v1 - q.u * dv_c - du_c * q.v + q.u1 * dv - dv * q.v1 + q.v * dv_c;
    const double lhs = z * zc * d_prod;
    const double terms[3] = {zc * q.u * q.v1, -z * q.u1 * q.v, -(1 - 2 * z) * q.v * q.v1};
    const double rhs = (1 - a - b) * (terms[0] + terms[1] + terms[2]);
    const double sc = std::abs(z * zc) * (std::abs(du * q.v1) + std::abs(q.u * dv_c) + std::abs(du_c * q.v) +
                                          std::abs(q.u1 * dv) + std::abs(dv * q.v1) + std::abs(q.v * dv_c)) +
                      std::abs(1 - a - b) * (std::abs(terms[0]) + std::abs(terms[1]) + std::abs(terms[2]));
    out.r[3] = {lhs - rhs, sc};
  }
  {
    const double lhs = z * zc * dv;
    const double f_bm = f21_value(a, b - 1, c, z, zc);
    const double rhs = (c - b) * f_bm + (b - c + a * z) * q.v;
    out.r[4] = {lhs - rhs, std::abs(lhs) + std::abs((c - b) * f_bm) + std::abs((b - c + a * z) * q.v)};
  }
  return out;
}

struct IdentitySides {
  double lhs = 0.0;
  double rhs = 0.0;
  double residual() const { return lhs - rhs; }
};

/// uv1 + u1v - vv1 = Gamma(c)^2 / (Gamma(c+a-1) Gamma(c-a+1)) for b = 1 - a < c.
inline IdentitySides corollary_313(double a, double c, double z) {
  if (!(a > 0.0 && a < 1.0)) fail(errc::parameter, "product constant needs a in (0,1)");
  if (!(c > 1.0 - a)) fail(errc::parameter, "product constant needs c > 1 - a");
  if (!(z > 0.0 && z < 1.0)) fail(errc::domain, "product constant needs z in (0,1)");
  const ContiguousQuad q = contiguous_quad(HypTriple(a, 1.0 - a, c), z);
  const double rhs = std::exp(2.0 * boost::math::lgamma(c) - boost::math::lgamma(c + a - 1.0) -
                              boost::math::lgamma(c - a + 1.0));
  return {q.u * q.v1 + q.u1 * q.v - q.v * q.v1, rhs};
}

// ---------------------------------------------------------------------------
// Monotone / convex compositions

/// k(x) = F(a,b;a+b;1-e^{-x}).
inline double theorem31_k(double a, double b, double x) {
  if (!(a > 0.0 && b > 0.0)) fail(errc::domain, "k(x) needs a, b > 0");
  if (!(x > 0.0)) fail(errc::domain, "k(x) needs x > 0");
  const double zc = std::exp(-x);
  return f21_value(a, b, a + b, -std::expm1(-x), zc);
}

/// k'(x), with range (ab/(a+b), Gamma(a+b)/(Gamma(a)Gamma(b))).
inline double theorem31_k_slope(double a, double b, double x) {
  if (!(a > 0.0 && b > 0.0)) fail(errc::domain, "k(x) needs a, b > 0");
  if (!(x > 0.0)) fail(errc::domain, "k(x) needs x > 0");
  const double zc = std::exp(-x);
  return gauss_2f1_derivative(HypTriple(a, b, a + b), -std::expm1(-x), zc, 1) * zc;
}

/// l(x) = F(a,b;c;1-(1+x)^{-1/d}), d = a + b - c > 0.
inline double theorem32_ell(double a, double b, double c, double x) {
  const double d = a + b - c;
  if (!(a > 0.0 && b > 0.0 && c > 0.0)) fail(errc::domain, "l(x) needs a, b, c > 0");
  if (!(d > 0.0)) fail(errc::parameter, "l(x) needs a + b > c");
  if (!(x > 0.0)) fail(errc::domain, "l(x) needs x > 0");
  const double lz = -std::log1p(x) / d;
  return f21_value(a, b, c, -std::expm1(lz), std::exp(lz));
}

/// l'(x), with range (ab/(cd), Gamma(c)Gamma(d)/(Gamma(a)Gamma(b))).
inline double theorem32_ell_slope(double a, double b, double c, double x) {
  const double d = a + b - c;
  if (!(a > 0.0 && b > 0.0 && c > 0.0)) fail(errc::domain, "l(x) needs a, b, c > 0");
  if (!(d > 0.0)) fail(errc::parameter, "l(x) needs a + b > c");
  if (!(x > 0.0)) fail(errc::domain, "l(x) needs x > 0");
  const double lz = -std::log1p(x) / d;
  const double zc = std::exp(lz);
  return gauss_2f1_derivative(HypTriple(a, b, c), -std::expm1(lz), zc, 1) * zc / (d * (1.0 + x));
}

// ---------------------------------------------------------------------------
// Differential equations

enum class OdeKind {
  hypergeometric,  // z(1-z)w'' + [c-(a+b+1)z]w' - ab w = 0
  quadratic,       // z(1-z^2)w'' + [2c-1-(2a+2b+1)z^2]w' - 4abz w = 0
  radical,         // Z^3(1-Z)z w'' - {Z(1-Z) + [c-(a+b+1)Z]Z z^2}w' - ab z^3 w = 0, Z = sqrt(1-z^2)
};

/// Residual of the chosen ODE for w = F(a,b;c;s(z)); `reflected` picks the
/// second solution F(a,b;c;1-s) (hypergeometric and quadratic only), which
/// requires 2c = a + b + 1.
inline Residual ode_residual(OdeKind kind, const HypTriple& t, double z, bool reflected = false) {
  t.validate();
  const double a = t.a, b = t.b, c = t.c;
  if (reflected) {
    if (kind == OdeKind::radical) fail(errc::parameter, "the radical equation has no reflected solution here");
    if (std::abs(2 * c - a - b - 1) > 1e-12 * std::max(1.0, std::abs(c)))
      fail(errc::parameter, "reflected solution requires 2c = a + b + 1");
  }
  auto derivs = [&](double s, double sc) {
    return std::array<double, 3>{f21_value(t, s, sc), gauss_2f1_derivative(t, s, sc, 1),
                                 gauss_2f1_derivative(t, s, sc, 2)};
  };
  switch (kind) {
    case OdeKind::hypergeometric: {
      if (!(z > 0.0 && z < 1.0)) fail(errc::domain, "ODE residual needs z in (0,1)");
      double w, w1, w2;
      if (!reflected) {
        const auto f = derivs(z, 1.0 - z);
        w = f[0], w1 = f[1], w2 = f[2];
      } else {
        const auto f = derivs(1.0 - z, z);
        w = f[0], w1 = -f[1], w2 = f[2];
      }
      const double t1 = z * (1 - z) * w2, t2 = (c - (a + b + 1) * z) * w1, t3 = -a * b * w;
      return {t1 + t2 + t3, std::abs(t1) + std::abs(t2) + std::abs(t3)};
    }
    case OdeKind::quadratic: {
      if (!(z > 0.0 && z < 1.0)) fail(errc::domain, "ODE residual needs z in (0,1)");
      const double z2 = z * z;
      const double z2c = (1.0 - z) * (1.0 + z);
      double w, w1, w2;
      if (!reflected) {
        const auto f = derivs(z2, z2c);
        w = f[0], w1 = 2 * z * f[1], w2 = 2 * f[1] + 4 * z2 * f[2];
      } else {
        const auto f = derivs(z2c, z2);
        w = f[0], w1 = -2 * z * f[1], w2 = -2 * f[1] + 4 * z2 * f[2];
      }
      const double t1 = z * z2c * w2, t2 = (2 * c - 1 - (2 * a + 2 * b + 1) * z2) * w1, t3 = -4 * a * b * z * w;
      return {t1 + t2 + t3, std::abs(t1) + std::abs(t2) + std::abs(t3)};
    }
    case OdeKind::radical: {
      if (!(z > 0.0 && z < 1.0)) fail(errc::domain, "ODE residual needs z in (0,1)");
      const double Z = std::sqrt((1.0 - z) * (1.0 + z));
      const double Zc = z * z / (1.0 + Z);
      const auto f = derivs(Z, Zc);
      const double w = f[0];
      const double w1 = -z / Z * f[1];
      const double w2 = z * z / (Z * Z) * f[2] - f[1] / (Z * Z * Z);
      const double z3 = z * z * z;
      const double t1 = Z * Z * Z * Zc * z * w2;
      const double t2 = -(Z * Zc + (c - (a + b + 1) * Z) * Z * z * z) * w1;
      const double t3 = -a * b * z3 * w;
      return {t1 + t2 + t3, std::abs(t1) + std::abs(t2) + std::abs(t3)};
    }
  }
  fail(errc::parameter, "unknown ODE kind");
}

/// (c-a)(uv1 + u1v) + (a-1)vv1 scaled by z^{c-1}(1-z)^{c-1}, against Gamma(c)^2/(Gamma(a)Gamma(b)).
inline IdentitySides wronskian_identity(const HypTriple& t, double z) {
  t.validate();
  if (!(t.a > 0.0 && t.b > 0.0)) fail(errc::parameter, "Wronskian constant needs a, b > 0");
  if (!(t.c >= 1.0)) fail(errc::parameter, "Wronskian constant needs c >= 1");
  if (std::abs(2 * t.c - t.a - t.b - 1) > 1e-12 * std::max(1.0, t.c))
    fail(errc::parameter, "Wronskian constant needs 2c = a + b + 1");
  if (!(z > 0.0 && z < 1.0)) fail(errc::domain, "Wronskian constant needs z in (0,1)");
  const ContiguousQuad q = contiguous_quad(t, z);
  const double raw = (t.c - t.a) * (q.u * q.v1 + q.u1 * q.v) + (t.a - 1) * q.v * q.v1;
  const double lhs = raw * std::pow(z * (1.0 - z), t.c - 1.0);
  const double rhs = std::exp(2.0 * boost::math::lgamma(t.c) - boost::math::lgamma(t.a) - boost::math::lgamma(t.b));
  return {lhs, rhs};
}

/// F1F2 + F3F4 - F2F3 = Gamma(a+b+1)Gamma(b+c+1) / (Gamma(a+b+c+3/2) Gamma(b+1/2)).
inline IdentitySides elliott_identity(double a, double b, double c, double x) {
  if (!(a >= 0.0 && b >= 0.0 && c >= 0.0)) fail(errc::parameter, "Elliott's identity needs a, b, c >= 0");
  if (!(x > 0.0 && x < 1.0)) fail(errc::domain, "Elliott's identity needs x in (0,1)");
  const double xc = 1.0 - x;
  const double f1 = f21_value(0.5 + a, -0.5 - c, 1 + a + b, x, xc);
  const double f2 = f21_value(0.5 - a, 0.5 + c, 1 + b + c, xc, x);
  const double f3 = f21_value(0.5 + a, 0.5 - c, 1 + a + b, x, xc);
  const double f4 = f21_value(-0.5 - a, 0.5 + c, 1 + b + c, xc, x);
  const double rhs = std::exp(boost::math::lgamma(a + b + 1) + boost::math::lgamma(b + c + 1) -
                              boost::math::lgamma(a + b + c + 1.5) - boost::math::lgamma(b + 0.5));
  return {f1 * f2 + f3 * f4 - f2 * f3, rhs};
}

/// One of Kummer's connection products:
/// F(a,b;a+b-c+1;1-x)F(a+1,b+1;c+1;x) + c/(a+b-c+1) F(a,b;c;x)F(a+1,b+1;a+b-c+2;1-x)
///   = D x^{-c}(1-x)^{c-a-b-1},  D = Gamma(a+b-c+1)Gamma(c+1)/(Gamma(a+1)Gamma(b+1)).
inline IdentitySides kummer_form30(double a, double b, double c, double x) {
  const double e = a + b - c + 1;
  for (double p : {c, c + 1, e, e + 1})
    if (detail::is_nonpositive_integer(p)) fail(errc::parameter, "Kummer product needs admissible lower parameters");
  if (!(x > 0.0 && x < 1.0)) fail(errc::domain, "Kummer product needs x in (0,1)");
  const double xc = 1.0 - x;
  const double lhs = f21_value(a, b, e, xc, x) * f21_value(a + 1, b + 1, c + 1, x, xc) +
                     c / e * f21_value(a, b, c, x, xc) * f21_value(a + 1, b + 1, e + 1, xc, x);
  const double D = boost::math::tgamma(e) * boost::math::tgamma(c + 1) * detail::rgamma_signed(a + 1) *
                   detail::rgamma_signed(b + 1);
  return {lhs, D * std::pow(x, -c) * std::pow(xc, c - a - b - 1)};
}

/// 3F2(-n, a, b; 1+a+b, 1+e-n; 1), a finite sum of n+1 terms.
inline double pfq_terminating_3f2(int n, double a, double b, double e) {
  if (n < 1) fail(errc::domain, "3F2 needs n >= 1");
  if (!(a > 0.0 && b > 0.0)) fail(errc::domain, "3F2 needs a, b > 0");
  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k < n; ++k) {
    const double lower = (1 + a + b + k) * (1 + e - n + k);
    if (lower == 0.0) fail(errc::parameter, "3F2 lower parameter 1+e-n hits a nonpositive integer");
    term *= (-n + k) * (a + k) * (b + k) / (lower * (k + 1.0));
    sum += term;
  }
  return sum;
}

}  // namespace specfun
