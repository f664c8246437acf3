#pragma once

// Two-variable means: arithmetic-geometric, power, logarithmic and their
// t-modifications.

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "specfun/errors.hpp"

namespace specfun {

struct MeanPair {
  double a = 1.0;
  double b = 1.0;

  MeanPair() = default;
  MeanPair(double a_, double b_) : a(a_), b(b_) {
    if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b))
      fail(errc::domain, "means need two positive finite arguments");
  }
};

/// Iterates of the AGM, starting from a_0 = max, b_0 = min so that the
/// arithmetic sequence decreases and the geometric one increases.
struct AgmTrace {
  std::vector<double> a_n;
  std::vector<double> b_n;
  int iterations = 0;
};

struct AgmResult {
  double value = 0.0;
  AgmTrace trace;
};

namespace detail {

inline constexpr int agm_max_iterations = 64;

inline bool agm_done(double a, double b) {
  return a - b <= 2.0 * std::numeric_limits<double>::epsilon() * a;
}

}  // namespace detail

inline AgmResult agm(const MeanPair& p) {
  AgmResult out;
  double a = std::max(p.a, p.b);
  double b = std::min(p.a, p.b);
  out.trace.a_n.push_back(a);
  out.trace.b_n.push_back(b);
  while (!detail::agm_done(a, b)) {
    if (out.trace.iterations >= detail::agm_max_iterations)
      fail(errc::convergence, "AGM did not settle within 64 iterations");
    const double an = 0.5 * (a + b);
    const double bn = std::sqrt(a * b);
    a = an;
    b = std::min(bn, an);
    out.trace.a_n.push_back(a);
    out.trace.b_n.push_back(b);
    ++out.trace.iterations;
  }
  out.value = 0.5 * (a + b);
  return out;
}

/// AGM(a, b) without keeping the trace.
inline double agm_value(double a, double b) {
  const MeanPair p(a, b);
  double hi = std::max(p.a, p.b);
  double lo = std::min(p.a, p.b);
  for (int i = 0; !detail::agm_done(hi, lo); ++i) {
    if (i >= detail::agm_max_iterations) fail(errc::convergence, "AGM did not settle within 64 iterations");
    const double an = 0.5 * (hi + lo);
    lo = std::min(std::sqrt(hi * lo), an);
    hi = an;
  }
  return 0.5 * (hi + lo);
}

inline double geometric_mean(const MeanPair& p) { return std::sqrt(p.a) * std::sqrt(p.b); }

/// A_t(a,b) = ((a^t + b^t)/2)^{1/t}. t = 0 is only accepted with
/// allow_limit, and then gives the geometric mean.
inline double power_mean(double t, const MeanPair& p, bool allow_limit = false) {
  if (!std::isfinite(t)) fail(errc::parameter, "power mean exponent must be finite");
  if (t == 0.0) {
    if (!allow_limit) fail(errc::parameter, "power mean with t = 0 needs the limit flag");
    return geometric_mean(p);
  }
  if (p.a == p.b) return p.a;
  // factor out the dominant term so a^t never overflows
  const double hi = std::max(p.a, p.b);
  const double lo = std::min(p.a, p.b);
  const double base = t > 0.0 ? hi : lo;
  const double other = t > 0.0 ? lo : hi;
  const double ratio = std::pow(other / base, t);
  return base * std::pow(0.5 * (1.0 + ratio), 1.0 / t);
}

/// L(a,b) = (a - b)/(log a - log b), with L(a,a) = a.
inline double log_mean(const MeanPair& p) {
  if (p.a == p.b) return p.a;
  // expand around the smaller argument so that x >= 0 never rounds to -1
  const double lo = std::min(p.a, p.b), hi = std::max(p.a, p.b);
  const double x = (hi - lo) / lo;
  if (!std::isfinite(x)) return hi / (std::log(hi) - std::log(lo));
  return (hi - lo) / std::log1p(x);
}

/// M_t(a,b) = M(a^t, b^t)^{1/t}; t = 0 with allow_limit gives sqrt(ab).
template <class Mean>
double t_modification(Mean&& mean, double t, const MeanPair& p, bool allow_limit = false) {
  if (!std::isfinite(t)) fail(errc::parameter, "t-modification exponent must be finite");
  if (t == 0.0) {
    if (!allow_limit) fail(errc::parameter, "t-modification with t = 0 needs the limit flag");
    return geometric_mean(p);
  }
  if (p.a == p.b) return p.a;
  return std::pow(mean(MeanPair(std::pow(p.a, t), std::pow(p.b, t))), 1.0 / t);
}

/// L_t(1, x).
inline double log_mean_t(double t, double x) {
  return t_modification([](const MeanPair& q) { return log_mean(q); }, t, MeanPair(1.0, x));
}

/// (L_{3/2}(1,x) - AGM(1,x), AGM(1,x) - L(1,x)); zeros at x = 1.
inline std::pair<double, double> borwein_chain_margins(double x) {
  if (!(x > 0.0)) fail(errc::domain, "Borwein chain needs x > 0");
  if (x == 1.0) return {0.0, 0.0};
  const double ag = agm_value(1.0, x);
  return {log_mean_t(1.5, x) - ag, ag - log_mean(MeanPair(1.0, x))};
}

/// True when t -> L_t(1,x) never drops by more than 1e-12 (relative) along t_grid.
inline bool lt_monotone_check(double x, std::span<const double> t_grid) {
  if (!(x > 0.0)) fail(errc::domain, "L_t monotonicity needs x > 0");
  std::vector<double> ts(t_grid.begin(), t_grid.end());
  std::sort(ts.begin(), ts.end());
  double prev = -std::numeric_limits<double>::infinity();
  for (double t : ts) {
    if (!(t > 0.0)) fail(errc::domain, "L_t monotonicity is stated for t > 0");
    const double v = log_mean_t(t, x);
    if (v < prev - 1e-12 * std::max(1.0, std::abs(prev))) return false;
    prev = std::max(prev, v);
  }
  return true;
}

}  // namespace specfun
