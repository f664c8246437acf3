#pragma once

// Numeric surrogates for shape claims: monotonicity and convexity from
// finite differences, the monotone form of l'Hopital's rule, and the
// coefficient-ratio test for quotients of power series.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "specfun/errors.hpp"
#include "specfun/verify/grid.hpp"
#include "specfun/verify/report.hpp"

namespace specfun::verify {

using RealFn = std::function<double(double)>;

enum class Direction { increasing, decreasing };
enum class Curvature { convex, concave };

inline constexpr double unit_roundoff = std::numeric_limits<double>::epsilon();

/// Relative noise assumed for one function value when deciding whether a
/// difference is a genuine sign change. Margins are reported in units of
/// this noise, so the default check tolerance is 1 (one noise unit).
struct NoiseModel {
  double rel = 8.0 * unit_roundoff;
  double abs = 0.0;
};

namespace detail {

struct Point {
  double x;
  double fx;
};

/// Evaluates f over the grid, recording refusals as point failures.
inline std::vector<Point> tabulate(const RealFn& f, std::span<const double> xs, std::vector<PointFailure>& failures,
                                   const std::string& where) {
  std::vector<Point> out;
  out.reserve(xs.size());
  for (double x : xs) {
    try {
      const double v = f(x);
      if (std::isnan(v)) {
        failures.push_back({x, where, "evaluation returned NaN"});
        continue;
      }
      out.push_back({x, v});
    } catch (const specfun::error& e) {
      failures.push_back({x, where, e.what()});
    }
  }
  return out;
}

/// Signed difference measured in noise units; 0/0 counts as 0.
inline double noise_units(double diff, double noise) {
  if (diff == 0.0) return 0.0;
  if (noise == 0.0) return diff > 0.0 ? std::numeric_limits<double>::infinity()
                                      : -std::numeric_limits<double>::infinity();
  return diff / noise;
}

inline void monotone_samples(const std::vector<Point>& pts, Direction dir, const NoiseModel& noise,
                             const std::string& where, std::vector<Sample>& out) {
  const double s = dir == Direction::increasing ? 1.0 : -1.0;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    const double d = s * (pts[i].fx - pts[i - 1].fx);
    const double nz = noise.rel * (std::abs(pts[i].fx) + std::abs(pts[i - 1].fx)) + 2.0 * noise.abs;
    out.push_back({pts[i].x, noise_units(d, nz), pts[i].fx, pts[i - 1].fx, where});
  }
}

inline void convex_samples(const std::vector<Point>& pts, Curvature curv, const NoiseModel& noise,
                           const std::string& where, std::vector<Sample>& out) {
  const double s = curv == Curvature::convex ? 1.0 : -1.0;
  for (std::size_t i = 2; i < pts.size(); ++i) {
    const Point &p1 = pts[i - 2], &p2 = pts[i - 1], &p3 = pts[i];
    const double h1 = p2.x - p1.x, h2 = p3.x - p2.x;
    // sign of the second divided difference, scaled by h1 h2 (h1 + h2)
    const double left = (p2.fx - p1.fx) * h2;
    const double right = (p3.fx - p2.fx) * h1;
    const double nz = noise.rel * (std::abs(p1.fx) * h2 + std::abs(p2.fx) * (h1 + h2) + std::abs(p3.fx) * h1) +
                      noise.abs * 2.0 * (h1 + h2);
    out.push_back({p2.x, noise_units(s * (right - left), nz), right, left, where});
  }
}

}  // namespace detail

/// Flags any step against `dir` larger than the noise estimate.
inline SuiteReport monotone_check(const RealFn& f, const GridSpec& grid, Direction dir = Direction::increasing,
                                  double tolerance = 1.0, NoiseModel noise = {}) {
  std::vector<PointFailure> failures;
  const auto xs = grid.points();
  const auto pts = detail::tabulate(f, xs, failures, "f");
  std::vector<Sample> samples;
  detail::monotone_samples(pts, dir, noise, dir == Direction::increasing ? "increasing" : "decreasing", samples);
  return fold("monotone", std::move(samples), std::move(failures), tolerance);
}

/// Flags any second divided difference of the wrong sign beyond the noise estimate.
inline SuiteReport convex_check(const RealFn& f, const GridSpec& grid, Curvature curv = Curvature::convex,
                                double tolerance = 1.0, NoiseModel noise = {}) {
  std::vector<PointFailure> failures;
  const auto xs = grid.points();
  const auto pts = detail::tabulate(f, xs, failures, "f");
  std::vector<Sample> samples;
  detail::convex_samples(pts, curv, noise, curv == Curvature::convex ? "convex" : "concave", samples);
  return fold("convex", std::move(samples), std::move(failures), tolerance);
}

struct Anchor {
  enum class Side { left, right };
  Side side = Side::left;
  double at = 0.0;
};

namespace detail {

/// Central difference with a Richardson-style error estimate.
struct NumericDerivative {
  double value;
  double error;
};

inline NumericDerivative central_difference(const RealFn& f, double x) {
  const double h = 1e-4 * std::max(1.0, std::abs(x));
  const double d1 = (f(x + h) - f(x - h)) / (2.0 * h);
  const double d2 = (f(x + 2.0 * h) - f(x - 2.0 * h)) / (4.0 * h);
  const double fx = std::abs(f(x));
  return {(4.0 * d1 - d2) / 3.0, std::abs(d1 - d2) + 4.0 * unit_roundoff * (fx + 1.0) / h};
}

}  // namespace detail

/// Monotone l'Hopital probe: if the numeric g'/h' is monotone on the grid,
/// the anchored quotient (g(x) - g(a))/(h(x) - h(a)) must be monotone in the
/// same sense. A non-monotone g'/h' yields a skipped report.
inline SuiteReport lhopital_rule_probe(const RealFn& g, const RealFn& h, Anchor anchor, const GridSpec& grid,
                                       double tolerance = 1.0) {
  std::vector<PointFailure> failures;
  const auto xs = grid.points();
  struct Row {
    double x, ratio, ratio_err, q, q_err;
  };
  std::vector<Row> rows;
  double ga = 0.0, ha = 0.0;
  try {
    ga = g(anchor.at);
    ha = h(anchor.at);
  } catch (const specfun::error& e) {
    fail(errc::configuration, std::string("anchor is not evaluable: ") + e.what());
  }
  if (!std::isfinite(ga) || !std::isfinite(ha)) fail(errc::configuration, "anchor values are not finite");
  for (double x : xs) {
    try {
      const auto dg = detail::central_difference(g, x);
      const auto dh = detail::central_difference(h, x);
      if (!(std::abs(dh.value) > 10.0 * dh.error)) {
        failures.push_back({x, "h-prime", "h' is not resolved away from zero"});
        continue;
      }
      const double dx_h = h(x) - ha;
      if (dx_h == 0.0) continue;  // vanishing h-difference: point skipped
      const double gx = g(x), hx = h(x);
      const double ratio = dg.value / dh.value;
      const double ratio_err = (dg.error + std::abs(ratio) * dh.error) / std::abs(dh.value);
      const double q = (gx - ga) / dx_h;
      const double q_err =
          8.0 * unit_roundoff * (std::abs(gx) + std::abs(ga) + std::abs(q) * (std::abs(hx) + std::abs(ha))) /
          std::abs(dx_h);
      rows.push_back({x, ratio, ratio_err, q, q_err});
    } catch (const specfun::error& e) {
      failures.push_back({x, "f", e.what()});
    }
  }
  SuiteReport skipped;
  skipped.suite_id = "lhopital";
  skipped.tolerance = tolerance;
  skipped.skipped = true;
  if (rows.size() < 2) {
    skipped.detail = "precondition: fewer than two usable points";
    return skipped;
  }
  const bool up = rows.back().ratio >= rows.front().ratio;
  const double s = up ? 1.0 : -1.0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double d = s * (rows[i].ratio - rows[i - 1].ratio);
    if (d < -(rows[i].ratio_err + rows[i - 1].ratio_err)) {
      skipped.detail = "precondition: numeric g'/h' is not monotone near x=" + std::to_string(rows[i].x);
      return skipped;
    }
  }
  // both anchored quotients follow g'/h' in the same sense
  std::vector<Sample> samples;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double d = s * (rows[i].q - rows[i - 1].q);
    samples.push_back({rows[i].x, detail::noise_units(d, rows[i].q_err + rows[i - 1].q_err), rows[i].q,
                       rows[i - 1].q, up ? "quotient-increasing" : "quotient-decreasing"});
  }
  SuiteReport rep = fold("lhopital", std::move(samples), std::move(failures), tolerance);
  rep.detail = up ? "g'/h' increasing" : "g'/h' decreasing";
  return rep;
}

/// Coefficient-ratio probe: for s_n > 0 and monotone r_n/s_n, the quotient
/// R(x)/S(x) of the power series is monotone in the same sense on (0,1).
inline SuiteReport bk_ratio_probe(std::span<const double> r_coeffs, std::span<const double> s_coeffs,
                                  const GridSpec& grid, double tolerance = 1.0) {
  if (r_coeffs.size() != s_coeffs.size() || r_coeffs.empty())
    fail(errc::configuration, "coefficient sequences must be non-empty and of equal length");
  if (!(grid.lo >= 0.0 && grid.hi <= 1.0)) fail(errc::configuration, "series-ratio probe needs a grid inside [0,1]");
  SuiteReport skipped;
  skipped.suite_id = "bk-ratio";
  skipped.tolerance = tolerance;
  skipped.skipped = true;
  for (double sn : s_coeffs) {
    if (!(sn > 0.0)) {
      skipped.detail = "precondition: s_n must be positive";
      return skipped;
    }
  }
  const std::size_t n = r_coeffs.size();
  const double first = r_coeffs[0] / s_coeffs[0];
  const double last = r_coeffs[n - 1] / s_coeffs[n - 1];
  const bool up = last >= first;
  const double s = up ? 1.0 : -1.0;
  for (std::size_t i = 1; i < n; ++i) {
    const double q0 = r_coeffs[i - 1] / s_coeffs[i - 1], q1 = r_coeffs[i] / s_coeffs[i];
    if (s * (q1 - q0) < -4.0 * unit_roundoff * (std::abs(q0) + std::abs(q1))) {
      skipped.detail = "precondition: r_n/s_n is not monotone at n=" + std::to_string(i);
      return skipped;
    }
  }
  std::vector<PointFailure> failures;
  std::vector<detail::Point> pts;
  std::vector<double> noise;
  for (double x : grid.points()) {
    if (x <= 0.0 || x >= 1.0) continue;
    double R = 0.0, S = 0.0, Rabs = 0.0, p = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
      R += r_coeffs[k] * p;
      S += s_coeffs[k] * p;
      Rabs += std::abs(r_coeffs[k]) * p;
      p *= x;
    }
    const double q = R / S;
    pts.push_back({x, q});
    noise.push_back(4.0 * unit_roundoff * std::sqrt(static_cast<double>(n)) * (Rabs / S + std::abs(q)));
  }
  std::vector<Sample> samples;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    const double d = s * (pts[i].fx - pts[i - 1].fx);
    samples.push_back({pts[i].x, detail::noise_units(d, noise[i] + noise[i - 1]), pts[i].fx, pts[i - 1].fx,
                       up ? "quotient-increasing" : "quotient-decreasing"});
  }
  SuiteReport rep = fold("bk-ratio", std::move(samples), std::move(failures), tolerance);
  rep.detail = up ? "r_n/s_n increasing" : "r_n/s_n decreasing";
  return rep;
}

}  // namespace specfun::verify
