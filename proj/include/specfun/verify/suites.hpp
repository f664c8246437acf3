#pragma once

// Registry of verification suites. Each suite turns one identity or
// inequality into signed margins over a grid; run_suite folds them into a
// SuiteReport.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "specfun/elliptic.hpp"
#include "specfun/errors.hpp"
#include "specfun/gamma.hpp"
#include "specfun/hypergeometric.hpp"
#include "specfun/means.hpp"
#include "specfun/verify/checks.hpp"
#include "specfun/verify/grid.hpp"
#include "specfun/verify/report.hpp"

namespace specfun::verify {

/// Mutable state of one suite evaluation.
class SuiteRun {
 public:
  SuiteRun(GridSpec g, double tol) : grid(g), tolerance(tol) {}

  GridSpec grid;
  double tolerance;
  std::vector<Sample> samples;
  std::vector<PointFailure> failures;
  std::string detail;
  // set by suites that delegate to a generic probe
  std::optional<SuiteReport> report;

  void add(double point, double margin, double lhs, double rhs, std::string where = {}) {
    samples.push_back({point, margin, lhs, rhs, std::move(where)});
  }

  /// Identity check: margin = -|lhs - rhs| / max(1, |rhs|) (or absolute).
  void identity(double point, double lhs, double rhs, std::string where = {}, bool relative = true) {
    const double diff = std::abs(lhs - rhs);
    add(point, -(relative ? diff / std::max(1.0, std::abs(rhs)) : diff), lhs, rhs, std::move(where));
  }

  /// Residual check against its own scale.
  void residual(double point, const Residual& r, std::string where = {}) {
    add(point, -r.relative(), r.value, r.scale, std::move(where));
  }

  /// Runs body, turning kernel refusals into point failures.
  template <class F>
  void guard(double point, std::string_view where, F&& body) {
    try {
      body();
    } catch (const specfun::error& e) {
      failures.push_back({point, std::string(where), e.what()});
    }
  }
};

struct SuiteDef {
  std::string id;
  std::string anchor;
  GridSpec grid;
  double tolerance = 0.0;
  bool probe = false;  // expected to produce violations; not part of "all"
  std::function<void(SuiteRun&)> body;
};

namespace detail {

inline std::string params(std::initializer_list<std::pair<const char*, double>> kv) {
  std::string out;
  char buf[64];
  for (const auto& [k, v] : kv) {
    std::snprintf(buf, sizeof buf, "%s%s=%.6g", out.empty() ? "" : ",", k, v);
    out += buf;
  }
  return out;
}

/// Random points drawn over [lo, hi] (log-uniform for log grids).
inline std::vector<double> random_points(const GridSpec& g, std::uint64_t seed) {
  g.validate();
  std::mt19937_64 rng(seed);
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(g.n));
  if (g.spacing == Spacing::log) {
    std::uniform_real_distribution<double> u(std::log(g.lo), std::log(g.hi));
    for (std::int64_t i = 0; i < g.n; ++i) out.push_back(std::exp(u(rng)));
  } else {
    std::uniform_real_distribution<double> u(g.lo, g.hi);
    for (std::int64_t i = 0; i < g.n; ++i) out.push_back(u(rng));
  }
  return out;
}

struct Uniform {
  std::mt19937_64 rng;
  explicit Uniform(std::uint64_t seed) : rng(seed) {}
  double operator()(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
};

inline double ln_ball(double n) { return 0.5 * n * std::log(pi) - std::lgamma(0.5 * n + 1.0); }

/// Central differences of order 1..3 with step h and an error estimate
/// from comparing against step 2h.
struct FdDerivatives {
  std::array<double, 3> value{};
  std::array<double, 3> error{};
};

inline FdDerivatives fd_derivatives(const std::function<double(double)>& f, double x, double h) {
  auto stencil = [&](double s) {
    const double fm2 = f(x - 2 * s), fm1 = f(x - s), f0 = f(x), fp1 = f(x + s), fp2 = f(x + 2 * s);
    std::array<double, 4> out{(fp1 - fm1) / (2 * s), (fp1 - 2 * f0 + fm1) / (s * s),
                              (fp2 - 2 * fp1 + 2 * fm1 - fm2) / (2 * s * s * s), 0.0};
    out[3] = std::max({std::abs(fm2), std::abs(fm1), std::abs(f0), std::abs(fp1), std::abs(fp2)});
    return out;
  };
  const auto a = stencil(h);
  const auto b = stencil(2 * h);
  const double eps = std::numeric_limits<double>::epsilon();
  FdDerivatives d;
  const double round[3] = {eps * a[3] / h, 4 * eps * a[3] / (h * h), 6 * eps * a[3] / (h * h * h)};
  for (int k = 0; k < 3; ++k) {
    d.value[k] = a[k];
    d.error[k] = std::abs(a[k] - b[k]) / 3.0 + round[k];
  }
  return d;
}

/// Tabulated theta_x values with their x.
struct ThetaRow {
  const char* label;
  double x;
  double value;
};

inline constexpr double theta_infinity_proxy = 1e8;

inline constexpr std::array<ThetaRow, 14> theta_record = {{
    {"0", 0.0, 0.9675},           {"1/12", 1.0 / 12, 0.8071},  {"2/12", 2.0 / 12, 0.6160},
    {"3/12", 3.0 / 12, 0.4867},   {"4/12", 4.0 / 12, 0.4029},  {"5/12", 5.0 / 12, 0.3509},
    {"6/12", 6.0 / 12, 0.3207},   {"7/12", 7.0 / 12, 0.3058},  {"8/12", 8.0 / 12, 0.3014},
    {"9/12", 9.0 / 12, 0.3041},   {"10/12", 10.0 / 12, 0.3118}, {"11/12", 11.0 / 12, 0.3227},
    {"1", 1.0, 0.3359},           {"inf", theta_infinity_proxy, 1.0},
}};

/// Triples used by the hypergeometric identity suites.
inline std::vector<std::array<double, 3>> random_triples(std::uint64_t seed, int count, double lo, double hi) {
  Uniform u(seed);
  std::vector<std::array<double, 3>> out;
  for (int i = 0; i < count; ++i) out.push_back({u(lo, hi), u(lo, hi), u(lo, hi)});
  return out;
}

/// Triples with 2c = a + b + 1 (and c >= 1 when a + b >= 1).
inline std::vector<std::array<double, 3>> reflective_triples(std::uint64_t seed, int count) {
  Uniform u(seed);
  std::vector<std::array<double, 3>> out{{0.5, 0.5, 1.0}};
  for (int i = 1; i < count; ++i) {
    const double a = u(0.2, 2.5), b = u(std::max(0.2, 1.0 - a), 2.5);
    out.push_back({a, b, 0.5 * (a + b + 1.0)});
  }
  return out;
}

inline std::vector<std::pair<double, double>> landen_pairs() {
  Uniform u(0x1a9de7);
  std::vector<std::pair<double, double>> out{{0.5, 0.5}};
  while (out.size() < 6) {
    const double a = u(0.05, 0.95), b = u(0.05, 0.95);
    if (a + b <= 1.0) out.emplace_back(a, b);
  }
  return out;
}

inline void monotone_points(SuiteRun& run, const std::function<double(double)>& f, std::span<const double> xs,
                            Direction dir, NoiseModel noise, const std::string& where) {
  auto pts = tabulate(f, xs, run.failures, where);
  monotone_samples(pts, dir, noise, where, run.samples);
}

inline void convex_points(SuiteRun& run, const std::function<double(double)>& f, std::span<const double> xs,
                          Curvature curv, NoiseModel noise, const std::string& where) {
  auto pts = tabulate(f, xs, run.failures, where);
  convex_samples(pts, curv, noise, where, run.samples);
}

inline constexpr std::array<double, 9> tenths = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};

// ---------------------------------------------------------------------------
// Suite bodies: gamma family

inline void gamma_power_bounds(SuiteRun& run) {
  for (double x : run.grid.points()) {
    run.guard(x, "", [&] {
      const double lg = ln_gamma(x), lx = std::log(x);
      const double lower = ((1.0 - euler_gamma) * x - 1.0) * lx;
      const double upper = (x - 1.0) * lx;
      run.add(x, lg - lower, lg, lower, "lower");
      run.add(x, upper - lg, upper, lg, "upper");
    });
  }
}

inline void alzer_gamma_bounds(SuiteRun& run, double alpha, double beta) {
  for (double x : run.grid.points()) {
    run.guard(x, "", [&] {
      const double lg = ln_gamma(x), lx = std::log(x);
      const double lower = (alpha * (x - 1.0) - euler_gamma) * lx;
      const double upper = (beta * (x - 1.0) - euler_gamma) * lx;
      run.add(x, lg - lower, lg, lower, "lower");
      run.add(x, upper - lg, upper, lg, "upper");
    });
  }
}

inline void detemple_bracket(SuiteRun& run) {
  for (std::int64_t n : run.grid.integer_points()) {
    const double x = static_cast<double>(n);
    run.guard(x, "", [&] {
      const double e = detemple_excess(n);
      const double lo = 1.0 / (24.0 * (x + 1.0) * (x + 1.0));
      const double hi = 1.0 / (24.0 * x * x);
      run.add(x, e - lo, e, lo, "lower");
      run.add(x, hi - e, hi, e, "upper");
    });
  }
}

inline void detemple_H_monotone(SuiteRun& run) {
  std::vector<double> xs;
  for (std::int64_t n : run.grid.integer_points()) xs.push_back(static_cast<double>(n));
  monotone_points(
      run, [](double x) { return bigH(static_cast<std::int64_t>(x)); }, xs, Direction::increasing, {}, "H");
}

inline void theta_table(SuiteRun& run) {
  for (const ThetaRow& row : theta_record) {
    run.guard(row.x, row.label, [&] {
      const double v = ramanujan_theta(row.x);
      run.add(row.x, 5e-5 - std::abs(v - row.value), v, row.value, std::string("x=") + row.label);
    });
  }
}

inline void theta_monotone(SuiteRun& run) {
  // the direct branch below x = 10 cancels about 8x^3 against G^6
  const auto xs = run.grid.points();
  monotone_points(
      run, [](double x) { return ramanujan_theta(x) / 30.0; }, xs, Direction::increasing, {8 * unit_roundoff, 1e-9},
      "H");
}

inline void theta_range(SuiteRun& run) {
  for (double x : run.grid.points()) {
    run.guard(x, "", [&] {
      const double H = ramanujan_theta(x) / 30.0;
      run.add(x, H - 0.01, H, 0.01, "above-1/100");
      run.add(x, 1.0 / 30.0 - H, 1.0 / 30.0, H, "below-1/30");
    });
  }
}

inline void alzer_ball(SuiteRun& run, int which) {
  const BallConstants k;
  for (std::int64_t n : run.grid.integer_points()) {
    const double x = static_cast<double>(n);
    run.guard(x, "", [&] {
      const double l0 = ln_ball(x - 1), l1 = ln_ball(x), l2 = ln_ball(x + 1);
      switch (which) {
        case 1: {
          // a Omega_{n+1}^{n/(n+1)} <= Omega_n <= b Omega_{n+1}^{n/(n+1)}
          const double mid = x / (x + 1.0) * l2;
          run.add(x, l1 - (std::log(k.a) + mid), l1, std::log(k.a) + mid, "lower");
          run.add(x, std::log(k.b) + mid - l1, std::log(k.b) + mid, l1, "upper");
          break;
        }
        case 2: {
          // sqrt((n+A)/(2pi)) <= Omega_{n-1}/Omega_n <= sqrt((n+B)/(2pi))
          const double q = l0 - l1;
          const double lo = 0.5 * std::log((x + k.A) / (2 * pi)), hi = 0.5 * std::log((x + k.B) / (2 * pi));
          run.add(x, q - lo, q, lo, "lower");
          run.add(x, hi - q, hi, q, "upper");
          break;
        }
        default: {
          // (1+1/n)^alpha <= Omega_n^2/(Omega_{n-1}Omega_{n+1}) <= (1+1/n)^beta
          const double q = 2 * l1 - l0 - l2;
          const double base = std::log1p(1.0 / x);
          run.add(x, q - k.alpha * base, q, k.alpha * base, "lower");
          run.add(x, k.beta * base - q, k.beta * base, q, "upper");
          break;
        }
      }
    });
  }
}

inline void omega_decreasing(SuiteRun& run) {
  for (std::int64_t n : run.grid.integer_points()) {
    const double x = static_cast<double>(n);
    run.guard(x, "", [&] {
      const double d_ball = ln_ball(x + 1) - ln_ball(x);
      // omega_n = (n+1) Omega_{n+1}
      const double d_sphere = std::log((x + 2) / (x + 1)) + ln_ball(x + 2) - ln_ball(x + 1);
      run.add(x, -std::expm1(d_ball), std::exp(ln_ball(x + 1)), std::exp(ln_ball(x)), "Omega");
      run.add(x, -std::expm1(d_sphere), (x + 2) * std::exp(ln_ball(x + 2)), (x + 1) * std::exp(ln_ball(x + 1)),
              "omega");
    });
  }
}

inline void berg_pedersen_limit(SuiteRun& run) {
  const double target = 1.0 / euler_gamma;
  for (double t : run.grid.points()) {
    run.guard(t, "", [&] {
      const double v = berg_pedersen_density(t);
      run.add(t, 1e-6 - std::abs(v - target), v, target);
    });
  }
}

inline void anderson_bernstein(SuiteRun& run) {
  const std::function<double(double)> f = [](double x) { return anderson_f(x); };
  constexpr double sign[3] = {1.0, -1.0, 1.0};
  constexpr const char* names[3] = {"f'>0", "f''<0", "f'''>0"};
  for (double x : run.grid.points()) {
    run.guard(x, "", [&] {
      const double h = std::max(1e-4, 1e-4 * std::abs(x));
      if (x - 2 * h <= 0.0) fail(errc::domain, "stencil leaves (0,inf)");
      const auto d = fd_derivatives(f, x, h);
      for (int k = 0; k < 3; ++k)
        run.add(x, sign[k] * d.value[k] - 10.0 * d.error[k], sign[k] * d.value[k], 10.0 * d.error[k], names[k]);
    });
  }
}

inline void anderson_increasing(SuiteRun& run) {
  const auto xs = run.grid.points();
  monotone_points(run, [](double x) { return anderson_f(x); }, xs, Direction::increasing, {}, "f");
}

inline void anderson_range(SuiteRun& run) {
  for (double x : run.grid.points()) {
    run.guard(x, "", [&] {
      const double v = anderson_f(x);
      const double lo = x > 1.0 ? 1.0 - euler_gamma : 0.0;
      run.add(x, v - lo, v, lo, x > 1.0 ? "above-1-gamma" : "above-0");
      run.add(x, 1.0 - v, 1.0, v, "below-1");
    });
  }
}

inline void anderson_concave(SuiteRun& run) {
  const auto xs = run.grid.points();
  convex_points(run, [](double x) { return anderson_f(x); }, xs, Curvature::concave, {}, "f");
}

inline void anderson_lhopital(SuiteRun& run) {
  run.report = lhopital_rule_probe([](double x) { return ln_gamma(x + 1.0); },
                                   [](double x) { return x * std::log(x); }, {Anchor::Side::left, 1.0}, run.grid,
                                   run.tolerance);
}

inline void lemma_g_positive(SuiteRun& run) {
  for (double x : run.grid.points()) {
    run.guard(x, "", [&] {
      const SeriesEval g = lemma_g(x);
      run.add(x, g.value - g.est_error, g.value, g.est_error);
    });
  }
}

inline void lemma_h_sign(SuiteRun& run) {
  for (double x : run.grid.points()) {
    run.guard(x, "", [&] {
      const double v = lemma_h(x);
      run.add(x, v, v, 0.0);
    });
  }
}

inline void lemma_h_monotone(SuiteRun& run) {
  std::vector<double> left, right;
  for (double x : run.grid.points()) (x <= 0.0 ? left : right).push_back(x);
  if (!left.empty() && left.back() != 0.0) left.push_back(0.0);
  if (right.empty() || right.front() != 0.0) right.insert(right.begin(), 0.0);
  const NoiseModel noise{8 * unit_roundoff, 1e-15};
  monotone_points(run, [](double x) { return lemma_h(x); }, left, Direction::decreasing, noise, "decreasing");
  monotone_points(run, [](double x) { return lemma_h(x); }, right, Direction::increasing, noise, "increasing");
}

inline void karatsuba_gamma(SuiteRun& run) {
  for (std::int64_t k : run.grid.integer_points()) {
    const double x = static_cast<double>(k);
    run.guard(x, "", [&] {
      const GammaEstimate e = karatsuba_gamma_estimate(static_cast<int>(k));
      const double err = std::abs(e.estimate - euler_gamma);
      run.add(x, e.error_bound - err, err, e.error_bound);
    });
  }
}

inline void karatsuba_asymptotic(SuiteRun& run) {
  for (double x : run.grid.points()) {
    run.guard(x, "", [&] {
      const double approx = karatsuba_asymptotic_gamma(x, 7);
      const double rel = std::abs(std::expm1(std::log(approx) - ln_gamma(x + 1.0)));
      run.add(x, 1e-9 - rel, approx, std::exp(ln_gamma(x + 1.0)));
    });
  }
}

inline void gamma_recurrence(SuiteRun& run) {
  for (double x : random_points(run.grid, 0x9a11a)) {
    run.guard(x, "", [&] {
      const double lhs = gamma(x + 1.0), rhs = x * gamma(x);
      run.add(x, -std::abs(lhs - rhs) / std::abs(lhs), lhs, rhs);
    });
  }
}

// ---------------------------------------------------------------------------
// Hypergeometric suites

inline void contiguous(SuiteRun& run, int which) {
  static const char* names[5] = {"u-derivative", "v-derivative", "shifted", "product", "b-shift"};
  for (const auto& p : random_triples(0xc0417 + which, 20, 0.1, 3.0)) {
    const HypTriple t(p[0], p[1], p[2]);
    const std::string where = params({{"a", t.a}, {"b", t.b}, {"c", t.c}});
    for (double z : run.grid.points()) {
      run.guard(z, where, [&] { run.residual(z, contiguous_residuals(t, z).r[which], where); });
    }
  }
  run.detail = names[which];
}

inline void zero_balanced_product(SuiteRun& run) {
  Uniform u(0x313);
  for (int i = 0; i < 20; ++i) {
    const double a = u(0.05, 0.95);
    const double c = u(1.0 - a + 0.05, 3.0);
    const std::string where = params({{"a", a}, {"c", c}});
    for (double z : run.grid.points()) {
      run.guard(z, where, [&] {
        const IdentitySides s = corollary_313(a, c, z);
        run.identity(z, s.lhs, s.rhs, where);
      });
    }
  }
}

inline std::vector<std::pair<double, double>> shape_pairs() {
  Uniform u(0x31);
  std::vector<std::pair<double, double>> out{{0.5, 0.5}};
  for (int i = 0; i < 5; ++i) out.emplace_back(u(0.1, 3.0), u(0.1, 3.0));
  return out;
}

/// Triples with max(a,b) <= c < a + b; outside that window the slope
/// interval can be empty and l is then concave.
inline std::vector<std::array<double, 3>> shape_triples() {
  Uniform u(0x32);
  std::vector<std::array<double, 3>> out{{0.5, 0.5, 0.5}};
  while (out.size() < 6) {
    const double a = u(0.1, 3.0), b = u(0.1, 3.0);
    const double lo = std::max(a, b), hi = a + b - 0.1;
    if (hi > lo) out.push_back({a, b, u(lo, hi)});
  }
  return out;
}

inline void zero_balanced_shape(SuiteRun& run) {
  const auto xs = run.grid.points();
  for (const auto& [a, b] : shape_pairs()) {
    const std::string where = params({{"a", a}, {"b", b}});
    auto k = [a = a, b = b](double x) { return theorem31_k(a, b, x); };
    monotone_points(run, k, xs, Direction::increasing, {}, "increasing," + where);
    convex_points(run, k, xs, Curvature::convex, {}, "convex," + where);
  }
}

inline void zero_balanced_slope(SuiteRun& run) {
  for (const auto& [a, b] : shape_pairs()) {
    const std::string where = params({{"a", a}, {"b", b}});
    const double lo = a * b / (a + b), hi = 1.0 / beta(a, b);
    for (double x : run.grid.points()) {
      run.guard(x, where, [&] {
        const double s = theorem31_k_slope(a, b, x);
        run.add(x, (s - lo) / hi, s, lo, "above," + where);
        run.add(x, (hi - s) / hi, hi, s, "below," + where);
      });
    }
  }
}

inline void power_substitution_shape(SuiteRun& run) {
  const auto xs = run.grid.points();
  for (const auto& p : shape_triples()) {
    const std::string where = params({{"a", p[0]}, {"b", p[1]}, {"c", p[2]}});
    auto l = [p](double x) { return theorem32_ell(p[0], p[1], p[2], x); };
    monotone_points(run, l, xs, Direction::increasing, {}, "increasing," + where);
    convex_points(run, l, xs, Curvature::convex, {}, "convex," + where);
  }
}

inline void power_substitution_slope(SuiteRun& run) {
  for (const auto& p : shape_triples()) {
    const double a = p[0], b = p[1], c = p[2], d = a + b - c;
    const std::string where = params({{"a", a}, {"b", b}, {"c", c}});
    const double lo = a * b / (c * d);
    const double hi = std::exp(ln_gamma(c) + ln_gamma(d) - ln_gamma(a) - ln_gamma(b));
    for (double x : run.grid.points()) {
      run.guard(x, where, [&] {
        const double s = theorem32_ell_slope(a, b, c, x);
        run.add(x, (s - lo) / hi, s, lo, "above," + where);
        run.add(x, (hi - s) / hi, hi, s, "below," + where);
      });
    }
  }
}

inline void ode_suite(SuiteRun& run, OdeKind kind) {
  std::vector<std::pair<std::array<double, 3>, bool>> cases;
  if (kind != OdeKind::quadratic)
    for (const auto& p : random_triples(0x41 + static_cast<int>(kind), 12, 0.1, 3.0)) cases.push_back({p, false});
  if (kind != OdeKind::radical) {
    for (const auto& p : reflective_triples(0x42, 8)) {
      cases.push_back({p, false});
      cases.push_back({p, true});
    }
  }
  for (const auto& [p, reflected] : cases) {
    const HypTriple t(p[0], p[1], p[2]);
    const std::string where = params({{"a", t.a}, {"b", t.b}, {"c", t.c}}) + (reflected ? ",reflected" : "");
    for (double z : run.grid.points()) run.guard(z, where, [&] { run.residual(z, ode_residual(kind, t, z, reflected), where); });
  }
}

inline void wronskian(SuiteRun& run) {
  for (const auto& p : reflective_triples(0x44, 12)) {
    const HypTriple t(p[0], p[1], p[2]);
    const std::string where = params({{"a", t.a}, {"b", t.b}, {"c", t.c}});
    for (double z : run.grid.points()) {
      run.guard(z, where, [&] {
        const IdentitySides s = wronskian_identity(t, z);
        run.add(z, -std::abs(s.lhs - s.rhs) / std::abs(s.rhs), s.lhs, s.rhs, where);
      });
    }
  }
}

inline void elliott(SuiteRun& run) {
  for (const auto& p : random_triples(0x53, 50, 0.0, 2.0)) {
    const std::string where = params({{"a", p[0]}, {"b", p[1]}, {"c", p[2]}});
    double lo = std::numeric_limits<double>::infinity(), hi = -lo, x_hi = 0.0;
    for (double x : run.grid.points()) {
      run.guard(x, where, [&] {
        const IdentitySides s = elliott_identity(p[0], p[1], p[2], x);
        run.identity(x, s.lhs, s.rhs, "identity," + where, false);
        lo = std::min(lo, s.lhs);
        if (s.lhs > hi) hi = s.lhs, x_hi = x;
      });
    }
    if (hi >= lo) run.add(x_hi, -(hi - lo), hi, lo, "spread," + where);
  }
}

inline void kummer30(SuiteRun& run) {
  for (const auto& p : random_triples(0x30, 20, 0.1, 2.5)) {
    const std::string where = params({{"a", p[0]}, {"b", p[1]}, {"c", p[2]}});
    for (double x : run.grid.points()) {
      run.guard(x, where, [&] {
        const IdentitySides s = kummer_form30(p[0], p[1], p[2], x);
        run.add(x, -std::abs(s.lhs - s.rhs) / std::abs(s.rhs), s.lhs, s.rhs, where);
      });
    }
  }
}

inline void pfq_positivity(SuiteRun& run) {
  Uniform u(0x71);
  std::vector<std::array<double, 3>> cases{{0.5, 0.5, 0.5}};
  while (cases.size() < 40) {
    const double a = u(0.05, 3.0), b = u(0.05, 3.0);
    const double lo = a * b / (1 + a + b);
    if (lo >= 0.98) continue;
    cases.push_back({a, b, u(lo, 1.0)});
  }
  for (const auto& p : cases) {
    const std::string where = params({{"a", p[0]}, {"b", p[1]}, {"e", p[2]}});
    for (std::int64_t n : run.grid.integer_points()) {
      const double x = static_cast<double>(n);
      run.guard(x, where, [&] {
        const double v = pfq_terminating_3f2(static_cast<int>(n), p[0], p[1], p[2]);
        run.add(x, v, v, 0.0, where);
      });
    }
  }
}

inline void f21_symmetry(SuiteRun& run) {
  Uniform u(0x2f1);
  for (double z : random_points(run.grid, 0x2f2)) {
    const double a = u(-3.0, 3.0), b = u(-3.0, 3.0), c = u(0.1, 4.0);
    const std::string where = params({{"a", a}, {"b", b}, {"c", c}});
    run.guard(z, where, [&] {
      const double ab = f21_value(a, b, c, z), ba = f21_value(b, a, c, z);
      run.identity(z, ab, ba, where);
    });
  }
}

inline void f21_euler_consistency(SuiteRun& run) {
  Uniform u(0x35);
  const SeriesOptions opt = default_hypergeometric_options();
  for (int i = 0; i < 20; ++i) {
    const double a = u(0.2, 3.0), b = u(0.2, 3.0);
    const double c = u(0.1, a + b - 0.05);
    const std::string where = params({{"a", a}, {"b", b}, {"c", c}});
    for (double z : run.grid.points()) {
      run.guard(z, where, [&] {
        const double direct = specfun::detail::f21_direct(a, b, c, z, opt).value;
        const double euler =
            std::pow(1.0 - z, c - a - b) * specfun::detail::f21_direct(c - a, c - b, c, z, opt).value;
        run.add(z, -std::abs(direct - euler) / std::abs(direct), direct, euler, where);
      });
    }
  }
}

// ---------------------------------------------------------------------------
// Elliptic suites

inline void legendre(SuiteRun& run) {
  for (double r : run.grid.points()) {
    run.guard(r, "", [&] {
      const Residual res = legendre_residual(Modulus::from_r(r));
      run.add(r, -std::abs(res.value), res.value + 0.5 * pi, 0.5 * pi);
    });
  }
}

inline void gen_legendre(SuiteRun& run) {
  for (double a : tenths) {
    const std::string where = params({{"a", a}});
    for (double r : run.grid.points()) {
      run.guard(r, where, [&] {
        const Residual res = gen_legendre_residual(a, Modulus::from_r(r));
        run.add(r, -std::abs(res.value), res.value, 0.0, where);
      });
    }
  }
}

inline void gen_k_quadrature(SuiteRun& run) {
  for (double a : tenths) {
    const std::string where = params({{"a", a}});
    for (double r : run.grid.points()) {
      run.guard(r, where, [&] {
        const Modulus m = Modulus::from_r(r);
        const double s = gen_K(a, m), q = gen_K_quadrature(a, m);
        run.add(r, -std::abs(s - q) / std::abs(s), s, q, where);
      });
    }
  }
}

inline void agm_gauss(SuiteRun& run) {
  for (double r : run.grid.points()) {
    run.guard(r, "", [&] {
      const Modulus m = Modulus::from_r(r);
      const double via_agm = 0.5 * pi / agm_value(1.0, m.r_prime());
      const double via_series = ellint_K_series(m);
      run.add(r, -std::abs(via_agm - via_series) / via_series, via_agm, via_series);
    });
  }
}

inline void landen_identity(SuiteRun& run, int which) {
  for (double r : run.grid.points()) {
    run.guard(r, "", [&] {
      const auto [up, down] = landen_residuals(r);
      const double v = which == 0 ? up : down;
      run.add(r, -std::abs(v), v, 0.0);
    });
  }
}

inline void landen_inequality(SuiteRun& run, int which) {
  for (const auto& [a, b] : landen_pairs()) {
    const std::string where = params({{"a", a}, {"b", b}});
    for (double r : run.grid.points()) {
      run.guard(r, where, [&] {
        const double m = landen_inequality_margins(a, b, r)[which];
        run.add(r, m, m, 0.0, where);
      });
    }
  }
}

inline void k_bound(SuiteRun& run, int which) {
  for (double r : run.grid.points()) {
    run.guard(r, "", [&] {
      const double m = k_bound_margins(r).as_array()[which];
      run.add(r, m, m, 0.0);
    });
  }
}

inline void arth_sharpness(SuiteRun& run) {
  for (double r : run.grid.points()) {
    run.guard(r, "", [&] {
      const double m = arth_power_margin(r, 0.76);
      run.add(r, m, m, 0.0, "p=0.76");
    });
  }
  run.detail = "exponent 0.76 should fail somewhere; this is finite-grid evidence, not proof";
}

inline void e_bound(SuiteRun& run, bool muir) {
  for (double r : run.grid.points()) {
    run.guard(r, "", [&] {
      const EBoundMargins m = e_bound_margins(r);
      const double v = muir ? m.muir : m.upper;
      run.add(r, v, v, 0.0);
    });
  }
}

inline void elliptic_ode(SuiteRun& run) {
  for (double a : tenths) {
    const std::string where = params({{"a", a}});
    for (double r : run.grid.points()) {
      run.guard(r, where, [&] {
        const auto [k, e] = elliptic_ode_residuals(a, r);
        run.residual(r, k, "K," + where);
        run.residual(r, e, "E," + where);
      });
    }
  }
}

inline void schwarzian(SuiteRun& run) {
  for (double a : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    const std::string where = params({{"a", a}});
    for (double r : run.grid.points()) {
      run.guard(r, where, [&] {
        const SchwarzianCheck s = schwarzian_mu_residual(a, r);
        run.add(r, -s.relative_error(), s.numeric, s.closed_form, where);
      });
    }
  }
}

inline void mu_decreasing(SuiteRun& run) {
  const auto xs = run.grid.points();
  monotone_points(run, [](double r) { return mu(Modulus::from_r(r)); }, xs, Direction::decreasing, {}, "mu");
}

inline void mu_round_trip(SuiteRun& run) {
  for (double r : random_points(run.grid, 0x3c)) {
    run.guard(r, "", [&] {
      const double back = mu_inverse(mu(Modulus::from_r(r))).r();
      run.add(r, -std::abs(back - r), back, r);
    });
  }
}

inline void phi_composition(SuiteRun& run) {
  Uniform u(0xf1);
  for (double r : random_points(run.grid, 0xf2)) {
    const double K1 = u(0.5, 3.0), K2 = u(0.5, 3.0);
    const std::string where = params({{"K1", K1}, {"K2", K2}});
    run.guard(r, where, [&] {
      const double lhs = phi_K(K1, phi_K(K2, r));
      const double rhs = phi_K(K1 * K2, r);
      run.add(r, -std::abs(lhs - rhs), lhs, rhs, where);
    });
  }
}

// ---------------------------------------------------------------------------
// Means

inline void borwein(SuiteRun& run) {
  for (double x : run.grid.points()) {
    if (x == 1.0) continue;
    run.guard(x, "", [&] {
      const auto [m1, m2] = borwein_chain_margins(x);
      const double ag = agm_value(1.0, x);
      run.add(x, m1 / ag, log_mean_t(1.5, x), ag, "L_3/2>AGM");
      run.add(x, m2 / ag, ag, log_mean(MeanPair(1.0, x)), "AGM>L");
    });
  }
}

inline void lt_monotone(SuiteRun& run) {
  std::vector<double> ts;
  for (int i = 1; i <= 30; ++i) ts.push_back(0.1 * i);
  for (double x : run.grid.points()) {
    if (x == 1.0) continue;
    const std::string where = params({{"x", x}});
    auto pts = tabulate([x](double t) { return log_mean_t(t, x); }, ts, run.failures, where);
    // the sample point is x; t only labels the step
    for (std::size_t i = 1; i < pts.size(); ++i) {
      const double d = pts[i].fx - pts[i - 1].fx;
      const double nz = 32 * unit_roundoff * (std::abs(pts[i].fx) + std::abs(pts[i - 1].fx));
      run.add(x, noise_units(d, nz), pts[i].fx, pts[i - 1].fx, where + params({{",t", pts[i].x}}));
    }
  }
}

inline void mean_homogeneity(SuiteRun& run) {
  Uniform u(0x4e);
  for (double lambda : random_points(run.grid, 0x4f)) {
    const double a = std::exp(u(std::log(1e-3), std::log(1e3)));
    const double b = std::exp(u(std::log(1e-3), std::log(1e3)));
    const double t = u(0.1, 3.0);
    const std::string where = params({{"a", a}, {"b", b}, {"t", t}});
    run.guard(lambda, where, [&] {
      const MeanPair p(a, b), q(lambda * a, lambda * b);
      auto rel = [](double x, double y) { return std::abs(x - y) / std::abs(y); };
      const double agm1 = agm_value(q.a, q.b), agm0 = lambda * agm_value(a, b);
      run.add(lambda, -rel(agm1, agm0), agm1, agm0, "AGM," + where);
      const double pm1 = power_mean(t, q), pm0 = lambda * power_mean(t, p);
      run.add(lambda, -rel(pm1, pm0), pm1, pm0, "A_t," + where);
      const double lm1 = log_mean(q), lm0 = lambda * log_mean(p);
      run.add(lambda, -rel(lm1, lm0), lm1, lm0, "L," + where);
      auto lmean = [](const MeanPair& m) { return log_mean(m); };
      const double lt1 = t_modification(lmean, t, q), lt0 = lambda * t_modification(lmean, t, p);
      run.add(lambda, -rel(lt1, lt0), lt1, lt0, "L_t," + where);
      const double sym = agm_value(b, a), base = agm_value(a, b);
      run.add(lambda, -rel(sym, base), sym, base, "symmetry," + where);
    });
  }
}

inline void mean_sandwich(SuiteRun& run) {
  for (double x : run.grid.points()) {
    run.guard(x, "", [&] {
      const MeanPair p(1.0, x);
      const double g = geometric_mean(p), m = agm_value(1.0, x), a = 0.5 * (1.0 + x);
      run.add(x, (m - g) / a, m, g, "G<=AGM");
      run.add(x, (a - m) / a, a, m, "AGM<=A");
    });
  }
}

inline void bk_arth_K(SuiteRun& run) {
  // K(r)/(pi/2) against arth(r)/r, both as power series in x = r^2
  std::vector<double> rk, sk;
  double c = 1.0;
  for (int n = 0; n < 60; ++n) {
    rk.push_back(c * c);
    sk.push_back(1.0 / (2.0 * n + 1.0));
    c *= (n + 0.5) / (n + 1.0);
  }
  run.report = bk_ratio_probe(rk, sk, run.grid, run.tolerance);
}

}  // namespace detail

inline const std::vector<SuiteDef>& registry() {
  using namespace detail;
  using S = Spacing;
  static const double a1 = 1.0 - euler_gamma;
  static const double a2 = 0.5 * (pi * pi / 6.0 - euler_gamma);
  static const std::vector<SuiteDef> suites = {
      // gamma family
      {"gamma-power-bounds", "x^{(1-gamma)x-1} < Gamma(x) < x^{x-1} on (1,inf)", {1, 100, 1000, S::log}, 0.0, false,
       gamma_power_bounds},
      {"alzer-gamma-bounds-unit", "x^{alpha(x-1)-gamma} < Gamma(x) < x^{beta(x-1)-gamma} on (0,1)",
       {0, 1, 1000, S::logit}, 0.0, false, [](SuiteRun& r) { alzer_gamma_bounds(r, a1, a2); }},
      {"alzer-gamma-bounds-above", "x^{alpha(x-1)-gamma} < Gamma(x) < x^{beta(x-1)-gamma} on (1,inf)",
       {1, 1e4, 1000, S::log}, 0.0, false, [](SuiteRun& r) { alzer_gamma_bounds(r, a2, 1.0); }},
      {"detemple", "1/(24(n+1)^2) < R_n - gamma < 1/(24n^2)", {1, 1e4, 10000, S::linear}, 0.0, false,
       detemple_bracket},
      {"detemple-H-monotone", "H(n) = n^2(R_n - gamma) strictly increasing", {1, 1e4, 10000, S::linear}, 1.0, false,
       detemple_H_monotone},
      {"theta-table", "tabulated theta_x, x = 0, 1/12, ..., 1, inf", {0, 1, 14, S::linear}, 0.0, false, theta_table},
      {"theta-monotone", "H(x) = theta_x/30 increasing on (1,inf)", {1, 1e4, 1000, S::log}, 1.0, false,
       theta_monotone},
      {"theta-range", "1/100 < H(x) < 1/30 on (1,inf)", {1, 1e4, 1000, S::log}, 0.0, false, theta_range},
      {"alzer-ball-1", "a Omega_{n+1}^{n/(n+1)} <= Omega_n <= b Omega_{n+1}^{n/(n+1)}", {1, 200, 200, S::linear},
       1e-14, false, [](SuiteRun& r) { alzer_ball(r, 1); }},
      {"alzer-ball-2", "sqrt((n+A)/(2pi)) <= Omega_{n-1}/Omega_n <= sqrt((n+B)/(2pi))", {1, 200, 200, S::linear},
       1e-14, false, [](SuiteRun& r) { alzer_ball(r, 2); }},
      {"alzer-ball-3", "(1+1/n)^alpha <= Omega_n^2/(Omega_{n-1}Omega_{n+1}) <= (1+1/n)^beta",
       {1, 200, 200, S::linear}, 1e-14, false, [](SuiteRun& r) { alzer_ball(r, 3); }},
      {"omega-decreasing", "Omega_n and omega_n decrease for n >= 7", {7, 200, 194, S::linear}, 0.0, false,
       omega_decreasing},
      {"berg-pedersen-limit", "H(t) -> 1/gamma as t -> 0+", {1e-12, 1e-8, 20, S::log}, 0.0, false,
       berg_pedersen_limit},
      {"anderson-f-bernstein", "f' > 0, f'' < 0, f''' > 0 for f = log Gamma(x+1)/(x log x)", {0.2, 50, 200, S::log},
       0.0, false, anderson_bernstein},
      {"anderson-f-increasing", "f increasing on (0,inf)", {1e-3, 1e4, 1000, S::log}, 1.0, false,
       anderson_increasing},
      {"anderson-f-range", "f maps (0,inf) into (0,1) and (1,inf) into (1-gamma,1)", {1e-3, 1e4, 1000, S::log}, 0.0,
       false, anderson_range},
      {"anderson-f-concave", "f concave on (1,inf)", {1, 50, 500, S::log}, 1.0, false, anderson_concave},
      {"anderson-f-lhopital", "monotone l'Hopital rule applied to log Gamma(x+1) and x log x",
       {1.05, 20, 200, S::linear}, 1.0, false, anderson_lhopital},
      {"lemma-g-positive", "g(x) = sum (n-x)/(n+x)^3 > 0 on (-1,inf)", {-0.99, 100, 400, S::linear}, 0.0, false,
       lemma_g_positive},
      {"lemma-h-sign", "h(x) >= 0 on (-1,inf)", {-0.99, 100, 400, S::linear}, 0.0, false, lemma_h_sign},
      {"lemma-h-monotone", "h decreasing on (-1,0], increasing on [0,inf)", {-0.99, 100, 400, S::linear}, 1.0, false,
       lemma_h_monotone},
      {"karatsuba-gamma", "|gamma_k - gamma| <= c_k", {1, 20, 20, S::linear}, 0.0, false, karatsuba_gamma},
      {"karatsuba-asymptotic", "sextic-root expansion of Gamma(x+1), seven corrections", {10, 100, 50, S::log}, 0.0,
       false, karatsuba_asymptotic},
      {"gamma-recurrence", "Gamma(x+1) = x Gamma(x), random x", {0.1, 50, 1000, S::linear}, 1e-12, false,
       gamma_recurrence},
      // hypergeometric
      {"contiguous-u-derivative", "z u' = (a-1)(v-u)", {0.02, 0.98, 20, S::linear}, 1e-10, false,
       [](SuiteRun& r) { contiguous(r, 0); }},
      {"contiguous-v-derivative", "z(1-z)v' = (c-a)u + (a-c+bz)v", {0.02, 0.98, 20, S::linear}, 1e-10, false,
       [](SuiteRun& r) { contiguous(r, 1); }},
      {"contiguous-shifted", "(ab/c)z(1-z)F(a+1,b+1;c+1;z) = (c-a)u + (a-c+bz)v", {0.02, 0.98, 20, S::linear}, 1e-10,
       false, [](SuiteRun& r) { contiguous(r, 2); }},
      {"contiguous-product", "z(1-z)(uv1+u1v-vv1)' = (1-a-b)[(1-z)uv1 - zu1v - (1-2z)vv1]",
       {0.02, 0.98, 20, S::linear}, 1e-10, false, [](SuiteRun& r) { contiguous(r, 3); }},
      {"contiguous-b-shift", "z(1-z)F' = (c-b)F(a,b-1;c;z) + (b-c+az)F", {0.02, 0.98, 20, S::linear}, 1e-10, false,
       [](SuiteRun& r) { contiguous(r, 4); }},
      {"zero-balanced-product-constant", "uv1 + u1v - vv1 constant for b = 1-a", {0.02, 0.98, 20, S::linear}, 1e-10,
       false, zero_balanced_product},
      {"zero-balanced-exp-convexity", "F(a,b;a+b;1-e^{-x}) increasing and convex", {1e-3, 20, 200, S::log}, 1.0,
       false, zero_balanced_shape},
      {"zero-balanced-slope-range", "k'(x) between ab/(a+b) and 1/B(a,b)", {1e-3, 20, 200, S::log}, 0.0, false,
       zero_balanced_slope},
      {"power-substitution-convexity", "F(a,b;c;1-(1+x)^{-1/(a+b-c)}) increasing and convex",
       {1e-3, 20, 200, S::log}, 1.0, false, power_substitution_shape},
      {"power-substitution-slope-range", "l'(x) between ab/(c(a+b-c)) and Gamma(c)Gamma(a+b-c)/(Gamma(a)Gamma(b))",
       {1e-3, 20, 200, S::log}, 1e-12, false, power_substitution_slope},
      {"ode-hypergeometric", "Gauss hypergeometric equation", {0.02, 0.98, 20, S::linear}, 1e-9, false,
       [](SuiteRun& r) { ode_suite(r, OdeKind::hypergeometric); }},
      {"ode-quadratic", "quadratic-argument equation for F(z^2) and F(1-z^2)", {0.02, 0.98, 20, S::linear}, 1e-9,
       false, [](SuiteRun& r) { ode_suite(r, OdeKind::quadratic); }},
      {"ode-radical", "equation for F(sqrt(1-z^2))", {0.02, 0.98, 20, S::linear}, 1e-9, false,
       [](SuiteRun& r) { ode_suite(r, OdeKind::radical); }},
      {"wronskian-constant", "z^{c-1}(1-z)^{c-1}[(c-a)(uv1+u1v)+(a-1)vv1] = Gamma(c)^2/(Gamma(a)Gamma(b))",
       {0.02, 0.98, 20, S::linear}, 1e-9, false, wronskian},
      {"elliott", "Elliott's identity", {0.1, 0.9, 9, S::linear}, 1e-9, false, elliott},
      {"kummer30", "Kummer connection product", {0.05, 0.95, 19, S::linear}, 1e-9, false, kummer30},
      {"3f2-positivity", "3F2(-n,a,b;1+a+b,1+e-n;1) > 0 for ab/(1+a+b) < e < 1", {1, 50, 50, S::linear}, 0.0, false,
       pfq_positivity},
      {"2f1-symmetry", "F(a,b;c;z) = F(b,a;c;z)", {-0.9, 0.9, 1000, S::linear}, 1e-14, false, f21_symmetry},
      {"2f1-euler-consistency", "direct series against Euler's transformation for c < a+b",
       {0, 0.9, 19, S::linear}, 1e-11, false, f21_euler_consistency},
      // elliptic
      {"legendre", "E K' + E' K - K K' = pi/2", {0, 1, 1000, S::logit}, 1e-11, false, legendre},
      {"gen-legendre", "E_a K_a' + E_a' K_a - K_a K_a' = pi sin(pi a)/(4(1-a))", {0, 1, 100, S::logit}, 1e-9, false,
       gen_legendre},
      {"gen-k-quadrature", "K_a series against its integral", {0.1, 0.9, 9, S::linear}, 1e-8, false,
       gen_k_quadrature},
      {"agm-gauss", "AGM(1,r') = pi/(2K(r))", {0, 1, 50, S::logit}, 1e-12, false, agm_gauss},
      {"landen-id-ascending", "K(2 sqrt r/(1+r)) = (1+r)K(r)", {0, 0.99, 200, S::logit}, 1e-11, false,
       [](SuiteRun& r) { landen_identity(r, 0); }},
      {"landen-id-descending", "K((1-r)/(1+r)) = ((1+r)/2)K'(r)", {0, 0.99, 200, S::logit}, 1e-11, false,
       [](SuiteRun& r) { landen_identity(r, 1); }},
      {"landen-ineq-1", "F(s^2) <= (1+r)F(r^2)", {0, 1, 200, S::logit}, 1e-12, false,
       [](SuiteRun& r) { landen_inequality(r, 0); }},
      {"landen-ineq-2", "(1+r)F(r^2) <= F(s^2) + (R - log 16)/B", {0, 1, 200, S::logit}, 1e-12, false,
       [](SuiteRun& r) { landen_inequality(r, 1); }},
      {"landen-ineq-3", "((1+r)/2)F(r'^2) <= F(t^2)", {0, 1, 200, S::logit}, 1e-12, false,
       [](SuiteRun& r) { landen_inequality(r, 2); }},
      {"landen-ineq-4", "F(t^2) <= ((1+r)/2)(F(r'^2) + (R - log 16)/B)", {0, 1, 200, S::logit}, 1e-12, false,
       [](SuiteRun& r) { landen_inequality(r, 3); }},
      {"arth-lower", "(pi/2)(arth r/r)^{1/2} < K(r)", {0, 1, 1000, S::logit}, 0.0, false,
       [](SuiteRun& r) { k_bound(r, 0); }},
      {"arth-upper", "K(r) < (pi/2) arth r/r", {0, 1, 1000, S::logit}, 0.0, false, [](SuiteRun& r) { k_bound(r, 1); }},
      {"arth-three-quarter", "(pi/2)(arth r/r)^{3/4} < K(r)", {0, 1, 1000, S::logit}, 0.0, false,
       [](SuiteRun& r) { k_bound(r, 2); }},
      {"kuhnau", "9/(8+r^2) < K(r)/log(4/r')", {0, 1, 1000, S::logit}, 0.0, false,
       [](SuiteRun& r) { k_bound(r, 3); }},
      {"qiu-vamanamurthy", "K(r)/log(4/r') < 1 + r'^2/4", {0, 1, 1000, S::logit}, 0.0, false,
       [](SuiteRun& r) { k_bound(r, 4); }},
      {"alzer-K", "1 + (pi/(4 log 2) - 1) r'^2 < K(r)/log(4/r')", {0, 1, 1000, S::logit}, 0.0, false,
       [](SuiteRun& r) { k_bound(r, 5); }},
      {"arth-exponent-sharpness", "exponent 3/4 is best: 0.76 must fail", {0, 1, 1000, S::logit}, 0.0, true,
       arth_sharpness},
      {"muir", "(2/pi)E(r) > ((1+r'^{3/2})/2)^{2/3}", {0, 1, 1000, S::linear}, 0.0, false,
       [](SuiteRun& r) { e_bound(r, true); }},
      {"e-upper", "(2/pi)E(r) < ((1+r'^2)/2)^{1/2}", {0, 1, 1000, S::linear}, 0.0, false,
       [](SuiteRun& r) { e_bound(r, false); }},
      {"elliptic-ode", "differential equations of K_a and E_a in r", {0.02, 0.98, 49, S::linear}, 1e-9, false,
       elliptic_ode},
      {"schwarzian", "Schwarzian derivative of mu_a", {0.05, 0.95, 19, S::linear}, 1e-4, false, schwarzian},
      {"mu-decreasing", "mu strictly decreasing", {0, 1, 1000, S::logit}, 1.0, false, mu_decreasing},
      {"mu-round-trip", "mu_inverse(mu(r)) = r, random r", {0.01, 0.99, 1000, S::linear}, 1e-12, false,
       mu_round_trip},
      {"phi-composition", "phi_K1(phi_K2(r)) = phi_{K1 K2}(r), random r, K1, K2", {0.05, 0.95, 1000, S::linear},
       1e-11, false, phi_composition},
      // means
      {"borwein", "L_{3/2}(1,x) > AGM(1,x) > L(1,x), x != 1", {0.01, 100, 1000, S::log}, 0.0, false, borwein},
      {"lt-monotone", "t -> L_t(1,x) increasing", {0.01, 100, 100, S::log}, 1.0, false, lt_monotone},
      {"mean-homogeneity", "means are symmetric and homogeneous, random scalings", {1e-2, 1e2, 1000, S::log}, 1e-12,
       false, mean_homogeneity},
      {"mean-sandwich", "G <= AGM <= A", {0.01, 100, 1000, S::log}, 0.0, false, mean_sandwich},
      {"bk-arth-K", "coefficient ratios of K and arth r/r give a decreasing quotient", {0, 1, 200, S::linear}, 1.0,
       false, bk_arth_K},
  };
  return suites;
}

inline const SuiteDef& find_suite(std::string_view id) {
  for (const SuiteDef& s : registry())
    if (s.id == id) return s;
  fail(errc::lookup, "unknown suite '" + std::string(id) + "'");
}

/// Ids run by "all": everything except the sharpness probes.
inline std::vector<std::string> default_suite_ids() {
  std::vector<std::string> out;
  for (const SuiteDef& s : registry())
    if (!s.probe) out.push_back(s.id);
  return out;
}

inline SuiteReport run_suite(std::string_view id, const GridSpec& grid, double tolerance) {
  const SuiteDef& def = find_suite(id);
  grid.validate();
  if (!(tolerance >= 0.0) || !std::isfinite(tolerance)) fail(errc::configuration, "tolerance must be finite and >= 0");
  const auto start = std::chrono::steady_clock::now();
  SuiteRun run(grid, tolerance);
  def.body(run);
  SuiteReport rep = run.report ? std::move(*run.report)
                               : fold(def.id, std::move(run.samples), std::move(run.failures), tolerance);
  rep.suite_id = def.id;
  rep.anchor = def.anchor;
  rep.tolerance = tolerance;
  rep.expect_violations = def.probe;
  if (!run.detail.empty()) rep.detail = run.detail;
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

inline SuiteReport run_suite(std::string_view id) {
  const SuiteDef& def = find_suite(id);
  return run_suite(id, def.grid, def.tolerance);
}

}  // namespace specfun::verify
