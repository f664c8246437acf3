// Acceptance criteria, evaluated directly against the kernels.
//
//   acceptance        run all twelve, one line each
//   acceptance N      run criterion N only (used by ctest)
//
// Exit status is 0 iff every selected criterion passed.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "specfun/specfun.hpp"

using namespace specfun;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

/// Collects the worst observation and all failure notes of one criterion.
class Tally {
 public:
  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass_ = false;
      if (notes_.size() < 6) notes_.push_back(what);
      ++misses_;
    }
  }
  void worst(const std::string& label, double v) {
    auto it = std::find_if(maxima_.begin(), maxima_.end(), [&](const auto& p) { return p.first == label; });
    if (it == maxima_.end()) maxima_.push_back({label, v});
    else it->second = std::max(it->second, v);
  }
  Outcome outcome() const {
    std::ostringstream os;
    os.precision(3);
    bool first = true;
    for (const auto& [k, v] : maxima_) {
      os << (first ? "" : "; ") << k << '=' << v;
      first = false;
    }
    if (!pass_) {
      os << (first ? "" : "; ") << misses_ << " miss(es): ";
      for (std::size_t i = 0; i < notes_.size(); ++i) os << (i ? ", " : "") << notes_[i];
    }
    return {pass_, os.str()};
  }

 private:
  bool pass_ = true;
  int misses_ = 0;
  std::vector<std::string> notes_;
  std::vector<std::pair<std::string, double>> maxima_;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::vector<double> logit_grid(int n) { return verify::GridSpec{0.0, 1.0, n, verify::Spacing::logit}.points(); }

constexpr double tenths[] = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};

// 1. Ramanujan's theta table to +-5e-5.
Outcome theta_table() {
  struct Row {
    const char* x;
    double value, record;
  };
  const std::vector<Row> rows = {
      {"0", 0.0, 0.9675},       {"1/12", 1.0 / 12, 0.8071}, {"2/12", 2.0 / 12, 0.6160},  {"3/12", 3.0 / 12, 0.4867},
      {"4/12", 4.0 / 12, 0.4029}, {"5/12", 5.0 / 12, 0.3509}, {"6/12", 6.0 / 12, 0.3207},  {"7/12", 7.0 / 12, 0.3058},
      {"8/12", 8.0 / 12, 0.3014}, {"9/12", 9.0 / 12, 0.3041}, {"10/12", 10.0 / 12, 0.3118}, {"11/12", 11.0 / 12, 0.3227},
      {"1", 1.0, 0.3359},       {"inf", 1e8, 1.0},
  };
  Tally t;
  for (const Row& r : rows) {
    const double v = ramanujan_theta(r.value);
    const double d = std::abs(v - r.record);
    t.worst("max|diff|", d);
    t.check(d <= 5e-5, std::string("x=") + r.x + " theta=" + num(v) + " vs " + num(r.record));
  }
  return t.outcome();
}

// 2. Legendre's relation on a 1000-point logit grid.
Outcome legendre() {
  Tally t;
  for (double r : logit_grid(1000)) {
    const double res = std::abs(legendre_residual(Modulus::from_r(r)).value);
    t.worst("max|residual|", res);
    t.check(res <= 1e-11, "r=" + num(r));
  }
  return t.outcome();
}

// 3. Elliott's identity for 50 random triples in [0,2]^3.
Outcome elliott() {
  std::mt19937_64 rng(20240613);
  std::uniform_real_distribution<double> u(0.0, 2.0);
  Tally t;
  for (int i = 0; i < 50; ++i) {
    const double a = u(rng), b = u(rng), c = u(rng);
    double lo = INFINITY, hi = -INFINITY;
    for (double x : tenths) {
      const auto s = elliott_identity(a, b, c, x);
      const double d = std::abs(s.lhs - s.rhs);
      t.worst("max|lhs-rhs|", d);
      t.check(d <= 1e-9, "a=" + num(a) + " b=" + num(b) + " c=" + num(c) + " x=" + num(x));
      lo = std::min(lo, s.lhs);
      hi = std::max(hi, s.lhs);
    }
    t.worst("max spread", hi - lo);
    t.check(hi - lo <= 1e-9, "spread a=" + num(a) + " b=" + num(b) + " c=" + num(c));
  }
  return t.outcome();
}

// 4. Generalized Legendre relation, a in {0.1..0.9}, 100 r points.
Outcome gen_legendre() {
  Tally t;
  for (double a : tenths)
    for (double r : logit_grid(100)) {
      const double res = std::abs(gen_legendre_residual(a, Modulus::from_r(r)).value);
      t.worst("max|residual|", res);
      t.check(res <= 1e-9, "a=" + num(a) + " r=" + num(r));
    }
  return t.outcome();
}

// 5. DeTemple's bracket and the monotone H(n).
Outcome detemple() {
  Tally t;
  double prev_h = -INFINITY;
  for (std::int64_t n = 1; n <= 10000; ++n) {
    const double nd = static_cast<double>(n);
    const double ex = detemple_excess(n);
    t.check(1.0 / (24.0 * (nd + 1) * (nd + 1)) < ex && ex < 1.0 / (24.0 * nd * nd), "bracket n=" + std::to_string(n));
    const double h = bigH(n);
    t.check(h > prev_h, "H not increasing at n=" + std::to_string(n));
    prev_h = h;
  }
  t.worst("|H(1)-0.01732|", std::abs(bigH(1) - 0.01732));
  t.check(std::abs(bigH(1) - 0.01732) <= 1e-5, "H(1)=" + num(bigH(1)));
  t.worst("|H(1e4)-1/24|", std::abs(bigH(10000) - 1.0 / 24.0));
  t.check(std::abs(bigH(10000) - 1.0 / 24.0) <= 1e-4, "H(1e4)=" + num(bigH(10000)));
  return t.outcome();
}

// 6. K through the AGM against the hypergeometric series.
Outcome gauss_agm() {
  Tally t;
  for (double r : logit_grid(50)) {
    const Modulus m = Modulus::from_r(r);
    const double via_agm = 0.5 * pi / agm_value(1.0, m.r_prime());
    const double via_series = ellint_K_series(m);
    const double rel = std::abs(via_agm - via_series) / via_series;
    t.worst("max rel diff", rel);
    t.check(rel <= 1e-12, "r=" + num(r));
  }
  return t.outcome();
}

// 7. Bounds on K and E, plus the sharpness of the 3/4 exponent.
Outcome k_and_e_bounds() {
  Tally t;
  const auto names = KBoundMargins::names;
  for (double r : logit_grid(1000)) {
    const auto m = k_bound_margins(r).as_array();
    for (std::size_t i = 0; i < m.size(); ++i) t.check(m[i] >= 0.0, std::string(names[i]) + " r=" + num(r));
  }
  for (double r : logit_grid(1000)) {
    const auto e = e_bound_margins(r);
    t.check(e.muir >= 0.0, "muir r=" + num(r));
    t.check(e.upper >= 0.0, "e-upper r=" + num(r));
  }
  int sharp = 0;
  for (double r : logit_grid(1000)) sharp += arth_power_margin(r, 0.76) < 0.0;
  t.worst("violations at exponent 0.76", sharp);
  t.check(sharp >= 1, "exponent 0.76 never fails");
  return t.outcome();
}

// 8. Landen identities and the Landen-type inequalities.
Outcome landen() {
  Tally t;
  const auto rs = verify::GridSpec{0.0, 0.99, 200, verify::Spacing::logit}.points();
  for (double r : rs) {
    const auto [up, down] = landen_residuals(r);
    t.worst("max identity residual", std::max(std::abs(up), std::abs(down)));
    t.check(std::abs(up) <= 1e-11 && std::abs(down) <= 1e-11, "identity r=" + num(r));
  }
  // the inequalities are stated for a + b <= 1; equality at a = b = 1/2
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0.02, 0.98);
  std::vector<std::pair<double, double>> pairs{{0.5, 0.5}};
  while (pairs.size() < 8) {
    const double a = u(rng), b = u(rng);
    if (a + b <= 1.0) pairs.push_back({a, b});
  }
  double at_half = 0.0;
  for (const auto& [a, b] : pairs)
    for (double r : rs)
      for (double m : landen_inequality_margins(a, b, r)) {
        t.check(m >= -1e-12, "a=" + num(a) + " b=" + num(b) + " r=" + num(r));
        if (a == 0.5 && b == 0.5) at_half = std::max(at_half, std::abs(m));
      }
  t.worst("max|margin| at a=b=1/2", at_half);
  t.check(at_half <= 1e-12, "a=b=1/2 margins not near zero");
  return t.outcome();
}

// 9. Contiguous relations, differential equations and the Wronskian constant.
Outcome contiguous_ode_wronskian() {
  Tally t;
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0.1, 3.0);
  const auto zs = verify::GridSpec{0.02, 0.98, 25}.points();
  for (int i = 0; i < 20; ++i) {
    const HypTriple h(u(rng), u(rng), u(rng));
    const std::string tag = "a=" + num(h.a) + " b=" + num(h.b) + " c=" + num(h.c);
    for (double z : zs) {
      for (const auto& r : contiguous_residuals(h, z).r) {
        t.worst("contiguous", r.relative());
        t.check(r.relative() <= 1e-8, "contiguous " + tag + " z=" + num(z));
      }
      for (OdeKind k : {OdeKind::hypergeometric, OdeKind::radical}) {
        const double r = ode_residual(k, h, z).relative();
        t.worst("ode", r);
        t.check(r <= 1e-8, "ode " + tag + " z=" + num(z));
      }
    }
  }
  // second solutions and the Wronskian need 2c = a + b + 1
  std::uniform_real_distribution<double> v(0.2, 2.5);
  for (int i = 0; i < 12; ++i) {
    const double a = i == 0 ? 0.5 : v(rng);
    const double b = i == 0 ? 0.5 : std::max(v(rng), 1.0 - a + 0.05);
    const HypTriple h(a, b, 0.5 * (a + b + 1));
    const std::string tag = "a=" + num(a) + " b=" + num(b);
    for (double z : zs) {
      for (OdeKind k : {OdeKind::hypergeometric, OdeKind::quadratic})
        for (bool refl : {false, true}) {
          const double r = ode_residual(k, h, z, refl).relative();
          t.worst("ode", r);
          t.check(r <= 1e-8, "ode " + tag + " z=" + num(z));
        }
      const auto w = wronskian_identity(h, z);
      const double rel = std::abs(w.lhs - w.rhs) / std::abs(w.rhs);
      t.worst("wronskian", rel);
      t.check(rel <= 1e-9, "wronskian " + tag + " z=" + num(z));
    }
  }
  std::uniform_real_distribution<double> ua(0.05, 0.95);
  for (int i = 0; i < 20; ++i) {
    const double a = ua(rng);
    const double c = std::uniform_real_distribution<double>(1.05 - a, 3.0)(rng);
    for (double z : zs) {
      const auto s = corollary_313(a, c, z);
      const double rel = std::abs(s.lhs - s.rhs) / std::abs(s.rhs);
      t.worst("product constant", rel);
      t.check(rel <= 1e-8, "product a=" + num(a) + " c=" + num(c) + " z=" + num(z));
    }
  }
  return t.outcome();
}

// 10. Series against quadrature for K_a.
Outcome gen_k_quadrature() {
  Tally t;
  for (double a : tenths)
    for (double r : verify::GridSpec{0.01, 0.99, 99}.points()) {
      const Modulus m = Modulus::from_r(r);
      const double s = gen_K(a, m), q = gen_K_quadrature(a, m);
      const double rel = std::abs(s - q) / s;
      t.worst("max rel diff", rel);
      t.check(rel <= 1e-8, "a=" + num(a) + " r=" + num(r));
    }
  return t.outcome();
}

// 11. Karatsuba's gamma estimates and his asymptotic Gamma.
Outcome karatsuba() {
  Tally t;
  for (int k = 1; k <= 20; ++k) {
    const auto e = karatsuba_gamma_estimate(k);
    t.check(std::abs(e.estimate - euler_gamma) <= e.error_bound, "k=" + std::to_string(k));
  }
  const double rel = std::abs(karatsuba_asymptotic_gamma(10.0, 7) - 3628800.0) / 3628800.0;
  t.worst("Gamma(11) rel err", rel);
  t.check(rel <= 1e-9, "Gamma(11) rel err " + num(rel));
  return t.outcome();
}

// 12. Randomized property suites, 1000 trials each.
Outcome properties() {
  Tally t;
  for (const char* id : {"gamma-recurrence", "2f1-symmetry", "mean-homogeneity", "mu-round-trip", "phi-composition"}) {
    const auto rep = verify::run_suite(id);
    t.check(rep.points_evaluated >= 1000, std::string(id) + ": only " + std::to_string(rep.points_evaluated) + " trials");
    t.check(rep.violations.empty() && rep.failures.empty(),
            std::string(id) + ": " + std::to_string(rep.violations.size()) + " violations");
  }
  return t.outcome();
}

struct Criterion {
  const char* name;
  double time_limit_s;  // 0: no limit
  std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {"Ramanujan theta table within 5e-5", 1.0, theta_table},
      {"Legendre relation on 1000 logit points", 1.0, legendre},
      {"Elliott identity, 50 random triples", 30.0, elliott},
      {"generalized Legendre relation", 0.0, gen_legendre},
      {"DeTemple bracket and H(n)", 0.0, detemple},
      {"Gauss AGM route for K", 0.0, gauss_agm},
      {"bounds on K and E, 3/4 exponent sharpness", 0.0, k_and_e_bounds},
      {"Landen identities and inequalities", 0.0, landen},
      {"contiguous, ODE and Wronskian residuals", 0.0, contiguous_ode_wronskian},
      {"K_a series against quadrature", 10.0, gen_k_quadrature},
      {"Karatsuba gamma estimates", 0.0, karatsuba},
      {"randomized property suites", 0.0, properties},
  };
  return all;
}

bool run_one(std::size_t index) {
  const Criterion& c = criteria()[index];
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = c.run();
  } catch (const std::exception& e) {
    o = {false, std::string("error: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (c.time_limit_s > 0.0 && secs >= c.time_limit_s) {
    o.pass = false;
    o.detail += "; too slow";
  }
  std::printf("criterion %2zu %s: %s (%.3f s) %s\n", index + 1, o.pass ? "PASS" : "FAIL", c.name, secs,
              o.detail.c_str());
  std::fflush(stdout);
  return o.pass;
}

}  // namespace

int main(int argc, char** argv) {
  const std::size_t n = criteria().size();
  if (argc > 2) {
    std::fprintf(stderr, "usage: acceptance [1-%zu]\n", n);
    return 64;
  }
  if (argc == 2) {
    char* end = nullptr;
    const long k = std::strtol(argv[1], &end, 10);
    if (*end != '\0' || k < 1 || k > static_cast<long>(n)) {
      std::fprintf(stderr, "criterion must be 1..%zu\n", n);
      return 64;
    }
    return run_one(static_cast<std::size_t>(k - 1)) ? 0 : 1;
  }
  bool all = true;
  for (std::size_t i = 0; i < n; ++i) all = run_one(i) && all;
  return all ? 0 : 1;
}
