// Tables behind `specfun table`.

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "cli.hpp"
#include "format.hpp"
#include "specfun/specfun.hpp"

namespace specfun::cli {
namespace {

struct Range {
  long long lo, hi;
};

/// "n=10" means 1..10; "n=3..40" is an explicit range.
Range index_range(Params& p, const std::string& key, long long first, long long default_last, long long cap) {
  const std::string raw = p.text(key, std::to_string(first) + ".." + std::to_string(default_last));
  Range r{first, default_last};
  auto parse = [&](const std::string& s) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(s, &used);
    } catch (const std::logic_error&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) fail(errc::configuration, key + " must be N or LO..HI");
    return v;
  };
  if (const auto dots = raw.find(".."); dots != std::string::npos) {
    r.lo = parse(raw.substr(0, dots));
    r.hi = parse(raw.substr(dots + 2));
  } else {
    r.hi = parse(raw);
  }
  if (r.lo < first || r.hi < r.lo) fail(errc::configuration, key + " range must satisfy " + std::to_string(first) +
                                                                 " <= lo <= hi");
  if (r.hi > cap) fail(errc::configuration, key + " may not exceed " + std::to_string(cap));
  return r;
}

std::string fixed4(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

Table theta_table(Params&) {
  Table t;
  t.label_column = "x";
  t.columns = {"x_value", "theta", "record", "difference"};
  std::vector<std::string> off;
  for (const auto& row : verify::detail::theta_record) {
    if (std::string(row.label) == "inf") continue;
    const double v = ramanujan_theta(row.x);
    t.labels.push_back(row.label);
    t.rows.push_back({row.x, v, row.value, v - row.value});
    t.human.push_back({row.label, fixed4(v)});
    if (std::abs(v - row.value) > 5e-5)
      off.push_back(std::string(row.label) + " (" + fmt_human(v) + " against " + fixed4(row.value) + ")");
  }
  if (!off.empty()) {
    std::string note = "outside 5e-5 of the tabulated record:";
    for (const auto& s : off) note += " " + s;
    t.notes.push_back(note);
  }
  return t;
}

Table detemple_table(Params& p) {
  const Range r = index_range(p, "n", 1, 10, 10'000'000);
  Table t;
  t.columns = {"n", "lower", "excess", "upper", "H", "bracket_ok"};
  t.human.push_back({"n", "1/(24(n+1)^2)", "R_n-gamma", "1/(24n^2)", "H(n)", "bracket"});
  for (long long n = r.lo; n <= r.hi; ++n) {
    const double nd = static_cast<double>(n);
    const double lower = 1.0 / (24.0 * (nd + 1.0) * (nd + 1.0));
    const double upper = 1.0 / (24.0 * nd * nd);
    const double ex = detemple_excess(n);
    const double H = bigH(n);
    const bool ok = lower < ex && ex < upper;
    t.rows.push_back({nd, lower, ex, upper, H, ok ? 1.0 : 0.0});
    t.human.push_back({std::to_string(n), fmt_human(lower), fmt_human(ex), fmt_human(upper), fmt_human(H),
                       ok ? "ok" : "VIOLATED"});
  }
  return t;
}

double ln_omega(double n) { return 0.5 * n * std::log(pi) - std::lgamma(0.5 * n + 1.0); }

Table alzer_ball_table(Params& p) {
  const Range r = index_range(p, "n", 1, 10, 1'000'000);
  const BallConstants c;
  Table t;
  t.columns = {"n", "Omega_n", "q1", "q2", "q3", "bracket_ok"};
  t.human.push_back({"n", "Omega_n", "q1 in [a,b]", "q2 in [A,B]", "q3 in [alpha,beta]", "bracket"});
  auto inside = [](double v, double lo, double hi) {
    const double slack = 1e-14 * std::max(1.0, std::abs(v));
    return v >= lo - slack && v <= hi + slack;
  };
  for (long long n = r.lo; n <= r.hi; ++n) {
    const double nd = static_cast<double>(n);
    const double l0 = ln_omega(nd - 1.0), l1 = ln_omega(nd), l2 = ln_omega(nd + 1.0);
    const double q1 = std::exp(l1 - nd / (nd + 1.0) * l2);
    const double q2 = 2.0 * pi * std::exp(2.0 * (l0 - l1)) - nd;
    const double q3 = (2.0 * l1 - l0 - l2) / std::log1p(1.0 / nd);
    const bool ok = inside(q1, c.a, c.b) && inside(q2, c.A, c.B) && inside(q3, c.alpha, c.beta);
    t.rows.push_back({nd, std::exp(l1), q1, q2, q3, ok ? 1.0 : 0.0});
    t.human.push_back(
        {std::to_string(n), fmt_human(std::exp(l1)), fmt_human(q1), fmt_human(q2), fmt_human(q3), ok ? "ok" : "VIOLATED"});
  }
  t.notes.push_back("q1 = Omega_n / Omega_{n+1}^{n/(n+1)}, a = " + fmt_human(c.a) + ", b = " + fmt_human(c.b));
  t.notes.push_back("q2 = 2 pi (Omega_{n-1}/Omega_n)^2 - n, A = " + fmt_human(c.A) + ", B = " + fmt_human(c.B));
  t.notes.push_back("q3 = log(Omega_n^2/(Omega_{n-1} Omega_{n+1})) / log(1+1/n), alpha = " + fmt_human(c.alpha) +
                    ", beta = " + fmt_human(c.beta));
  return t;
}

Table karatsuba_table(Params& p) {
  const Range r = index_range(p, "k", 1, 20, 60);
  Table t;
  t.columns = {"k", "estimate", "abs_error", "bound", "within_bound"};
  t.human.push_back({"k", "estimate", "|estimate-gamma|", "c_k", "bound"});
  for (long long k = r.lo; k <= r.hi; ++k) {
    const auto e = karatsuba_gamma_estimate(static_cast<int>(k));
    const double err = std::abs(e.estimate - euler_gamma);
    const bool ok = err <= e.error_bound;
    t.rows.push_back({static_cast<double>(k), e.estimate, err, e.error_bound, ok ? 1.0 : 0.0});
    t.human.push_back({std::to_string(k), fmt_human(e.estimate), fmt_human(err), fmt_human(e.error_bound),
                       ok ? "ok" : "VIOLATED"});
  }
  return t;
}

}  // namespace

std::vector<std::string> table_names() { return {"theta", "detemple", "alzer-ball", "karatsuba-gamma"}; }

Table build_table(const std::string& name, Params& params) {
  if (name == "theta") return theta_table(params);
  if (name == "detemple") return detemple_table(params);
  if (name == "alzer-ball") return alzer_ball_table(params);
  if (name == "karatsuba-gamma") return karatsuba_table(params);
  fail(errc::lookup, "unknown table '" + name + "'");
}

}  // namespace specfun::cli
