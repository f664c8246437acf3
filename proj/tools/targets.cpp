// Function registry behind `specfun eval`.

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "cli.hpp"
#include "specfun/specfun.hpp"

namespace specfun::cli {
namespace {

EvalOutput scalar(double v) { return {{{"value", v}}, std::nullopt}; }

EvalOutput series(const SeriesEval& s) { return {{{"value", s.value}}, s}; }

/// r=..., or rp=... for moduli close to 1.
Modulus modulus(Params& p) {
  if (p.has("rp")) {
    if (p.has("r")) fail(errc::configuration, "give either r or rp, not both");
    return Modulus::from_complement(p.num("rp"));
  }
  return Modulus::from_r(p.num("r"));
}

HypTriple triple(Params& p) { return HypTriple(p.num("a"), p.num("b"), p.num("c")); }

int small_int(Params& p, const std::string& key) {
  const long long v = p.integer(key);
  if (v < -1'000'000'000LL || v > 1'000'000'000LL) fail(errc::domain, key + " is out of range");
  return static_cast<int>(v);
}

OdeKind ode_kind(const std::string& s) {
  if (s == "hypergeometric") return OdeKind::hypergeometric;
  if (s == "quadratic") return OdeKind::quadratic;
  if (s == "radical") return OdeKind::radical;
  fail(errc::configuration, "kind must be hypergeometric, quadratic or radical");
}

EvalOutput sides(const IdentitySides& s) {
  return {{{"lhs", s.lhs}, {"rhs", s.rhs}, {"residual", s.residual()}}, std::nullopt};
}

EvalOutput residual(const Residual& r) {
  return {{{"residual", r.value}, {"scale", r.scale}, {"relative", r.relative()}}, std::nullopt};
}

std::vector<Target> make_targets() {
  std::vector<Target> t;
  auto add = [&](std::string name, std::string params, std::string summary, std::function<EvalOutput(Params&)> fn) {
    t.push_back({std::move(name), std::move(params), std::move(summary), std::move(fn)});
  };

  // gamma family
  add("gamma", "x", "Gamma(x)", [](Params& p) { return scalar(gamma(p.num("x"))); });
  add("ln_gamma", "x", "log|Gamma(x)|", [](Params& p) { return scalar(ln_gamma(p.num("x"))); });
  add("digamma", "x", "psi(x)", [](Params& p) { return scalar(digamma(p.num("x"))); });
  add("trigamma", "x", "psi'(x)", [](Params& p) { return scalar(trigamma(p.num("x"))); });
  add("beta", "a b", "B(a,b)", [](Params& p) { return scalar(beta(p.num("a"), p.num("b"))); });
  add("pochhammer", "a n", "(a)_n", [](Params& p) {
    const long long n = p.integer("n");
    if (n < 0 || n > 1'000'000) fail(errc::domain, "pochhammer needs 0 <= n <= 1e6");
    return scalar(pochhammer(p.num("a"), static_cast<unsigned>(n)));
  });
  add("detemple_R", "n", "R_n = H_n - log(n + 1/2)", [](Params& p) { return scalar(detemple_R(p.integer("n"))); });
  add("detemple_excess", "n", "R_n - gamma", [](Params& p) { return scalar(detemple_excess(p.integer("n"))); });
  add("bigH", "n", "H(n) = n^2 (R_n - gamma)", [](Params& p) { return scalar(bigH(p.integer("n"))); });
  add("karatsuba_gamma_estimate", "k", "exponentially convergent estimate of Euler's gamma", [](Params& p) {
    const auto e = karatsuba_gamma_estimate(small_int(p, "k"));
    return EvalOutput{{{"estimate", e.estimate}, {"error_bound", e.error_bound}, {"error", e.estimate - euler_gamma}},
                      std::nullopt};
  });
  add("karatsuba_asymptotic_gamma", "x n_terms", "Gamma(x+1) from the truncated asymptotic expansion",
      [](Params& p) { return scalar(karatsuba_asymptotic_gamma(p.num("x"), small_int(p, "n_terms"))); });
  add("anderson_f", "x", "log Gamma(x+1)/(x log x)", [](Params& p) { return scalar(anderson_f(p.num("x"))); });
  add("lemma_g", "x", "sum (n-x)/(n+x)^3", [](Params& p) { return series(lemma_g(p.num("x"))); });
  add("lemma_h", "x", "h(x)", [](Params& p) { return scalar(lemma_h(p.num("x"))); });
  add("ramanujan_theta", "x", "theta_x in Ramanujan's Gamma(x+1) expansion",
      [](Params& p) { return scalar(ramanujan_theta(p.num("x"))); });
  add("ball_volume", "n", "volume of the unit ball in R^n",
      [](Params& p) { return scalar(ball_volume(small_int(p, "n"))); });
  add("sphere_area", "n", "area of the unit sphere in R^n",
      [](Params& p) { return scalar(sphere_area(small_int(p, "n"))); });
  add("berg_pedersen_density", "t", "density of the measure representing 1/f",
      [](Params& p) { return scalar(berg_pedersen_density(p.num("t"))); });

  // hypergeometric
  add("gauss_2f1", "a b c z", "F(a,b;c;z)", [](Params& p) {
    const HypTriple h = triple(p);
    return series(gauss_2f1(h, p.num("z")));
  });
  add("gauss_value_at_1", "a b c", "F(a,b;c;1) for c > a + b",
      [](Params& p) { return scalar(gauss_value_at_1(triple(p))); });
  add("zero_balanced_R", "a b", "R(a,b) = -2 gamma - psi(a) - psi(b)",
      [](Params& p) { return scalar(zero_balanced_R(p.num("a"), p.num("b"))); });
  add("zero_balanced_near_one", "a b z", "leading behaviour of F(a,b;a+b;z) near z = 1", [](Params& p) {
    const auto e = zero_balanced_near_one(p.num("a"), p.num("b"), p.num("z"));
    return EvalOutput{{{"value", e.value}, {"error_scale", e.error_scale}}, std::nullopt};
  });
  add("gauss_2f1_derivative", "a b c z order", "d^k/dz^k F(a,b;c;z), k = 1 or 2", [](Params& p) {
    const HypTriple h = triple(p);
    const double z = p.num("z");
    return scalar(gauss_2f1_derivative(h, z, small_int(p, "order")));
  });
  add("contiguous_residuals", "a b c z", "residuals of the five contiguous relations", [](Params& p) {
    const HypTriple h = triple(p);
    const auto r = contiguous_residuals(h, p.num("z"));
    EvalOutput out;
    for (std::size_t i = 0; i < r.r.size(); ++i) out.fields.push_back({"r" + std::to_string(i + 1), r.r[i].relative()});
    return out;
  });
  add("corollary_313", "a c z", "uv1 + u1v - vv1 against its constant, b = 1 - a",
      [](Params& p) { return sides(corollary_313(p.num("a"), p.num("c"), p.num("z"))); });
  add("theorem31_k", "a b x", "F(a,b;a+b;1-e^{-x})",
      [](Params& p) { return scalar(theorem31_k(p.num("a"), p.num("b"), p.num("x"))); });
  add("theorem32_ell", "a b c x", "F(a,b;c;1-(1+x)^{-1/d}), d = a+b-c",
      [](Params& p) { return scalar(theorem32_ell(p.num("a"), p.num("b"), p.num("c"), p.num("x"))); });
  add("ode_residual", "kind a b c z [reflected]", "residual of a hypergeometric-type ODE", [](Params& p) {
    const OdeKind kind = ode_kind(p.text("kind", "hypergeometric"));
    const HypTriple h = triple(p);
    const double z = p.num("z");
    return residual(ode_residual(kind, h, z, p.flag("reflected", false)));
  });
  add("wronskian_identity", "a b c z", "Wronskian of F(z) and F(1-z) against its closed form", [](Params& p) {
    const HypTriple h = triple(p);
    return sides(wronskian_identity(h, p.num("z")));
  });
  add("elliott_identity", "a b c x", "Elliott's identity",
      [](Params& p) { return sides(elliott_identity(p.num("a"), p.num("b"), p.num("c"), p.num("x"))); });
  add("kummer_form30", "a b c x", "Kummer connection product",
      [](Params& p) { return sides(kummer_form30(p.num("a"), p.num("b"), p.num("c"), p.num("x"))); });
  add("pfq_terminating_3f2", "n a b e", "3F2(-n,a,b;1+a+b,1+e-n;1)",
      [](Params& p) { return scalar(pfq_terminating_3f2(small_int(p, "n"), p.num("a"), p.num("b"), p.num("e"))); });

  // elliptic
  add("ellint_K", "r | rp", "K(r)", [](Params& p) { return scalar(ellint_K(modulus(p))); });
  add("ellint_E", "r | rp", "E(r)", [](Params& p) { return scalar(ellint_E(modulus(p))); });
  add("ellint_Kp", "r | rp", "K'(r) = K(r')", [](Params& p) { return scalar(ellint_Kp(modulus(p))); });
  add("ellint_Ep", "r | rp", "E'(r) = E(r')", [](Params& p) { return scalar(ellint_Ep(modulus(p))); });
  add("ellint_K_series", "r | rp", "K(r) from the hypergeometric series",
      [](Params& p) { return scalar(ellint_K_series(modulus(p))); });
  add("gen_K", "a r | rp", "K_a(r)", [](Params& p) {
    const double a = p.num("a");
    return scalar(gen_K(a, modulus(p)));
  });
  add("gen_E", "a r | rp", "E_a(r)", [](Params& p) {
    const double a = p.num("a");
    return scalar(gen_E(a, modulus(p)));
  });
  add("gen_K_quadrature", "a r | rp", "K_a(r) by tanh-sinh quadrature", [](Params& p) {
    const double a = p.num("a");
    return scalar(gen_K_quadrature(a, modulus(p)));
  });
  add("mu", "r | rp", "Grotzsch ring modulus mu(r)", [](Params& p) { return scalar(mu(modulus(p))); });
  add("mu_a", "a r | rp", "generalized modulus mu_a(r)", [](Params& p) {
    const double a = p.num("a");
    return scalar(mu_a(a, modulus(p)));
  });
  add("mu_inverse", "y", "r with mu(r) = y", [](Params& p) {
    const Modulus m = mu_inverse(p.num("y"));
    return EvalOutput{{{"r", m.r()}, {"r_prime", m.r_prime()}}, std::nullopt};
  });
  add("phi_K", "K r", "distortion function phi_K(r)", [](Params& p) { return scalar(phi_K(p.num("K"), p.num("r"))); });
  add("legendre_residual", "r | rp", "EK' + E'K - KK' - pi/2",
      [](Params& p) { return residual(legendre_residual(modulus(p))); });
  add("gen_legendre_residual", "a r | rp", "generalized Legendre relation residual", [](Params& p) {
    const double a = p.num("a");
    return residual(gen_legendre_residual(a, modulus(p)));
  });
  add("landen_residuals", "r", "relative residuals of the ascending and descending Landen identities",
      [](Params& p) {
        const auto [asc, desc] = landen_residuals(p.num("r"));
        return EvalOutput{{{"ascending", asc}, {"descending", desc}}, std::nullopt};
      });
  add("landen_inequality_margins", "a b r", "margins of the four Landen-type inequalities", [](Params& p) {
    const auto m = landen_inequality_margins(p.num("a"), p.num("b"), p.num("r"));
    EvalOutput out;
    for (std::size_t i = 0; i < m.size(); ++i) out.fields.push_back({"m" + std::to_string(i + 1), m[i]});
    return out;
  });
  add("arth_power_margin", "r p", "K - (pi/2)(arth r/r)^p",
      [](Params& p) { return scalar(arth_power_margin(p.num("r"), p.num("p"))); });
  add("k_bound_margins", "r", "margins of the bounds on K", [](Params& p) {
    const auto m = k_bound_margins(p.num("r")).as_array();
    EvalOutput out;
    for (std::size_t i = 0; i < m.size(); ++i) out.fields.push_back({std::string(KBoundMargins::names[i]), m[i]});
    return out;
  });
  add("e_bound_margins", "r", "margins of the bounds on E", [](Params& p) {
    const auto m = e_bound_margins(p.num("r"));
    return EvalOutput{{{"muir", m.muir}, {"e-upper", m.upper}}, std::nullopt};
  });
  add("ellipse_perimeter", "b", "perimeter of the ellipse with semi-axes 1 and b",
      [](Params& p) { return scalar(ellipse_perimeter(p.num("b"))); });
  add("elliptic_ode_residuals", "a r", "residuals of the ODEs for K_a and E_a", [](Params& p) {
    const auto [k, e] = elliptic_ode_residuals(p.num("a"), p.num("r"));
    return EvalOutput{{{"K", k.relative()}, {"E", e.relative()}}, std::nullopt};
  });
  add("schwarzian_mu_residual", "a r", "numeric Schwarzian of mu_a against its closed form", [](Params& p) {
    const auto s = schwarzian_mu_residual(p.num("a"), p.num("r"));
    return EvalOutput{{{"numeric", s.numeric}, {"closed_form", s.closed_form}, {"relative_error", s.relative_error()}},
                      std::nullopt};
  });

  // means
  add("agm", "a b", "arithmetic-geometric mean", [](Params& p) {
    const auto r = agm(MeanPair(p.num("a"), p.num("b")));
    return EvalOutput{{{"value", r.value}, {"iterations", static_cast<double>(r.trace.iterations)}}, std::nullopt};
  });
  add("power_mean", "t a b [limit]", "((a^t + b^t)/2)^{1/t}", [](Params& p) {
    const double t = p.num("t");
    const MeanPair m(p.num("a"), p.num("b"));
    return scalar(power_mean(t, m, p.flag("limit", false)));
  });
  add("log_mean", "a b", "(a - b)/(log a - log b)",
      [](Params& p) { return scalar(log_mean(MeanPair(p.num("a"), p.num("b")))); });
  add("log_mean_t", "t x", "L_t(1,x)", [](Params& p) { return scalar(log_mean_t(p.num("t"), p.num("x"))); });
  add("borwein_chain_margins", "x", "L_{3/2}(1,x) - AGM(1,x) and AGM(1,x) - L(1,x)", [](Params& p) {
    const auto [upper, lower] = borwein_chain_margins(p.num("x"));
    return EvalOutput{{{"upper", upper}, {"lower", lower}}, std::nullopt};
  });
  add("lt_monotone_check", "x [t_lo t_hi t_n]", "1 if t -> L_t(1,x) is increasing on the t grid", [](Params& p) {
    const double x = p.num("x");
    verify::GridSpec g{p.num("t_lo", 0.05), p.num("t_hi", 5.0), p.integer("t_n", 100), verify::Spacing::log};
    const auto ts = g.points();
    return scalar(lt_monotone_check(x, ts) ? 1.0 : 0.0);
  });
  return t;
}

}  // namespace

const std::vector<Target>& targets() {
  static const std::vector<Target> all = make_targets();
  return all;
}

const Target& find_target(const std::string& name) {
  for (const Target& t : targets())
    if (t.name == name) return t;
  fail(errc::lookup, "unknown eval target '" + name + "'");
}

}  // namespace specfun::cli
