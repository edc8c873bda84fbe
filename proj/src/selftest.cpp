#include "mellint/selftest.hpp"

#include "mellint/diffop.hpp"
#include "mellint/elliptic.hpp"
#include "mellint/identities.hpp"
#include "mellint/legendre.hpp"
#include "mellint/numeric_kernel.hpp"
#include "mellint/parallel.hpp"
#include "mellint/quadrature.hpp"
#include "mellint/series.hpp"
#include "mellint/singular_values.hpp"

#include <array>
#include <chrono>
#include <cmath>
#include <functional>

namespace mellint {

namespace {

class Checker {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (first_failure_.empty()) first_failure_ = what;
  }
  // value <= bound, with both in the failure text.
  void within(const BigReal& value, const BigReal& bound, const std::string& what) {
    check(value <= bound, what + ": " + value.to_string(4) + " > " + bound.to_string(4));
  }

  int checks() const { return checks_; }
  int failures() const { return failures_; }
  const std::string& first_failure() const { return first_failure_; }

 private:
  int checks_ = 0;
  int failures_ = 0;
  std::string first_failure_;
};

using Suite = std::function<void(Checker&, const PrecisionContext&)>;

void constants_suite(Checker& c, const PrecisionContext& ctx) {
  const BigReal pi = const_pi(ctx);
  c.within(abs(pi - 4 * atan(ctx.real(1))), ctx.pass_tol(), "pi vs 4 atan(1)");
  const BigReal g_half = gamma(ctx.ratio(1, 2), ctx);
  c.within(abs(g_half * g_half - pi), ctx.pass_tol(), "Gamma(1/2)^2 vs pi");
  const BigReal reflect = gamma(ctx.ratio(1, 4), ctx) * gamma(ctx.ratio(3, 4), ctx);
  c.within(abs(reflect - pi * sqrt(ctx.real(2))), ctx.pass_tol(), "Gamma(1/4) Gamma(3/4) vs pi sqrt2");
  BigReal product = ctx.real(1);
  for (long k = 1; k <= 6; ++k) product *= gamma(ctx.ratio(k, 7), ctx);
  const BigReal two_pi = 2 * pi;
  c.within(abs(product - two_pi * two_pi * two_pi / sqrt(ctx.real(7))), ctx.pass_tol() * 100,
           "Gamma(1/7)...Gamma(6/7)");
}

void transform_suite(Checker& c, const PrecisionContext& ctx) {
  for (long j = 1; j <= 9; ++j) {
    const BigReal k = ctx.ratio(j, 10);
    const BigReal m = k * k;
    const BigReal kc = sqrt(1 - m);
    const BigComplex lhs = kc * ellipK(EllipticParameter(m), ctx);
    const BigComplex rhs = ellipK(EllipticParameter(-m / (1 - m)), ctx);
    c.within(abs(lhs - rhs), ctx.pass_tol(), "imaginary-modulus transform at k = 0." + std::to_string(j));
  }
}

void singular_value_suite(Checker& c, const PrecisionContext& ctx) {
  for (int r : {3, 4, 7}) {
    c.within(verify_singular_value(r, ctx), ctx.pass_tol(), "K'/K - sqrt(r) at r = " + std::to_string(r));
  }
}

void orthogonality_suite(Checker& c, const PrecisionContext& ctx) {
  const unsigned n_max = 12;
  const Matrix gram = orthogonality_gram(n_max, ctx);
  const BigReal bound = 10 * ctx.quad_target();
  for (unsigned n = 0; n <= n_max; ++n) {
    for (unsigned m = 0; m <= n_max; ++m) {
      const BigReal expected = n == m ? ctx.ratio(1, 2 * static_cast<long>(n) + 1) : ctx.real(0);
      c.within(abs(gram[n][m] - expected), bound,
               "Gram entry (" + std::to_string(n) + ", " + std::to_string(m) + ")");
    }
  }
}

void generating_function_suite(Checker& c, const PrecisionContext& ctx) {
  for (const char* a_text : {"3/10", "1/2", "7/10"}) {
    const BigReal a = ctx.parse(a_text);
    // |P_n| <= 1 on [-1, 1], so the tail is below |a|^(N+1) / (1 - |a|).
    const double need = (ctx.digits() + 5) * std::log(10.0) / -std::log(a.to_double());
    const unsigned terms = static_cast<unsigned>(std::ceil(need)) + 5;
    for (const char* x_text : {"0", "1/4", "1/2", "1"}) {
      c.within(generating_function_check(a, ctx.parse(x_text), terms, ctx), ctx.pass_tol(),
               std::string("generating function at a = ") + a_text + ", x = " + x_text);
    }
  }
}

void ode_suite(Checker& c, const PrecisionContext& ctx) {
  const auto results = parallel_map<std::pair<OdeResidual, OdeResidual>>(9, [&](std::size_t j) {
    const BigReal a = ctx.ratio(static_cast<long>(j) + 1, 10);
    return std::pair{ode_annihilator_residual(a, ctx), ode_annihilator_residual(a, ctx, OperatorVariant::corrupted)};
  });
  for (const auto& [exact, corrupted] : results) {
    const std::string at = " at a = " + exact.a.to_string(3);
    c.check(exact.passed(), "ODE residual" + at + " = " + exact.residual.to_string(4));
    c.check(!corrupted.passed(), "corrupted ODE operator passes" + at);
    c.check(corrupted.residual >= exact.residual * 1000000,
            "corrupted ODE residual not 1e6 x exact" + at);
  }
}

void ode_closed_form_suite(Checker& c, const PrecisionContext& ctx) {
  for (const char* a_text : {"3/10", "7/10"}) {
    const OdeResidual r = ode_annihilator_residual_closed_form(ctx.parse(a_text), ctx);
    c.check(r.passed(), std::string("closed-form ODE residual at a = ") + a_text + " = " + r.residual.to_string(4));
  }
}

void laplace_suite(Checker& c, const PrecisionContext& ctx) {
  const std::array<BigReal, 3> thetas{ctx.pi() / 6, ctx.pi() / 4, ctx.pi() / 3};
  const std::array<BigReal, 3> values{ctx.ratio(1, 2), ctx.real(1), ctx.real(2)};
  const auto results = parallel_map<std::pair<LaplaceResidual, LaplaceResidual>>(27, [&](std::size_t k) {
    const BigReal& theta = thetas[k / 9];
    const BigReal& b = values[(k / 3) % 3];
    const BigReal& cc = values[k % 3];
    return std::pair{laplace_residual(theta, b, cc, ctx),
                     laplace_residual(theta, b, cc, ctx, OperatorVariant::corrupted)};
  });
  for (const auto& [exact, corrupted] : results) {
    const std::string at = " at (theta, b, c) = (" + exact.theta.to_string(4) + ", " + exact.b.to_string(3) +
                           ", " + exact.c.to_string(3) + ")";
    c.check(exact.passed(), "Laplace residual" + at + " = " + exact.residual.to_string(4));
    c.check(!corrupted.passed(), "corrupted Laplacian passes" + at);
    c.check(corrupted.residual >= exact.residual * 1000000, "corrupted Laplacian not 1e6 x exact" + at);
  }
  // Axially symmetric point-source potential, c radial.
  const BigReal b0 = ctx.ratio(1, 3);
  const auto source = [b0](const BigReal& b, const BigReal& cc) {
    const BigReal db = b - b0;
    return 1 / sqrt(cc * cc + db * db);
  };
  const LaplaceResidual ref = laplace_residual_of(source, ctx.real(1), ctx.real(1), ctx);
  c.check(ref.passed(), "harmonic reference residual = " + ref.residual.to_string(4));
}

void catalog_suite(Checker& c, const PrecisionContext& ctx) {
  struct Case {
    IdentityId id;
    ParamMap params;
  };
  std::vector<Case> cases;
  for (IdentityId id : kAllIdentities) cases.push_back({id, {}});
  for (long j = 1; j <= 9; ++j) cases.push_back({IdentityId::I1, {{"a", ctx.ratio(j, 10)}}});
  for (const char* a : {"3/2", "2", "4"}) cases.push_back({IdentityId::I1_ext, {{"a", ctx.parse(a)}}});
  const char* grid[] = {"1/2", "1", "2"};
  for (const char* b : grid) {
    for (const char* cc : grid) cases.push_back({IdentityId::I6, {{"b", ctx.parse(b)}, {"c", ctx.parse(cc)}}});
  }
  for (const char* cc : grid) cases.push_back({IdentityId::I9, {{"c", ctx.parse(cc)}}});
  cases.push_back({IdentityId::I12, {{"series", ctx.real(2)}}});

  const auto reports = parallel_map<VerificationReport>(cases.size(), [&](std::size_t k) {
    return verify(cases[k].id, cases[k].params, ctx);
  });
  for (const auto& r : reports) {
    std::string label(to_string(r.id));
    for (const auto& [name, value] : r.params) label += " " + name + "=" + value.to_string(4);
    c.check(r.passed, label + " abs_err " + r.abs_err.to_string(4));
  }
}

void cross_route_suite(Checker& c, const PrecisionContext& ctx) {
  for (const char* a_text : {"1/10", "1/2", "9/10"}) {
    const BigReal a = ctx.parse(a_text);
    const BigReal quad = integrate(IntegralSpec::make(IntegrandId::ode_kernel, {a}, ctx), ctx).value.re;
    const BigReal series = legendre_sum(a, auto_series_terms(a, ctx), ctx);
    const BigReal closed = rhs_ode_closed_form(a, ctx);
    const std::string at = std::string(" at a = ") + a_text;
    c.within(abs(quad - series), ctx.pass_tol(), "quadrature vs Legendre sum" + at);
    c.within(abs(quad - closed), ctx.pass_tol(), "quadrature vs closed form" + at);
    c.within(abs(series - closed), ctx.pass_tol(), "Legendre sum vs closed form" + at);
  }
}

void bridge_suite(Checker& c, const PrecisionContext& ctx) {
  for (SeriesId id : {SeriesId::guillera_bb, SeriesId::bb_sqrt3}) {
    const LinearBridge bridge = linear_bridge(id, ctx);
    const BigReal bridged =
        bridge.alpha * clausen_sum(bridge.a_star, 400, ctx) + bridge.beta * clausen_sum_da(bridge.a_star, 400, ctx);
    const BigReal direct = ramanujan_sum(id, 400, ctx);
    const std::string name(to_string(id));
    c.within(abs(bridged - direct), ctx.pass_tol(), "bridged series vs " + name);
    c.within(abs(direct - ramanujan_series(id, ctx).target), ctx.pass_tol(), name + " vs closed form");
  }
  // The integral forms carry the same constants.
  for (IdentityId id : {IdentityId::I2, IdentityId::I10}) {
    const VerificationReport r = verify(id, {}, ctx);
    c.check(r.passed, std::string(to_string(id)) + " abs_err " + r.abs_err.to_string(4));
  }
}

}  // namespace

std::vector<SuiteResult> run_selftest(bool quick) {
  const PrecisionContext ctx(quick ? 30 : PrecisionContext::kDefaultDigits);
  const std::vector<std::pair<std::string, Suite>> suites = {
      {"constants", constants_suite},
      {"imaginary-modulus transform", transform_suite},
      {"singular values", singular_value_suite},
      {"Legendre orthogonality", orthogonality_suite},
      {"Legendre generating function", generating_function_suite},
      {"ODE annihilator", ode_suite},
      {"ODE closed form", ode_closed_form_suite},
      {"Laplace annihilator", laplace_suite},
      {"identity catalog", catalog_suite},
      {"cross-route", cross_route_suite},
      {"series bridge", bridge_suite},
  };
  std::vector<SuiteResult> out;
  for (const auto& [name, suite] : suites) {
    const auto start = std::chrono::steady_clock::now();
    SuiteResult result;
    result.name = name;
    Checker checker;
    try {
      suite(checker, ctx);
      result.passed = checker.failures() == 0;
      result.detail = checker.first_failure();
    } catch (const std::exception& e) {
      result.passed = false;
      result.detail = std::string("threw: ") + e.what();
    }
    result.checks = checker.checks();
    result.failures = checker.failures();
    result.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    out.push_back(std::move(result));
  }
  return out;
}

}  // namespace mellint
