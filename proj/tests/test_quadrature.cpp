#include "mellint/errors.hpp"
#include "mellint/quadrature.hpp"
#include "mellint/singular_values.hpp"
#include "support.hpp"

using namespace mellint;
using test::close;
using test::ctx30;
using test::ctx50;

namespace {

QuadResult run(IntegrandId id, std::vector<BigReal> params, const PrecisionContext& ctx) {
  return integrate(IntegralSpec::make(id, std::move(params), ctx), ctx);
}

Integrand real_fn(std::function<BigReal(const BigReal&)> fn) {
  return [fn = std::move(fn)](const BigReal& x) { return BigComplex(fn(x)); };
}

// (pi^2/4) sum_{n<=N} (-1)^n ((1/2)_n / n!)^3 a^(2n), written out here
// rather than taken from the series module.
BigReal legendre_series_oracle(const BigReal& a, unsigned terms, const PrecisionContext& ctx) {
  BigReal coeff = ctx.real(1);
  BigReal sum = ctx.real(1);
  for (unsigned n = 1; n <= terms; ++n) {
    const BigReal r = ctx.ratio(2 * static_cast<long>(n) - 1, 2 * static_cast<long>(n));
    coeff *= -(r * r * r) * a * a;
    sum += coeff;
  }
  return ctx.pi() * ctx.pi() / 4 * sum;
}

}  // namespace

TEST_CASE("constant integrand") {
  const PrecisionContext& ctx = ctx50();
  const QuadResult q = run(IntegrandId::unit, {}, ctx);
  CHECK(close(q.value.re, ctx.real(1), ctx.ten_to_minus(ctx.digits() - 5)));
  CHECK(q.err_estimate < ctx.ten_to_minus(ctx.digits() - 5));
  CHECK(q.err_estimate >= 0);
  CHECK(q.levels >= 3);
}

TEST_CASE("elementary integrals with known values") {
  const PrecisionContext& ctx = ctx50();
  const BigReal zero = ctx.real(0);
  const BigReal one = ctx.real(1);
  for (long k : {1L, 4L, 9L}) {
    const QuadResult q = integrate(real_fn([k](const BigReal& x) { return pow(x, k); }), zero, one, {}, ctx);
    CHECK(close(q.value.re, ctx.ratio(1, k + 1), ctx.quad_target()));
    CHECK(abs(q.value.re - ctx.ratio(1, k + 1)) <= 10 * q.err_estimate + ctx.epsilon());
  }
  // Endpoint logarithm.
  const QuadResult log_end = integrate(real_fn([](const BigReal& x) { return log(x); }), zero, one, {}, ctx);
  CHECK(close(log_end.value.re, ctx.real(-1), ctx.quad_target()));
  // Interior logarithm, split at 1/2: integral of log|x - 1/2| = -1 - log 2.
  const BigReal half = ctx.ratio(1, 2);
  const std::vector<BigReal> at_half{half};
  const QuadResult log_mid =
      integrate(real_fn([half](const BigReal& x) { return log(abs(x - half)); }), zero, one, at_half, ctx);
  CHECK(close(log_mid.value.re, -1 - log(ctx.real(2)), ctx.quad_target()));
  CHECK(log_mid.panels == 2);
  // Squared endpoint logarithm: integral of log(x)^2 = 2.
  const QuadResult log_sq = integrate(real_fn([](const BigReal& x) {
                                        const BigReal l = log(x);
                                        return l * l;
                                      }),
                                      zero, one, {}, ctx);
  CHECK(close(log_sq.value.re, ctx.real(2), ctx.quad_target()));
}

TEST_CASE("semi-infinite integrals") {
  const PrecisionContext& ctx = ctx50();
  const BigReal inf = BigReal::infinity(ctx.bits());
  const QuadResult e = integrate(real_fn([](const BigReal& x) { return exp(-x); }), ctx.real(0), inf, {}, ctx);
  CHECK(close(e.value.re, ctx.real(1), ctx.quad_target()));
  const QuadResult lorentz =
      integrate(real_fn([](const BigReal& x) { return 1 / (1 + x * x); }), ctx.real(0), inf, {}, ctx);
  CHECK(close(lorentz.value.re, ctx.pi() / 2, ctx.quad_target()));
  const std::vector<BigReal> at_one{ctx.real(1)};
  const QuadResult split =
      integrate(real_fn([](const BigReal& x) { return 1 / (1 + x * x); }), ctx.real(0), inf, at_one, ctx);
  CHECK(close(split.value.re, ctx.pi() / 2, ctx.quad_target()));
  CHECK(split.panels == 2);
}

TEST_CASE("reflection symmetry of the kernel integral") {
  // K(2 sqrt(x(1-x))) is symmetric about 1/2, so f(x) and f(1-x) integrate alike.
  const PrecisionContext& ctx = ctx50();
  const BigReal a = ctx.parse("0.4");
  const Integrand forward = make_integrand(IntegralSpec::make(IntegrandId::ode_kernel, {a}, ctx), ctx);
  const Integrand reflected = [forward](const BigReal& x) { return forward(1 - x); };
  const std::vector<BigReal> at_half{ctx.ratio(1, 2)};
  const QuadResult q1 = integrate(forward, ctx.real(0), ctx.real(1), at_half, ctx);
  const QuadResult q2 = integrate(reflected, ctx.real(0), ctx.real(1), at_half, ctx);
  CHECK(close(q1.value.re, q2.value.re, ctx.pass_tol()));
}

TEST_CASE("kernel integral base case") {
  const PrecisionContext& ctx = ctx50();
  const QuadResult q = run(IntegrandId::base_kernel, {}, ctx);
  CHECK(close(q.value.re, ctx.pi() * ctx.pi() / 4, ctx.pass_tol()));
  CHECK(q.panels == 2);
}

TEST_CASE("one-parameter kernel integral against the Legendre-sum oracle") {
  const PrecisionContext& ctx = ctx50();
  for (const char* a : {"0.1", "0.5", "0.8"}) {
    INFO("a = " << a);
    const BigReal av = ctx.parse(a);
    CHECK(close(run(IntegrandId::ode_kernel, {av}, ctx).value.re, legendre_series_oracle(av, 300, ctx),
                ctx.pass_tol()));
  }
}

TEST_CASE("three forms of the semi-infinite Re K integral agree") {
  const PrecisionContext& ctx = ctx50();
  for (const char* c : {"1/2", "1", "2"}) {
    INFO("c = " << c);
    const BigReal cv = ctx.parse(c);
    const BigReal expected = ctx.pi() / (2 * sqrt(1 + cv * cv));
    const QuadResult theta = run(IntegrandId::axis_theta, {cv}, ctx);
    const QuadResult x = run(IntegrandId::axis_x, {cv}, ctx);
    const QuadResult re_k = run(IntegrandId::axis_re_k, {cv}, ctx);
    CHECK(close(theta.value.re, expected, ctx.pass_tol()));
    CHECK(close(x.value.re, expected, ctx.pass_tol()));
    CHECK(close(re_k.value.re, expected, ctx.pass_tol()));
    // b = 0 member of the two-parameter family is the theta form.
    CHECK(close(run(IntegrandId::pde_theta, {ctx.real(0), cv}, ctx).value.re, theta.value.re, ctx.pass_tol()));
  }
}

TEST_CASE("complex linear kernel reduces to the fixed kernels") {
  const PrecisionContext& ctx = ctx50();
  // Zero imaginary slope reproduces the real r = 4 integrand.
  const QuadResult real_case = integrate_complex_kernel(
      IntegralSpec::make(IntegrandId::complex_linear_kernel,
                         {ctx.ratio(9, 8), 1 / sqrt(ctx.real(2)), ctx.real(0)}, ctx),
      ctx);
  CHECK(close(real_case.value.re, run(IntegrandId::singular_r4, {}, ctx).value.re, ctx.pass_tol()));
  CHECK(real_case.value.im.is_zero());

  const QuadResult r3 = integrate_complex_kernel(
      IntegralSpec::make(IntegrandId::complex_linear_kernel, {ctx.real(3), ctx.real(0), ctx.real(4)}, ctx), ctx);
  const QuadResult r3_fixed = integrate_complex_kernel(IntegralSpec::make(IntegrandId::complex_r3, {}, ctx), ctx);
  CHECK(close(r3.value, r3_fixed.value, ctx.pass_tol()));
  CHECK(abs(r3_fixed.value.im) <= 10 * r3_fixed.err_estimate);

  const QuadResult r7 = integrate_complex_kernel(
      IntegralSpec::make(IntegrandId::complex_linear_kernel, {ctx.real(63), ctx.real(0), ctx.real(16)}, ctx), ctx);
  const QuadResult r7_fixed = integrate_complex_kernel(IntegralSpec::make(IntegrandId::complex_r7, {}, ctx), ctx);
  CHECK(close(r7.value, r7_fixed.value, ctx.pass_tol()));
  CHECK(abs(r7_fixed.value.im) <= 10 * r7_fixed.err_estimate);
}

TEST_CASE("imaginary slope breaks the symmetry only when the real part is asymmetric") {
  // p + i s (1 - 2x) is conjugated by x -> 1 - x, so the integral is real;
  // adding a real slope makes it genuinely complex.
  const PrecisionContext& ctx = ctx50();
  const QuadResult skew = integrate_complex_kernel(
      IntegralSpec::make(IntegrandId::complex_linear_kernel, {ctx.real(3), ctx.real(1), ctx.real(4)}, ctx), ctx);
  CHECK(abs(skew.value.im) > ctx.parse("1e-3"));
}

TEST_CASE("results are reproducible") {
  const PrecisionContext& ctx = ctx50();
  const QuadResult a = run(IntegrandId::pde_theta, {ctx.real(1), ctx.real(2)}, ctx);
  const QuadResult b = run(IntegrandId::pde_theta, {ctx.real(1), ctx.real(2)}, ctx);
  CHECK(a.value.re == b.value.re);
  CHECK(a.err_estimate == b.err_estimate);
  CHECK(a.levels == b.levels);
}

TEST_CASE("raising the level cap cannot change a converged result") {
  const PrecisionContext& ctx = ctx30();
  const QuadResult capped = run(IntegrandId::base_kernel, {}, ctx);
  const QuadResult roomy = run(IntegrandId::base_kernel, {}, ctx.with_level_cap(16));
  CHECK(capped.value.re == roomy.value.re);
}

TEST_CASE("quadrature error paths") {
  const PrecisionContext& ctx = ctx50();
  const BigReal zero = ctx.real(0);
  const BigReal one = ctx.real(1);
  // Level cap too low for the target.
  CHECK_THROWS_AS((void)run(IntegrandId::base_kernel, {}, ctx.with_level_cap(3)), NonConvergence);
  // Undeclared singular point at 1/2.
  const BigReal half = ctx.ratio(1, 2);
  const Integrand pole = real_fn([half](const BigReal& x) {
    if (x == half) throw DomainError("pole");
    return 1 / abs(x - half);
  });
  CHECK_THROWS_AS((void)integrate(real_fn([](const BigReal& x) {
                    if (x > ctx50().ratio(1, 3)) throw DomainError("outside support");
                    return x;
                  }), zero, one, {}, ctx),
                  IntegrandFailure);
  CHECK_THROWS_AS((void)integrate(real_fn([](const BigReal& x) { return log(x - x); }), zero, one, {}, ctx),
                  IntegrandFailure);
  CHECK_THROWS((void)integrate(pole, zero, one, {}, ctx));

  CHECK_THROWS_AS((void)integrate(real_fn([](const BigReal& x) { return x; }), one, zero, {}, ctx), DomainError);
  const std::vector<BigReal> outside{ctx.real(2)};
  CHECK_THROWS_AS((void)integrate(real_fn([](const BigReal& x) { return x; }), zero, one, outside, ctx),
                  DomainError);
  CHECK_THROWS_AS((void)IntegralSpec::make(IntegrandId::ode_kernel, {}, ctx), DomainError);
  CHECK_THROWS_AS((void)IntegralSpec::make(IntegrandId::pde_theta, {one}, ctx), DomainError);
  CHECK_THROWS_AS((void)integrate_complex_kernel(IntegralSpec::make(IntegrandId::base_kernel, {}, ctx), ctx),
                  DomainError);

  IntegralSpec bad = IntegralSpec::make(IntegrandId::unit, {}, ctx);
  bad.singular_points.push_back(ctx.real(5));
  CHECK_THROWS_AS(bad.validate(), DomainError);
}

TEST_CASE("integrand metadata") {
  CHECK(integrand_arity(IntegrandId::base_kernel) == 0);
  CHECK(integrand_arity(IntegrandId::ode_kernel) == 1);
  CHECK(integrand_arity(IntegrandId::pde_theta) == 2);
  CHECK(integrand_arity(IntegrandId::complex_linear_kernel) == 3);
  CHECK(is_complex_kernel(IntegrandId::complex_r3));
  CHECK(!is_complex_kernel(IntegrandId::singular_r4));
  CHECK(to_string(IntegrandId::axis_re_k) == "axis_re_k");
  const PrecisionContext& ctx = ctx50();
  const IntegralSpec pde = IntegralSpec::make(IntegrandId::pde_theta, {ctx.real(0), ctx.real(1)}, ctx);
  REQUIRE(pde.singular_points.size() == 1);
  CHECK(close(pde.singular_points[0], ctx.pi() / 4, ctx.ten_to_minus(ctx.digits())));
  CHECK(IntegralSpec::make(IntegrandId::pde_theta, {ctx.real(1), ctx.real(1)}, ctx).singular_points.empty());
  CHECK(!IntegralSpec::make(IntegrandId::axis_x, {ctx.real(1)}, ctx).hi.is_finite());
}
