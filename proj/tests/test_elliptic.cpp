#include "mellint/elliptic.hpp"
#include "mellint/errors.hpp"
#include "mellint/quadrature.hpp"
#include "mellint/series.hpp"
#include "mellint/singular_values.hpp"
#include "support.hpp"

#include <cmath>

using namespace mellint;
using test::close;
using test::ctx50;

namespace {

BigReal K(const BigReal& m, const PrecisionContext& ctx) { return ellipK(EllipticParameter(m), ctx).re; }

// K(m) straight from its defining integral over theta, by quadrature.
BigReal K_by_definition(const BigReal& m, const PrecisionContext& ctx) {
  const Integrand f = [m](const BigReal& t) {
    const BigReal s = sin(t);
    return BigComplex(1 / sqrt(1 - m * s * s));
  };
  return integrate(f, ctx.real(0), ctx.pi() / 2, {}, ctx).value.re;
}

// n-th Maclaurin term (pi/2) ((1/2)_n / n!)^2 m^n.
BigReal series_term(const BigReal& m, unsigned n, const PrecisionContext& ctx) {
  BigReal t = ctx.pi() / 2;
  for (unsigned k = 1; k <= n; ++k) {
    const BigReal r = ctx.ratio(2 * static_cast<long>(k) - 1, 2 * static_cast<long>(k));
    t *= r * r * m;
  }
  return t;
}

}  // namespace

TEST_CASE("parameter regimes") {
  const PrecisionContext& ctx = ctx50();
  CHECK(EllipticParameter(ctx.real(-2)).regime() == EllipticRegime::negative);
  CHECK(EllipticParameter(ctx.real(0)).regime() == EllipticRegime::unit_interval);
  CHECK(EllipticParameter(ctx.parse("0.999")).regime() == EllipticRegime::unit_interval);
  CHECK(EllipticParameter(ctx.real(4)).regime() == EllipticRegime::super_unit);
  CHECK_THROWS_AS((void)EllipticParameter(ctx.real(1)).regime(), SingularityError);
  CHECK_THROWS_AS((void)ellipK(EllipticParameter(ctx.real(1)), ctx), SingularityError);
}

TEST_CASE("agm") {
  const PrecisionContext& ctx = ctx50();
  CHECK(agm(ctx.real(1), ctx.real(1), ctx) == 1);
  const BigReal a = ctx.parse("1.7");
  const BigReal b = ctx.parse("0.3");
  CHECK(close(agm(a, b, ctx), agm((a + b) / 2, sqrt(a * b), ctx), ctx.ten_to_minus(ctx.digits() + 2)));
  CHECK(close(agm(a, b, ctx), agm(b, a, ctx), ctx.ten_to_minus(ctx.digits() + 2)));
  CHECK_THROWS_AS((void)agm(ctx.real(0), ctx.real(1), ctx), DomainError);
  CHECK_THROWS_AS((void)agm(ctx.real(1), ctx.real(-1), ctx), DomainError);
}

TEST_CASE("K agrees with quadrature of its definition") {
  const PrecisionContext& ctx = ctx50();
  CHECK(close(K(ctx.real(0), ctx), ctx.pi() / 2, ctx.pass_tol()));
  // m = -1: pi / (2 agm(1, sqrt2)).
  CHECK(close(ctx.pi() / (2 * agm(ctx.real(1), sqrt(ctx.real(2)), ctx)), K_by_definition(ctx.real(-1), ctx),
              ctx.pass_tol()));
  for (const char* m : {"-7", "-0.5", "0.1", "0.3", "0.5", "0.9", "0.99"}) {
    INFO("m = " << m);
    CHECK(close(K(ctx.parse(m), ctx), K_by_definition(ctx.parse(m), ctx), ctx.pass_tol()));
  }
}

TEST_CASE("K by complement matches K") {
  const PrecisionContext& ctx = ctx50();
  for (const char* m : {"-3", "0", "0.25", "0.75"}) {
    const BigReal mv = ctx.parse(m);
    CHECK(close(ellipK_by_complement(1 - mv, ctx), K(mv, ctx), ctx.ten_to_minus(ctx.digits() + 2)));
  }
  CHECK_THROWS_AS((void)ellipK_by_complement(ctx.real(0), ctx), SingularityError);
}

TEST_CASE("imaginary-modulus transform") {
  const PrecisionContext& ctx = ctx50();
  for (long j = 1; j <= 9; ++j) {
    CAPTURE(j);
    const BigReal k = ctx.ratio(j, 10);
    const BigReal m = k * k;
    CHECK(close(sqrt(1 - m) * K(m, ctx), K(-m / (1 - m), ctx), ctx.pass_tol()));
  }
  const BigReal k = ctx.parse("0.6");
  CHECK(close(ctx.parse("0.8") * K(k * k, ctx), K(ctx.parse("-9/16"), ctx), ctx.pass_tol()));
}

TEST_CASE("K above m = 1 takes the branch with Im K <= 0") {
  const PrecisionContext& ctx = ctx50();
  const BigComplex k4 = ellipK(EllipticParameter(ctx.real(4)), ctx);
  CHECK(close(k4.re, K(ctx.ratio(1, 4), ctx) / 2, ctx.pass_tol()));
  CHECK(k4.im < 0);
  // Principal-branch integrand with m approached from below the real axis:
  // 1/sqrt(1 - 4 sin^2) on (0, t0), -i/sqrt(4 sin^2 - 1) on (t0, pi/2),
  // t0 = pi/6. Substituting t = t0 -+ (span) v^2 removes the inverse
  // square root, and sin t - sin t0 = 2 cos((t+t0)/2) sin((t-t0)/2) keeps
  // the factor that vanishes at t0 accurate.
  const BigReal t0 = ctx.pi() / 6;
  const BigReal span_hi = ctx.pi() / 2 - t0;
  const Integrand below = [t0](const BigReal& v) {
    const BigReal d = t0 * v * v;  // t0 - t
    const BigReal t = t0 - d;
    const BigReal gap = 4 * cos((t + t0) / 2) * sin(d / 2);  // 1 - 2 sin t
    return BigComplex(2 * t0 * v / sqrt(gap * (1 + 2 * sin(t))));
  };
  const Integrand above = [t0, span_hi](const BigReal& w) {
    const BigReal d = span_hi * w * w;  // t - t0
    const BigReal t = t0 + d;
    const BigReal gap = 4 * cos((t + t0) / 2) * sin(d / 2);  // 2 sin t - 1
    return BigComplex(-2 * span_hi * w / sqrt(gap * (1 + 2 * sin(t))));
  };
  const BigReal re = integrate(below, ctx.real(0), ctx.real(1), {}, ctx).value.re;
  const BigReal im = integrate(above, ctx.real(0), ctx.real(1), {}, ctx).value.re;
  CHECK(close(k4.re, re, ctx.pass_tol()));
  CHECK(close(k4.im, im, ctx.pass_tol()));
}

TEST_CASE("complementary K") {
  const PrecisionContext& ctx = ctx50();
  const BigReal half = ctx.ratio(1, 2);
  CHECK(close(ellipK_complementary(EllipticParameter(half), ctx).re, K(half, ctx), ctx.pass_tol()));
  CHECK(close(ellipK_complementary(EllipticParameter(ctx.ratio(3, 4)), ctx).re, K(ctx.ratio(1, 4), ctx),
              ctx.pass_tol()));
  const BigReal lambda = lambda_star(4, ctx);
  const EllipticParameter p(lambda * lambda);
  CHECK(close(ellipK_complementary(p, ctx).re / ellipK(p, ctx).re, ctx.real(2), ctx.pass_tol()));
  CHECK_THROWS_AS((void)ellipK_complementary(EllipticParameter(ctx.real(0)), ctx), SingularityError);
}

TEST_CASE("Maclaurin series") {
  const PrecisionContext& ctx = ctx50();
  CHECK(ellipK_series(EllipticParameter(ctx.parse("0.3")), 0, ctx) == ctx.pi() / 2);
  const BigReal half = ctx.ratio(1, 2);
  const BigReal step = ellipK_series(EllipticParameter(half), 11, ctx) - ellipK_series(EllipticParameter(half), 10, ctx);
  CHECK(close(step, series_term(half, 11, ctx), ctx.ten_to_minus(ctx.digits() + 2)));
  const BigReal quarter = ctx.ratio(1, 4);
  CHECK(close(ellipK_series(EllipticParameter(quarter), 200, ctx), K(quarter, ctx), ctx.pass_tol()));
  CHECK_THROWS_AS((void)ellipK_series(EllipticParameter(ctx.real(1)), 5, ctx), DomainError);
  CHECK_THROWS_AS((void)ellipK_series(EllipticParameter(ctx.parse("-1.5")), 5, ctx), DomainError);
}

// Terms shrink by at most |m| each, so the tail after N is below
// |t_{N+1}| / (1 - |m|) for every |m| < 1. At |m| = 0.1 that bound is far
// under working precision, so both bounds carry the rounding floor of
// the two evaluations.
static BigReal rounding_floor(const BigReal& m, const PrecisionContext& ctx) {
  return 16 * ctx.epsilon() * K(abs(m), ctx);
}

TEST_CASE("Maclaurin tail is bounded by the next term over 1 - |m|") {
  const PrecisionContext& ctx = ctx50();
  for (const char* m : {"0.1", "-0.1", "0.5", "-0.5", "0.9", "-0.9"}) {
    INFO("m = " << m);
    const BigReal mv = ctx.parse(m);
    const BigReal tail = abs(K(mv, ctx) - ellipK_series(EllipticParameter(mv), 200, ctx));
    CHECK(tail <= abs(series_term(mv, 201, ctx)) / (1 - abs(mv)) + rounding_floor(mv, ctx));
  }
}

TEST_CASE("Maclaurin tail within twice the next term where the ratio allows it") {
  const PrecisionContext& ctx = ctx50();
  for (const char* m : {"0.1", "-0.1", "0.5", "-0.5", "-0.9"}) {
    INFO("m = " << m);
    const BigReal mv = ctx.parse(m);
    const BigReal tail = abs(K(mv, ctx) - ellipK_series(EllipticParameter(mv), 200, ctx));
    CHECK(tail <= 2 * abs(series_term(mv, 201, ctx)) + rounding_floor(mv, ctx));
  }
}

// At m = 0.9 the tail is about 1/(1 - m) = 10 times the next term, so the
// factor-two bound cannot hold; kept to record that.
TEST_CASE("Maclaurin tail within twice the next term at m = 0.9" * doctest::should_fail()) {
  const PrecisionContext& ctx = ctx50();
  const BigReal mv = ctx.parse("0.9");
  const BigReal tail = abs(K(mv, ctx) - ellipK_series(EllipticParameter(mv), 200, ctx));
  const BigReal next = abs(series_term(mv, 201, ctx));
  MESSAGE("tail / next term = " << (tail / next).to_string(4));
  CHECK(tail <= 2 * next + rounding_floor(mv, ctx));
}

TEST_CASE("closed-form side of the one-parameter identity") {
  const PrecisionContext& ctx = ctx50();
  const BigReal pi2_4 = ctx.pi() * ctx.pi() / 4;
  CHECK(close(rhs_ode_closed_form(ctx.real(0), ctx), pi2_4, ctx.pass_tol()));
  // a = 1/sqrt8 through the Clausen-type series.
  const BigReal a = 1 / sqrt(ctx.real(8));
  CHECK(close(rhs_ode_closed_form(a, ctx), pi2_4 * clausen_sum(a, 200, ctx), ctx.pass_tol()));
  // Large a: a * rhs(a) -> pi^2/4 with an O(a^-2) correction.
  for (const char* big : {"1e4", "1e8"}) {
    const BigReal av = ctx.parse(big);
    CHECK(abs(av * rhs_ode_closed_form(av, ctx) / pi2_4 - 1) <= 1 / (av * av));
  }
  CHECK_THROWS_AS((void)rhs_ode_closed_form(ctx.real(-1), ctx), DomainError);
}

TEST_CASE("small-a behaviour of the closed form is quadratic") {
  const PrecisionContext& ctx = ctx50();
  const BigReal pi2_4 = ctx.pi() * ctx.pi() / 4;
  const BigReal a_fit = ctx.parse("1e-3");
  const BigReal c_fit = abs(rhs_ode_closed_form(a_fit, ctx) - pi2_4) / (a_fit * a_fit);
  MESSAGE("fitted C = " << c_fit.to_string(6));
  const BigReal a_check = ctx.parse("1e-4");
  CHECK(abs(rhs_ode_closed_form(a_check, ctx) - pi2_4) <= 2 * c_fit * a_check * a_check);
}

TEST_CASE("logarithmic blow-up at m = 1") {
  const PrecisionContext& ctx = ctx50();
  const BigReal limit = log(ctx.real(4));
  BigReal previous_gap = ctx.real(1);
  for (long j = 1; j <= 10; ++j) {
    CAPTURE(j);
    const BigReal mc = ctx.ten_to_minus(j);
    const BigReal shifted = K(1 - mc, ctx) + log(mc) / 2;
    const BigReal gap = abs(shifted - limit);
    CHECK(gap <= ctx.parse("0.05"));
    CHECK(gap < previous_gap);
    previous_gap = gap;
  }
}
