#include "mellint/elliptic.hpp"
#include "mellint/errors.hpp"
#include "mellint/legendre.hpp"
#include "mellint/quadrature.hpp"
#include "support.hpp"

using namespace mellint;
using test::close;
using test::ctx30;
using test::ctx50;

namespace {

// P_n(x) = 2^-n sum_k C(n,k)^2 (x-1)^(n-k) (x+1)^k.
BigReal legendre_binomial(unsigned n, const BigReal& x, const PrecisionContext& ctx) {
  BigReal sum = ctx.real(0);
  BigReal binom = ctx.real(1);
  for (unsigned k = 0; k <= n; ++k) {
    if (k > 0) binom = binom * static_cast<long>(n - k + 1) / static_cast<long>(k);
    sum += binom * binom * pow(x - 1, static_cast<long>(n - k)) * pow(x + 1, static_cast<long>(k));
  }
  return ldexp(sum, -static_cast<long>(n));
}

BigReal kernel_K(const BigReal& x, const PrecisionContext& ctx) {
  const BigReal d = 1 - 2 * x;
  return ellipK_by_complement(d * d, ctx);
}

}  // namespace

TEST_CASE("recurrence agrees with the binomial-sum formula") {
  const PrecisionContext& ctx = ctx50();
  for (const char* x : {"-1", "-0.7", "0", "0.3", "0.95", "1"}) {
    INFO("x = " << x);
    const BigReal xv = ctx.parse(x);
    const auto all = legendre_P_all(20, xv, ctx);
    REQUIRE(all.size() == 21);
    for (unsigned n = 0; n <= 20; ++n) {
      CHECK(close(all[n], legendre_binomial(n, xv, ctx), ctx.ten_to_minus(ctx.digits())));
      CHECK(all[n] == legendre_P(n, xv, ctx));
    }
  }
  CHECK(legendre_P(7, ctx.real(1), ctx) == 1);
  CHECK(legendre_P(7, ctx.real(-1), ctx) == -1);
}

TEST_CASE("Gram matrix on [0, 1]") {
  const PrecisionContext& ctx = ctx50();
  const Matrix gram = orthogonality_gram(12, ctx);
  REQUIRE(gram.size() == 13);
  for (unsigned n = 0; n <= 12; ++n) {
    for (unsigned m = 0; m <= 12; ++m) {
      const BigReal expected = n == m ? ctx.ratio(1, 2 * static_cast<long>(n) + 1) : ctx.real(0);
      CHECK(close(gram[n][m], expected, 10 * ctx.quad_target()));
    }
  }
  CHECK_THROWS_AS((void)orthogonality_gram(21, ctx), DomainError);
}

TEST_CASE("generating function") {
  const PrecisionContext& ctx = ctx50();
  for (const char* a : {"0.2", "-0.5"}) {
    for (const char* x : {"0", "0.3", "1"}) {
      INFO("a = " << a << ", x = " << x);
      CHECK(generating_function_check(ctx.parse(a), ctx.parse(x), 250, ctx) <= ctx.pass_tol());
    }
  }
  // Truncated early the residual is the tail, not rounding.
  CHECK(generating_function_check(ctx.parse("0.5"), ctx.parse("0.3"), 10, ctx) > ctx.parse("1e-5"));
  CHECK_THROWS_AS((void)generating_function_check(ctx.real(1), ctx.parse("0.3"), 10, ctx), DomainError);
  CHECK_THROWS_AS((void)generating_function_check(ctx.parse("0.5"), ctx.real(2), 10, ctx), DomainError);
}

TEST_CASE("Legendre expansion of the kernel converges pointwise") {
  const PrecisionContext& ctx = ctx30();
  const BigReal x = ctx.ratio(1, 4);
  const BigReal target = 4 * kernel_K(x, ctx) / (ctx.pi() * ctx.pi());
  const BigReal err = abs(baranov_partial_sum(x, 2000, ctx) - target);
  MESSAGE("error at N = 2000: " << err.to_string(4));
  CHECK(err <= ctx.parse("1e-3"));
  CHECK(err < abs(baranov_partial_sum(x, 200, ctx) - target));
  CHECK_THROWS_AS((void)baranov_partial_sum(ctx.real(2), 5, ctx), DomainError);
}

TEST_CASE("moments of the kernel against Legendre polynomials") {
  const PrecisionContext& ctx = ctx50();
  const std::vector<BigReal> at_half{ctx.ratio(1, 2)};
  BigReal coeff = ctx.real(1);  // (-1)^n ((1/2)_n / n!)^3
  for (unsigned n = 0; n <= 6; ++n) {
    INFO("n = " << n);
    if (n > 0) {
      const BigReal r = ctx.ratio(2 * static_cast<long>(n) - 1, 2 * static_cast<long>(n));
      coeff *= -(r * r * r);
    }
    const auto moment = [&](unsigned degree) {
      const Integrand f = [&ctx, degree](const BigReal& x) {
        return BigComplex(kernel_K(x, ctx) * legendre_P(degree, 2 * x - 1, ctx));
      };
      return integrate(f, ctx.real(0), ctx.real(1), at_half, ctx).value.re;
    };
    // Odd degrees vanish by the symmetry x -> 1 - x.
    CHECK(abs(moment(2 * n + 1)) <= ctx.pass_tol());
    CHECK(close(moment(2 * n), ctx.pi() * ctx.pi() / 4 * coeff, ctx.pass_tol()));
  }
}

TEST_CASE("projection route reproduces the kernel integral") {
  const PrecisionContext& ctx = ctx50();
  for (const char* a : {"0.1", "0.5", "0.8"}) {
    INFO("a = " << a);
    const BigReal av = ctx.parse(a);
    const BigReal quad = integrate(IntegralSpec::make(IntegrandId::ode_kernel, {av}, ctx), ctx).value.re;
    CHECK(close(projection_sum(av, 400, ctx), quad, ctx.pass_tol()));
  }
}
