#include "mellint/elliptic.hpp"

#include "mellint/errors.hpp"

namespace mellint {

EllipticRegime EllipticParameter::regime() const {
  if (m_ == 1) throw SingularityError("K(m) is singular at m = 1");
  if (m_ < 0) return EllipticRegime::negative;
  if (m_ < 1) return EllipticRegime::unit_interval;
  return EllipticRegime::super_unit;
}

BigReal agm(const BigReal& a, const BigReal& b, const PrecisionContext& ctx) {
  if (!(a > 0) || !(b > 0)) throw DomainError("agm: both arguments must be positive");
  BigReal x = with_precision(a, ctx.bits());
  BigReal y = with_precision(b, ctx.bits());
  // Stop once the gap is below sqrt(eps); the last mean is then exact.
  const BigReal tol = ldexp(BigReal(1, ctx.bits()), -static_cast<long>(ctx.bits()) / 2 - 2);
  for (int iter = 0; iter < 200; ++iter) {
    if (abs(x - y) <= tol * y) return (x + y) / 2;
    BigReal mean = (x + y) / 2;
    y = sqrt(x * y);
    x = std::move(mean);
  }
  throw NonConvergence("agm did not converge in 200 iterations");
}

BigReal ellipK_by_complement(const BigReal& m_complement, const PrecisionContext& ctx) {
  if (m_complement.is_zero()) throw SingularityError("K(m) is singular at m = 1");
  if (!(m_complement > 0)) throw DomainError("ellipK_by_complement needs 1 - m > 0");
  return ctx.pi() / (2 * agm(ctx.real(1), sqrt(m_complement), ctx));
}

BigComplex ellipK(const EllipticParameter& p, const PrecisionContext& ctx) {
  const BigReal& m = p.m();
  switch (p.regime()) {
    case EllipticRegime::negative:
    case EllipticRegime::unit_interval:
      return BigComplex(ellipK_by_complement(1 - m, ctx));
    case EllipticRegime::super_unit: {
      const BigReal inv = 1 / m;
      const BigReal scale = 1 / sqrt(m);
      return {ellipK_by_complement(1 - inv, ctx) * scale, -ellipK_by_complement(inv, ctx) * scale};
    }
  }
  throw DomainError("unreachable elliptic regime");
}

BigReal ellipK_series(const EllipticParameter& p, unsigned terms, const PrecisionContext& ctx) {
  const BigReal m = with_precision(p.m(), ctx.bits());
  if (!(abs(m) < 1)) throw DomainError("Maclaurin series for K needs |m| < 1");
  BigReal term(1, ctx.bits());
  BigReal sum(1, ctx.bits());
  for (unsigned n = 1; n <= terms; ++n) {
    // term_n / term_{n-1} = ((n - 1/2) / n)^2 m
    const BigReal r = BigReal(2 * static_cast<long>(n) - 1, ctx.bits()) / (2 * static_cast<long>(n));
    term *= r * r * m;
    sum += term;
  }
  return ctx.pi() / 2 * sum;
}

BigComplex ellipK_complementary(const EllipticParameter& p, const PrecisionContext& ctx) {
  if (p.m().is_zero()) throw SingularityError("K'(m) is singular at m = 0");
  return ellipK(EllipticParameter(1 - p.m()), ctx);
}

BigReal rhs_ode_closed_form(const BigReal& a, const PrecisionContext& ctx) {
  if (a < 0) throw DomainError("closed form requires a >= 0");
  const BigReal aw = with_precision(a, ctx.bits());
  if (aw <= 1) {
    // 1 - m = (1 + sqrt(1 + a^2)) / 2, free of cancellation.
    const BigReal k = ellipK_by_complement((1 + sqrt(1 + aw * aw)) / 2, ctx);
    return k * k;
  }
  const BigReal inv = 1 / aw;
  const BigReal k = ellipK_by_complement((1 + sqrt(1 + inv * inv)) / 2, ctx);
  return k * k * inv;
}

}  // namespace mellint
