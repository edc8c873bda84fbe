#include "mellint/diffop.hpp"

#include "mellint/elliptic.hpp"
#include "mellint/errors.hpp"
#include "mellint/quadrature.hpp"

namespace mellint {

namespace {

void require_open_unit(const BigReal& a) {
  if (!(a > 0) || !(a < 1)) throw DomainError("operator check needs a in (0, 1)");
}

BigReal fd_step(const PrecisionContext& ctx) { return ctx.ten_to_minus(ctx.digits() / 5); }

struct Stencil {
  BigReal m2, m1, z, p1, p2;
};

Stencil sample(const std::function<BigReal(const BigReal&)>& fn, const BigReal& x, const BigReal& h) {
  return {fn(x - 2 * h), fn(x - h), fn(x), fn(x + h), fn(x + 2 * h)};
}

// Five-point central formulas: O(h^4) for D1 and D2, O(h^2) for D3.
BigReal first(const Stencil& s, const BigReal& h) {
  return (s.m2 - 8 * s.m1 + 8 * s.p1 - s.p2) / (12 * h);
}
BigReal second(const Stencil& s, const BigReal& h) {
  return (-s.m2 + 16 * s.m1 - 30 * s.z + 16 * s.p1 - s.p2) / (12 * h * h);
}
BigReal third(const Stencil& s, const BigReal& h) {
  return (s.p2 - 2 * s.p1 + 2 * s.m1 - s.m2) / (2 * h * h * h);
}

}  // namespace

OdeResidual apply_ode_operator(const BigReal& a, const Derivatives& d, OperatorVariant variant,
                               const BigReal& threshold) {
  const BigReal a2 = a * a;
  const BigReal t3 = a2 * (1 + a2) * d.d3;
  const BigReal t2 = 3 * a * (1 + 2 * a2) * d.d2;
  const BigReal t1 = (1 + 7 * a2) * d.d1;
  const BigReal t0 = (variant == OperatorVariant::exact ? a : 2 * a) * d.f;
  return {a, abs(t3 + t2 + t1 + t0), max(max(abs(t3), abs(t2)), max(abs(t1), abs(t0))), threshold};
}

Derivatives ode_integral_derivatives(const BigReal& a, const PrecisionContext& ctx) {
  auto quad = [&](IntegrandId id) {
    return integrate(IntegralSpec::make(id, {with_precision(a, ctx.bits())}, ctx), ctx).value.re;
  };
  return {quad(IntegrandId::ode_kernel), quad(IntegrandId::ode_kernel_d1),
          quad(IntegrandId::ode_kernel_d2), quad(IntegrandId::ode_kernel_d3)};
}

OdeResidual ode_annihilator_residual(const BigReal& a, const PrecisionContext& ctx, OperatorVariant variant) {
  require_open_unit(a);
  const BigReal aw = with_precision(a, ctx.bits());
  return apply_ode_operator(aw, ode_integral_derivatives(aw, ctx), variant,
                            ctx.ten_to_minus(ctx.digits() / 2));
}

Derivatives finite_difference_derivatives(const std::function<BigReal(const BigReal&)>& fn,
                                          const BigReal& x, const BigReal& h) {
  const BigReal h2 = h / 2;
  const Stencil coarse = sample(fn, x, h);
  const Stencil fine = sample(fn, x, h2);
  return {fine.z,
          (16 * first(fine, h2) - first(coarse, h)) / 15,
          (16 * second(fine, h2) - second(coarse, h)) / 15,
          (4 * third(fine, h2) - third(coarse, h)) / 3};
}

OdeResidual ode_annihilator_residual_closed_form(const BigReal& a, const PrecisionContext& ctx,
                                                 OperatorVariant variant) {
  require_open_unit(a);
  const BigReal aw = with_precision(a, ctx.bits());
  const BigReal h = fd_step(ctx);
  if (!(aw - 2 * h > 0) || !(aw + 2 * h < 1)) throw DomainError("difference stencil leaves (0, 1)");
  const auto fn = [&ctx](const BigReal& x) { return rhs_ode_closed_form(x, ctx); };
  return apply_ode_operator(aw, finite_difference_derivatives(fn, aw, h), variant,
                            ctx.ten_to_minus(ctx.digits() / 3));
}

LaplaceResidual laplace_residual_of(const std::function<BigReal(const BigReal&, const BigReal&)>& fn,
                                    const BigReal& b, const BigReal& c, const PrecisionContext& ctx,
                                    OperatorVariant variant) {
  const BigReal bw = with_precision(b, ctx.bits());
  const BigReal cw = with_precision(c, ctx.bits());
  const BigReal h = fd_step(ctx);
  if (!(cw - 2 * h > 0)) throw DomainError("difference stencil crosses the axis c = 0");
  const auto along_b = [&](const BigReal& x) { return fn(x, cw); };
  const auto along_c = [&](const BigReal& x) { return fn(bw, x); };
  const Derivatives db = finite_difference_derivatives(along_b, bw, h);
  const Derivatives dc = finite_difference_derivatives(along_c, cw, h);
  const BigReal radial = dc.d1 / cw;
  BigReal total = db.d2 + dc.d2;
  if (variant == OperatorVariant::exact) total += radial;
  const BigReal scale = max(max(abs(db.d2), abs(dc.d2)), abs(radial));
  return {ctx.real(0), bw, cw, abs(total), scale, ctx.ten_to_minus(ctx.digits() / 3)};
}

LaplaceResidual laplace_residual(const BigReal& theta, const BigReal& b, const BigReal& c,
                                 const PrecisionContext& ctx, OperatorVariant variant) {
  const BigReal th = with_precision(theta, ctx.bits());
  if (!(th > 0) || !(th < ctx.pi() / 2)) throw DomainError("theta must lie in (0, pi/2)");
  if (!(b > 0) || !(c > 0)) throw DomainError("Laplace check needs b > 0 and c > 0");
  const BigReal h = fd_step(ctx);
  if (!(b - 2 * h > 0)) throw DomainError("difference stencil crosses b = 0");

  const BigReal t = tan(th);
  const BigReal s = sin(th);
  const auto integrand = [&](const BigReal& bb, const BigReal& cc) {
    const BigReal cp = cc + t;
    const BigReal cm = cc - t;
    const BigReal d = bb * bb + cp * cp;
    const BigReal m_complement = (bb * bb + cm * cm) / d;
    if (!(m_complement > 0) || !(m_complement < 1)) {
      throw DomainError("difference stencil leaves 0 < m < 1");
    }
    return ellipK_by_complement(m_complement, ctx) * s / sqrt(d);
  };
  LaplaceResidual out = laplace_residual_of(integrand, b, c, ctx, variant);
  out.theta = th;
  return out;
}

}  // namespace mellint
