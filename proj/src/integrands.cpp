// Integrand families of the identity catalog.
//
// Each family is written out as its own formula rather than routed through
// a shared normalised kernel. The one systematic rewrite is that K is
// evaluated from its complementary parameter 1 - m in factored form, e.g.
// 1 - 4x(1-x) = (1-2x)^2, which is exact algebra but keeps full relative
// accuracy next to the logarithmic singularity at m = 1.

#include "mellint/elliptic.hpp"
#include "mellint/errors.hpp"
#include "mellint/quadrature.hpp"

#include <string>

namespace mellint {

namespace {

// K(2 sqrt(x(1-x))): m = 4x(1-x), 1 - m = (1-2x)^2.
BigReal kernel_K(const BigReal& x, const PrecisionContext& ctx) {
  const BigReal d = 1 - 2 * x;
  return ellipK_by_complement(d * d, ctx);
}

// q = 1 - 2(2x-1)a + a^2 = (1-a)^2 + 4a(1-x).
BigReal ode_q(const BigReal& x, const BigReal& a) {
  const BigReal one_minus_a = 1 - a;
  return one_minus_a * one_minus_a + 4 * a * (1 - x);
}

BigReal pow_half(const BigReal& q, long odd_numerator) {
  // q^(odd_numerator/2) for q > 0.
  return pow(sqrt(q), odd_numerator);
}

Integrand real_integrand(std::function<BigReal(const BigReal&)> fn) {
  return [fn = std::move(fn)](const BigReal& x) { return BigComplex(fn(x)); };
}

}  // namespace

std::string_view to_string(IntegrandId id) {
  switch (id) {
    case IntegrandId::unit: return "unit";
    case IntegrandId::base_kernel: return "base_kernel";
    case IntegrandId::ode_kernel: return "ode_kernel";
    case IntegrandId::ode_kernel_d1: return "ode_kernel_d1";
    case IntegrandId::ode_kernel_d2: return "ode_kernel_d2";
    case IntegrandId::ode_kernel_d3: return "ode_kernel_d3";
    case IntegrandId::motivating_derivative: return "motivating_derivative";
    case IntegrandId::singular_r4: return "singular_r4";
    case IntegrandId::complex_r3: return "complex_r3";
    case IntegrandId::complex_r7: return "complex_r7";
    case IntegrandId::complex_linear_kernel: return "complex_linear_kernel";
    case IntegrandId::pde_theta: return "pde_theta";
    case IntegrandId::pde_corollary: return "pde_corollary";
    case IntegrandId::axis_theta: return "axis_theta";
    case IntegrandId::axis_x: return "axis_x";
    case IntegrandId::axis_re_k: return "axis_re_k";
    case IntegrandId::bb_sqrt3_integral: return "bb_sqrt3_integral";
  }
  return "unknown";
}

std::size_t integrand_arity(IntegrandId id) {
  switch (id) {
    case IntegrandId::ode_kernel:
    case IntegrandId::ode_kernel_d1:
    case IntegrandId::ode_kernel_d2:
    case IntegrandId::ode_kernel_d3:
    case IntegrandId::axis_theta:
    case IntegrandId::axis_x:
    case IntegrandId::axis_re_k:
      return 1;
    case IntegrandId::pde_theta:
      return 2;
    case IntegrandId::complex_linear_kernel:
      return 3;
    default:
      return 0;
  }
}

bool is_complex_kernel(IntegrandId id) {
  return id == IntegrandId::complex_r3 || id == IntegrandId::complex_r7 ||
         id == IntegrandId::complex_linear_kernel;
}

IntegralSpec IntegralSpec::make(IntegrandId id, std::vector<BigReal> params, const PrecisionContext& ctx) {
  if (params.size() != integrand_arity(id)) {
    throw DomainError("integrand " + std::string(to_string(id)) + " takes " +
                      std::to_string(integrand_arity(id)) + " parameters, got " +
                      std::to_string(params.size()));
  }
  IntegralSpec spec;
  spec.integrand_id = id;
  spec.params = std::move(params);
  spec.lo = ctx.real(0);
  spec.hi = ctx.real(1);
  switch (id) {
    case IntegrandId::unit:
      break;
    case IntegrandId::pde_theta: {
      spec.hi = ctx.pi() / 2;
      const BigReal& b = spec.params[0];
      const BigReal& c = spec.params[1];
      // m reaches 1 only when b = 0 and tan(theta) = c.
      if (b.is_zero() && c > 0) spec.singular_points.push_back(atan(with_precision(c, ctx.bits())));
      break;
    }
    case IntegrandId::axis_theta:
      spec.hi = ctx.pi() / 2;
      if (spec.params[0] > 0) spec.singular_points.push_back(atan(with_precision(spec.params[0], ctx.bits())));
      break;
    case IntegrandId::axis_x:
    case IntegrandId::axis_re_k:
      spec.hi = BigReal::infinity(ctx.bits());
      spec.singular_points.push_back(ctx.real(1));
      break;
    default:
      // Every K(2 sqrt(x(1-x))) family is log-singular at x = 1/2.
      spec.singular_points.push_back(ctx.ratio(1, 2));
      break;
  }
  return spec;
}

void IntegralSpec::validate() const {
  if (params.size() != integrand_arity(integrand_id)) {
    throw DomainError("parameter count does not match integrand " + std::string(to_string(integrand_id)));
  }
  if (!(lo < hi)) throw DomainError("integral spec needs lo < hi");
  for (const auto& p : singular_points) {
    if (!(p > lo) || !(p < hi)) throw DomainError("singular point outside (lo, hi)");
  }
}

Integrand make_integrand(const IntegralSpec& spec, const PrecisionContext& ctx) {
  const auto& params = spec.params;
  const Precision bits = ctx.bits();
  auto param = [&](std::size_t i) { return with_precision(params.at(i), bits); };
  const BigReal sqrt2 = sqrt(ctx.real(2));
  const BigReal sqrt3 = sqrt(ctx.real(3));

  switch (spec.integrand_id) {
    case IntegrandId::unit:
      return [ctx](const BigReal&) { return BigComplex(ctx.real(1)); };

    case IntegrandId::base_kernel:
      return real_integrand([ctx](const BigReal& x) { return kernel_K(x, ctx); });

    case IntegrandId::ode_kernel:
      return real_integrand([ctx, a = param(0)](const BigReal& x) {
        return kernel_K(x, ctx) / sqrt(ode_q(x, a));
      });

    // a-derivatives of (q)^(-1/2), q = 1 - 2ya + a^2, y = 2x - 1, dq/da = 2(a - y):
    //   g'   = (y - a) q^(-3/2)
    //   g''  = (3/4) q'^2 q^(-5/2) - q^(-3/2)
    //   g''' = -(15/8) q'^3 q^(-7/2) + (9/2) q' q^(-5/2)
    case IntegrandId::ode_kernel_d1:
      return real_integrand([ctx, a = param(0)](const BigReal& x) {
        const BigReal y = 2 * x - 1;
        return kernel_K(x, ctx) * (y - a) / pow_half(ode_q(x, a), 3);
      });
    case IntegrandId::ode_kernel_d2:
      return real_integrand([ctx, a = param(0)](const BigReal& x) {
        const BigReal q = ode_q(x, a);
        const BigReal dq = 2 * (a - (2 * x - 1));
        const BigReal g2 = 3 * dq * dq / (4 * pow_half(q, 5)) - 1 / pow_half(q, 3);
        return kernel_K(x, ctx) * g2;
      });
    case IntegrandId::ode_kernel_d3:
      return real_integrand([ctx, a = param(0)](const BigReal& x) {
        const BigReal q = ode_q(x, a);
        const BigReal dq = 2 * (a - (2 * x - 1));
        const BigReal g3 = -15 * dq * dq * dq / (8 * pow_half(q, 7)) + 9 * dq / (2 * pow_half(q, 5));
        return kernel_K(x, ctx) * g3;
      });

    case IntegrandId::motivating_derivative:
      return real_integrand([ctx, sqrt2](const BigReal& x) {
        const BigReal num = 4 * x + 3 * sqrt2 - 2;
        const BigReal den = 4 * sqrt2 + 9 - 8 * sqrt2 * x;
        return kernel_K(x, ctx) * num / pow_half(den, 3);
      });

    case IntegrandId::singular_r4:
      return real_integrand([ctx, sqrt2](const BigReal& x) {
        return kernel_K(x, ctx) / sqrt(ctx.ratio(9, 8) + (1 - 2 * x) / sqrt2);
      });

    case IntegrandId::complex_r3:
      return [ctx](const BigReal& x) {
        const BigComplex den = sqrt(BigComplex(ctx.real(3), 4 * (1 - 2 * x)));
        return kernel_K(x, ctx) / den;
      };

    case IntegrandId::complex_r7:
      return [ctx](const BigReal& x) {
        const BigComplex den = sqrt(BigComplex(ctx.real(63), 16 * (1 - 2 * x)));
        return kernel_K(x, ctx) / den;
      };

    case IntegrandId::complex_linear_kernel:
      return [ctx, p = param(0), s = BigComplex(param(1), param(2))](const BigReal& x) {
        const BigComplex den = sqrt(BigComplex(p) + s * (1 - 2 * x));
        return kernel_K(x, ctx) / den;
      };

    case IntegrandId::pde_theta:
      return real_integrand([ctx, b = param(0), c = param(1)](const BigReal& theta) {
        const BigReal t = tan(theta);
        const BigReal cp = c + t;
        const BigReal cm = c - t;
        const BigReal d = b * b + cp * cp;
        // 1 - 4ct/d = (b^2 + (c - t)^2) / d
        return ellipK_by_complement((b * b + cm * cm) / d, ctx) * sin(theta) / sqrt(d);
      });

    case IntegrandId::pde_corollary:
      return real_integrand([ctx](const BigReal& x) {
        const BigReal p = x * (1 - x);
        return kernel_K(x, ctx) * p / pow_half(1 - 2 * p, 3);
      });

    case IntegrandId::axis_theta:
      return real_integrand([ctx, c = param(0)](const BigReal& theta) {
        const BigReal t = tan(theta);
        const BigReal ratio = (c - t) / (c + t);
        // 1 - 4ct/(c+t)^2 = ((c-t)/(c+t))^2
        return ellipK_by_complement(ratio * ratio, ctx) * sin(theta) / (c + t);
      });

    case IntegrandId::axis_x:
      return real_integrand([ctx, c = param(0)](const BigReal& x) {
        const BigReal ratio = (1 - x) / (1 + x);
        const BigReal cx = c * x;
        // 1 - 4x/(1+x)^2 = ((1-x)/(1+x))^2
        return ellipK_by_complement(ratio * ratio, ctx) * cx / ((1 + x) * pow_half(1 + cx * cx, 3));
      });

    case IntegrandId::axis_re_k:
      return real_integrand([ctx, c = param(0)](const BigReal& x) {
        // Modulus x: Re K = K(x^2) below 1, K(1/x^2)/x above.
        BigReal re_k = x < 1 ? ellipK_by_complement((1 - x) * (1 + x), ctx)
                             : ellipK_by_complement((x - 1) * (x + 1) / (x * x), ctx) / x;
        const BigReal cx = c * x;
        return re_k * cx / pow_half(1 + cx * cx, 3);
      });

    case IntegrandId::bb_sqrt3_integral:
      return real_integrand([ctx, sqrt2, sqrt3](const BigReal& x) {
        const BigReal y = 2 * x - 1;
        const BigReal num = 24 - 18 * sqrt3 + sqrt2 * (6 * sqrt3 - 11) * y;
        const BigReal den = 42 - 15 * sqrt3 - 4 * sqrt2 * (3 * sqrt3 - 5) * y;
        return kernel_K(x, ctx) * num / pow_half(den, 3);
      });
  }
  throw DomainError("unknown integrand id");
}

}  // namespace mellint
