#include "mellint/singular_values.hpp"

#include "mellint/elliptic.hpp"
#include "mellint/errors.hpp"
#include "mellint/numeric_kernel.hpp"

#include <string>

namespace mellint {

BigReal lambda_star(int r, const PrecisionContext& ctx) {
  const BigReal sqrt2 = sqrt(ctx.real(2));
  switch (r) {
    case 3: return sqrt2 * (sqrt(ctx.real(3)) - 1) / 4;
    case 4: return 3 - 2 * sqrt2;
    case 7: return sqrt2 * (3 - sqrt(ctx.real(7))) / 8;
    default: throw DomainError("lambda* is tabulated only for r = 3, 4, 7; got " + std::to_string(r));
  }
}

BigReal verify_singular_value(int r, const PrecisionContext& ctx) {
  const BigReal k = lambda_star(r, ctx);
  const BigReal m = k * k;
  // K(m) from 1 - m, K'(m) = K(1 - m) from m itself.
  const BigReal K = ellipK_by_complement(1 - m, ctx);
  const BigReal Kp = ellipK_by_complement(m, ctx);
  return abs(Kp / K - sqrt(ctx.real(r)));
}

BigReal rhs_constant(GammaConstant id, const PrecisionContext& ctx) {
  const BigReal& pi = ctx.pi();
  switch (id) {
    case GammaConstant::r4:
      return pow(gamma(ctx.ratio(1, 4), ctx), 4) / (16 * sqrt(ctx.real(2)) * pi);
    case GammaConstant::r3:
      return sqrt(ctx.real(3)) * pow(gamma(ctx.ratio(1, 3), ctx), 6) /
             (pow(ctx.real(2), ctx.ratio(17, 3)) * pi * pi);
    case GammaConstant::r7: {
      const BigReal product =
          gamma(ctx.ratio(1, 7), ctx) * gamma(ctx.ratio(2, 7), ctx) * gamma(ctx.ratio(4, 7), ctx);
      return product * product / (128 * sqrt(ctx.real(7)) * pi * pi);
    }
  }
  throw DomainError("unknown gamma constant");
}

}  // namespace mellint
