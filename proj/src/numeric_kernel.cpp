#include "mellint/numeric_kernel.hpp"

#include "mellint/errors.hpp"

#include <cmath>

namespace mellint {

BigReal const_pi(const PrecisionContext& ctx) { return ctx.pi(); }

BigReal gauss_legendre_pi(Precision bits) {
  // Carry a few extra bits; the iteration loses O(log iterations) of them.
  const Precision work = bits + 16;
  BigReal a(1, work);
  BigReal b = sqrt(BigReal::ratio(1, 2, work));
  BigReal t = BigReal::ratio(1, 4, work);
  BigReal p(1, work);
  const BigReal tiny = ldexp(BigReal(1, work), -static_cast<long>(work) / 2 - 4);
  for (int iter = 0; iter < 64; ++iter) {
    BigReal next_a = (a + b) / 2;
    BigReal diff = a - next_a;
    b = sqrt(a * b);
    t -= p * diff * diff;
    p *= 2;
    a = std::move(next_a);
    // Quadratic convergence: once |a - b| is below sqrt(eps) the next
    // step is already exact to working precision.
    if (abs(a - b) < tiny) break;
  }
  BigReal sum = a + b;
  return with_precision(sum * sum / (4 * t), bits);
}

BigReal gamma(const BigReal& x, const PrecisionContext& ctx) {
  if (!(x > 0)) throw DomainError("gamma: argument must be positive, got " + x.to_string(20));

  // Spouge's relative error bound a^(-1/2) (2 pi)^-(a + 1/2) fixes the order.
  const int target_digits = ctx.digits() + 5;
  const long order =
      static_cast<long>(std::ceil(target_digits * std::log(10.0) / std::log(2.0 * M_PI))) + 1;
  const Precision work =
      ctx.bits() + static_cast<Precision>(std::ceil(order * std::log2(2.0 * M_PI))) + 32;

  // Shift small arguments up so the series variable z stays >= 0.
  BigReal xw = with_precision(x, work);
  const bool shifted = xw < 1;
  BigReal z = shifted ? xw : xw - 1;

  const BigReal a(order, work);
  const BigReal two_pi = 2 * gauss_legendre_pi(work);
  BigReal sum = sqrt(two_pi);
  BigReal factorial(1, work);  // (k-1)!
  for (long k = 1; k < order; ++k) {
    if (k > 1) factorial *= (k - 1);
    const BigReal base = a - k;
    BigReal ck = pow(base, BigReal(2 * k - 1, work) / 2) * exp(base) / factorial;
    if (k % 2 == 0) ck = -ck;
    sum += ck / (z + k);
  }
  const BigReal za = z + a;
  BigReal value = pow(za, z + BigReal::ratio(1, 2, work)) * exp(-za) * sum;
  if (shifted) value /= xw;
  return with_precision(value, ctx.bits());
}

BigReal pochhammer(const BigReal& x, unsigned n) {
  BigReal out(1, x.precision());
  for (unsigned k = 0; k < n; ++k) out *= x + static_cast<long>(k);
  return out;
}

}  // namespace mellint
