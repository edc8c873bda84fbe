#include "mellint/legendre.hpp"

#include "mellint/errors.hpp"
#include "mellint/parallel.hpp"
#include "mellint/quadrature.hpp"

#include <utility>

namespace mellint {

std::vector<BigReal> legendre_P_all(unsigned n, const BigReal& x, const PrecisionContext& ctx) {
  const BigReal xw = with_precision(x, ctx.bits());
  std::vector<BigReal> p;
  p.reserve(n + 1);
  p.push_back(ctx.real(1));
  if (n == 0) return p;
  p.push_back(xw);
  for (unsigned k = 1; k < n; ++k) {
    const long kl = k;
    p.push_back(((2 * kl + 1) * xw * p[k] - kl * p[k - 1]) / (kl + 1));
  }
  return p;
}

BigReal legendre_P(unsigned n, const BigReal& x, const PrecisionContext& ctx) {
  const BigReal xw = with_precision(x, ctx.bits());
  if (n == 0) return ctx.real(1);
  BigReal prev = ctx.real(1);
  BigReal cur = xw;
  for (unsigned k = 1; k < n; ++k) {
    const long kl = k;
    BigReal next = ((2 * kl + 1) * xw * cur - kl * prev) / (kl + 1);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

BigReal generating_function_check(const BigReal& a, const BigReal& x, unsigned terms,
                                  const PrecisionContext& ctx) {
  if (!(abs(a) < 1)) throw DomainError("generating function needs |a| < 1");
  if (x < 0 || x > 1) throw DomainError("generating function check needs x in [0, 1]");
  const BigReal aw = with_precision(a, ctx.bits());
  const BigReal y = 2 * with_precision(x, ctx.bits()) - 1;
  const BigReal closed = 1 / sqrt(1 - 2 * y * aw + aw * aw);
  const auto p = legendre_P_all(terms, y, ctx);
  BigReal sum = ctx.real(0);
  BigReal power = ctx.real(1);
  for (unsigned n = 0; n <= terms; ++n) {
    sum += p[n] * power;
    power *= aw;
  }
  return abs(closed - sum);
}

Matrix orthogonality_gram(unsigned n_max, const PrecisionContext& ctx) {
  if (n_max > 20) throw DomainError("orthogonality_gram is limited to N <= 20");
  const unsigned size = n_max + 1;
  std::vector<std::pair<unsigned, unsigned>> upper;
  for (unsigned i = 0; i < size; ++i) {
    for (unsigned j = i; j < size; ++j) upper.emplace_back(i, j);
  }
  const BigReal lo = ctx.real(0);
  const BigReal hi = ctx.real(1);
  const auto values = parallel_map<BigReal>(upper.size(), [&](std::size_t k) {
    const auto [n, m] = upper[k];
    const Integrand f = [&ctx, n, m](const BigReal& x) {
      const auto p = legendre_P_all(m, 2 * x - 1, ctx);
      return BigComplex(p[n] * p[m]);
    };
    return integrate(f, lo, hi, {}, ctx).value.re;
  });
  Matrix gram(size, std::vector<BigReal>(size));
  for (std::size_t k = 0; k < upper.size(); ++k) {
    const auto [n, m] = upper[k];
    gram[n][m] = values[k];
    gram[m][n] = values[k];
  }
  return gram;
}

BigReal baranov_partial_sum(const BigReal& x, unsigned terms, const PrecisionContext& ctx) {
  if (x < 0 || x > 1) throw DomainError("Legendre expansion of the kernel needs x in [0, 1]");
  const auto p = legendre_P_all(2 * terms, 2 * with_precision(x, ctx.bits()) - 1, ctx);
  BigReal coeff = ctx.real(1);  // (-1)^n ((1/2)_n / n!)^3
  BigReal sum = ctx.real(0);
  for (unsigned n = 0; n <= terms; ++n) {
    if (n > 0) {
      const BigReal r = ctx.ratio(2 * static_cast<long>(n) - 1, 2 * static_cast<long>(n));
      coeff *= -(r * r * r);
    }
    sum += coeff * (4 * static_cast<long>(n) + 1) * p[2 * n];
  }
  return sum;
}

BigReal projection_sum(const BigReal& a, unsigned terms, const PrecisionContext& ctx) {
  const BigReal a2 = with_precision(a * a, ctx.bits());
  BigReal kernel_coeff = ctx.real(1);   // Legendre coefficient of 4K/pi^2 on P_{2n}
  BigReal gen_coeff = ctx.real(1);      // coefficient a^(2n) of P_{2n} in the generating function
  BigReal sum = ctx.real(0);
  for (unsigned n = 0; n <= terms; ++n) {
    const long two_n = 2 * static_cast<long>(n);
    if (n > 0) {
      const BigReal r = ctx.ratio(two_n - 1, two_n);
      kernel_coeff *= -(r * r * r);
      gen_coeff *= a2;
    }
    const BigReal norm = ctx.ratio(1, 2 * two_n + 1);
    sum += gen_coeff * kernel_coeff * (2 * two_n + 1) * norm;
  }
  return ctx.pi() * ctx.pi() / 4 * sum;
}

}  // namespace mellint
