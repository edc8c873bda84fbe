#include "mellint/quadrature.hpp"

#include "mellint/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace mellint {

namespace {

struct PanelResult {
  BigComplex value;
  BigReal err;
  int levels = 0;
};

// Running state of one panel: the raw node sum (without the step factor)
// and the sum of |w f| used for the rounding floor.
struct NodeSums {
  BigComplex sum;
  BigReal magnitude;
};

BigComplex eval_checked(const Integrand& f, const BigReal& x) {
  BigComplex value;
  try {
    value = f(x);
  } catch (const Error& e) {
    throw IntegrandFailure("integrand failed at x = " + x.to_string(25) + ": " + e.what());
  }
  if (!value.is_finite()) {
    throw IntegrandFailure("integrand is not finite at x = " + x.to_string(25));
  }
  return value;
}

void accumulate(NodeSums& sums, const BigReal& weight, const BigComplex& value) {
  BigComplex term = value * weight;
  sums.magnitude += abs(term);
  sums.sum += term;
}

// A node rule maps the abscissa parameter t to zero, one or two (x, w)
// pairs and adds w f(x) to the sums.
template <typename AddNodes>
PanelResult run_levels(AddNodes&& add_nodes, double t_lo, double t_hi, const BigReal& target,
                       const PrecisionContext& ctx) {
  NodeSums sums{BigComplex(ctx.real(0)), ctx.real(0)};
  // Level 0: unit step on the integer grid.
  for (long k = static_cast<long>(std::ceil(t_lo)); k <= static_cast<long>(std::floor(t_hi)); ++k) {
    add_nodes(sums, ctx.real(k));
  }
  BigComplex previous = sums.sum;
  for (int level = 1; level <= ctx.level_cap(); ++level) {
    const long denom = 1L << level;
    // New nodes sit at odd multiples of 2^-level.
    const long j_lo = static_cast<long>(std::ceil(t_lo * static_cast<double>(denom)));
    const long j_hi = static_cast<long>(std::floor(t_hi * static_cast<double>(denom)));
    for (long j = j_lo; j <= j_hi; ++j) {
      if (j % 2 == 0) continue;
      add_nodes(sums, ctx.ratio(j, denom));
    }
    BigComplex current = sums.sum;
    current /= ctx.real(denom);
    BigReal diff = abs(current - previous);
    BigReal floor = ctx.epsilon() * sums.magnitude / denom * 8;
    BigReal err = max(diff, floor);
    if (level >= 3 && err <= target) return {std::move(current), std::move(err), level};
    previous = std::move(current);
  }
  throw NonConvergence("double-exponential quadrature did not reach " + target.to_string(6) +
                       " within " + std::to_string(ctx.level_cap()) + " levels");
}

PanelResult tanh_sinh(const Integrand& f, const BigReal& a, const BigReal& b, const BigReal& target,
                      const PrecisionContext& ctx) {
  const BigReal half = (b - a) / 2;
  const BigReal mid = (a + b) / 2;
  const BigReal half_pi = ctx.pi() / 2;
  // Stop once the distance to the endpoint, half * delta, drops below
  // 2^-(bits-8) * half; delta ~ 2 exp(-2 s) with s = (pi/2) sinh t.
  const double s_max = (static_cast<double>(ctx.bits()) - 8.0) * std::log(2.0) / 2.0;
  const double t_max = std::asinh(s_max / (M_PI / 2.0));

  auto add_nodes = [&](NodeSums& sums, const BigReal& t) {
    if (t.is_zero()) {
      accumulate(sums, half * half_pi, eval_checked(f, mid));
      return;
    }
    const BigReal at = abs(t);
    const BigReal s = half_pi * sinh(at);
    // delta = 1 - tanh(s), computed directly so it keeps full relative
    // accuracy when it is tiny; sech^2 s = delta (2 - delta).
    const BigReal delta = 2 / (1 + exp(2 * s));
    const BigReal weight = half * half_pi * cosh(at) * delta * (2 - delta);
    const BigReal offset = half * delta;
    const BigReal left = a + offset;
    const BigReal right = b - offset;
    if (left != a) accumulate(sums, weight, eval_checked(f, left));
    if (right != b) accumulate(sums, weight, eval_checked(f, right));
  };
  // Only t >= 0 is enumerated; each t > 0 contributes the mirrored pair.
  return run_levels(add_nodes, 0.0, t_max, target, ctx);
}

PanelResult exp_sinh(const Integrand& f, const BigReal& a, const BigReal& target,
                     const PrecisionContext& ctx) {
  const BigReal half_pi = ctx.pi() / 2;
  const double ln2 = std::log(2.0);
  const double scale = std::max(1.0, std::fabs(a.to_double()));
  // Left: the offset exp(s) falls below 2^-(bits-8) relative to |a|.
  // Right: integrands in the catalog decay at least like x^-2, so the
  // weighted terms are below roundoff once exp(s) ~ 2^(bits+16).
  const double s_min = -(static_cast<double>(ctx.bits()) - 8.0) * ln2 + std::log(scale);
  const double s_max = (static_cast<double>(ctx.bits()) + 16.0) * ln2;
  const double t_lo = std::asinh(s_min / (M_PI / 2.0));
  const double t_hi = std::asinh(s_max / (M_PI / 2.0));

  auto add_nodes = [&](NodeSums& sums, const BigReal& t) {
    const BigReal s = half_pi * sinh(t);
    const BigReal offset = exp(s);
    const BigReal x = a + offset;
    if (x == a) return;
    const BigReal weight = half_pi * cosh(t) * offset;
    accumulate(sums, weight, eval_checked(f, x));
  };
  return run_levels(add_nodes, t_lo, t_hi, target, ctx);
}

}  // namespace

QuadResult integrate(const Integrand& f, const BigReal& lo, const BigReal& hi,
                     std::span<const BigReal> singular_points, const PrecisionContext& ctx) {
  if (!lo.is_finite()) throw DomainError("integration lower limit must be finite");
  if (!(lo < hi)) throw DomainError("integration interval must satisfy lo < hi");
  std::vector<BigReal> breaks;
  breaks.reserve(singular_points.size() + 2);
  breaks.push_back(with_precision(lo, ctx.bits()));
  std::vector<BigReal> interior(singular_points.begin(), singular_points.end());
  std::sort(interior.begin(), interior.end(), [](const BigReal& x, const BigReal& y) { return x < y; });
  for (const auto& p : interior) {
    if (!(p > lo) || !(p < hi)) {
      throw DomainError("singular point " + p.to_string(20) + " is not inside the interval");
    }
    if (p != breaks.back()) breaks.push_back(with_precision(p, ctx.bits()));
  }
  const bool infinite = !hi.is_finite();
  if (!infinite) breaks.push_back(with_precision(hi, ctx.bits()));

  const std::size_t panel_count = breaks.size() - (infinite ? 0 : 1);
  const BigReal target = ctx.quad_target() / static_cast<long>(panel_count);

  QuadResult out{BigComplex(ctx.real(0)), ctx.real(0), static_cast<int>(panel_count), 0};
  // Panels are summed in interval order so the result is reproducible.
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    PanelResult panel = tanh_sinh(f, breaks[i], breaks[i + 1], target, ctx);
    out.value += panel.value;
    out.err_estimate += panel.err;
    out.levels = std::max(out.levels, panel.levels);
  }
  if (infinite) {
    PanelResult panel = exp_sinh(f, breaks.back(), target, ctx);
    out.value += panel.value;
    out.err_estimate += panel.err;
    out.levels = std::max(out.levels, panel.levels);
  }
  return out;
}

QuadResult integrate(const IntegralSpec& spec, const PrecisionContext& ctx) {
  spec.validate();
  return integrate(make_integrand(spec, ctx), spec.lo, spec.hi, spec.singular_points, ctx);
}

QuadResult integrate_complex_kernel(const IntegralSpec& spec, const PrecisionContext& ctx) {
  if (!is_complex_kernel(spec.integrand_id)) {
    throw DomainError(std::string("integrand ") + std::string(to_string(spec.integrand_id)) +
                      " is not a complex kernel");
  }
  return integrate(spec, ctx);
}

}  // namespace mellint
