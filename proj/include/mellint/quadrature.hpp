#pragma once

#include "mellint/big_complex.hpp"
#include "mellint/big_real.hpp"
#include "mellint/precision.hpp"

#include <functional>
#include <span>
#include <string_view>
#include <vector>

namespace mellint {

/// A real- or complex-valued integrand. It may throw mellint::Error for
/// arguments outside its domain; the quadrature reports that as an
/// IntegrandFailure.
using Integrand = std::function<BigComplex(const BigReal& x)>;

/// Integrand families known to the catalog. Each id fixes the arity of
/// IntegralSpec::params, the integration interval and the interior
/// abscissas where the integrand has an integrable singularity.
enum class IntegrandId {
  unit,                   ///< 1 on (0, 1)
  base_kernel,           ///< K(2 sqrt(x(1-x))) on (0, 1)
  ode_kernel,             ///< (a) K(2 sqrt(x(1-x))) / sqrt(1 - 2(2x-1)a + a^2)
  ode_kernel_d1,          ///< (a) first a-derivative of ode_kernel
  ode_kernel_d2,          ///< (a) second a-derivative
  ode_kernel_d3,          ///< (a) third a-derivative
  motivating_derivative,  ///< K(...) (4x + 3 sqrt2 - 2) / (4 sqrt2 + 9 - 8 sqrt2 x)^(3/2)
  singular_r4,            ///< K(...) / sqrt(9/8 + (1-2x)/sqrt2)
  complex_r3,             ///< K(...) / sqrt(3 + 4i(1-2x))
  complex_r7,             ///< K(...) / sqrt(63 + 16i(1-2x))
  complex_linear_kernel,  ///< (p, s_re, s_im) K(...) / sqrt(p + s(1-2x)), s complex
  pde_theta,              ///< (b, c) theta-integrand of the Laplace family on (0, pi/2)
  pde_corollary,          ///< K(...) x(1-x) / (1 - 2x(1-x))^(3/2)
  axis_theta,          ///< (c) b = 0 theta form: K(sqrt(4ct/(c+t)^2)) sin(theta)/(c+t), t = tan(theta)
  axis_x,              ///< (c) K(2 sqrt(x)/(1+x)) c x / ((1+x)(1 + c^2 x^2)^(3/2)) on (0, inf)
  axis_re_k,           ///< (c) Re K(x) c x / (1 + c^2 x^2)^(3/2) on (0, inf), modulus x
  bb_sqrt3_integral,      ///< K(...) [24 - 18 sqrt3 + sqrt2 (6 sqrt3 - 11)(2x-1)] / [...]^(3/2)
};

[[nodiscard]] std::string_view to_string(IntegrandId id);
/// Number of parameters IntegralSpec::params must carry for this id.
[[nodiscard]] std::size_t integrand_arity(IntegrandId id);
/// True for the families with a genuinely complex-valued integrand.
[[nodiscard]] bool is_complex_kernel(IntegrandId id);

/// One definite integral: the integrand family, its parameters, the
/// interval (hi may be +infinity) and the interior singular abscissas.
struct IntegralSpec {
  IntegrandId integrand_id = IntegrandId::unit;
  std::vector<BigReal> params;
  BigReal lo;
  BigReal hi;
  std::vector<BigReal> singular_points;

  /// Builds the spec with the interval and singular points that belong to
  /// the family. Throws DomainError if the parameter count is wrong.
  static IntegralSpec make(IntegrandId id, std::vector<BigReal> params, const PrecisionContext& ctx);

  /// Checks lo < hi, singular points inside (lo, hi) and the arity.
  void validate() const;
};

struct QuadResult {
  BigComplex value;
  /// |last level - previous level| summed over panels, floored at the
  /// rounding level of the weighted sum.
  BigReal err_estimate;
  int panels = 0;
  /// Deepest step-halving level reached on any panel.
  int levels = 0;
};

/// The concrete integrand for a spec. Exposed so tests and the
/// differential-operator checks can evaluate it pointwise.
[[nodiscard]] Integrand make_integrand(const IntegralSpec& spec, const PrecisionContext& ctx);

/// Double-exponential quadrature over [lo, hi] split at the singular
/// points: tanh-sinh on finite panels, exp-sinh on a trailing [x, inf).
/// Each panel halves its step until successive estimates agree to
/// ctx.quad_target() / panels or ctx.level_cap() halvings are spent.
///
/// Throws NonConvergence at the level cap, IntegrandFailure when the
/// integrand throws or returns a non-finite value at a node.
[[nodiscard]] QuadResult integrate(const Integrand& f, const BigReal& lo, const BigReal& hi,
                                   std::span<const BigReal> singular_points,
                                   const PrecisionContext& ctx);

[[nodiscard]] QuadResult integrate(const IntegralSpec& spec, const PrecisionContext& ctx);

/// integrate() restricted to the complex-valued families; the caller gets
/// the full complex value and decides what to do with its imaginary part.
/// Throws DomainError for a real-valued family.
[[nodiscard]] QuadResult integrate_complex_kernel(const IntegralSpec& spec, const PrecisionContext& ctx);

}  // namespace mellint
