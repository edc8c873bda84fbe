#pragma once

#include "mellint/big_real.hpp"
#include "mellint/precision.hpp"

#include <functional>

namespace mellint {

/// Which operator to apply. `corrupted` is the negative control: the ODE
/// zeroth-order coefficient a becomes 2a, and the Laplacian loses its
/// (1/c) d/dc term.
enum class OperatorVariant { exact, corrupted };

/// f, f', f'', f''' at one point.
struct Derivatives {
  BigReal f;
  BigReal d1;
  BigReal d2;
  BigReal d3;
};

/// Result of applying
///   a^2 (1+a^2) D^3 + 3a (1+2a^2) D^2 + (1+7a^2) D + a
/// at one value of a.
struct OdeResidual {
  BigReal a;
  BigReal residual;
  /// Largest magnitude among the four operator terms.
  BigReal scale;
  /// Relative pass threshold: passed iff residual <= threshold * scale.
  BigReal threshold;

  [[nodiscard]] bool passed() const { return residual <= threshold * scale; }
};

/// Result of applying d^2/db^2 + d^2/dc^2 + (1/c) d/dc at one (theta, b, c).
struct LaplaceResidual {
  BigReal theta;
  BigReal b;
  BigReal c;
  BigReal residual;
  BigReal scale;
  BigReal threshold;

  [[nodiscard]] bool passed() const { return residual <= threshold * scale; }
};

/// Applies the third-order operator to given derivative values.
[[nodiscard]] OdeResidual apply_ode_operator(const BigReal& a, const Derivatives& d,
                                             OperatorVariant variant, const BigReal& threshold);

/// I(a) and its first three a-derivatives for the one-parameter kernel
/// integral, each by quadrature of the analytically differentiated kernel.
[[nodiscard]] Derivatives ode_integral_derivatives(const BigReal& a, const PrecisionContext& ctx);

/// Operator applied to the integral; threshold 10^-(digits/2).
/// Requires a in (0, 1).
[[nodiscard]] OdeResidual ode_annihilator_residual(const BigReal& a, const PrecisionContext& ctx,
                                                   OperatorVariant variant = OperatorVariant::exact);

/// Operator applied to the closed form [K(m(a))]^2 with derivatives from
/// five-point central differences at h = 10^-(digits/5) and h/2, combined
/// by one Richardson step; threshold 10^-(digits/3). Requires a in (0, 1).
[[nodiscard]] OdeResidual ode_annihilator_residual_closed_form(
    const BigReal& a, const PrecisionContext& ctx, OperatorVariant variant = OperatorVariant::exact);

/// Richardson-extrapolated central-difference derivatives of fn at x.
[[nodiscard]] Derivatives finite_difference_derivatives(const std::function<BigReal(const BigReal&)>& fn,
                                                        const BigReal& x, const BigReal& h);

/// Cylindrical Laplacian (c radial, b axial) of an arbitrary fn(b, c) by the
/// same difference scheme. Throws DomainError if the c-stencil reaches the
/// axis c <= 0.
[[nodiscard]] LaplaceResidual laplace_residual_of(const std::function<BigReal(const BigReal&, const BigReal&)>& fn,
                                                  const BigReal& b, const BigReal& c,
                                                  const PrecisionContext& ctx,
                                                  OperatorVariant variant = OperatorVariant::exact);

/// Cylindrical Laplacian of the theta-integrand of the Laplace family at
/// fixed theta. Requires b > 0, c > 0, theta in (0, pi/2) and every stencil
/// point inside that region.
[[nodiscard]] LaplaceResidual laplace_residual(const BigReal& theta, const BigReal& b, const BigReal& c,
                                               const PrecisionContext& ctx,
                                               OperatorVariant variant = OperatorVariant::exact);

}  // namespace mellint
