#pragma once

#include "mellint/big_real.hpp"
#include "mellint/precision.hpp"

namespace mellint {

/// pi to ctx.digits() correct digits.
[[nodiscard]] BigReal const_pi(const PrecisionContext& ctx);

/// pi at an explicit binary precision by the Gauss-Legendre (Brent-Salamin)
/// AGM iteration. PrecisionContext uses this once at construction.
[[nodiscard]] BigReal gauss_legendre_pi(Precision bits);

/// Euler's gamma function for x > 0, relative error below 10^-(digits-5).
///
/// Uses Spouge's approximation with the order chosen from ctx.digits() and
/// the coefficient sum carried at roughly twice the working precision to
/// absorb cancellation between the alternating coefficients.
/// Throws DomainError for x <= 0.
[[nodiscard]] BigReal gamma(const BigReal& x, const PrecisionContext& ctx);

/// Rising factorial (x)_n = x (x+1) ... (x+n-1), with (x)_0 = 1.
[[nodiscard]] BigReal pochhammer(const BigReal& x, unsigned n);

}  // namespace mellint
