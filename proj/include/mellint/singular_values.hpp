#pragma once

#include "mellint/big_real.hpp"
#include "mellint/precision.hpp"

#include <string_view>

namespace mellint {

/// Closed-form right-hand sides of the three singular-value integrals.
enum class GammaConstant {
  r4,  ///< Gamma(1/4)^4 / (16 sqrt2 pi)
  r3,  ///< sqrt3 Gamma(1/3)^6 / (2^(17/3) pi^2)
  r7,  ///< (Gamma(1/7) Gamma(2/7) Gamma(4/7))^2 / (128 sqrt7 pi^2)
};

/// Tabulated singular modulus lambda*(r) for r in {3, 4, 7}: the modulus k
/// with K'(k)/K(k) = sqrt(r). Throws DomainError for any other r.
[[nodiscard]] BigReal lambda_star(int r, const PrecisionContext& ctx);

/// |K'(lambda)/K(lambda) - sqrt(r)| at lambda = lambda_star(r), with K taken
/// at parameter m = lambda^2.
[[nodiscard]] BigReal verify_singular_value(int r, const PrecisionContext& ctx);

[[nodiscard]] BigReal rhs_constant(GammaConstant id, const PrecisionContext& ctx);

}  // namespace mellint
