#pragma once

#include "mellint/big_complex.hpp"
#include "mellint/big_real.hpp"
#include "mellint/precision.hpp"

namespace mellint {

/// Which part of the real line the parameter m = k^2 sits on.
enum class EllipticRegime { negative, unit_interval, super_unit };

/// The parameter m = k^2 of the complete elliptic integral. All code in
/// this library works in m, never in the modulus k, so an imaginary
/// modulus is simply a negative m.
class EllipticParameter {
 public:
  explicit EllipticParameter(BigReal m) : m_(std::move(m)) {}

  [[nodiscard]] const BigReal& m() const { return m_; }
  /// negative for m < 0, unit_interval for 0 <= m < 1, super_unit for m > 1.
  /// Throws SingularityError at m = 1.
  [[nodiscard]] EllipticRegime regime() const;

 private:
  BigReal m_;
};

/// Arithmetic-geometric mean of a, b > 0. Throws DomainError otherwise.
[[nodiscard]] BigReal agm(const BigReal& a, const BigReal& b, const PrecisionContext& ctx);

/// Complete elliptic integral of the first kind K(m).
///
/// For m < 1 the value is real and computed as pi / (2 agm(1, sqrt(1-m))),
/// negative m included. For m > 1 the value is the limit from Im m < 0,
///   K(m) = (K(1/m) - i K(1 - 1/m)) / sqrt(m),
/// so Im K <= 0. Throws SingularityError at m = 1.
[[nodiscard]] BigComplex ellipK(const EllipticParameter& p, const PrecisionContext& ctx);

/// K expressed through the complementary parameter m' = 1 - m > 0.
///
/// Integrands near the logarithmic singularity know m' in factored form
/// (e.g. (1-2x)^2) far more accurately than they know m; passing m' keeps
/// the full working precision right up to the singular point.
[[nodiscard]] BigReal ellipK_by_complement(const BigReal& m_complement, const PrecisionContext& ctx);

/// Partial sum through n = N of (pi/2) [1 + sum ((1/2)_n / n!)^2 m^n].
/// Throws DomainError for |m| >= 1.
[[nodiscard]] BigReal ellipK_series(const EllipticParameter& p, unsigned terms,
                                    const PrecisionContext& ctx);

/// K'(m) = K(1 - m). Throws SingularityError at m = 0.
[[nodiscard]] BigComplex ellipK_complementary(const EllipticParameter& p, const PrecisionContext& ctx);

/// Closed-form side of the one-parameter kernel identity:
///   [K(m)]^2 with m = (1 - sqrt(1 + a^2)) / 2              for 0 <= a <= 1,
///   (1/a) [K(m)]^2 with m = (1 - sqrt(1 + a^-2)) / 2       for a > 1.
/// Throws DomainError for a < 0.
[[nodiscard]] BigReal rhs_ode_closed_form(const BigReal& a, const PrecisionContext& ctx);

}  // namespace mellint
