#pragma once

#include "mellint/big_real.hpp"
#include "mellint/precision.hpp"

#include <string_view>

namespace mellint {

/// Series families evaluated by partial sums. All use the coefficient
/// c_n = ((1/2)_n / n!)^3 generated by its ratio recurrence.
enum class SeriesId {
  clausen,      ///< 1 + sum c_n (-a^2)^n
  clausen_da,   ///< d/da of clausen
  legsum,       ///< (pi^2/4) (1 + sum (-1)^n c_n a^(2n))
  guillera_bb,  ///< 1 + sum c_n (6n+1) (-1/8)^n          -> 2 sqrt2 / pi
  bb_sqrt3,     ///< sum c_n [(30-6sqrt3) n + 7-3sqrt3] (-(26-15sqrt3)/16)^n -> 4 sqrt2 / pi
};

[[nodiscard]] std::string_view to_string(SeriesId id);

struct SeriesSpec {
  SeriesId series_id = SeriesId::clausen;
  BigReal param_a;  ///< ignored by the two fixed Ramanujan-type series
  unsigned terms = 1;

  /// terms >= 1 and |a| < 1 for the a-dependent families.
  void validate() const;
};

/// Dispatches to the partial-sum function of spec.series_id.
[[nodiscard]] BigReal evaluate(const SeriesSpec& spec, const PrecisionContext& ctx);

/// 1 + sum_{n=1}^{N} c_n (-a^2)^n. Requires |a| < 1.
[[nodiscard]] BigReal clausen_sum(const BigReal& a, unsigned terms, const PrecisionContext& ctx);

/// sum_{n=1}^{N} c_n n (-1)^n 2 a^(2n-1), the termwise a-derivative of
/// clausen_sum; exactly 0 at a = 0. Requires |a| < 1.
[[nodiscard]] BigReal clausen_sum_da(const BigReal& a, unsigned terms, const PrecisionContext& ctx);

/// (pi^2/4) clausen_sum(a, N): the Legendre-sum form of the integral.
[[nodiscard]] BigReal legendre_sum(const BigReal& a, unsigned terms, const PrecisionContext& ctx);

/// Ramanujan-type series sum_{n<=N} c_n (A n + B) z^n in its "A n + B, z" form.
struct RamanujanSeries {
  BigReal slope;      ///< A
  BigReal intercept;  ///< B
  BigReal z;          ///< argument, z = -a*^2 < 0
  BigReal target;     ///< the closed-form value of the full sum
};

/// Coefficients and closed form of guillera_bb or bb_sqrt3.
/// Throws DomainError for any other id.
[[nodiscard]] RamanujanSeries ramanujan_series(SeriesId id, const PrecisionContext& ctx);

/// Partial sum through n = N of guillera_bb or bb_sqrt3.
[[nodiscard]] BigReal ramanujan_sum(SeriesId id, unsigned terms, const PrecisionContext& ctx);

/// alpha * clausen(a*) + beta * clausen_da(a*) reproduces a Ramanujan-type
/// series termwise.
struct LinearBridge {
  BigReal alpha;
  BigReal beta;
  BigReal a_star;
};

/// Solves the 2x2 system from the n = 0 and n = 1 terms
///   n = 0:  alpha = B
///   n = 1:  c_1 z (alpha + 2 beta / a*) = c_1 z (A + B)
/// with a* = sqrt(-z), then checks the match on every term through n = 5.
/// Throws InconsistencyError if a later term disagrees, DomainError for a
/// non-Ramanujan id.
[[nodiscard]] LinearBridge linear_bridge(SeriesId id, const PrecisionContext& ctx);

/// Termwise residual |alpha t_n + beta d_n - c_n (A n + B) z^n| for one n,
/// where t_n, d_n are the n-th terms of clausen_sum and clausen_sum_da.
[[nodiscard]] BigReal bridge_term_residual(const LinearBridge& bridge, const RamanujanSeries& series,
                                           unsigned n, const PrecisionContext& ctx);

}  // namespace mellint
