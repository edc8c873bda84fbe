#pragma once

#include "mellint/big_real.hpp"
#include "mellint/precision.hpp"

#include <vector>

namespace mellint {

/// P_n(x) by the three-term recurrence (n+1) P_{n+1} = (2n+1) x P_n - n P_{n-1}.
[[nodiscard]] BigReal legendre_P(unsigned n, const BigReal& x, const PrecisionContext& ctx);

/// P_0(x), ..., P_n(x) in one recurrence pass.
[[nodiscard]] std::vector<BigReal> legendre_P_all(unsigned n, const BigReal& x, const PrecisionContext& ctx);

/// |1/sqrt(1 - 2(2x-1)a + a^2) - sum_{n<=N} P_n(2x-1) a^n|.
/// Requires |a| < 1 and x in [0, 1]; throws DomainError otherwise.
[[nodiscard]] BigReal generating_function_check(const BigReal& a, const BigReal& x, unsigned terms,
                                                const PrecisionContext& ctx);

using Matrix = std::vector<std::vector<BigReal>>;

/// (N+1) x (N+1) matrix of int_0^1 P_n(2x-1) P_m(2x-1) dx by the
/// double-exponential rule. N is capped at 20.
[[nodiscard]] Matrix orthogonality_gram(unsigned n_max, const PrecisionContext& ctx);

/// sum_{n<=N} (-1)^n ((1/2)_n / n!)^3 (4n+1) P_{2n}(2x-1), the Legendre
/// expansion of 4 K(2 sqrt(x(1-x))) / pi^2. Requires x in [0, 1].
[[nodiscard]] BigReal baranov_partial_sum(const BigReal& x, unsigned terms, const PrecisionContext& ctx);

/// Pairs the generating-function coefficients a^(2n) of P_{2n} with the
/// Legendre coefficients of the elliptic kernel and the norms 1/(4n+1):
///   (pi^2/4) sum_{n<=N} [a^(2n)] [(-1)^n ((1/2)_n/n!)^3 (4n+1)] [1/(4n+1)].
/// Odd-index pairings vanish and are skipped.
[[nodiscard]] BigReal projection_sum(const BigReal& a, unsigned terms, const PrecisionContext& ctx);

}  // namespace mellint
