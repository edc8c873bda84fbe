#pragma once

#include "mellint/big_complex.hpp"
#include "mellint/big_real.hpp"
#include "mellint/precision.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mellint {

/// Catalog of verified identities. The numbering is this library's own.
enum class IdentityId {
  I1,      ///< one-parameter kernel integral = [K(m(a))]^2, a in [0, 1]
  I1_ext,  ///< same integral for a > 1 against the rescaled closed form
  I2,      ///< derivative combination at a = 1/sqrt8 = pi / (4 sqrt2)
  I3,      ///< singular value r = 4
  I4,      ///< singular value r = 3, complex kernel
  I5,      ///< singular value r = 7, complex kernel
  I6,      ///< two-parameter Laplace family, b, c >= 0
  I7,      ///< b = 0, c = 1 corollary = pi / (2 sqrt2)
  I8,      ///< a = 0 base case = pi^2 / 4
  I9,      ///< semi-infinite Re K integral = pi / (2 sqrt(1 + c^2))
  I10,     ///< second derivative combination = -pi / (8 sqrt2)
  I11,     ///< Clausen-type series = (4/pi^2) [K(m(a))]^2
  I12,     ///< Ramanujan-type series for 1/pi
  I13,     ///< Legendre-sum representation = the kernel integral
};

inline constexpr IdentityId kAllIdentities[] = {
    IdentityId::I1, IdentityId::I1_ext, IdentityId::I2,  IdentityId::I3,  IdentityId::I4,
    IdentityId::I5, IdentityId::I6,     IdentityId::I7,  IdentityId::I8,  IdentityId::I9,
    IdentityId::I10, IdentityId::I11,   IdentityId::I12, IdentityId::I13};

/// "I1", "I1-ext", ..., "I13".
[[nodiscard]] std::string_view to_string(IdentityId id);
/// Case-insensitive inverse of to_string; nullopt for unknown names.
[[nodiscard]] std::optional<IdentityId> parse_identity_id(std::string_view text);

/// One named parameter and the range it may take.
struct ParamDomain {
  std::string name;
  double lo = 0;
  double hi = 0;  ///< may be +infinity
  bool lo_open = false;
  bool hi_open = false;
  bool integer = false;
  /// Used when verify() is called without this parameter. Empty means
  /// required; "auto" means chosen from the other parameters and digits.
  std::string default_value;

  [[nodiscard]] bool contains(const BigReal& x) const;
  /// e.g. "a in [0, 1]", "c in (0, inf)".
  [[nodiscard]] std::string describe() const;
};

/// Catalog row as shown by `list`.
struct IdentitySummary {
  IdentityId id;
  std::string lhs;
  std::string rhs;
  std::vector<ParamDomain> params;
  /// "quadrature" or "series": how the left side is evaluated.
  std::string method;
  std::string notes;
};

/// Ordered name -> value map of identity parameters.
using ParamMap = std::map<std::string, BigReal>;

/// Evaluated left side together with the quadrature error estimate (zero
/// for series).
struct LhsValue {
  BigComplex value;
  BigReal err_estimate;
};

/// Catalog entry: the row plus its left- and right-side evaluators. Both
/// receive the fully resolved parameter map.
struct IdentityRecord {
  IdentitySummary summary;
  std::function<LhsValue(const ParamMap&, const PrecisionContext&)> lhs;
  std::function<BigComplex(const ParamMap&, const PrecisionContext&)> rhs;
  /// Complex-kernel rows additionally require |Im lhs| <= 10 err_estimate.
  bool complex_kernel = false;
};

/// Catalog rows I1 ... I13 in fixed order (I1 and I1-ext separately).
[[nodiscard]] std::vector<IdentitySummary> list_identities();
[[nodiscard]] const IdentityRecord& identity_record(IdentityId id);

struct VerificationReport {
  IdentityId id = IdentityId::I1;
  /// Resolved parameters in declaration order, defaults included.
  std::vector<std::pair<std::string, BigReal>> params;
  BigComplex lhs_value;
  BigComplex rhs_value;
  BigReal abs_err;
  BigReal rel_err;
  BigReal err_estimate;
  bool passed = false;
  int digits_used = 0;
  double wall_ms = 0;
};

/// Fills defaults and checks every parameter against its domain. Throws
/// DomainError for unknown names, missing required values or values out
/// of range.
[[nodiscard]] ParamMap resolve_params(IdentityId id, const ParamMap& given, const PrecisionContext& ctx);

/// Evaluates both sides and compares them:
///   passed iff |lhs - rhs| <= pass_tol * max(1, |rhs|)
/// (and |Im lhs| <= 10 err_estimate for the complex kernels).
/// Deterministic for a fixed ctx apart from wall_ms.
[[nodiscard]] VerificationReport verify(IdentityId id, const ParamMap& params, const PrecisionContext& ctx);

/// verify() on `steps` evenly spaced values of `param` over [lo, hi],
/// endpoints included, with the remaining parameters taken from `fixed`.
/// Grid points run concurrently; reports come back in grid order.
/// Throws DomainError for steps < 2, lo >= hi or an endpoint outside the
/// parameter's domain.
[[nodiscard]] std::vector<VerificationReport> sweep(IdentityId id, const std::string& param,
                                                    const BigReal& lo, const BigReal& hi, unsigned steps,
                                                    const ParamMap& fixed, const PrecisionContext& ctx);

/// Number of series terms that pushes the geometric tail |a|^(2N) below
/// 10^-(digits+10).
[[nodiscard]] unsigned auto_series_terms(const BigReal& a, const PrecisionContext& ctx);

}  // namespace mellint
