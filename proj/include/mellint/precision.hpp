#pragma once

#include "mellint/big_complex.hpp"
#include "mellint/big_real.hpp"

#include <optional>
#include <string_view>

namespace mellint {

/// Working precision and the tolerances derived from it.
///
/// `digits` is the number of decimal digits the caller wants; values are
/// carried with extra guard bits on top of that. The context is immutable
/// after construction and is passed explicitly to every operation.
class PrecisionContext {
 public:
  static constexpr int kMinDigits = 30;
  static constexpr int kDefaultDigits = 50;
  static constexpr int kGuardBits = 64;
  static constexpr int kDefaultLevelCap = 12;

  /// quad_target = 10^-(digits-10), pass_tol = 10^-(digits-15).
  explicit PrecisionContext(int digits = kDefaultDigits);

  /// Same digits with the identity pass tolerance replaced; the override
  /// must stay above quad_target.
  [[nodiscard]] PrecisionContext with_pass_tol(const BigReal& tol) const;
  [[nodiscard]] PrecisionContext with_level_cap(int cap) const;

  [[nodiscard]] int digits() const { return digits_; }
  [[nodiscard]] Precision bits() const { return bits_; }
  [[nodiscard]] const BigReal& quad_target() const { return quad_target_; }
  [[nodiscard]] const BigReal& pass_tol() const { return pass_tol_; }
  /// Maximum number of step halvings in the double-exponential rules.
  [[nodiscard]] int level_cap() const { return level_cap_; }
  /// Unit roundoff of the working precision, 2^(1-bits).
  [[nodiscard]] const BigReal& epsilon() const { return epsilon_; }
  /// pi at working precision, computed once per context.
  [[nodiscard]] const BigReal& pi() const { return pi_; }

  [[nodiscard]] BigReal real(long value) const { return BigReal(value, bits_); }
  [[nodiscard]] BigReal ratio(long num, long den) const { return BigReal::ratio(num, den, bits_); }
  [[nodiscard]] BigReal parse(std::string_view text) const { return BigReal::parse(text, bits_); }
  /// 10^(-k) at working precision.
  [[nodiscard]] BigReal ten_to_minus(long k) const;
  [[nodiscard]] BigComplex complex(long re, long im = 0) const {
    return BigComplex(real(re), real(im));
  }

 private:
  int digits_;
  Precision bits_;
  int level_cap_ = kDefaultLevelCap;
  BigReal quad_target_;
  BigReal pass_tol_;
  BigReal epsilon_;
  BigReal pi_;
};

}  // namespace mellint
