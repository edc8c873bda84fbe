#pragma once

#include <mpfr.h>

#include <concepts>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace mellint {

/// Binary precision in bits. Every BigReal carries its own.
using Precision = mpfr_prec_t;

/// Owning RAII wrapper around an MPFR value.
///
/// Binary operations round to the larger of the two operand precisions;
/// operations with a machine integer keep the BigReal's precision. There
/// is no ambient default precision: a value gets its precision from the
/// PrecisionContext (or another BigReal) that produced it.
class BigReal {
 public:
  /// Zero at the minimal precision; only useful as a placeholder that is
  /// later assigned over.
  BigReal();
  BigReal(long value, Precision prec);
  BigReal(const BigReal& other);
  BigReal(BigReal&& other) noexcept;
  BigReal& operator=(const BigReal& other);
  BigReal& operator=(BigReal&& other) noexcept;
  ~BigReal();

  /// Parses a decimal literal ("0.5", "-1.25e-3") or a ratio "p/q".
  /// Throws DomainError on malformed input.
  static BigReal parse(std::string_view text, Precision prec);
  /// Exact conversion of a double; tests and diagnostics only.
  static BigReal from_double(double value, Precision prec);
  static BigReal ratio(long num, long den, Precision prec);
  static BigReal infinity(Precision prec);

  [[nodiscard]] Precision precision() const { return mpfr_get_prec(value_); }
  [[nodiscard]] mpfr_srcptr get() const { return value_; }
  [[nodiscard]] mpfr_ptr get() { return value_; }

  [[nodiscard]] bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  [[nodiscard]] bool is_finite() const { return mpfr_number_p(value_) != 0; }
  [[nodiscard]] int sign() const { return mpfr_sgn(value_); }
  [[nodiscard]] double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Binary exponent e with |x| in [2^(e-1), 2^e); meaningless for zero.
  [[nodiscard]] long exponent() const { return mpfr_get_exp(value_); }

  /// Scientific decimal string with `digits` significant digits, e.g.
  /// "2.4674011002723396547e0". Deterministic for a given value.
  [[nodiscard]] std::string to_string(int digits) const;

  BigReal& operator+=(const BigReal& rhs);
  BigReal& operator-=(const BigReal& rhs);
  BigReal& operator*=(const BigReal& rhs);
  BigReal& operator/=(const BigReal& rhs);
  BigReal& operator+=(long rhs);
  BigReal& operator-=(long rhs);
  BigReal& operator*=(long rhs);
  BigReal& operator/=(long rhs);

  friend BigReal operator-(const BigReal& x);

  friend bool operator==(const BigReal& lhs, const BigReal& rhs) {
    return mpfr_equal_p(lhs.value_, rhs.value_) != 0;
  }
  friend std::partial_ordering operator<=>(const BigReal& lhs, const BigReal& rhs);
  friend bool operator==(const BigReal& lhs, long rhs) { return mpfr_cmp_si(lhs.value_, rhs) == 0; }
  friend std::partial_ordering operator<=>(const BigReal& lhs, long rhs);

 private:
  mpfr_t value_;
};

BigReal operator+(const BigReal& lhs, const BigReal& rhs);
BigReal operator-(const BigReal& lhs, const BigReal& rhs);
BigReal operator*(const BigReal& lhs, const BigReal& rhs);
BigReal operator/(const BigReal& lhs, const BigReal& rhs);

BigReal operator+(const BigReal& lhs, long rhs);
BigReal operator-(const BigReal& lhs, long rhs);
BigReal operator*(const BigReal& lhs, long rhs);
BigReal operator/(const BigReal& lhs, long rhs);
BigReal operator+(long lhs, const BigReal& rhs);
BigReal operator-(long lhs, const BigReal& rhs);
BigReal operator*(long lhs, const BigReal& rhs);
BigReal operator/(long lhs, const BigReal& rhs);

// Route plain `int` literals to the `long` overloads without ambiguity.
template <std::integral I>
  requires(!std::same_as<I, long>)
BigReal operator+(const BigReal& lhs, I rhs) { return lhs + static_cast<long>(rhs); }
template <std::integral I>
  requires(!std::same_as<I, long>)
BigReal operator-(const BigReal& lhs, I rhs) { return lhs - static_cast<long>(rhs); }
template <std::integral I>
  requires(!std::same_as<I, long>)
BigReal operator*(const BigReal& lhs, I rhs) { return lhs * static_cast<long>(rhs); }
template <std::integral I>
  requires(!std::same_as<I, long>)
BigReal operator/(const BigReal& lhs, I rhs) { return lhs / static_cast<long>(rhs); }
template <std::integral I>
  requires(!std::same_as<I, long>)
BigReal operator+(I lhs, const BigReal& rhs) { return static_cast<long>(lhs) + rhs; }
template <std::integral I>
  requires(!std::same_as<I, long>)
BigReal operator-(I lhs, const BigReal& rhs) { return static_cast<long>(lhs) - rhs; }
template <std::integral I>
  requires(!std::same_as<I, long>)
BigReal operator*(I lhs, const BigReal& rhs) { return static_cast<long>(lhs) * rhs; }
template <std::integral I>
  requires(!std::same_as<I, long>)
BigReal operator/(I lhs, const BigReal& rhs) { return static_cast<long>(lhs) / rhs; }
template <std::integral I>
  requires(!std::same_as<I, long>)
bool operator==(const BigReal& lhs, I rhs) { return lhs == static_cast<long>(rhs); }
template <std::integral I>
  requires(!std::same_as<I, long>)
std::partial_ordering operator<=>(const BigReal& lhs, I rhs) { return lhs <=> static_cast<long>(rhs); }

BigReal abs(const BigReal& x);
BigReal sqrt(const BigReal& x);
BigReal cbrt(const BigReal& x);
BigReal exp(const BigReal& x);
BigReal log(const BigReal& x);
BigReal sin(const BigReal& x);
BigReal cos(const BigReal& x);
BigReal tan(const BigReal& x);
BigReal atan(const BigReal& x);
BigReal atan2(const BigReal& y, const BigReal& x);
BigReal sinh(const BigReal& x);
BigReal cosh(const BigReal& x);
BigReal asinh(const BigReal& x);
BigReal pow(const BigReal& base, const BigReal& exponent);
BigReal pow(const BigReal& base, long exponent);
/// x * 2^k, exact.
BigReal ldexp(const BigReal& x, long k);
BigReal max(const BigReal& a, const BigReal& b);
BigReal min(const BigReal& a, const BigReal& b);
/// Copy of x rounded to a new precision.
BigReal with_precision(const BigReal& x, Precision prec);

std::ostream& operator<<(std::ostream& os, const BigReal& x);

}  // namespace mellint
