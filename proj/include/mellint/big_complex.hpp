#pragma once

#include "mellint/big_real.hpp"

#include <iosfwd>
#include <string>

namespace mellint {

/// Complex number with BigReal parts.
struct BigComplex {
  BigReal re;
  BigReal im;

  BigComplex() = default;
  /// Purely real value; imaginary part is a zero at the same precision.
  explicit BigComplex(BigReal real);
  BigComplex(BigReal real, BigReal imag) : re(std::move(real)), im(std::move(imag)) {}

  [[nodiscard]] Precision precision() const;
  [[nodiscard]] bool is_finite() const { return re.is_finite() && im.is_finite(); }
  /// "re" when the imaginary part is exactly zero, else "re+imi" / "re-imi".
  [[nodiscard]] std::string to_string(int digits) const;

  BigComplex& operator+=(const BigComplex& rhs);
  BigComplex& operator-=(const BigComplex& rhs);
  BigComplex& operator*=(const BigComplex& rhs);
  BigComplex& operator/=(const BigComplex& rhs);
  BigComplex& operator*=(const BigReal& rhs);
  BigComplex& operator/=(const BigReal& rhs);

  friend bool operator==(const BigComplex&, const BigComplex&) = default;
};

BigComplex operator-(const BigComplex& z);
BigComplex operator+(BigComplex lhs, const BigComplex& rhs);
BigComplex operator-(BigComplex lhs, const BigComplex& rhs);
BigComplex operator*(BigComplex lhs, const BigComplex& rhs);
BigComplex operator/(BigComplex lhs, const BigComplex& rhs);
BigComplex operator*(BigComplex lhs, const BigReal& rhs);
BigComplex operator*(const BigReal& lhs, BigComplex rhs);
BigComplex operator/(BigComplex lhs, const BigReal& rhs);
BigComplex operator/(const BigReal& lhs, const BigComplex& rhs);

BigReal abs(const BigComplex& z);
BigComplex conj(const BigComplex& z);
/// Principal branch: for arg z in (-pi, pi] the result has arg in (-pi/2, pi/2].
BigComplex sqrt(const BigComplex& z);

std::ostream& operator<<(std::ostream& os, const BigComplex& z);

}  // namespace mellint
