#include "mellint/big_complex.hpp"

#include <algorithm>
#include <ostream>
#include <utility>

namespace mellint {

BigComplex::BigComplex(BigReal real) : re(std::move(real)), im(0, re.precision()) {}

Precision BigComplex::precision() const { return std::max(re.precision(), im.precision()); }

std::string BigComplex::to_string(int digits) const {
  if (im.is_zero()) return re.to_string(digits);
  std::string out = re.to_string(digits);
  out.push_back(im.sign() < 0 ? '-' : '+');
  out.append(abs(im).to_string(digits));
  out.push_back('i');
  return out;
}

BigComplex& BigComplex::operator+=(const BigComplex& rhs) {
  re += rhs.re;
  im += rhs.im;
  return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& rhs) {
  re -= rhs.re;
  im -= rhs.im;
  return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& rhs) {
  BigReal r = re * rhs.re - im * rhs.im;
  BigReal i = re * rhs.im + im * rhs.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& rhs) {
  // Smith's algorithm keeps the intermediate magnitudes bounded.
  if (abs(rhs.re) >= abs(rhs.im)) {
    BigReal ratio = rhs.im / rhs.re;
    BigReal den = rhs.re + rhs.im * ratio;
    BigReal r = (re + im * ratio) / den;
    BigReal i = (im - re * ratio) / den;
    re = std::move(r);
    im = std::move(i);
  } else {
    BigReal ratio = rhs.re / rhs.im;
    BigReal den = rhs.re * ratio + rhs.im;
    BigReal r = (re * ratio + im) / den;
    BigReal i = (im * ratio - re) / den;
    re = std::move(r);
    im = std::move(i);
  }
  return *this;
}

BigComplex& BigComplex::operator*=(const BigReal& rhs) {
  re *= rhs;
  im *= rhs;
  return *this;
}

BigComplex& BigComplex::operator/=(const BigReal& rhs) {
  re /= rhs;
  im /= rhs;
  return *this;
}

BigComplex operator-(const BigComplex& z) { return {-z.re, -z.im}; }
BigComplex operator+(BigComplex lhs, const BigComplex& rhs) { return lhs += rhs; }
BigComplex operator-(BigComplex lhs, const BigComplex& rhs) { return lhs -= rhs; }
BigComplex operator*(BigComplex lhs, const BigComplex& rhs) { return lhs *= rhs; }
BigComplex operator/(BigComplex lhs, const BigComplex& rhs) { return lhs /= rhs; }
BigComplex operator*(BigComplex lhs, const BigReal& rhs) { return lhs *= rhs; }
BigComplex operator*(const BigReal& lhs, BigComplex rhs) { return rhs *= lhs; }
BigComplex operator/(BigComplex lhs, const BigReal& rhs) { return lhs /= rhs; }
BigComplex operator/(const BigReal& lhs, const BigComplex& rhs) {
  return BigComplex(lhs) /= rhs;
}

BigReal abs(const BigComplex& z) {
  BigReal out(0, z.precision());
  mpfr_hypot(out.get(), z.re.get(), z.im.get(), MPFR_RNDN);
  return out;
}

BigComplex conj(const BigComplex& z) { return {z.re, -z.im}; }

BigComplex sqrt(const BigComplex& z) {
  const Precision prec = z.precision();
  if (z.re.is_zero() && z.im.is_zero()) return {BigReal(0, prec), BigReal(0, prec)};
  const BigReal r = abs(z);
  if (z.re.sign() >= 0) {
    BigReal u = sqrt((r + z.re) / 2);
    BigReal v = z.im / (2 * u);
    return {std::move(u), std::move(v)};
  }
  // Left half plane: build the imaginary part first to avoid cancellation.
  // The negative real axis (im == +0 or -0) maps to the positive imaginary
  // axis, which puts arg z = pi on the principal branch.
  BigReal v = sqrt((r - z.re) / 2);
  if (z.im.sign() < 0) v = -v;
  BigReal u = abs(z.im) / (2 * abs(v));
  return {std::move(u), std::move(v)};
}

std::ostream& operator<<(std::ostream& os, const BigComplex& z) {
  return os << '(' << z.re << ", " << z.im << ')';
}

}  // namespace mellint
