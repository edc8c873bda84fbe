#include "mellint/big_real.hpp"

#include "mellint/errors.hpp"

#include <algorithm>
#include <ostream>
#include <string>
#include <utility>

namespace mellint {

namespace {

Precision wider(const BigReal& a, const BigReal& b) {
  return std::max(a.precision(), b.precision());
}

std::partial_ordering from_cmp(int c) {
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

template <typename Fn>
BigReal unary(const BigReal& x, Fn fn) {
  BigReal out(0, x.precision());
  fn(out.get(), x.get(), MPFR_RNDN);
  return out;
}

}  // namespace

BigReal::BigReal() {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_set_zero(value_, 1);
}

BigReal::BigReal(long value, Precision prec) {
  mpfr_init2(value_, prec);
  mpfr_set_si(value_, value, MPFR_RNDN);
}

BigReal::BigReal(const BigReal& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& other) noexcept {
  // Steal the limbs and leave `other` empty; the destructor checks for it.
  value_[0] = other.value_[0];
  other.value_[0]._mpfr_d = nullptr;
}

BigReal& BigReal::operator=(const BigReal& other) {
  if (this == &other) return *this;
  if (value_[0]._mpfr_d == nullptr) {
    mpfr_init2(value_, other.precision());
  } else if (precision() != other.precision()) {
    mpfr_set_prec(value_, other.precision());
  }
  mpfr_set(value_, other.value_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
  if (this == &other) return *this;
  std::swap(value_[0], other.value_[0]);
  return *this;
}

BigReal::~BigReal() {
  if (value_[0]._mpfr_d != nullptr) mpfr_clear(value_);
}

BigReal BigReal::parse(std::string_view text, Precision prec) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return c == ' '; }), s.end());
  if (s.empty()) throw DomainError("empty numeric literal");
  if (const auto slash = s.find('/'); slash != std::string::npos) {
    BigReal num = parse(s.substr(0, slash), prec);
    BigReal den = parse(s.substr(slash + 1), prec);
    if (den.is_zero()) throw DomainError("zero denominator in '" + s + "'");
    return num / den;
  }
  BigReal out(0, prec);
  char* end = nullptr;
  mpfr_strtofr(out.get(), s.c_str(), &end, 10, MPFR_RNDN);
  if (end == nullptr || end == s.c_str() || *end != '\0') {
    throw DomainError("malformed numeric literal '" + s + "'");
  }
  return out;
}

BigReal BigReal::from_double(double value, Precision prec) {
  BigReal out(0, prec);
  mpfr_set_d(out.get(), value, MPFR_RNDN);
  return out;
}

BigReal BigReal::ratio(long num, long den, Precision prec) {
  BigReal out(num, prec);
  mpfr_div_si(out.get(), out.get(), den, MPFR_RNDN);
  return out;
}

BigReal BigReal::infinity(Precision prec) {
  BigReal out(0, prec);
  mpfr_set_inf(out.get(), 1);
  return out;
}

std::string BigReal::to_string(int digits) const {
  if (mpfr_nan_p(value_)) return "nan";
  if (mpfr_inf_p(value_)) return sign() > 0 ? "inf" : "-inf";
  if (is_zero()) return "0";
  mpfr_exp_t exp10 = 0;
  char* raw = mpfr_get_str(nullptr, &exp10, 10, static_cast<size_t>(digits), value_, MPFR_RNDN);
  std::string mant(raw);
  mpfr_free_str(raw);
  std::string out;
  if (mant.front() == '-') {
    out.push_back('-');
    mant.erase(mant.begin());
  }
  // mpfr gives 0.d1d2... x 10^exp10; rewrite as d1.d2... x 10^(exp10-1).
  out.push_back(mant.front());
  if (mant.size() > 1) {
    out.push_back('.');
    out.append(mant, 1, std::string::npos);
  }
  out.push_back('e');
  out.append(std::to_string(static_cast<long>(exp10) - 1));
  return out;
}

BigReal& BigReal::operator+=(const BigReal& rhs) {
  if (rhs.precision() > precision()) mpfr_prec_round(value_, rhs.precision(), MPFR_RNDN);
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator-=(const BigReal& rhs) {
  if (rhs.precision() > precision()) mpfr_prec_round(value_, rhs.precision(), MPFR_RNDN);
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator*=(const BigReal& rhs) {
  if (rhs.precision() > precision()) mpfr_prec_round(value_, rhs.precision(), MPFR_RNDN);
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator/=(const BigReal& rhs) {
  if (rhs.precision() > precision()) mpfr_prec_round(value_, rhs.precision(), MPFR_RNDN);
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator+=(long rhs) {
  mpfr_add_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator-=(long rhs) {
  mpfr_sub_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator*=(long rhs) {
  mpfr_mul_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator/=(long rhs) {
  mpfr_div_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

BigReal operator-(const BigReal& x) { return unary(x, mpfr_neg); }

std::partial_ordering operator<=>(const BigReal& lhs, const BigReal& rhs) {
  if (mpfr_unordered_p(lhs.value_, rhs.value_)) return std::partial_ordering::unordered;
  return from_cmp(mpfr_cmp(lhs.value_, rhs.value_));
}

std::partial_ordering operator<=>(const BigReal& lhs, long rhs) {
  if (mpfr_nan_p(lhs.value_)) return std::partial_ordering::unordered;
  return from_cmp(mpfr_cmp_si(lhs.value_, rhs));
}

BigReal operator+(const BigReal& lhs, const BigReal& rhs) {
  BigReal out(0, wider(lhs, rhs));
  mpfr_add(out.get(), lhs.get(), rhs.get(), MPFR_RNDN);
  return out;
}
BigReal operator-(const BigReal& lhs, const BigReal& rhs) {
  BigReal out(0, wider(lhs, rhs));
  mpfr_sub(out.get(), lhs.get(), rhs.get(), MPFR_RNDN);
  return out;
}
BigReal operator*(const BigReal& lhs, const BigReal& rhs) {
  BigReal out(0, wider(lhs, rhs));
  mpfr_mul(out.get(), lhs.get(), rhs.get(), MPFR_RNDN);
  return out;
}
BigReal operator/(const BigReal& lhs, const BigReal& rhs) {
  BigReal out(0, wider(lhs, rhs));
  mpfr_div(out.get(), lhs.get(), rhs.get(), MPFR_RNDN);
  return out;
}

BigReal operator+(const BigReal& lhs, long rhs) {
  BigReal out(0, lhs.precision());
  mpfr_add_si(out.get(), lhs.get(), rhs, MPFR_RNDN);
  return out;
}
BigReal operator-(const BigReal& lhs, long rhs) {
  BigReal out(0, lhs.precision());
  mpfr_sub_si(out.get(), lhs.get(), rhs, MPFR_RNDN);
  return out;
}
BigReal operator*(const BigReal& lhs, long rhs) {
  BigReal out(0, lhs.precision());
  mpfr_mul_si(out.get(), lhs.get(), rhs, MPFR_RNDN);
  return out;
}
BigReal operator/(const BigReal& lhs, long rhs) {
  BigReal out(0, lhs.precision());
  mpfr_div_si(out.get(), lhs.get(), rhs, MPFR_RNDN);
  return out;
}
BigReal operator+(long lhs, const BigReal& rhs) { return rhs + lhs; }
BigReal operator-(long lhs, const BigReal& rhs) {
  BigReal out(0, rhs.precision());
  mpfr_si_sub(out.get(), lhs, rhs.get(), MPFR_RNDN);
  return out;
}
BigReal operator*(long lhs, const BigReal& rhs) { return rhs * lhs; }
BigReal operator/(long lhs, const BigReal& rhs) {
  BigReal out(0, rhs.precision());
  mpfr_si_div(out.get(), lhs, rhs.get(), MPFR_RNDN);
  return out;
}

BigReal abs(const BigReal& x) { return unary(x, mpfr_abs); }
BigReal sqrt(const BigReal& x) { return unary(x, mpfr_sqrt); }
BigReal cbrt(const BigReal& x) { return unary(x, mpfr_cbrt); }
BigReal exp(const BigReal& x) { return unary(x, mpfr_exp); }
BigReal log(const BigReal& x) { return unary(x, mpfr_log); }
BigReal sin(const BigReal& x) { return unary(x, mpfr_sin); }
BigReal cos(const BigReal& x) { return unary(x, mpfr_cos); }
BigReal tan(const BigReal& x) { return unary(x, mpfr_tan); }
BigReal atan(const BigReal& x) { return unary(x, mpfr_atan); }
BigReal sinh(const BigReal& x) { return unary(x, mpfr_sinh); }
BigReal cosh(const BigReal& x) { return unary(x, mpfr_cosh); }
BigReal asinh(const BigReal& x) { return unary(x, mpfr_asinh); }

BigReal atan2(const BigReal& y, const BigReal& x) {
  BigReal out(0, wider(y, x));
  mpfr_atan2(out.get(), y.get(), x.get(), MPFR_RNDN);
  return out;
}

BigReal pow(const BigReal& base, const BigReal& exponent) {
  BigReal out(0, wider(base, exponent));
  mpfr_pow(out.get(), base.get(), exponent.get(), MPFR_RNDN);
  return out;
}

BigReal pow(const BigReal& base, long exponent) {
  BigReal out(0, base.precision());
  mpfr_pow_si(out.get(), base.get(), exponent, MPFR_RNDN);
  return out;
}

BigReal ldexp(const BigReal& x, long k) {
  BigReal out(0, x.precision());
  mpfr_mul_2si(out.get(), x.get(), k, MPFR_RNDN);
  return out;
}

BigReal max(const BigReal& a, const BigReal& b) { return a < b ? b : a; }
BigReal min(const BigReal& a, const BigReal& b) { return b < a ? b : a; }

BigReal with_precision(const BigReal& x, Precision prec) {
  BigReal out(0, prec);
  mpfr_set(out.get(), x.get(), MPFR_RNDN);
  return out;
}

std::ostream& operator<<(std::ostream& os, const BigReal& x) {
  const auto digits = static_cast<int>(static_cast<double>(x.precision()) * 0.30103);
  return os << x.to_string(std::max(digits, 2));
}

}  // namespace mellint
