#include "mellint/precision.hpp"

#include "mellint/errors.hpp"
#include "mellint/numeric_kernel.hpp"

#include <cmath>
#include <string>

namespace mellint {

PrecisionContext::PrecisionContext(int digits) : digits_(digits) {
  if (digits < kMinDigits) {
    throw DomainError("working precision must be at least " + std::to_string(kMinDigits) +
                      " digits, got " + std::to_string(digits));
  }
  bits_ = static_cast<Precision>(std::ceil(digits * 3.321928094887362)) + kGuardBits;
  quad_target_ = ten_to_minus(digits - 10);
  pass_tol_ = ten_to_minus(digits - 15);
  epsilon_ = ldexp(real(1), 1 - bits_);
  pi_ = gauss_legendre_pi(bits_);
}

PrecisionContext PrecisionContext::with_pass_tol(const BigReal& tol) const {
  if (!(tol > quad_target_)) {
    throw DomainError("pass tolerance " + tol.to_string(6) + " must exceed the quadrature target " +
                      quad_target_.to_string(6));
  }
  PrecisionContext out = *this;
  out.pass_tol_ = with_precision(tol, bits_);
  return out;
}

PrecisionContext PrecisionContext::with_level_cap(int cap) const {
  if (cap < 3 || cap > 20) throw DomainError("level cap must lie in [3, 20]");
  PrecisionContext out = *this;
  out.level_cap_ = cap;
  return out;
}

BigReal PrecisionContext::ten_to_minus(long k) const {
  BigReal out(0, bits_);
  mpfr_ui_pow_ui(out.get(), 10, static_cast<unsigned long>(k < 0 ? -k : k), MPFR_RNDN);
  if (k > 0) mpfr_ui_div(out.get(), 1, out.get(), MPFR_RNDN);
  return out;
}

}  // namespace mellint
