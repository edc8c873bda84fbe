#pragma once

#include "mellint/big_complex.hpp"
#include "mellint/big_real.hpp"
#include "mellint/precision.hpp"

#include <doctest.h>

#include <string>

namespace test {

using mellint::BigComplex;
using mellint::BigReal;
using mellint::PrecisionContext;

inline const PrecisionContext& ctx50() {
  static const PrecisionContext ctx(50);
  return ctx;
}

inline const PrecisionContext& ctx30() {
  static const PrecisionContext ctx(30);
  return ctx;
}

// |x - y| <= tol, with both values in the failure message.
inline bool close(const BigReal& x, const BigReal& y, const BigReal& tol) {
  const bool ok = abs(x - y) <= tol;
  if (!ok) {
    MESSAGE("values " << x.to_string(40) << " and " << y.to_string(40) << " differ by "
                      << abs(x - y).to_string(5) << " > " << tol.to_string(5));
  }
  return ok;
}

inline bool close(const BigComplex& x, const BigComplex& y, const BigReal& tol) {
  const bool ok = abs(x - y) <= tol;
  if (!ok) {
    MESSAGE("values " << x.to_string(40) << " and " << y.to_string(40) << " differ by "
                      << abs(x - y).to_string(5) << " > " << tol.to_string(5));
  }
  return ok;
}

inline bool rel_close(const BigReal& x, const BigReal& y, const BigReal& rel) {
  return close(x, y, rel * abs(y));
}

// Bitwise equality of the stored values.
inline bool identical(const BigReal& x, const BigReal& y) {
  return x.precision() == y.precision() && (x == y || (x.is_zero() && y.is_zero()));
}

}  // namespace test
