#pragma once

#include "tropsem/ext_real.hpp"
#include "tropsem/mult.hpp"

namespace tropsem {

/// (min,+) over [-inf, +inf]; +inf is both the zero and absorbing for mul.
struct MinPlus {
  using value_type = ExtReal;
  static ExtReal zero() { return ExtReal::pos_inf(); }
  static ExtReal one() { return ExtReal(0.0); }
  static ExtReal add(const ExtReal& a, const ExtReal& b) { return tmin(a, b); }
  static ExtReal mul(const ExtReal& a, const ExtReal& b) { return tmul(a, b); }
  static bool equal(const ExtReal& a, const ExtReal& b) { return a == b; }
};

/// (max,+) over [-inf, +inf]; -inf is both the zero and absorbing for mul.
struct MaxPlus {
  using value_type = ExtReal;
  static ExtReal zero() { return ExtReal::neg_inf(); }
  static ExtReal one() { return ExtReal(0.0); }
  static ExtReal add(const ExtReal& a, const ExtReal& b) { return tmax(a, b); }
  static ExtReal mul(const ExtReal& a, const ExtReal& b) { return tmax_mul(a, b); }
  static bool equal(const ExtReal& a, const ExtReal& b) { return a == b; }
};

/// (max,x) over exact multiplicative values: the image of MinPlus under
/// x -> e^{-x}. Zero is absorbing for mul.
struct MaxTimes {
  using value_type = Mult;
  static Mult zero() { return Mult::zero(); }
  static Mult one() { return Mult(1); }
  static Mult add(const Mult& a, const Mult& b) { return a < b ? b : a; }
  static Mult mul(const Mult& a, const Mult& b) { return mul_zero_absorbing(a, b); }
  static bool equal(const Mult& a, const Mult& b) { return a == b; }
};

}  // namespace tropsem
