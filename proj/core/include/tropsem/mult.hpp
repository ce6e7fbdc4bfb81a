#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "tropsem/ext_real.hpp"

namespace tropsem {

using Rational = boost::multiprecision::mpq_rational;

/// Exact nonnegative rational point of a multiplicative cone.
using QVector = std::vector<Rational>;

/// Exact multiplicative value p = e^{-x} of an extended real x.
///
/// Zero corresponds to x = +inf and Infinite to x = -inf; every other value
/// is a strictly positive rational.
class Mult {
 public:
  enum class Kind : std::uint8_t { Zero, Finite, Infinite };

  Mult() = default;
  Mult(const Rational& p);  // NOLINT(google-explicit-constructor)
  Mult(long p);             // NOLINT(google-explicit-constructor)

  static Mult zero() { return Mult(); }
  static Mult infinite();

  Kind kind() const { return kind_; }
  bool is_zero() const { return kind_ == Kind::Zero; }
  bool is_infinite() const { return kind_ == Kind::Infinite; }
  bool is_finite() const { return kind_ == Kind::Finite; }

  /// The rational value; 0 for Zero, throws on Infinite.
  Rational rational() const;

  /// -ln p, with Zero -> +inf and Infinite -> -inf.
  ExtReal to_log() const;

  /// Reciprocal; swaps Zero and Infinite.
  Mult reciprocal() const;

  friend bool operator<(const Mult& a, const Mult& b);
  friend bool operator==(const Mult& a, const Mult& b);

 private:
  Kind kind_ = Kind::Zero;
  Rational value_{0};
};

inline bool operator>(const Mult& a, const Mult& b) { return b < a; }
inline bool operator<=(const Mult& a, const Mult& b) { return !(b < a); }
inline bool operator>=(const Mult& a, const Mult& b) { return !(a < b); }
inline bool operator!=(const Mult& a, const Mult& b) { return !(a == b); }

using MultVector = std::vector<Mult>;

/// Product with Zero absorbing (the image of the (min,+) convention).
Mult mul_zero_absorbing(const Mult& a, const Mult& b);
/// Product with Infinite absorbing (the image of the (max,+) convention).
Mult mul_inf_absorbing(const Mult& a, const Mult& b);

/// -ln of a positive rational, accurate for values far outside double range.
double neg_log(const Rational& p);

/// Dyadic rational within double precision (relative) of exp(-x); exact
/// double value of exp(-x) for x <= 0. Defined for large x where exp underflows.
Rational exp_neg_surrogate(double x);

MultVector to_mult(const QVector& z);
ExtVector to_log(const MultVector& z);
ExtVector to_log(const QVector& z);

/// Parses "p/q", an integer, or a finite decimal such as "0.25" (exactly).
Rational parse_rational(const std::string& s);
/// GMP canonical form: "3/11", "2", "0".
std::string to_string(const Rational& q);
std::string to_string(const Mult& m);

std::ostream& operator<<(std::ostream& os, const Mult& m);

}  // namespace tropsem
