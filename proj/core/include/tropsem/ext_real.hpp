#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace tropsem {

/// Extended real number in the log domain: a finite double, +inf or -inf.
///
/// The infinities are explicit states. Finite values are never produced by
/// float overflow: arithmetic that would overflow a double is an error.
class ExtReal {
 public:
  enum class Kind : std::uint8_t { NegInf, Finite, PosInf };

  constexpr ExtReal() = default;
  ExtReal(double v);  // NOLINT(google-explicit-constructor): numeric literal convenience

  static constexpr ExtReal pos_inf() { return ExtReal(Kind::PosInf); }
  static constexpr ExtReal neg_inf() { return ExtReal(Kind::NegInf); }

  constexpr Kind kind() const { return kind_; }
  constexpr bool is_finite() const { return kind_ == Kind::Finite; }
  constexpr bool is_pos_inf() const { return kind_ == Kind::PosInf; }
  constexpr bool is_neg_inf() const { return kind_ == Kind::NegInf; }

  /// Finite value; throws std::logic_error on a sentinel.
  double value() const;

  /// Finite value or +/-HUGE_VAL; only for printing and plotting.
  double to_double() const;

  ExtReal operator-() const;

  /// Total order -inf < finite < +inf; exact on finite values.
  friend bool operator<(const ExtReal& a, const ExtReal& b);
  friend bool operator==(const ExtReal& a, const ExtReal& b);

 private:
  constexpr explicit ExtReal(Kind k) : kind_(k) {}

  Kind kind_ = Kind::Finite;
  double value_ = 0.0;
};

inline bool operator>(const ExtReal& a, const ExtReal& b) { return b < a; }
inline bool operator<=(const ExtReal& a, const ExtReal& b) { return !(b < a); }
inline bool operator>=(const ExtReal& a, const ExtReal& b) { return !(a < b); }
inline bool operator!=(const ExtReal& a, const ExtReal& b) { return !(a == b); }

using ExtVector = std::vector<ExtReal>;

/// Absolute/relative tolerance used for every log-domain comparison.
inline constexpr double kLogTolerance = 1e-9;

/// Sentinels compare exactly; finite values within
/// kLogTolerance * max(1, |a|, |b|).
bool approx_equal(const ExtReal& a, const ExtReal& b);
/// a <= b up to the same tolerance.
bool approx_leq(const ExtReal& a, const ExtReal& b);
bool approx_equal(const ExtVector& a, const ExtVector& b);

/// (min,+) addition.
ExtReal tmin(const ExtReal& a, const ExtReal& b);
/// (max,+) addition.
ExtReal tmax(const ExtReal& a, const ExtReal& b);
/// (min,+) multiplication: +inf is absorbing, so (+inf) + (-inf) = +inf.
ExtReal tmul(const ExtReal& a, const ExtReal& b);
/// (max,+) multiplication: -inf is absorbing, so (+inf) + (-inf) = -inf.
ExtReal tmax_mul(const ExtReal& a, const ExtReal& b);

/// Coordinatewise helpers.
ExtVector negate(const ExtVector& x);
ExtVector pointwise_min(const ExtVector& a, const ExtVector& b);
ExtVector pointwise_max(const ExtVector& a, const ExtVector& b);
/// lambda (.) x in the (min,+) convention.
ExtVector shift(const ExtReal& lambda, const ExtVector& x);
bool all_pos_inf(const ExtVector& x);

/// "inf", "-inf" or a round-trippable decimal.
std::string to_string(const ExtReal& x);
/// 12 significant digits, used by --float output.
std::string to_string_short(const ExtReal& x);
/// "[a, b, ...]" with to_string_short coordinates.
std::string to_string(const ExtVector& x);
/// Accepts "inf", "+inf", "-inf" or a decimal number.
ExtReal parse_ext_real(const std::string& s);

std::ostream& operator<<(std::ostream& os, const ExtReal& x);

}  // namespace tropsem
