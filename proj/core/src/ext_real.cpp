#include "tropsem/ext_real.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "tropsem/error.hpp"

namespace tropsem {

namespace {

ExtReal checked_sum(double a, double b) {
  const double s = a + b;
  if (!std::isfinite(s)) throw std::overflow_error("ExtReal: finite sum overflowed");
  return ExtReal(s);
}

}  // namespace

ExtReal::ExtReal(double v) {
  if (std::isnan(v)) throw std::invalid_argument("ExtReal: NaN is not an extended real");
  if (std::isinf(v)) {
    kind_ = v > 0 ? Kind::PosInf : Kind::NegInf;
  } else {
    value_ = v == 0.0 ? 0.0 : v;  // folds -0.0
  }
}

double ExtReal::value() const {
  if (kind_ != Kind::Finite) throw std::logic_error("ExtReal::value on an infinite sentinel");
  return value_;
}

double ExtReal::to_double() const {
  switch (kind_) {
    case Kind::NegInf: return -HUGE_VAL;
    case Kind::PosInf: return HUGE_VAL;
    case Kind::Finite: break;
  }
  return value_;
}

ExtReal ExtReal::operator-() const {
  switch (kind_) {
    case Kind::NegInf: return pos_inf();
    case Kind::PosInf: return neg_inf();
    case Kind::Finite: break;
  }
  return ExtReal(-value_);
}

bool operator<(const ExtReal& a, const ExtReal& b) {
  if (a.kind_ != b.kind_) return a.kind_ < b.kind_;
  return a.kind_ == ExtReal::Kind::Finite && a.value_ < b.value_;
}

bool operator==(const ExtReal& a, const ExtReal& b) {
  if (a.kind_ != b.kind_) return false;
  return a.kind_ != ExtReal::Kind::Finite || a.value_ == b.value_;
}

bool approx_equal(const ExtReal& a, const ExtReal& b) {
  if (a.kind() != b.kind()) return false;
  if (!a.is_finite()) return true;
  const double x = a.value();
  const double y = b.value();
  const double scale = std::max({1.0, std::fabs(x), std::fabs(y)});
  return std::fabs(x - y) <= kLogTolerance * scale;
}

bool approx_leq(const ExtReal& a, const ExtReal& b) { return a <= b || approx_equal(a, b); }

bool approx_equal(const ExtVector& a, const ExtVector& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!approx_equal(a[i], b[i])) return false;
  }
  return true;
}

ExtReal tmin(const ExtReal& a, const ExtReal& b) { return b < a ? b : a; }

ExtReal tmax(const ExtReal& a, const ExtReal& b) { return a < b ? b : a; }

ExtReal tmul(const ExtReal& a, const ExtReal& b) {
  if (a.is_pos_inf() || b.is_pos_inf()) return ExtReal::pos_inf();
  if (a.is_neg_inf() || b.is_neg_inf()) return ExtReal::neg_inf();
  return checked_sum(a.value(), b.value());
}

ExtReal tmax_mul(const ExtReal& a, const ExtReal& b) {
  if (a.is_neg_inf() || b.is_neg_inf()) return ExtReal::neg_inf();
  if (a.is_pos_inf() || b.is_pos_inf()) return ExtReal::pos_inf();
  return checked_sum(a.value(), b.value());
}

ExtVector negate(const ExtVector& x) {
  ExtVector out;
  out.reserve(x.size());
  for (const auto& v : x) out.push_back(-v);
  return out;
}

ExtVector pointwise_min(const ExtVector& a, const ExtVector& b) {
  if (a.size() != b.size()) throw InvalidInput("pointwise_min: length mismatch");
  ExtVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = tmin(a[i], b[i]);
  return out;
}

ExtVector pointwise_max(const ExtVector& a, const ExtVector& b) {
  if (a.size() != b.size()) throw InvalidInput("pointwise_max: length mismatch");
  ExtVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = tmax(a[i], b[i]);
  return out;
}

ExtVector shift(const ExtReal& lambda, const ExtVector& x) {
  ExtVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = tmul(lambda, x[i]);
  return out;
}

bool all_pos_inf(const ExtVector& x) {
  return std::all_of(x.begin(), x.end(), [](const ExtReal& v) { return v.is_pos_inf(); });
}

std::string to_string(const ExtReal& x) {
  if (x.is_pos_inf()) return "inf";
  if (x.is_neg_inf()) return "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x.value());
  return buf;
}

std::string to_string_short(const ExtReal& x) {
  if (!x.is_finite()) return to_string(x);
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x.value());
  return buf;
}

std::string to_string(const ExtVector& x) {
  std::string out = "[";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out += ", ";
    out += to_string_short(x[i]);
  }
  return out + "]";
}

ExtReal parse_ext_real(const std::string& s) {
  if (s == "inf" || s == "+inf" || s == "Infinity") return ExtReal::pos_inf();
  if (s == "-inf" || s == "-Infinity") return ExtReal::neg_inf();
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw InvalidInput("not an extended real: '" + s + "'");
  }
  if (used != s.size() || !std::isfinite(v)) throw InvalidInput("not an extended real: '" + s + "'");
  return ExtReal(v);
}

std::ostream& operator<<(std::ostream& os, const ExtReal& x) { return os << to_string(x); }

}  // namespace tropsem
