#include "tropsem/mult.hpp"

#include <gmp.h>

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "tropsem/error.hpp"

namespace tropsem {

namespace {

double log_of_integer(const boost::multiprecision::mpz_int& v) {
  long exp2 = 0;
  const double mant = mpz_get_d_2exp(&exp2, v.backend().data());
  return std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
}

}  // namespace

Mult::Mult(const Rational& p) {
  if (p < 0) throw InvalidInput("negative probability " + p.str());
  if (p == 0) return;
  kind_ = Kind::Finite;
  value_ = p;
}

Mult::Mult(long p) : Mult(Rational(p)) {}

Mult Mult::infinite() {
  Mult m;
  m.kind_ = Kind::Infinite;
  return m;
}

Rational Mult::rational() const {
  if (kind_ == Kind::Infinite) throw std::logic_error("Mult::rational on Infinite");
  return value_;
}

ExtReal Mult::to_log() const {
  switch (kind_) {
    case Kind::Zero: return ExtReal::pos_inf();
    case Kind::Infinite: return ExtReal::neg_inf();
    case Kind::Finite: break;
  }
  return ExtReal(neg_log(value_));
}

Mult Mult::reciprocal() const {
  switch (kind_) {
    case Kind::Zero: return infinite();
    case Kind::Infinite: return zero();
    case Kind::Finite: break;
  }
  return Mult(Rational(1) / value_);
}

bool operator<(const Mult& a, const Mult& b) {
  if (a.kind_ != b.kind_) return a.kind_ < b.kind_;
  return a.kind_ == Mult::Kind::Finite && a.value_ < b.value_;
}

bool operator==(const Mult& a, const Mult& b) {
  if (a.kind_ != b.kind_) return false;
  return a.kind_ != Mult::Kind::Finite || a.value_ == b.value_;
}

Mult mul_zero_absorbing(const Mult& a, const Mult& b) {
  if (a.is_zero() || b.is_zero()) return Mult::zero();
  if (a.is_infinite() || b.is_infinite()) return Mult::infinite();
  return Mult(a.rational() * b.rational());
}

Mult mul_inf_absorbing(const Mult& a, const Mult& b) {
  if (a.is_infinite() || b.is_infinite()) return Mult::infinite();
  if (a.is_zero() || b.is_zero()) return Mult::zero();
  return Mult(a.rational() * b.rational());
}

double neg_log(const Rational& p) {
  if (p <= 0) throw std::domain_error("neg_log of a nonpositive rational");
  const double direct = p.convert_to<double>();
  if (std::isnormal(direct)) return -std::log(direct);
  return log_of_integer(denominator(p)) - log_of_integer(numerator(p));
}

Rational exp_neg_surrogate(double x) {
  if (!std::isfinite(x)) throw InvalidInput("exp_neg_surrogate needs a finite value");
  // exp(-x) = 2^-k * exp(-(x - k ln 2)); the split keeps large x away from double underflow.
  const double k = x > 0 ? std::floor(x / std::log(2.0)) : 0.0;
  const double v = std::exp(-(x - k * std::log(2.0)));
  if (v == 0.0 || !std::isfinite(v) || k > 1e7)
    throw InvalidInput("exp(-x) is not representable for x = " + std::to_string(x));
  Rational q;
  mpq_set_d(q.backend().data(), v);
  if (k > 0) {
    boost::multiprecision::mpz_int den = 1;
    mpz_mul_2exp(den.backend().data(), den.backend().data(), static_cast<unsigned long>(k));
    q /= den;
  }
  return q;
}

MultVector to_mult(const QVector& z) {
  MultVector out;
  out.reserve(z.size());
  for (const auto& q : z) out.emplace_back(q);
  return out;
}

ExtVector to_log(const MultVector& z) {
  ExtVector out;
  out.reserve(z.size());
  for (const auto& m : z) out.push_back(m.to_log());
  return out;
}

ExtVector to_log(const QVector& z) { return to_log(to_mult(z)); }

namespace {

// Decimal integer with optional sign; boost would read a leading 0 as octal.
boost::multiprecision::mpz_int parse_integer(const std::string& s) {
  std::size_t pos = 0;
  bool neg = false;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) neg = s[pos++] == '-';
  if (pos == s.size() || s.find_first_not_of("0123456789", pos) != std::string::npos)
    throw std::runtime_error("bad digits");
  boost::multiprecision::mpz_int v;
  if (mpz_set_str(v.backend().data(), s.c_str() + pos, 10) != 0) throw std::runtime_error("bad digits");
  return neg ? -v : v;
}

}  // namespace

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw InvalidInput("empty rational");
  try {
    const auto slash = s.find('/');
    if (slash != std::string::npos) {
      const auto den = parse_integer(s.substr(slash + 1));
      if (den <= 0) throw std::runtime_error("bad denominator");
      return Rational(parse_integer(s.substr(0, slash)), den);
    }
    const auto dot = s.find('.');
    if (dot == std::string::npos) return Rational(parse_integer(s));
    const std::string frac = s.substr(dot + 1);
    if (frac.find_first_of("+-") != std::string::npos) throw std::runtime_error("bad digits");
    std::string whole = s.substr(0, dot);
    if (whole.empty() || whole == "-" || whole == "+") whole += "0";
    boost::multiprecision::mpz_int den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    const auto mag = parse_integer(whole[0] == '-' ? whole.substr(1) : whole) * den +
                     (frac.empty() ? boost::multiprecision::mpz_int(0) : parse_integer(frac));
    return Rational(whole[0] == '-' ? -mag : mag, den);
  } catch (const std::exception&) {
    throw InvalidInput("not a rational: '" + s + "'");
  }
}

std::string to_string(const Rational& q) { return q.str(); }

std::string to_string(const Mult& m) {
  if (m.is_infinite()) return "inf";
  return m.rational().str();
}

std::ostream& operator<<(std::ostream& os, const Mult& m) { return os << to_string(m); }

}  // namespace tropsem
