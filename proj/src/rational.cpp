#include "limitlab/rational.hpp"

#include <boost/multiprecision/integer.hpp>

#include <cmath>
#include <utility>

#include "limitlab/error.hpp"

namespace limitlab {

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  require(den_ != 0, "parse-error", "rational with zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  BigInt g = boost::multiprecision::gcd(boost::multiprecision::abs(num_), den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::parse(const std::string& s) {
  require(!s.empty(), "parse-error", "empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s), BigInt(1));
    return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
  } catch (const std::exception&) {
    throw Error("parse-error", "bad rational literal: " + s);
  }
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  require(o.num_ != 0, "parse-error", "division by zero rational");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

std::string Rational::str() const { return num_.str() + "/" + den_.str(); }

double Rational::to_double() const {
  return num_.convert_to<double>() / den_.convert_to<double>();
}

namespace {

// log2 of a positive BigInt: exponent of the top bit plus the mantissa correction.
double big_log2(const BigInt& x) {
  unsigned bits = boost::multiprecision::msb(x);  // requires x > 0
  if (bits <= 62) return std::log2(x.convert_to<double>());
  BigInt top = x >> (bits - 62);
  return static_cast<double>(bits - 62) + std::log2(top.convert_to<double>());
}

}  // namespace

double Rational::log2() const {
  require(num_ > 0, "parse-error", "log2 of a non-positive rational");
  return big_log2(num_) - big_log2(den_);
}

BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt falling_factorial(unsigned n, unsigned m) {
  if (m > n) return 0;
  BigInt r = 1;
  for (unsigned i = 0; i < m; ++i) r *= n - i;
  return r;
}

}  // namespace limitlab
