#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace limitlab {

using BigInt = boost::multiprecision::cpp_int;

/**
 * Exact fraction. Invariants: denominator > 0, gcd(|num|, den) = 1, zero is 0/1.
 * Every density and limit value in the library is one of these; floating point
 * only ever appears in reports.
 */
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long v) : num_(v), den_(1) {}  // NOLINT: implicit by design
  Rational(const BigInt& v) : num_(v), den_(1) {}
  Rational(BigInt num, BigInt den);

  // Accepts "num/den", "num", optional leading '-' on either side.
  static Rational parse(const std::string& s);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);  // throws on division by zero

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  /** Canonical serialization, always with an explicit denominator: "2/3", "0/1", "8/1". */
  std::string str() const;

  double to_double() const;

  /** log2 of a positive rational, accurate to ~1e-12 even when to_double would under/overflow. */
  double log2() const;

 private:
  void normalize();
  BigInt num_, den_;
};

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);
/** (n)_m = n(n-1)...(n-m+1); empty product 1 when m = 0. */
BigInt falling_factorial(unsigned n, unsigned m);

}  // namespace limitlab
