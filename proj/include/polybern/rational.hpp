#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace polybern {

using Integer = mpz_class;

Integer ipow(const Integer& base, unsigned long exp);
Integer factorial(unsigned long n);

// Exact rational scalar. Always held in lowest terms with positive
// denominator; zero is 0/1. Every arithmetic operation is exact.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(int v) : q_(v) {}           // NOLINT(google-explicit-constructor)
  Rational(long v) : q_(v) {}          // NOLINT(google-explicit-constructor)
  Rational(const Integer& v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& num, const Integer& den);

  // Parses "p", "p/q" or "-p/q" (base 10).
  static Rational from_string(const std::string& text);

  Integer num() const { return q_.get_num(); }
  Integer den() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  // "p/q" with q > 0 and gcd(p, q) = 1; integers render without "/1".
  std::string str() const { return q_.get_str(); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.q_, b.q_) == 0;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return cmp(a.q_, b.q_) < 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class q_;
};

// base^exp with exp of either sign; negative exponents invert exactly.
Rational pow(const Rational& base, long exp);

}  // namespace polybern
