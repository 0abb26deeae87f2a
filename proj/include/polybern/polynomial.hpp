#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "polybern/rational.hpp"

namespace polybern {

// Dense univariate polynomial over Rational, coefficient i belongs to x^i.
// The coefficient vector is kept trimmed: no trailing zeros, and the zero
// polynomial has an empty vector (its degree is "none").
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(std::size_t degree, const Rational& c = Rational(1));
  static Polynomial variable() { return monomial(1); }

  bool is_zero() const { return coeffs_.empty(); }
  std::optional<std::size_t> degree() const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  // Zero beyond the degree.
  Rational coeff(std::size_t i) const;

  Rational operator()(const Rational& v) const;
  Polynomial derivative() const;
  // p(inner(x)), exact.
  Polynomial compose(const Polynomial& inner) const;
  // p(x + c) by binomial expansion.
  Polynomial shifted(const Rational& c) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& s, const Polynomial& p);

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  // Human-readable form, lowest degree first: "1/2 - x + 2x^3".
  std::string str() const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

}  // namespace polybern
