#pragma once

#include <cstddef>
#include <vector>

#include "polybern/rational.hpp"

namespace polybern {

// Truncated exponential generating function: order N and terms a_0..a_N
// standing for sum a_n z^n/n! + O(z^{N+1}). Terms are the a_n themselves,
// not ordinary Taylor coefficients, so they compare directly against
// sequence values.
class EgfSeries {
 public:
  // terms must be non-empty; order = terms.size() - 1.
  explicit EgfSeries(std::vector<Rational> terms);

  static EgfSeries zero(std::size_t order);
  static EgfSeries one(std::size_t order);
  // e^{cz}: a_n = c^n.
  static EgfSeries exp_linear(const Rational& c, std::size_t order);

  std::size_t order() const { return terms_.size() - 1; }
  const Rational& term(std::size_t n) const;
  const std::vector<Rational>& terms() const { return terms_; }

  // d/dz: drops one order.
  EgfSeries derive() const;
  EgfSeries truncated(std::size_t order) const;

  std::vector<Rational> ordinary_coeffs() const;  // a_n / n!
  static EgfSeries from_ordinary(const std::vector<Rational>& coeffs);

  EgfSeries& operator+=(const EgfSeries& o);
  EgfSeries& operator-=(const EgfSeries& o);

  friend EgfSeries operator+(EgfSeries a, const EgfSeries& b) { return a += b; }
  friend EgfSeries operator-(EgfSeries a, const EgfSeries& b) { return a -= b; }
  // Binomial convolution; both operands must have the same order.
  friend EgfSeries operator*(const EgfSeries& f, const EgfSeries& g);
  friend EgfSeries operator*(const Rational& s, EgfSeries f);

  friend bool operator==(const EgfSeries& a, const EgfSeries& b) {
    return a.terms_ == b.terms_;
  }

 private:
  std::vector<Rational> terms_;
};

EgfSeries pow(const EgfSeries& base, unsigned exp);

// sum_i outer[i] * inner(z)^i truncated at inner's order. outer holds
// ordinary power-series coefficients; inner must have zero constant term
// and outer must supply at least order+1 coefficients.
EgfSeries compose(const std::vector<Rational>& outer, const EgfSeries& inner);

// (e^z d/dz)^m f and (e^{-z} d/dz)^m f. Each application consumes one
// order, so the result has order f.order() - m.
EgfSeries apply_ezd(const EgfSeries& f, unsigned m);
EgfSeries apply_emzd(const EgfSeries& f, unsigned m);

}  // namespace polybern
