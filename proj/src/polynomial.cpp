#include "polybern/polynomial.hpp"

#include <sstream>

#include "polybern/error.hpp"
#include "polybern/stirling.hpp"

namespace polybern {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::constant(const Rational& c) {
  return Polynomial(std::vector<Rational>{c});
}

Polynomial Polynomial::monomial(std::size_t degree, const Rational& c) {
  std::vector<Rational> coeffs(degree + 1, Rational(0));
  coeffs[degree] = c;
  return Polynomial(std::move(coeffs));
}

std::optional<std::size_t> Polynomial::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

Rational Polynomial::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

Rational Polynomial::operator()(const Rational& v) const {
  Rational acc(0);
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * v + coeffs_[i];
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return Polynomial();
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    d[i - 1] = Rational(Integer(static_cast<long>(i))) * coeffs_[i];
  return Polynomial(std::move(d));
}

Polynomial Polynomial::compose(const Polynomial& inner) const {
  Polynomial acc;
  for (std::size_t i = coeffs_.size(); i-- > 0;)
    acc = acc * inner + Polynomial::constant(coeffs_[i]);
  return acc;
}

Polynomial Polynomial::shifted(const Rational& c) const {
  // p(x+c) = sum_i c_i sum_t C(i,t) c^{i-t} x^t
  if (coeffs_.empty()) return Polynomial();
  std::vector<Rational> out(coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    Rational cp(1);
    for (std::size_t t = i + 1; t-- > 0;) {
      out[t] += coeffs_[i] * Rational(binomial(static_cast<long>(i), static_cast<long>(t))) * cp;
      cp *= c;
    }
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-() const {
  std::vector<Rational> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = -coeffs_[i];
  return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial operator*(const Rational& s, const Polynomial& p) {
  std::vector<Rational> out(p.coeffs_.size());
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) out[i] = s * p.coeffs_[i];
  return Polynomial(std::move(out));
}

std::string Polynomial::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c.is_zero()) continue;
    Rational abs = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    bool unit = abs == Rational(1);
    if (i == 0 || !unit) os << abs.str();
    if (i >= 1) {
      os << "x";
      if (i >= 2) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace polybern
