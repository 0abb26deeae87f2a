#include "polybern/egf.hpp"

#include <string>

#include "polybern/error.hpp"
#include "polybern/stirling.hpp"

namespace polybern {

EgfSeries::EgfSeries(std::vector<Rational> terms) : terms_(std::move(terms)) {
  if (terms_.empty()) raise(errc::invalid_argument, "series needs at least one term");
}

EgfSeries EgfSeries::zero(std::size_t order) {
  return EgfSeries(std::vector<Rational>(order + 1, Rational(0)));
}

EgfSeries EgfSeries::one(std::size_t order) {
  std::vector<Rational> t(order + 1, Rational(0));
  t[0] = Rational(1);
  return EgfSeries(std::move(t));
}

EgfSeries EgfSeries::exp_linear(const Rational& c, std::size_t order) {
  std::vector<Rational> t(order + 1);
  t[0] = Rational(1);
  for (std::size_t n = 1; n <= order; ++n) t[n] = t[n - 1] * c;
  return EgfSeries(std::move(t));
}

const Rational& EgfSeries::term(std::size_t n) const {
  if (n >= terms_.size())
    raise(errc::invalid_argument,
          "term index " + std::to_string(n) + " beyond order " + std::to_string(order()));
  return terms_[n];
}

EgfSeries EgfSeries::derive() const {
  if (order() == 0)
    raise(errc::order_underflow, "cannot differentiate an order-0 series");
  return EgfSeries(std::vector<Rational>(terms_.begin() + 1, terms_.end()));
}

EgfSeries EgfSeries::truncated(std::size_t order) const {
  if (order > this->order())
    raise(errc::order_underflow, "cannot extend a truncated series");
  return EgfSeries(std::vector<Rational>(terms_.begin(), terms_.begin() + order + 1));
}

std::vector<Rational> EgfSeries::ordinary_coeffs() const {
  std::vector<Rational> c(terms_.size());
  Integer fact(1);
  for (std::size_t n = 0; n < terms_.size(); ++n) {
    if (n > 0) fact *= static_cast<long>(n);
    c[n] = terms_[n] / Rational(fact);
  }
  return c;
}

EgfSeries EgfSeries::from_ordinary(const std::vector<Rational>& coeffs) {
  if (coeffs.empty()) raise(errc::invalid_argument, "series needs at least one term");
  std::vector<Rational> t(coeffs.size());
  Integer fact(1);
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    if (n > 0) fact *= static_cast<long>(n);
    t[n] = coeffs[n] * Rational(fact);
  }
  return EgfSeries(std::move(t));
}

EgfSeries& EgfSeries::operator+=(const EgfSeries& o) {
  if (o.order() != order())
    raise(errc::order_mismatch, "series order mismatch: " + std::to_string(order()) +
                                    " vs " + std::to_string(o.order()));
  for (std::size_t n = 0; n < terms_.size(); ++n) terms_[n] += o.terms_[n];
  return *this;
}

EgfSeries& EgfSeries::operator-=(const EgfSeries& o) {
  if (o.order() != order())
    raise(errc::order_mismatch, "series order mismatch: " + std::to_string(order()) +
                                    " vs " + std::to_string(o.order()));
  for (std::size_t n = 0; n < terms_.size(); ++n) terms_[n] -= o.terms_[n];
  return *this;
}

EgfSeries operator*(const EgfSeries& f, const EgfSeries& g) {
  if (f.order() != g.order())
    raise(errc::order_mismatch, "series order mismatch: " + std::to_string(f.order()) +
                                    " vs " + std::to_string(g.order()));
  std::size_t order = f.order();
  std::vector<Rational> h(order + 1, Rational(0));
  for (std::size_t n = 0; n <= order; ++n)
    for (std::size_t i = 0; i <= n; ++i)
      h[n] += Rational(binomial(static_cast<long>(n), static_cast<long>(i))) *
              f.terms_[i] * g.terms_[n - i];
  return EgfSeries(std::move(h));
}

EgfSeries operator*(const Rational& s, EgfSeries f) {
  for (auto& t : f.terms_) t *= s;
  return f;
}

EgfSeries pow(const EgfSeries& base, unsigned exp) {
  EgfSeries acc = EgfSeries::one(base.order());
  for (unsigned i = 0; i < exp; ++i) acc = acc * base;
  return acc;
}

EgfSeries compose(const std::vector<Rational>& outer, const EgfSeries& inner) {
  if (!inner.term(0).is_zero())
    raise(errc::compose_domain, "composition requires a zero constant term");
  std::size_t order = inner.order();
  if (outer.size() < order + 1)
    raise(errc::invalid_argument, "outer coefficient list shorter than order+1");

  // Ordinary-coefficient arithmetic: inner has valuation >= 1, so powers
  // past the truncation order contribute nothing.
  std::vector<Rational> in = inner.ordinary_coeffs();
  std::vector<Rational> power(order + 1, Rational(0));
  power[0] = Rational(1);
  std::vector<Rational> out(order + 1, Rational(0));
  for (std::size_t i = 0; i <= order; ++i) {
    for (std::size_t n = 0; n <= order; ++n) out[n] += outer[i] * power[n];
    if (i == order) break;
    std::vector<Rational> next(order + 1, Rational(0));
    for (std::size_t s = 0; s <= order; ++s) {
      if (power[s].is_zero()) continue;
      for (std::size_t t = 1; s + t <= order; ++t) next[s + t] += power[s] * in[t];
    }
    power = std::move(next);
  }
  return EgfSeries::from_ordinary(out);
}

namespace {

EgfSeries apply_exp_derive(const EgfSeries& f, unsigned m, const Rational& c) {
  if (f.order() < m)
    raise(errc::order_underflow, "series order " + std::to_string(f.order()) +
                                     " too small for " + std::to_string(m) +
                                     " operator applications");
  EgfSeries g = f;
  for (unsigned i = 0; i < m; ++i) {
    g = g.derive();
    g = EgfSeries::exp_linear(c, g.order()) * g;
  }
  return g;
}

}  // namespace

EgfSeries apply_ezd(const EgfSeries& f, unsigned m) {
  return apply_exp_derive(f, m, Rational(1));
}

EgfSeries apply_emzd(const EgfSeries& f, unsigned m) {
  return apply_exp_derive(f, m, Rational(-1));
}

}  // namespace polybern
