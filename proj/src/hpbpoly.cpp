#include "polybern/hpbpoly.hpp"

#include <algorithm>

#include "polybern/hpb.hpp"
#include "polybern/mstirling.hpp"
#include "polybern/stirling.hpp"

namespace polybern {

namespace {

Polynomial negated_argument(const Polynomial& p) {
  std::vector<Rational> coeffs = p.coeffs();
  for (std::size_t i = 1; i < coeffs.size(); i += 2) coeffs[i] = -coeffs[i];
  return Polynomial(std::move(coeffs));
}

}  // namespace

HpbPolynomial hpb_poly_convolution(unsigned n, unsigned m, long k, const Rational& a) {
  validate_hurwitz_a(a);
  std::vector<Rational> coeffs(n + 1, Rational(0));
  for (unsigned i = 0; i <= n; ++i) {
    Rational c = Rational(binomial(n, i)) * m_hpb_form1(i, m, k, a);
    if ((n - i) % 2 == 1) c = -c;
    coeffs[n - i] = c;
  }
  return {n, m, k, a, Polynomial(std::move(coeffs))};
}

HpbPolynomial hpb_poly_explicit(unsigned n, unsigned m, long k, const Rational& a) {
  validate_hurwitz_a(a);
  Rational ma = Rational(static_cast<long>(m)) + a;
  Rational prefactor = pow(ma, k) / (Rational(factorial(m)) * pow(a, k));
  Polynomial sum;
  for (unsigned i = 0; i <= n; ++i) {
    Rational c = Rational(factorial(i + m)) /
                 pow(Rational(static_cast<long>(i + m)) + a, k);
    if ((n - i) % 2 == 1) c = -c;
    sum += c * weighted_stirling_poly(n, i).shifted(Rational(static_cast<long>(m)));
  }
  return {n, m, k, a, prefactor * sum};
}

RecurrenceReport hpb_poly_recurrence_check(unsigned max_sum, long k, const Rational& a) {
  validate_hurwitz_a(a);
  RecurrenceReport report;
  for (unsigned n = 0; n + 1 <= max_sum; ++n)
    for (unsigned m = 0; n + 1 + m <= max_sum; ++m) {
      Rational mr(static_cast<long>(m));
      Rational coef = (mr + Rational(1)) * pow(mr + a, k) / pow(mr + a + Rational(1), k);
      Polynomial lhs = hpb_poly_convolution(n + 1, m, k, a).poly;
      Polynomial rhs = coef * hpb_poly_convolution(n, m + 1, k, a).poly -
                       (Polynomial::variable() + Polynomial::constant(mr)) *
                           hpb_poly_convolution(n, m, k, a).poly;
      ++report.checked;
      if (!(lhs == rhs)) report.violations.push_back({n, m, lhs, rhs});
    }
  return report;
}

std::pair<Polynomial, Polynomial> lemma_identity(unsigned n, unsigned l, unsigned m) {
  std::vector<Rational> lhs_coeffs(n + 1, Rational(0));
  for (unsigned i = 0; i <= n; ++i) {
    Rational c = Rational(binomial(n, i) * m_stirling_explicit(i + 1, l + 1, m));
    if ((n - i) % 2 == 1) c = -c;
    lhs_coeffs[n - i] = c;
  }
  Polynomial lhs(std::move(lhs_coeffs));

  Polynomial rhs = negated_argument(weighted_m_stirling_poly(n + 1, l + 1, m)) +
                   Polynomial::variable() *
                       negated_argument(weighted_m_stirling_poly(n, l + 1, m));
  return {lhs, rhs};
}

HpbPolynomial hpb_poly_negative(unsigned n, unsigned m, unsigned kpos, const Rational& a) {
  validate_hurwitz_a(a);
  Rational ma = Rational(static_cast<long>(m)) + a;
  long k = static_cast<long>(kpos);
  Rational prefactor = pow(a, k) / (Rational(factorial(m)) * pow(ma, k));
  unsigned lmax = std::min(n + m, kpos);
  Polynomial sum;
  for (unsigned l = 0; l <= lmax; ++l) {
    Rational lf = Rational(factorial(l));
    Polynomial bracket = negated_argument(weighted_m_stirling_poly(n + 1, l + 1, m)) +
                         Polynomial::variable() *
                             negated_argument(weighted_m_stirling_poly(n, l + 1, m));
    sum += lf * lf * weighted_stirling(kpos, l, a) * bracket;
  }
  return {n, m, -k, a, prefactor * sum};
}

Polynomial corollary_last(unsigned n, unsigned kpos) {
  Polynomial one_minus_x = Polynomial::constant(Rational(1)) - Polynomial::variable();
  unsigned lmax = std::min(n, kpos);
  Polynomial sum;
  for (unsigned l = 0; l <= lmax; ++l) {
    Rational lf = Rational(factorial(l));
    sum += lf * lf * Rational(stirling_second(kpos + 1, l + 1)) *
           weighted_stirling_poly(n, l).compose(one_minus_x);
  }
  return sum;
}

}  // namespace polybern
