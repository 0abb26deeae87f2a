#include "polybern/mstirling.hpp"

#include <string>

#include "polybern/error.hpp"
#include "polybern/stirling.hpp"

namespace polybern {

MStirlingTable::MStirlingTable(unsigned max_n, unsigned m) : m_(m) {
  unsigned cols = max_n + m + 1;  // k = 0..max_n+m
  entries_.assign(max_n + 1, std::vector<Integer>(cols, Integer(0)));
  // Row n = 0: Kronecker delta at k = 0, Lah numbers beyond.
  if (m == 0) entries_[0][0] = 1;
  for (unsigned k = 1; k < cols; ++k) entries_[0][k] = lah(m, k);
  for (unsigned n = 1; n <= max_n; ++n)
    for (unsigned k = 1; k < cols; ++k)
      entries_[n][k] = entries_[n - 1][k - 1] + Integer(static_cast<long>(k)) * entries_[n - 1][k];
}

const Integer& MStirlingTable::entry(unsigned n, unsigned k) const {
  if (n >= rows() || k >= cols())
    raise(errc::invalid_argument, "table entry (" + std::to_string(n) + "," +
                                      std::to_string(k) + ") out of range");
  return entries_[n][k];
}

Integer m_stirling_explicit(unsigned n, unsigned k, unsigned m) {
  // Computed over rationals exactly as written; the result must be integral.
  Rational sum(0);
  for (unsigned j = 0; j <= k; ++j) {
    Rational term = Rational(binomial(k, j) * ipow(Integer(static_cast<long>(j)), n) *
                             pochhammer(Integer(static_cast<long>(j)), m));
    if ((k - j) % 2 == 1) term = -term;
    sum += term;
  }
  sum /= Rational(factorial(k));
  if (!sum.is_integer())
    raise(errc::internal, "m-Stirling explicit sum came out non-integral at n=" +
                              std::to_string(n) + " k=" + std::to_string(k) +
                              " m=" + std::to_string(m));
  return sum.num();
}

Integer m_stirling_via_first_kind(unsigned n, unsigned k, unsigned m) {
  Integer sum(0);
  for (unsigned i = 0; i <= m; ++i) {
    Integer term = stirling_first(m, i) * stirling_second(n + i, k);
    if ((m - i) % 2 == 1) term = -term;
    sum += term;
  }
  return sum;
}

Integer m_stirling_via_weighted(unsigned n, unsigned k, unsigned m) {
  Rational one_minus_m = Rational(1) - Rational(static_cast<long>(m));
  Rational x = Rational(static_cast<long>(m)) - Rational(1);
  Rational sum(0);
  for (unsigned j = 0; j <= n; ++j) {
    Rational inner(0);
    for (unsigned i = 0; i <= m; ++i)
      inner += Rational(stirling_first(m, i)) * weighted_stirling(j + i, k, x);
    sum += Rational(binomial(n, j)) * pow(one_minus_m, static_cast<long>(n - j)) * inner;
  }
  if (!sum.is_integer())
    raise(errc::internal, "m-Stirling weighted route came out non-integral");
  return sum.num();
}

MStirlingTable m_stirling_table(unsigned max_n, unsigned m) {
  return MStirlingTable(max_n, m);
}

EgfSeries m_stirling_egf(unsigned k, unsigned m, std::size_t order) {
  std::size_t work = order + m;
  EgfSeries em1 = EgfSeries::exp_linear(Rational(1), work) - EgfSeries::one(work);
  EgfSeries base = pow(em1, k);
  base = EgfSeries::exp_linear(Rational(static_cast<long>(m) - 1), work) * base;
  base = (Rational(1) / Rational(factorial(k))) * base;
  EgfSeries mid = apply_emzd(base, m);
  return EgfSeries::exp_linear(Rational(1), order) * mid;
}

Rational weighted_m_stirling(unsigned n, unsigned k, const Rational& x, unsigned m) {
  Rational sum(0);
  for (unsigned j = 0; j <= k; ++j) {
    Rational term = Rational(binomial(k, j)) *
                    pow(x + Rational(static_cast<long>(j)), n) *
                    Rational(pochhammer(Integer(static_cast<long>(j)), m));
    if ((k - j) % 2 == 1) term = -term;
    sum += term;
  }
  return sum / Rational(factorial(k));
}

Polynomial weighted_m_stirling_poly(unsigned n, unsigned k, unsigned m) {
  // Coefficient of x^t is C(n,t) R_{n-t}^k(m).
  std::vector<Rational> coeffs(n + 1, Rational(0));
  for (unsigned t = 0; t <= n; ++t)
    coeffs[t] = Rational(binomial(n, t) * m_stirling_explicit(n - t, k, m));
  return Polynomial(std::move(coeffs));
}

}  // namespace polybern
