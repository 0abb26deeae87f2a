#include "polybern/hpb.hpp"

#include <algorithm>
#include <string>

#include "polybern/error.hpp"
#include "polybern/mstirling.hpp"
#include "polybern/stirling.hpp"

namespace polybern {

void validate_hurwitz_a(const Rational& a) {
  if (a.is_integer() && a.sign() <= 0)
    raise(errc::domain,
          "parameter a must not be a non-positive integer (got " + a.str() + ")");
}

Rational hurwitz_pb(unsigned n, long k, const Rational& a) {
  validate_hurwitz_a(a);
  Rational sum(0);
  for (unsigned i = 0; i <= n; ++i) {
    Rational term = Rational(factorial(i) * stirling_second(n, i)) /
                    pow(Rational(static_cast<long>(i)) + a, k);
    if ((n + i) % 2 == 1) term = -term;
    sum += term;
  }
  return sum;
}

Rational m_hpb_form1(unsigned n, unsigned m, long k, const Rational& a) {
  validate_hurwitz_a(a);
  Rational ma = Rational(static_cast<long>(m)) + a;
  Rational sum(0);
  for (unsigned i = 0; i <= n; ++i) {
    Rational term = weighted_stirling(n, i, Rational(static_cast<long>(m))) *
                    Rational(factorial(i + m)) /
                    pow(Rational(static_cast<long>(i + m)) + a, k);
    if ((n - i) % 2 == 1) term = -term;
    sum += term;
  }
  return pow(ma, k) / (Rational(factorial(m)) * pow(a, k)) * sum;
}

Rational m_hpb_form2(unsigned n, unsigned m, long k, const Rational& a) {
  validate_hurwitz_a(a);
  Rational ma = Rational(static_cast<long>(m)) + a;
  Rational sum(0);
  for (unsigned i = 0; i <= m; ++i) {
    Rational term = Rational(stirling_first(m, i)) * hurwitz_pb(n + i, k, a);
    if ((m - i) % 2 == 1) term = -term;
    sum += term;
  }
  return pow(ma, k) / (Rational(factorial(m)) * pow(a, k)) * sum;
}

HpbMatrix::HpbMatrix(unsigned size, long k, const Rational& a)
    : size_(size), k_(k), a_(a) {
  validate_hurwitz_a(a);
  rows_.resize(size + 1);
  Rational top = pow(a, -k);
  rows_[0].assign(size + 1, top);
  // Anti-diagonal fill: entry (n+1, m) needs (n, m+1) and (n, m), both on
  // the previous row; nothing above n + m = size is ever touched.
  for (unsigned n = 1; n <= size; ++n) {
    rows_[n].resize(size - n + 1);
    for (unsigned m = 0; m + n <= size; ++m) {
      Rational mr(static_cast<long>(m));
      Rational coef = (mr + Rational(1)) * pow(mr + a, k) / pow(mr + a + Rational(1), k);
      rows_[n][m] = coef * rows_[n - 1][m + 1] - mr * rows_[n - 1][m];
    }
  }
}

const Rational& HpbMatrix::entry(unsigned n, unsigned m) const {
  if (n + m > size_)
    raise(errc::invalid_argument, "matrix entry (" + std::to_string(n) + "," +
                                      std::to_string(m) + ") beyond anti-diagonal " +
                                      std::to_string(size_));
  return rows_[n][m];
}

std::vector<Rational> HpbMatrix::first_column() const {
  std::vector<Rational> col(size_ + 1);
  for (unsigned n = 0; n <= size_; ++n) col[n] = rows_[n][0];
  return col;
}

Rational m_hpb_negative(unsigned n, unsigned m, unsigned kpos, const Rational& a) {
  validate_hurwitz_a(a);
  Rational ma = Rational(static_cast<long>(m)) + a;
  unsigned lmax = std::min(n + m, kpos);
  Rational sum(0);
  for (unsigned l = 0; l <= lmax; ++l) {
    Rational lf = Rational(factorial(l));
    sum += lf * lf * weighted_stirling(kpos, l, a) *
           Rational(m_stirling_explicit(n + 1, l + 1, m));
  }
  long k = static_cast<long>(kpos);
  return pow(a, k) / (Rational(factorial(m)) * pow(ma, k)) * sum;
}

Rational bernoulli(unsigned n) { return hurwitz_pb(n, 1, Rational(1)); }

DualityReport duality_check(unsigned n_max, unsigned k_max) {
  DualityReport report{n_max, k_max, {}};
  for (unsigned n = 0; n <= n_max; ++n)
    for (unsigned k = 0; k <= k_max; ++k) {
      Rational lhs = hurwitz_pb(n, -static_cast<long>(k), Rational(1));
      Rational rhs = hurwitz_pb(k, -static_cast<long>(n), Rational(1));
      if (!(lhs == rhs)) report.violations.push_back({n, k, lhs, rhs});
    }
  return report;
}

}  // namespace polybern
