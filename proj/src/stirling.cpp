#include "polybern/stirling.hpp"

#include <mutex>

#include "polybern/error.hpp"

namespace polybern {

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return Integer(0);
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

Rational pochhammer(const Rational& v, unsigned n) {
  Rational r(1);
  Rational f = v;
  for (unsigned i = 0; i < n; ++i) {
    r *= f;
    f += Rational(1);
  }
  return r;
}

Integer pochhammer(const Integer& v, unsigned n) {
  Integer r(1);
  Integer f = v;
  for (unsigned i = 0; i < n; ++i) {
    r *= f;
    f += 1;
  }
  return r;
}

Integer TriangleCache::at(unsigned n, unsigned i) {
  if (i > n) return Integer(0);
  extend(n);
  return rows_[n][i];
}

void TriangleCache::extend(unsigned n) {
  while (rows_.size() <= n) {
    const auto& prev = rows_.back();
    unsigned pn = static_cast<unsigned>(rows_.size()) - 1;
    std::vector<Integer> row(pn + 2, Integer(0));
    for (unsigned i = 1; i <= pn + 1; ++i) {
      if (kind_ == Kind::first_kind) {
        row[i] = prev[i - 1] - (i <= pn ? Integer(static_cast<long>(pn)) * prev[i] : Integer(0));
      } else {
        row[i] = prev[i - 1] + (i <= pn ? Integer(static_cast<long>(i)) * prev[i] : Integer(0));
      }
    }
    rows_.push_back(std::move(row));
  }
}

namespace {

std::mutex triangle_mutex;
TriangleCache first_triangle(TriangleCache::Kind::first_kind);
TriangleCache second_triangle(TriangleCache::Kind::second_kind);

}  // namespace

Integer stirling_first(unsigned n, unsigned i) {
  std::scoped_lock lock(triangle_mutex);
  return first_triangle.at(n, i);
}

Integer stirling_second(unsigned n, unsigned i) {
  std::scoped_lock lock(triangle_mutex);
  return second_triangle.at(n, i);
}

Rational weighted_stirling(unsigned n, unsigned i, const Rational& x) {
  Rational sum(0);
  for (unsigned j = 0; j <= i; ++j) {
    Rational term = Rational(binomial(i, j)) * pow(x + Rational(static_cast<long>(j)), n);
    if ((i - j) % 2 == 1) term = -term;
    sum += term;
  }
  return sum / Rational(factorial(i));
}

Polynomial weighted_stirling_poly(unsigned n, unsigned i) {
  // Coefficient of x^t is C(n,t) S(n-t, i).
  std::vector<Rational> coeffs(n + 1, Rational(0));
  for (unsigned t = 0; t <= n; ++t)
    coeffs[t] = Rational(binomial(n, t) * stirling_second(n - t, i));
  return Polynomial(std::move(coeffs));
}

Integer r_stirling(unsigned n, unsigned i, unsigned r) {
  Rational v = weighted_stirling(n, i, Rational(static_cast<long>(r)));
  if (!v.is_integer())
    raise(errc::internal, "r-Stirling value came out non-integral");
  return v.num();
}

Integer lah(unsigned m, unsigned k) {
  if (m == 0 && k == 0) return Integer(1);
  if (k == 0 || k > m) return Integer(0);
  return factorial(m) / factorial(k) * binomial(m - 1, k - 1);
}

}  // namespace polybern
