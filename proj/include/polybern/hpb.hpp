#pragma once

#include <vector>

#include "polybern/rational.hpp"

namespace polybern {

// The Hurwitz parameter must avoid {0, -1, -2, ...} so that every
// denominator (i + m + a)^k stays nonzero. Throws errc::domain otherwise.
void validate_hurwitz_a(const Rational& a);

// Validated parameter tuple for the poly-Bernoulli family.
struct ParamSet {
  unsigned n = 0;
  unsigned m = 0;
  long k = 0;
  Rational a = Rational(1);

  void validate() const { validate_hurwitz_a(a); }
};

// Hurwitz type poly-Bernoulli number: sum_i (-1)^{n+i} i! S(n,i)/(i+a)^k.
// k may be negative, turning the denominators into exact powers.
Rational hurwitz_pb(unsigned n, long k, const Rational& a);

// The m-generalization, by the weighted-Stirling sum and by the
// first-kind transform; the two agree everywhere.
Rational m_hpb_form1(unsigned n, unsigned m, long k, const Rational& a);
Rational m_hpb_form2(unsigned n, unsigned m, long k, const Rational& a);

// Recurrence matrix: entries[n][m] for n+m <= size, filled from the
// constant row n = 0 (value 1/a^k) by
//   B(n+1,m) = (m+1)(m+a)^k/(m+a+1)^k * B(n,m+1) - m * B(n,m).
// Column m = 0 is the Hurwitz poly-Bernoulli sequence.
class HpbMatrix {
 public:
  HpbMatrix(unsigned size, long k, const Rational& a);

  unsigned size() const { return size_; }
  long k() const { return k_; }
  const Rational& a() const { return a_; }

  // Requires n + m <= size.
  const Rational& entry(unsigned n, unsigned m) const;
  std::vector<Rational> first_column() const;

 private:
  unsigned size_;
  long k_;
  Rational a_;
  std::vector<std::vector<Rational>> rows_;  // rows_[n][m], m <= size - n
};

inline HpbMatrix m_hpb_matrix(unsigned size, long k, const Rational& a) {
  return HpbMatrix(size, k, a);
}

// Negative upper index by the m-Stirling formula:
//   a^k/(m!(m+a)^k) sum_l (l!)^2 ws(k,l,a) R_{n+1}^{l+1}(m),
// summed over l <= min(n+m, k); equals m_hpb_form1(n, m, -kpos, a).
Rational m_hpb_negative(unsigned n, unsigned m, unsigned kpos, const Rational& a);

// Classical Bernoulli numbers with B_1 = +1/2.
Rational bernoulli(unsigned n);

struct DualityViolation {
  unsigned n = 0;
  unsigned k = 0;
  Rational lhs;
  Rational rhs;
};

struct DualityReport {
  unsigned n_max = 0;
  unsigned k_max = 0;
  std::vector<DualityViolation> violations;

  bool ok() const { return violations.empty(); }
};

// Checks B_n^{(-k)} == B_k^{(-n)} (a = 1) over the full grid.
DualityReport duality_check(unsigned n_max, unsigned k_max);

}  // namespace polybern
