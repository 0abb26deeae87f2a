#pragma once

#include <utility>
#include <vector>

#include "polybern/polynomial.hpp"
#include "polybern/rational.hpp"

namespace polybern {

// One member of the polynomial family, tagged with its parameters.
// The constant term is the plain number B_{n,m}^{(k)}(a) and the leading
// coefficient is (-1)^n / a^k.
struct HpbPolynomial {
  unsigned n = 0;
  unsigned m = 0;
  long k = 0;
  Rational a;
  Polynomial poly;
};

// Signed binomial convolution of the number sequence:
//   sum_i (-1)^{n-i} C(n,i) B_{i,m}^{(k)}(a) x^{n-i}.
HpbPolynomial hpb_poly_convolution(unsigned n, unsigned m, long k, const Rational& a);

// Explicit weighted-Stirling form:
//   (m+a)^k/(m! a^k) sum_i (-1)^{n-i} (i+m)!/(i+m+a)^k ws_n^i(x+m).
HpbPolynomial hpb_poly_explicit(unsigned n, unsigned m, long k, const Rational& a);

struct RecurrenceViolation {
  unsigned n = 0;
  unsigned m = 0;
  Polynomial lhs;
  Polynomial rhs;
};

struct RecurrenceReport {
  unsigned checked = 0;
  std::vector<RecurrenceViolation> violations;

  bool ok() const { return violations.empty(); }
};

// Verifies the three-term recurrence
//   B_{n+1,m}(x;a) = (m+1)(m+a)^k/(m+a+1)^k B_{n,m+1}(x;a) - (x+m) B_{n,m}(x;a)
// as an exact polynomial identity for all n + m <= max_sum, n >= 0, from the
// initial row B_{0,m}(x;a) = 1/a^k.
RecurrenceReport hpb_poly_recurrence_check(unsigned max_sum, long k, const Rational& a);

// Both sides of the convolution identity for the m-Stirling polynomials:
//   sum_i (-1)^{n-i} C(n,i) R_{i+1}^{l+1}(m) x^{n-i}
//     == R_{n+1}^{l+1}(-x;m) + x R_n^{l+1}(-x;m).
std::pair<Polynomial, Polynomial> lemma_identity(unsigned n, unsigned l, unsigned m);

// Negative upper index as a polynomial:
//   a^k/(m!(m+a)^k) sum_l (l!)^2 ws(k,l,a) (R_{n+1}^{l+1}(-x;m) + x R_n^{l+1}(-x;m)),
// summed over l <= min(n+m, k); equals hpb_poly_convolution(n, m, -kpos, a).
HpbPolynomial hpb_poly_negative(unsigned n, unsigned m, unsigned kpos, const Rational& a);

// m = 0, a = 1 specialization: sum_l (l!)^2 S(k+1,l+1) ws_n^l(1-x).
Polynomial corollary_last(unsigned n, unsigned kpos);

}  // namespace polybern
