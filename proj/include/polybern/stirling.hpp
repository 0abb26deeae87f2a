#pragma once

#include <vector>

#include "polybern/polynomial.hpp"
#include "polybern/rational.hpp"

namespace polybern {

// C(n, k); zero outside 0 <= k <= n.
Integer binomial(long n, long k);

// Rising factorial v(v+1)...(v+n-1), with (v)_0 = 1.
Rational pochhammer(const Rational& v, unsigned n);
Integer pochhammer(const Integer& v, unsigned n);

// Row-memoized triangle for the two classical Stirling recurrences.
// Out-of-triangle indices read as 0. Shared instances behind the free
// functions below are mutex-guarded.
class TriangleCache {
 public:
  enum class Kind { first_kind, second_kind };

  explicit TriangleCache(Kind kind) : kind_(kind) { rows_ = {{Integer(1)}}; }

  Integer at(unsigned n, unsigned i);

 private:
  void extend(unsigned n);

  Kind kind_;
  std::vector<std::vector<Integer>> rows_;
};

// Signed Stirling numbers of the first kind: coefficients of the falling
// factorial, recurrence s(n+1,i) = s(n,i-1) - n s(n,i).
Integer stirling_first(unsigned n, unsigned i);

// Stirling numbers of the second kind via S(n+1,i) = S(n,i-1) + i S(n,i).
Integer stirling_second(unsigned n, unsigned i);

// Weighted Stirling number (1/i!) Delta^i x^n as an explicit alternating sum,
// exact at any rational x.
Rational weighted_stirling(unsigned n, unsigned i, const Rational& x);

// The same number as a polynomial in x (degree <= n).
Polynomial weighted_stirling_poly(unsigned n, unsigned i);

// r-Stirling number of the second kind under the {n+r, i+r}_r convention.
Integer r_stirling(unsigned n, unsigned i, unsigned r);

// Lah number (m!/k!) C(m-1, k-1); lah(0,0) = 1, zero for k > m or
// (k = 0, m >= 1).
Integer lah(unsigned m, unsigned k);

}  // namespace polybern
