#pragma once

#include <cstddef>
#include <vector>

#include "polybern/egf.hpp"
#include "polybern/polynomial.hpp"
#include "polybern/rational.hpp"

namespace polybern {

// Triangle of m-Stirling numbers built purely from the triangular
// recurrence R(n+1,k) = R(n,k-1) + k R(n,k) with initial data
// R(n,0) = [n+m == 0] and R(0,k) = lah(m,k). Rows n = 0..max_n,
// columns k = 0..max_n+m; entries with k > n+m are zero.
class MStirlingTable {
 public:
  MStirlingTable(unsigned max_n, unsigned m);

  unsigned rows() const { return static_cast<unsigned>(entries_.size()); }
  unsigned cols() const { return rows() == 0 ? 0 : static_cast<unsigned>(entries_[0].size()); }
  unsigned m() const { return m_; }

  const Integer& entry(unsigned n, unsigned k) const;
  bool in_triangle(unsigned n, unsigned k) const { return k <= n + m_; }

 private:
  unsigned m_;
  std::vector<std::vector<Integer>> entries_;
};

// The four independent routes to R_n^k(m).

// (1/k!) sum_j (-1)^{k-j} C(k,j) j^n (j)_m, with the division by k!
// checked exact.
Integer m_stirling_explicit(unsigned n, unsigned k, unsigned m);

// sum_i (-1)^{m-i} s(m,i) S(n+i,k).
Integer m_stirling_via_first_kind(unsigned n, unsigned k, unsigned m);

// sum_j C(n,j) (1-m)^{n-j} sum_i s(m,i) ws(j+i, k, m-1).
Integer m_stirling_via_weighted(unsigned n, unsigned k, unsigned m);

MStirlingTable m_stirling_table(unsigned max_n, unsigned m);

// e^z (e^{-z} d/dz)^m [(1/k!) e^{(m-1)z} (e^z - 1)^k] truncated so that
// terms 0..order equal R_n^k(m).
EgfSeries m_stirling_egf(unsigned k, unsigned m, std::size_t order);

// Weighted m-Stirling numbers (1/k!) sum_j (-1)^{k-j} C(k,j) (j+x)^n (j)_m.
Rational weighted_m_stirling(unsigned n, unsigned k, const Rational& x, unsigned m);
Polynomial weighted_m_stirling_poly(unsigned n, unsigned k, unsigned m);

}  // namespace polybern
