#include <random>
#include <vector>

#include "doctest.h"

#include "polybern/polynomial.hpp"
#include "polybern/rational.hpp"

using polybern::Integer;
using polybern::Polynomial;
using polybern::Rational;

namespace {

Polynomial poly(std::initializer_list<long> coeffs) {
  std::vector<Rational> v;
  for (long c : coeffs) v.emplace_back(c);
  return Polynomial(v);
}

}  // namespace

TEST_CASE("zero polynomial has no degree") {
  CHECK(!Polynomial().degree().has_value());
  CHECK(poly({0, 0, 0}).is_zero());
  CHECK(poly({1, 2, 0}).degree() == 1);
}

TEST_CASE("evaluation is exact") {
  // 2x + 1 at 1/2
  CHECK(poly({1, 2})(Rational(Integer(1), Integer(2))) == Rational(2));
  CHECK(poly({0, 0, 1})(Rational(-3)) == Rational(9));
}

TEST_CASE("shift by binomial expansion") {
  CHECK(poly({0, 0, 1}).shifted(Rational(1)) == poly({1, 2, 1}));  // (x+1)^2
  CHECK(poly({0, 1}).shifted(Rational(0)) == poly({0, 1}));
  CHECK(poly({5}).shifted(Rational(3)) == poly({5}));
}

TEST_CASE("shift round trip is the identity") {
  std::mt19937_64 eng(7);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rational> coeffs;
    for (unsigned i = 0; i <= eng() % 6; ++i)
      coeffs.push_back(Rational(Integer(static_cast<long>(eng() % 21) - 10),
                                Integer(static_cast<long>(eng() % 9) + 1)));
    Polynomial p(coeffs);
    Rational c(Integer(static_cast<long>(eng() % 11) - 5), Integer(3));
    CHECK(p.shifted(c).shifted(-c) == p);
  }
}

TEST_CASE("arithmetic and composition") {
  Polynomial x = Polynomial::variable();
  CHECK((x + Polynomial::constant(Rational(1))) * (x - Polynomial::constant(Rational(1))) ==
        poly({-1, 0, 1}));
  Polynomial one_minus_x = poly({1, -1});
  CHECK(one_minus_x.compose(one_minus_x) == x);
  CHECK(poly({0, 0, 1}).compose(poly({1, 1})) == poly({1, 2, 1}));
  CHECK((Rational(2) * poly({1, 1})) == poly({2, 2}));
}

TEST_CASE("derivative") {
  CHECK(poly({1, 2, 3}).derivative() == poly({2, 6}));
  CHECK(poly({7}).derivative().is_zero());
  CHECK(Polynomial().derivative().is_zero());
}

TEST_CASE("human-readable rendering, lowest degree first") {
  CHECK(Polynomial().str() == "0");
  CHECK(poly({1, 2, 1}).str() == "1 + 2x + x^2");
  Polynomial half_minus_x(std::vector<Rational>{Rational(Integer(1), Integer(2)), Rational(-1)});
  CHECK(half_minus_x.str() == "1/2 - x");
  CHECK(poly({2, -1}).str() == "2 - x");
  CHECK(poly({0, -1, 0, 5}).str() == "-x + 5x^3");
}
