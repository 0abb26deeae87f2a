#include "polybern/rational.hpp"

#include <cctype>
#include <ostream>

#include "polybern/error.hpp"

namespace polybern {

Integer ipow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Rational::Rational(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) raise(errc::domain, "rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::from_string(const std::string& text) {
  // [+-]?digits(/digits)? with nothing else.
  std::size_t i = 0;
  auto digits = [&](std::size_t from) {
    std::size_t j = from;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    return j;
  };
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
  std::size_t num_end = digits(i);
  bool ok = num_end > i;
  if (ok && num_end < text.size()) {
    ok = text[num_end] == '/' && digits(num_end + 1) == text.size() &&
         num_end + 1 < text.size();
  }
  if (!ok) raise(errc::parse, "not a rational: \"" + text + "\"");

  mpq_class q;
  std::string body = text[0] == '+' ? text.substr(1) : text;  // GMP rejects '+'
  if (q.set_str(body, 10) != 0) raise(errc::parse, "not a rational: \"" + text + "\"");
  if (sgn(q.get_den()) == 0)
    raise(errc::parse, "rational with zero denominator: \"" + text + "\"");
  q.canonicalize();
  Rational r;
  r.q_ = q;
  return r;
}

Rational Rational::operator-() const {
  Rational r;
  r.q_ = -q_;
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) raise(errc::domain, "division by zero");
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

Rational pow(const Rational& base, long exp) {
  if (exp == 0) return Rational(1);
  if (base.is_zero() && exp < 0)
    raise(errc::domain, "zero raised to a negative power");
  unsigned long e = exp < 0 ? static_cast<unsigned long>(-exp)
                            : static_cast<unsigned long>(exp);
  Integer num = ipow(base.num(), e);
  Integer den = ipow(base.den(), e);
  return exp < 0 ? Rational(den, num) : Rational(num, den);
}

}  // namespace polybern
