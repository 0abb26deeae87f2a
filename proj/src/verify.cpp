#include "polybern/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "json.hpp"

#include "polybern/chromatic.hpp"
#include "polybern/egf.hpp"
#include "polybern/error.hpp"
#include "polybern/hpb.hpp"
#include "polybern/hpbpoly.hpp"
#include "polybern/mstirling.hpp"
#include "polybern/stirling.hpp"

namespace polybern::verify {

bool Report::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok(); });
}

std::size_t Report::total_points() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.points;
  return n;
}

std::size_t Report::total_failures() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.failures.size();
  return n;
}

std::string Report::to_json() const {
  nlohmann::json j;
  j["suite"] = suite;
  j["seed"] = seed;
  j["passed"] = ok();
  j["total_points"] = total_points();
  j["total_failures"] = total_failures();
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json jc;
    jc["name"] = c.name;
    jc["points"] = c.points;
    jc["passed"] = c.ok();
    jc["failures"] = nlohmann::json::array();
    for (const auto& f : c.failures)
      jc["failures"].push_back({{"point", f.point}, {"expected", f.expected}, {"got", f.got}});
    j["checks"].push_back(jc);
  }
  return j.dump(2);
}

namespace {

void expect(Check& c, const std::string& point, const std::string& expected,
            const std::string& got) {
  ++c.points;
  if (expected != got) c.failures.push_back({point, expected, got});
}

void expect_eq(Check& c, const std::string& point, const Rational& expected,
               const Rational& got) {
  expect(c, point, expected.str(), got.str());
}

void expect_eq(Check& c, const std::string& point, const Integer& expected,
               const Integer& got) {
  expect(c, point, expected.get_str(), got.get_str());
}

void expect_eq(Check& c, const std::string& point, const Polynomial& expected,
               const Polynomial& got) {
  expect(c, point, expected.str(), got.str());
}

std::string pt(std::initializer_list<std::pair<const char*, std::string>> kv) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, value] : kv) {
    if (!first) os << " ";
    os << key << "=" << value;
    first = false;
  }
  return os.str();
}

std::string s(long v) { return std::to_string(v); }
std::string s(unsigned v) { return std::to_string(v); }

// Deterministic small random values; avoids std::uniform_int_distribution
// so the byte-identical-output contract does not hinge on library details.
unsigned long rand_below(std::mt19937_64& eng, unsigned long n) { return eng() % n; }

Rational rand_rational(std::mt19937_64& eng) {
  long num = static_cast<long>(rand_below(eng, 41)) - 20;
  long den = static_cast<long>(rand_below(eng, 10)) + 1;
  return Rational(Integer(num), Integer(den));
}

// ---- tables ----------------------------------------------------------

struct PaperTable {
  unsigned m;
  std::vector<std::vector<long>> rows;
};

const std::vector<PaperTable>& paper_tables() {
  static const std::vector<PaperTable> tables = {
      {1,
       {{0, 1},
        {0, 1, 1},
        {0, 1, 3, 1},
        {0, 1, 7, 6, 1},
        {0, 1, 15, 25, 10, 1},
        {0, 1, 31, 90, 65, 15, 1},
        {0, 1, 63, 301, 350, 140, 21, 1},
        {0, 1, 127, 966, 1701, 1050, 266, 28, 1}}},
      {2,
       {{0, 2, 1},
        {0, 2, 4, 1},
        {0, 2, 10, 7, 1},
        {0, 2, 22, 31, 11, 1},
        {0, 2, 46, 115, 75, 16, 1},
        {0, 2, 94, 391, 415, 155, 22, 1},
        {0, 2, 190, 1267, 2051, 1190, 287, 29, 1},
        {0, 2, 382, 3991, 9471, 8001, 2912, 490, 37, 1}}},
      // Row 5 column 5 of the m=3 triangle is 565 + 5*187 = 1500; the
      // 1550 that sometimes appears in transcriptions fails the recurrence
      // that generates rows 6 and 7 (10381 = 2881 + 5*1500).
      {3,
       {{0, 6, 6, 1},
        {0, 6, 18, 9, 1},
        {0, 6, 42, 45, 13, 1},
        {0, 6, 90, 177, 97, 18, 1},
        {0, 6, 186, 621, 565, 187, 24, 1},
        {0, 6, 378, 2049, 2881, 1500, 331, 31, 1},
        {0, 6, 762, 6525, 13573, 10381, 3486, 548, 39, 1},
        {0, 6, 1530, 20337, 60817, 65478, 31297, 7322, 860, 48, 1}}}};
  return tables;
}

std::vector<Check> suite_tables(std::uint64_t) {
  std::vector<Check> checks;
  for (const auto& table : paper_tables()) {
    Check c{"tables/m=" + s(table.m), 0, {}};
    MStirlingTable computed = m_stirling_table(7, table.m);
    for (unsigned n = 0; n < table.rows.size(); ++n)
      for (unsigned k = 0; k < table.rows[n].size(); ++k)
        expect_eq(c, pt({{"n", s(n)}, {"k", s(k)}}), Integer(table.rows[n][k]),
                  computed.entry(n, k));
    checks.push_back(std::move(c));
  }
  return checks;
}

// ---- formulas --------------------------------------------------------

std::vector<Check> suite_formulas(std::uint64_t seed) {
  std::vector<Check> checks;

  {
    Check c{"formulas/four-way-m-stirling", 0, {}};
    for (unsigned m = 0; m <= 5; ++m) {
      MStirlingTable table = m_stirling_table(10, m);
      for (unsigned n = 0; n <= 10; ++n)
        for (unsigned k = 0; k <= n + m; ++k) {
          Integer expl = m_stirling_explicit(n, k, m);
          std::string point = pt({{"n", s(n)}, {"k", s(k)}, {"m", s(m)}});
          expect_eq(c, point + " route=first-kind", expl, m_stirling_via_first_kind(n, k, m));
          expect_eq(c, point + " route=weighted", expl, m_stirling_via_weighted(n, k, m));
          expect_eq(c, point + " route=table", expl, table.entry(n, k));
        }
    }
    checks.push_back(std::move(c));
  }

  {
    Check c{"formulas/m-stirling-special-values", 0, {}};
    expect_eq(c, "n=0 k=0 m=0", Integer(1), m_stirling_explicit(0, 0, 0));
    for (unsigned m = 1; m <= 8; ++m)
      expect_eq(c, pt({{"n", s(0u)}, {"k", s(0u)}, {"m", s(m)}}), Integer(0),
                m_stirling_explicit(0, 0, m));
    for (unsigned m = 1; m <= 8; ++m)
      for (unsigned k = 1; k <= 8; ++k)
        expect_eq(c, pt({{"n", s(0u)}, {"k", s(k)}, {"m", s(m)}}) + " lah", lah(m, k),
                  m_stirling_explicit(0, k, m));
    for (unsigned m = 0; m <= 8; ++m)
      for (unsigned n = 1; n <= 8; ++n) {
        expect_eq(c, pt({{"n", s(n)}, {"k", s(1u)}, {"m", s(m)}}) + " m!", factorial(m),
                  m_stirling_explicit(n, 1, m));
        expect_eq(c, pt({{"n", s(n)}, {"k", s(n + m)}, {"m", s(m)}}) + " diag", Integer(1),
                  m_stirling_explicit(n, n + m, m));
        for (unsigned k = n + m + 1; k <= n + m + 3; ++k)
          expect_eq(c, pt({{"n", s(n)}, {"k", s(k)}, {"m", s(m)}}) + " zero", Integer(0),
                    m_stirling_explicit(n, k, m));
      }
    for (unsigned n = 0; n <= 8; ++n)
      for (unsigned k = 0; k <= 8; ++k) {
        expect_eq(c, pt({{"n", s(n)}, {"k", s(k)}}) + " m=0->S", stirling_second(n, k),
                  m_stirling_explicit(n, k, 0));
        expect_eq(c, pt({{"n", s(n)}, {"k", s(k)}}) + " m=1->S(n+1,k)",
                  stirling_second(n + 1, k), m_stirling_explicit(n, k, 1));
      }
    checks.push_back(std::move(c));
  }

  {
    Check c{"formulas/stirling-first-vs-falling-factorial", 0, {}};
    Polynomial falling = Polynomial::constant(Rational(1));
    for (unsigned n = 0; n <= 12; ++n) {
      for (unsigned i = 0; i <= n; ++i)
        expect_eq(c, pt({{"n", s(n)}, {"i", s(i)}}), falling.coeff(i),
                  Rational(stirling_first(n, i)));
      falling = falling * (Polynomial::variable() -
                           Polynomial::constant(Rational(static_cast<long>(n))));
    }
    checks.push_back(std::move(c));
  }

  {
    Check c{"formulas/stirling-second-explicit-sum", 0, {}};
    for (unsigned n = 0; n <= 12; ++n)
      for (unsigned i = 0; i <= n; ++i) {
        Rational sum(0);
        for (unsigned j = 0; j <= i; ++j) {
          Rational term = Rational(binomial(i, j) * ipow(Integer(static_cast<long>(j)), n));
          if ((i - j) % 2 == 1) term = -term;
          sum += term;
        }
        sum /= Rational(factorial(i));
        expect_eq(c, pt({{"n", s(n)}, {"i", s(i)}}), sum, Rational(stirling_second(n, i)));
      }
    checks.push_back(std::move(c));
  }

  {
    Check c{"formulas/weighted-stirling-recurrence", 0, {}};
    const std::vector<Rational> xs = {Rational(0), Rational(1), Rational(-1),
                                      Rational(Integer(1), Integer(2)),
                                      Rational(Integer(-3), Integer(2))};
    for (const auto& x : xs)
      for (unsigned n = 0; n <= 10; ++n)
        for (unsigned i = 1; i <= n + 1; ++i) {
          Rational lhs = weighted_stirling(n + 1, i, x);
          Rational rhs = weighted_stirling(n, i - 1, x) +
                         (x + Rational(static_cast<long>(i))) * weighted_stirling(n, i, x);
          expect_eq(c, pt({{"n", s(n)}, {"i", s(i)}, {"x", x.str()}}), rhs, lhs);
        }
    checks.push_back(std::move(c));
  }

  {
    Check c{"formulas/weighted-stirling-poly-random-eval", 0, {}};
    std::mt19937_64 eng(seed + 0x5157u);
    for (unsigned trial = 0; trial < 20; ++trial) {
      Rational x = rand_rational(eng);
      unsigned n = static_cast<unsigned>(rand_below(eng, 9));
      for (unsigned i = 0; i <= n; ++i)
        expect_eq(c, pt({{"n", s(n)}, {"i", s(i)}, {"x", x.str()}}),
                  weighted_stirling(n, i, x), weighted_stirling_poly(n, i)(x));
    }
    checks.push_back(std::move(c));
  }

  {
    Check c{"formulas/first-kind-orthogonality", 0, {}};
    for (unsigned m = 0; m <= 8; ++m)
      for (unsigned j = 0; j <= 8; ++j) {
        Integer sum(0);
        for (unsigned i = 0; i <= m; ++i) {
          Integer term = stirling_first(m, i) * ipow(Integer(static_cast<long>(j)), i);
          if ((m - i) % 2 == 1) term = -term;
          sum += term;
        }
        expect_eq(c, pt({{"j", s(j)}, {"m", s(m)}}),
                  pochhammer(Integer(static_cast<long>(j)), m), sum);
      }
    checks.push_back(std::move(c));
  }

  {
    Check c{"formulas/weighted-m-stirling-recurrence", 0, {}};
    const std::vector<Rational> xs = {Rational(0), Rational(1), Rational(-1),
                                      Rational(Integer(2), Integer(3))};
    for (const auto& x : xs)
      for (unsigned m = 0; m <= 3; ++m)
        for (unsigned n = 0; n <= 8; ++n)
          for (unsigned k = 1; k <= n + m + 1; ++k) {
            Rational lhs = weighted_m_stirling(n + 1, k, x, m);
            Rational rhs = weighted_m_stirling(n, k - 1, x, m) +
                           (x + Rational(static_cast<long>(k))) *
                               weighted_m_stirling(n, k, x, m);
            expect_eq(c, pt({{"n", s(n)}, {"k", s(k)}, {"m", s(m)}, {"x", x.str()}}), rhs, lhs);
          }
    checks.push_back(std::move(c));
  }

  {
    Check c{"formulas/weighted-m-stirling-at-zero", 0, {}};
    for (unsigned m = 0; m <= 3; ++m)
      for (unsigned n = 0; n <= 8; ++n)
        for (unsigned k = 0; k <= n + m; ++k)
          expect_eq(c, pt({{"n", s(n)}, {"k", s(k)}, {"m", s(m)}}),
                    Rational(m_stirling_explicit(n, k, m)),
                    weighted_m_stirling(n, k, Rational(0), m));
    checks.push_back(std::move(c));
  }

  {
    Check c{"formulas/three-way-m-hpb", 0, {}};
    const std::vector<Rational> as = {Rational(1), Rational(2),
                                      Rational(Integer(1), Integer(2)),
                                      Rational(Integer(3), Integer(2))};
    for (long k = -3; k <= 3; ++k)
      for (const auto& a : as) {
        HpbMatrix matrix(8, k, a);
        for (unsigned n = 0; n <= 8; ++n)
          for (unsigned m = 0; n + m <= 8; ++m) {
            Rational f1 = m_hpb_form1(n, m, k, a);
            std::string point = pt({{"n", s(n)}, {"m", s(m)}, {"k", s(k)}, {"a", a.str()}});
            expect_eq(c, point + " route=form2", f1, m_hpb_form2(n, m, k, a));
            expect_eq(c, point + " route=matrix", f1, matrix.entry(n, m));
          }
      }
    checks.push_back(std::move(c));
  }

  {
    Check c{"formulas/negative-index-consistency", 0, {}};
    const std::vector<Rational> as = {Rational(1), Rational(Integer(1), Integer(2))};
    for (unsigned k = 0; k <= 3; ++k)
      for (const auto& a : as)
        for (unsigned n = 0; n <= 8; ++n)
          for (unsigned m = 0; n + m <= 8; ++m)
            expect_eq(c, pt({{"n", s(n)}, {"m", s(m)}, {"k", s(k)}, {"a", a.str()}}),
                      m_hpb_form1(n, m, -static_cast<long>(k), a),
                      m_hpb_negative(n, m, k, a));
    checks.push_back(std::move(c));
  }

  {
    Check c{"formulas/corollary42-recurrence", 0, {}};
    const std::vector<Rational> as = {Rational(1), Rational(Integer(1), Integer(2))};
    for (unsigned k = 0; k <= 3; ++k)
      for (const auto& a : as)
        for (unsigned n = 0; n + 1 <= 8; ++n)
          for (unsigned m = 0; n + 1 + m <= 8; ++m) {
            long neg = -static_cast<long>(k);
            Rational mr(static_cast<long>(m));
            Rational coef = (mr + Rational(1)) * pow(mr + a + Rational(1), static_cast<long>(k)) /
                            pow(mr + a, static_cast<long>(k));
            Rational rhs = coef * m_hpb_form1(n, m + 1, neg, a) - mr * m_hpb_form1(n, m, neg, a);
            expect_eq(c, pt({{"n", s(n)}, {"m", s(m)}, {"k", s(k)}, {"a", a.str()}}),
                      m_hpb_form1(n + 1, m, neg, a), rhs);
          }
    checks.push_back(std::move(c));
  }

  {
    Check c{"formulas/bernoulli-matrix-column", 0, {}};
    const std::vector<std::string> classical = {"1",     "1/2", "1/6",  "0",
                                                "-1/30", "0",   "1/42", "0",
                                                "-1/30", "0",   "5/66", "0",
                                                "-691/2730"};
    HpbMatrix matrix(12, 1, Rational(1));
    std::vector<Rational> column = matrix.first_column();
    for (unsigned n = 0; n <= 12; ++n) {
      expect(c, pt({{"n", s(n)}}) + " matrix", classical[n], column[n].str());
      expect(c, pt({{"n", s(n)}}) + " explicit", classical[n], bernoulli(n).str());
    }
    checks.push_back(std::move(c));
  }

  return checks;
}

// ---- egf -------------------------------------------------------------

std::vector<Check> suite_egf(std::uint64_t) {
  std::vector<Check> checks;
  constexpr std::size_t kOrder = 10;

  {
    Check c{"egf/stirling-first", 0, {}};
    // ln(1+z) as an EGF: a_n = (-1)^{n+1} (n-1)!.
    std::vector<Rational> log_terms(kOrder + 1, Rational(0));
    for (std::size_t n = 1; n <= kOrder; ++n) {
      log_terms[n] = Rational(factorial(n - 1));
      if (n % 2 == 0) log_terms[n] = -log_terms[n];
    }
    EgfSeries log1p(log_terms);
    for (unsigned i = 0; i <= 6; ++i) {
      std::vector<Rational> outer(kOrder + 1, Rational(0));
      outer[i] = Rational(1);
      EgfSeries series = (Rational(1) / Rational(factorial(i))) * compose(outer, log1p);
      for (std::size_t n = 0; n <= kOrder; ++n)
        expect_eq(c, pt({{"n", s(static_cast<unsigned>(n))}, {"i", s(i)}}),
                  Rational(stirling_first(static_cast<unsigned>(n), i)), series.term(n));
    }
    checks.push_back(std::move(c));
  }

  {
    Check c{"egf/stirling-second", 0, {}};
    EgfSeries em1 = EgfSeries::exp_linear(Rational(1), kOrder) - EgfSeries::one(kOrder);
    for (unsigned i = 0; i <= 6; ++i) {
      EgfSeries series = (Rational(1) / Rational(factorial(i))) * pow(em1, i);
      for (std::size_t n = 0; n <= kOrder; ++n)
        expect_eq(c, pt({{"n", s(static_cast<unsigned>(n))}, {"i", s(i)}}),
                  Rational(stirling_second(static_cast<unsigned>(n), i)), series.term(n));
    }
    checks.push_back(std::move(c));
  }

  {
    Check c{"egf/weighted-stirling", 0, {}};
    const std::vector<Rational> xs = {Rational(Integer(1), Integer(2)),
                                      Rational(Integer(-3), Integer(2)), Rational(2)};
    EgfSeries em1 = EgfSeries::exp_linear(Rational(1), kOrder) - EgfSeries::one(kOrder);
    for (const auto& x : xs)
      for (unsigned i = 0; i <= 6; ++i) {
        EgfSeries series = (Rational(1) / Rational(factorial(i))) *
                           (EgfSeries::exp_linear(x, kOrder) * pow(em1, i));
        for (std::size_t n = 0; n <= kOrder; ++n)
          expect_eq(c, pt({{"n", s(static_cast<unsigned>(n))}, {"i", s(i)}, {"x", x.str()}}),
                    weighted_stirling(static_cast<unsigned>(n), i, x), series.term(n));
      }
    checks.push_back(std::move(c));
  }

  {
    Check c{"egf/compose-inverse", 0, {}};
    // log(1+w) ordinary coefficients composed with e^z - 1 give back z.
    std::vector<Rational> outer(kOrder + 1, Rational(0));
    for (std::size_t i = 1; i <= kOrder; ++i) {
      outer[i] = Rational(Integer(1), Integer(static_cast<long>(i)));
      if (i % 2 == 0) outer[i] = -outer[i];
    }
    EgfSeries em1 = EgfSeries::exp_linear(Rational(1), kOrder) - EgfSeries::one(kOrder);
    EgfSeries series = compose(outer, em1);
    for (std::size_t n = 0; n <= kOrder; ++n)
      expect_eq(c, pt({{"n", s(static_cast<unsigned>(n))}}),
                Rational(n == 1 ? 1 : 0), series.term(n));
    checks.push_back(std::move(c));
  }

  auto phi_series = [](long k, const Rational& a, std::size_t order) {
    std::vector<Rational> outer(order + 1);
    for (std::size_t i = 0; i <= order; ++i)
      outer[i] = pow(Rational(static_cast<long>(i)) + a, -k);
    // 1 - e^{-z}
    EgfSeries inner = EgfSeries::one(order) - EgfSeries::exp_linear(Rational(-1), order);
    return compose(outer, inner);
  };

  {
    Check c{"egf/hurwitz-pb", 0, {}};
    const std::vector<Rational> as = {Rational(1), Rational(Integer(1), Integer(2)),
                                      Rational(Integer(3), Integer(2))};
    for (long k = -2; k <= 3; ++k)
      for (const auto& a : as) {
        EgfSeries series = phi_series(k, a, kOrder);
        for (std::size_t n = 0; n <= kOrder; ++n)
          expect_eq(c, pt({{"n", s(static_cast<unsigned>(n))}, {"k", s(k)}, {"a", a.str()}}),
                    hurwitz_pb(static_cast<unsigned>(n), k, a), series.term(n));
      }
    checks.push_back(std::move(c));
  }

  {
    Check c{"egf/generating1", 0, {}};
    constexpr std::size_t kN = 8;
    const std::vector<Rational> as = {Rational(1), Rational(Integer(1), Integer(2))};
    for (unsigned m = 0; m <= 3; ++m)
      for (long k : {-2L, 2L})
        for (const auto& a : as) {
          std::size_t work = kN + m;
          EgfSeries w = EgfSeries::one(work) - EgfSeries::exp_linear(Rational(-1), work);
          EgfSeries inner = pow(w, m) * phi_series(k, Rational(static_cast<long>(m)) + a, work);
          EgfSeries mid = apply_ezd(inner, m);
          Rational prefactor = pow((Rational(static_cast<long>(m)) + a) / a, k) /
                               Rational(factorial(m));
          EgfSeries series =
              prefactor * (EgfSeries::exp_linear(Rational(-static_cast<long>(m)), kN) * mid);
          for (std::size_t n = 0; n <= kN; ++n)
            expect_eq(c,
                      pt({{"n", s(static_cast<unsigned>(n))}, {"m", s(m)}, {"k", s(k)},
                          {"a", a.str()}}),
                      m_hpb_form1(static_cast<unsigned>(n), m, k, a), series.term(n));
        }
    checks.push_back(std::move(c));
  }

  {
    Check c{"egf/f2-m-stirling", 0, {}};
    constexpr std::size_t kN = 8;
    for (unsigned m = 0; m <= 3; ++m) {
      MStirlingTable table = m_stirling_table(kN, m);
      for (unsigned k = 0; k <= 5; ++k) {
        EgfSeries series = m_stirling_egf(k, m, kN);
        for (std::size_t n = 0; n <= kN; ++n)
          expect_eq(c, pt({{"n", s(static_cast<unsigned>(n))}, {"k", s(k)}, {"m", s(m)}}),
                    Rational(table.entry(static_cast<unsigned>(n), k)), series.term(n));
      }
    }
    checks.push_back(std::move(c));
  }

  {
    Check c{"egf/poly-family", 0, {}};
    constexpr std::size_t kN = 8;
    const std::vector<Rational> xs = {Rational(0), Rational(1),
                                      Rational(Integer(-1), Integer(2))};
    const std::vector<Rational> as = {Rational(1), Rational(Integer(1), Integer(2))};
    for (long k : {-2L, 1L, 2L})
      for (const auto& a : as)
        for (const auto& x : xs) {
          EgfSeries series = phi_series(k, a, kN) * EgfSeries::exp_linear(-x, kN);
          for (std::size_t n = 0; n <= kN; ++n)
            expect_eq(c,
                      pt({{"n", s(static_cast<unsigned>(n))}, {"k", s(k)}, {"a", a.str()},
                          {"x", x.str()}}),
                      hpb_poly_convolution(static_cast<unsigned>(n), 0, k, a).poly(x),
                      series.term(n));
        }
    checks.push_back(std::move(c));
  }

  return checks;
}

// ---- duality ---------------------------------------------------------

std::vector<Check> suite_duality(std::uint64_t) {
  std::vector<Check> checks;

  {
    Check c{"duality/grid", 0, {}};
    for (unsigned n = 0; n <= 10; ++n)
      for (unsigned k = 0; k <= 10; ++k)
        expect_eq(c, pt({{"n", s(n)}, {"k", s(k)}}),
                  hurwitz_pb(n, -static_cast<long>(k), Rational(1)),
                  hurwitz_pb(k, -static_cast<long>(n), Rational(1)));
    checks.push_back(std::move(c));
  }

  {
    Check c{"duality/theorem41-m0", 0, {}};
    for (unsigned n = 0; n <= 10; ++n)
      for (unsigned k = 0; k <= 10; ++k)
        expect_eq(c, pt({{"n", s(n)}, {"k", s(k)}}),
                  hurwitz_pb(n, -static_cast<long>(k), Rational(1)),
                  m_hpb_negative(n, 0, k, Rational(1)));
    checks.push_back(std::move(c));
  }

  return checks;
}

// ---- polynomials -----------------------------------------------------

std::vector<Check> suite_polynomials(std::uint64_t seed) {
  std::vector<Check> checks;
  const std::vector<Rational> as = {Rational(1), Rational(2),
                                    Rational(Integer(1), Integer(2))};

  {
    Check c{"polynomials/ssd-vs-explicit", 0, {}};
    for (long k = -3; k <= 3; ++k)
      for (const auto& a : as)
        for (unsigned n = 0; n <= 6; ++n)
          for (unsigned m = 0; n + m <= 6; ++m)
            expect_eq(c, pt({{"n", s(n)}, {"m", s(m)}, {"k", s(k)}, {"a", a.str()}}),
                      hpb_poly_convolution(n, m, k, a).poly,
                      hpb_poly_explicit(n, m, k, a).poly);
    checks.push_back(std::move(c));
  }

  {
    Check c{"polynomials/recurrence", 0, {}};
    for (long k = -3; k <= 3; ++k)
      for (const auto& a : as) {
        RecurrenceReport report = hpb_poly_recurrence_check(6, k, a);
        c.points += report.checked;
        for (const auto& v : report.violations)
          c.failures.push_back({pt({{"n", s(v.n)}, {"m", s(v.m)}, {"k", s(k)}, {"a", a.str()}}),
                                v.rhs.str(), v.lhs.str()});
      }
    checks.push_back(std::move(c));
  }

  {
    Check c{"polynomials/lemma53", 0, {}};
    Polynomial one_minus_x = Polynomial::constant(Rational(1)) - Polynomial::variable();
    for (unsigned m = 0; m <= 4; ++m)
      for (unsigned n = 0; n <= 6; ++n)
        for (unsigned l = 0; l <= 6; ++l) {
          auto [lhs, rhs] = lemma_identity(n, l, m);
          expect_eq(c, pt({{"n", s(n)}, {"l", s(l)}, {"m", s(m)}}), rhs, lhs);
          if (m == 0)
            expect_eq(c, pt({{"n", s(n)}, {"l", s(l)}}) + " ws(1-x)",
                      weighted_stirling_poly(n, l).compose(one_minus_x), lhs);
        }
    checks.push_back(std::move(c));
  }

  {
    Check c{"polynomials/theorem54", 0, {}};
    const std::vector<Rational> as54 = {Rational(1), Rational(Integer(1), Integer(2))};
    for (unsigned k = 0; k <= 3; ++k)
      for (const auto& a : as54)
        for (unsigned n = 0; n <= 6; ++n)
          for (unsigned m = 0; n + m <= 6; ++m)
            expect_eq(c, pt({{"n", s(n)}, {"m", s(m)}, {"k", s(k)}, {"a", a.str()}}),
                      hpb_poly_convolution(n, m, -static_cast<long>(k), a).poly,
                      hpb_poly_negative(n, m, k, a).poly);
    checks.push_back(std::move(c));
  }

  {
    Check c{"polynomials/theorem54-extended-sum", 0, {}};
    // Terms past min(n+m, k) vanish identically.
    for (unsigned k = 0; k <= 3; ++k)
      for (unsigned n = 0; n <= 4; ++n)
        for (unsigned m = 0; m <= 2; ++m) {
          unsigned lmax = std::min(n + m, k);
          for (unsigned l = lmax + 1; l <= lmax + 3; ++l) {
            Rational lf = Rational(factorial(l));
            Polynomial bracket =
                weighted_m_stirling_poly(n + 1, l + 1, m).compose(-Polynomial::variable()) +
                Polynomial::variable() *
                    weighted_m_stirling_poly(n, l + 1, m).compose(-Polynomial::variable());
            Polynomial term = lf * lf * weighted_stirling(k, l, Rational(1)) * bracket;
            expect_eq(c, pt({{"n", s(n)}, {"m", s(m)}, {"k", s(k)}, {"l", s(l)}}),
                      Polynomial(), term);
          }
        }
    checks.push_back(std::move(c));
  }

  {
    Check c{"polynomials/corollary55", 0, {}};
    for (unsigned n = 0; n <= 8; ++n)
      for (unsigned k = 0; k <= 8; ++k)
        expect_eq(c, pt({{"n", s(n)}, {"k", s(k)}}),
                  hpb_poly_convolution(n, 0, -static_cast<long>(k), Rational(1)).poly,
                  corollary_last(n, k));
    checks.push_back(std::move(c));
  }

  {
    Check c{"polynomials/derivative-relation", 0, {}};
    const std::vector<Rational> asD = {Rational(1), Rational(Integer(1), Integer(2))};
    for (long k : {-2L, 1L, 2L})
      for (const auto& a : asD)
        for (unsigned n = 1; n <= 6; ++n)
          for (unsigned m = 0; n + m <= 6; ++m)
            expect_eq(c, pt({{"n", s(n)}, {"m", s(m)}, {"k", s(k)}, {"a", a.str()}}),
                      Rational(-static_cast<long>(n)) *
                          hpb_poly_convolution(n - 1, m, k, a).poly,
                      hpb_poly_convolution(n, m, k, a).poly.derivative());
    checks.push_back(std::move(c));
  }

  {
    Check c{"polynomials/structure", 0, {}};
    std::mt19937_64 eng(seed + 0x9d7u);
    for (long k : {-2L, 1L, 2L})
      for (const auto& a : as)
        for (unsigned n = 0; n <= 5; ++n)
          for (unsigned m = 0; n + m <= 5; ++m) {
            HpbPolynomial hp = hpb_poly_convolution(n, m, k, a);
            std::string point = pt({{"n", s(n)}, {"m", s(m)}, {"k", s(k)}, {"a", a.str()}});
            expect_eq(c, point + " const-term", m_hpb_form1(n, m, k, a), hp.poly.coeff(0));
            Rational lead = pow(a, -k);
            if (n % 2 == 1) lead = -lead;
            expect_eq(c, point + " leading", lead, hp.poly.coeff(n));
            // Sampled agreement between the two construction routes.
            Rational x = rand_rational(eng);
            expect_eq(c, point + " eval x=" + x.str(), hp.poly(x),
                      hpb_poly_explicit(n, m, k, a).poly(x));
          }
    checks.push_back(std::move(c));
  }

  return checks;
}

// ---- graphs ----------------------------------------------------------

std::vector<Check> suite_graphs(std::uint64_t seed) {
  std::vector<Check> checks;

  {
    Check c{"graphs/known-forms", 0, {}};
    for (unsigned n = 0; n <= 6; ++n) {
      expect_eq(c, pt({{"graph", "O_" + s(n)}}) + " P", Polynomial::monomial(n),
                chromatic_polynomial(SimpleGraph::empty_graph(n)));
      expect_eq(c, pt({{"graph", "O_" + s(n)}}) + " Pbar", Polynomial::monomial(n),
                pbar(SimpleGraph::empty_graph(n)));
      // P(K_n) is the falling factorial, Pbar(K_n) the rising one.
      Polynomial falling = Polynomial::constant(Rational(1));
      Polynomial rising = Polynomial::constant(Rational(1));
      for (unsigned j = 0; j < n; ++j) {
        falling = falling * (Polynomial::variable() -
                             Polynomial::constant(Rational(static_cast<long>(j))));
        rising = rising * (Polynomial::variable() +
                           Polynomial::constant(Rational(static_cast<long>(j))));
      }
      expect_eq(c, pt({{"graph", "K_" + s(n)}}) + " P", falling,
                chromatic_polynomial(SimpleGraph::complete_graph(n)));
      expect_eq(c, pt({{"graph", "K_" + s(n)}}) + " Pbar", rising,
                pbar(SimpleGraph::complete_graph(n)));
    }
    checks.push_back(std::move(c));
  }

  {
    Check c{"graphs/pbar-bruteforce", 0, {}};
    for (unsigned n = 0; n <= 4; ++n) {
      std::vector<std::pair<unsigned, unsigned>> all_edges;
      for (unsigned u = 0; u < n; ++u)
        for (unsigned v = u + 1; v < n; ++v) all_edges.emplace_back(u, v);
      for (unsigned long mask = 0; mask < (1ul << all_edges.size()); ++mask) {
        SimpleGraph g(n);
        for (std::size_t e = 0; e < all_edges.size(); ++e)
          if ((mask >> e) & 1) g.add_edge(all_edges[e].first, all_edges[e].second);
        Polynomial pb = pbar(g);
        for (unsigned x = 0; x <= 3; ++x)
          expect_eq(c, pt({{"n", s(n)}, {"edges", s(static_cast<unsigned>(mask))}, {"x", s(x)}}),
                    pb(Rational(static_cast<long>(x))),
                    Rational(pbar_bruteforce(g, x)));
      }
    }
    checks.push_back(std::move(c));
  }

  {
    Check c{"graphs/pbar-deletion-contraction", 0, {}};
    std::mt19937_64 eng(seed + 0x6743u);
    unsigned done = 0;
    while (done < 30) {
      unsigned n = 2 + static_cast<unsigned>(rand_below(eng, 5));
      SimpleGraph g(n);
      for (unsigned u = 0; u < n; ++u)
        for (unsigned v = u + 1; v < n; ++v)
          if (rand_below(eng, 2) == 1) g.add_edge(u, v);
      if (g.edges().empty()) continue;
      auto [u, v] = g.edges()[rand_below(eng, g.edges().size())];
      Polynomial sum = pbar(delete_edge(g, u, v)) + pbar(contract_edge(g, u, v));
      expect_eq(c, pt({{"trial", s(done)}, {"n", s(n)}, {"e", s(u) + "-" + s(v)}}),
                pbar(g), sum);
      ++done;
    }
    checks.push_back(std::move(c));
  }

  {
    Check c{"graphs/pbar-multiplicative", 0, {}};
    std::mt19937_64 eng(seed + 0x77u);
    for (unsigned trial = 0; trial < 10; ++trial) {
      unsigned n1 = static_cast<unsigned>(rand_below(eng, 4));
      unsigned n2 = static_cast<unsigned>(rand_below(eng, 4));
      SimpleGraph g(n1), h(n2);
      for (unsigned u = 0; u < n1; ++u)
        for (unsigned v = u + 1; v < n1; ++v)
          if (rand_below(eng, 2) == 1) g.add_edge(u, v);
      for (unsigned u = 0; u < n2; ++u)
        for (unsigned v = u + 1; v < n2; ++v)
          if (rand_below(eng, 2) == 1) h.add_edge(u, v);
      expect_eq(c, pt({{"trial", s(trial)}, {"n1", s(n1)}, {"n2", s(n2)}}),
                pbar(g) * pbar(h), pbar(disjoint_union(g, h)));
    }
    checks.push_back(std::move(c));
  }

  {
    Check c{"graphs/theorem35", 0, {}};
    for (unsigned n = 0; n <= 5; ++n)
      for (unsigned m = 0; m <= 3; ++m)
        for (unsigned k = 0; k <= n + m; ++k)
          expect(c, pt({{"n", s(n)}, {"k", s(k)}, {"m", s(m)}}), "true",
                 theorem35_check(n, k, m) ? "true" : "false");
    checks.push_back(std::move(c));
  }

  return checks;
}

using SuiteFn = std::vector<Check> (*)(std::uint64_t);

const std::vector<std::pair<std::string, SuiteFn>>& suite_registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> registry = {
      {"duality", suite_duality},   {"egf", suite_egf},
      {"formulas", suite_formulas}, {"graphs", suite_graphs},
      {"polynomials", suite_polynomials}, {"tables", suite_tables},
  };
  return registry;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : suite_registry()) out.push_back(name);
    return out;
  }();
  return names;
}

Report run_suite(const std::string& suite, std::uint64_t seed) {
  Report report;
  report.suite = suite;
  report.seed = seed;
  bool found = false;
  for (const auto& [name, fn] : suite_registry()) {
    if (suite == "all" || suite == name) {
      auto checks = fn(seed);
      report.checks.insert(report.checks.end(), std::make_move_iterator(checks.begin()),
                           std::make_move_iterator(checks.end()));
      found = true;
    }
  }
  if (!found)
    raise(errc::invalid_argument, "unknown verify suite \"" + suite + "\"");
  std::sort(report.checks.begin(), report.checks.end(),
            [](const Check& a, const Check& b) { return a.name < b.name; });
  return report;
}

}  // namespace polybern::verify
