// Acceptance suite: one criterion per entry, each printing a PASS/FAIL
// line with its runtime. Everything is exact arithmetic; the only
// tolerances are the per-criterion wall-clock budgets, enforced here.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "polybern/chromatic.hpp"
#include "polybern/egf.hpp"
#include "polybern/hpb.hpp"
#include "polybern/hpbpoly.hpp"
#include "polybern/mstirling.hpp"
#include "polybern/polynomial.hpp"
#include "polybern/rational.hpp"
#include "polybern/stirling.hpp"
#include "polybern/verify.hpp"

using namespace polybern;

namespace {

struct Criterion {
  int number;
  std::string name;
  double budget_seconds;
  std::function<bool(std::string&)> body;
};

bool expect(std::string& log, bool condition, const std::string& what) {
  if (!condition && log.empty()) log = what;
  return condition;
}

// The three shifted triangles as printed, except the recurrence-forced
// value 1500 at (m=3, n=5, k=5); see the verify tables data for the
// cross-row derivation.
const std::vector<std::vector<std::vector<long>>> kTables = {
    {{0, 1},
     {0, 1, 1},
     {0, 1, 3, 1},
     {0, 1, 7, 6, 1},
     {0, 1, 15, 25, 10, 1},
     {0, 1, 31, 90, 65, 15, 1},
     {0, 1, 63, 301, 350, 140, 21, 1},
     {0, 1, 127, 966, 1701, 1050, 266, 28, 1}},
    {{0, 2, 1},
     {0, 2, 4, 1},
     {0, 2, 10, 7, 1},
     {0, 2, 22, 31, 11, 1},
     {0, 2, 46, 115, 75, 16, 1},
     {0, 2, 94, 391, 415, 155, 22, 1},
     {0, 2, 190, 1267, 2051, 1190, 287, 29, 1},
     {0, 2, 382, 3991, 9471, 8001, 2912, 490, 37, 1}},
    {{0, 6, 6, 1},
     {0, 6, 18, 9, 1},
     {0, 6, 42, 45, 13, 1},
     {0, 6, 90, 177, 97, 18, 1},
     {0, 6, 186, 621, 565, 187, 24, 1},
     {0, 6, 378, 2049, 2881, 1500, 331, 31, 1},
     {0, 6, 762, 6525, 13573, 10381, 3486, 548, 39, 1},
     {0, 6, 1530, 20337, 60817, 65478, 31297, 7322, 860, 48, 1}}};

bool criterion_tables(std::string& log) {
  bool ok = true;
  for (unsigned m = 1; m <= 3; ++m) {
    MStirlingTable table(7, m);
    const auto& expected = kTables[m - 1];
    for (unsigned n = 0; n < expected.size(); ++n)
      for (unsigned k = 0; k < expected[n].size(); ++k) {
        std::ostringstream point;
        point << "m=" << m << " n=" << n << " k=" << k;
        ok &= expect(log, table.entry(n, k) == Integer(expected[n][k]), point.str());
      }
  }
  ok &= expect(log, m_stirling_table(7, 3).entry(7, 4) == Integer(60817), "R_7^4(3)");
  ok &= expect(log, m_stirling_table(7, 2).entry(6, 3) == Integer(1267), "R_6^3(2)");
  ok &= expect(log, m_stirling_table(7, 1).entry(7, 3) == Integer(966), "R_7^3(1)");
  return ok;
}

bool criterion_four_way(std::string& log) {
  bool ok = true;
  for (unsigned m = 0; m <= 5; ++m) {
    MStirlingTable table(10, m);
    for (unsigned n = 0; n <= 10; ++n)
      for (unsigned k = 0; k <= n + m; ++k) {
        Integer reference = m_stirling_explicit(n, k, m);
        std::ostringstream point;
        point << "n=" << n << " k=" << k << " m=" << m;
        ok &= expect(log, m_stirling_via_first_kind(n, k, m) == reference,
                     point.str() + " first-kind");
        ok &= expect(log, m_stirling_via_weighted(n, k, m) == reference,
                     point.str() + " weighted");
        ok &= expect(log, table.entry(n, k) == reference, point.str() + " table");
      }
  }
  return ok;
}

const std::vector<Rational> kFourAs = {Rational(1), Rational(2),
                                       Rational(Integer(1), Integer(2)),
                                       Rational(Integer(3), Integer(2))};

bool criterion_three_way(std::string& log) {
  bool ok = true;
  for (long k = -3; k <= 3; ++k)
    for (const Rational& a : kFourAs) {
      HpbMatrix matrix(8, k, a);
      for (unsigned n = 0; n <= 8; ++n)
        for (unsigned m = 0; n + m <= 8; ++m) {
          Rational f1 = m_hpb_form1(n, m, k, a);
          std::ostringstream point;
          point << "n=" << n << " m=" << m << " k=" << k << " a=" << a.str();
          ok &= expect(log, f1 == m_hpb_form2(n, m, k, a), point.str() + " form2");
          ok &= expect(log, f1 == matrix.entry(n, m), point.str() + " matrix");
        }
    }
  return ok;
}

bool criterion_bernoulli(std::string& log) {
  const char* classical[] = {"1",     "1/2", "1/6",  "0", "-1/30", "0", "1/42",
                             "0",     "-1/30", "0",  "5/66", "0",  "-691/2730"};
  HpbMatrix matrix(12, 1, Rational(1));
  std::vector<Rational> column = matrix.first_column();
  bool ok = true;
  for (unsigned n = 0; n <= 12; ++n) {
    ok &= expect(log, column[n].str() == classical[n], "matrix B_" + std::to_string(n));
    ok &= expect(log, bernoulli(n).str() == classical[n], "explicit B_" + std::to_string(n));
    ok &= expect(log, column[n] == hurwitz_pb(n, 1, Rational(1)),
                 "matrix-vs-explicit B_" + std::to_string(n));
  }
  return ok;
}

bool criterion_duality(std::string& log) {
  bool ok = true;
  for (unsigned n = 0; n <= 10; ++n)
    for (unsigned k = 0; k <= 10; ++k) {
      Rational lhs = hurwitz_pb(n, -static_cast<long>(k), Rational(1));
      Rational rhs = hurwitz_pb(k, -static_cast<long>(n), Rational(1));
      std::ostringstream point;
      point << "n=" << n << " k=" << k;
      ok &= expect(log, lhs == rhs, point.str() + " duality");
      ok &= expect(log, m_hpb_negative(n, 0, k, Rational(1)) == lhs,
                   point.str() + " theorem41");
    }
  return ok;
}

bool criterion_negative(std::string& log) {
  const std::vector<Rational> as = {Rational(1), Rational(Integer(1), Integer(2))};
  bool ok = true;
  for (unsigned k = 0; k <= 3; ++k)
    for (const Rational& a : as)
      for (unsigned n = 0; n <= 8; ++n)
        for (unsigned m = 0; n + m <= 8; ++m) {
          long neg = -static_cast<long>(k);
          std::ostringstream point;
          point << "n=" << n << " m=" << m << " k=" << k << " a=" << a.str();
          ok &= expect(log, m_hpb_negative(n, m, k, a) == m_hpb_form1(n, m, neg, a),
                       point.str() + " value");
          if (n + 1 + m <= 8) {
            Rational mr(static_cast<long>(m));
            Rational coef = (mr + Rational(1)) *
                            pow(mr + a + Rational(1), static_cast<long>(k)) /
                            pow(mr + a, static_cast<long>(k));
            Rational rhs =
                coef * m_hpb_form1(n, m + 1, neg, a) - mr * m_hpb_form1(n, m, neg, a);
            ok &= expect(log, m_hpb_form1(n + 1, m, neg, a) == rhs,
                         point.str() + " recurrence");
          }
        }
  return ok;
}

EgfSeries phi_series(long k, const Rational& a, std::size_t order) {
  std::vector<Rational> outer(order + 1);
  for (std::size_t i = 0; i <= order; ++i)
    outer[i] = pow(Rational(static_cast<long>(i)) + a, -k);
  EgfSeries inner = EgfSeries::one(order) - EgfSeries::exp_linear(Rational(-1), order);
  return compose(outer, inner);
}

bool criterion_egf(std::string& log) {
  constexpr std::size_t kN = 8;
  bool ok = true;
  const std::vector<Rational> as = {Rational(1), Rational(Integer(1), Integer(2))};
  for (unsigned m = 0; m <= 3; ++m)
    for (long k : {-2L, 2L})
      for (const Rational& a : as) {
        std::size_t work = kN + m;
        EgfSeries w = EgfSeries::one(work) - EgfSeries::exp_linear(Rational(-1), work);
        EgfSeries inner =
            pow(w, m) * phi_series(k, Rational(static_cast<long>(m)) + a, work);
        Rational prefactor =
            pow((Rational(static_cast<long>(m)) + a) / a, k) / Rational(factorial(m));
        EgfSeries series =
            prefactor *
            (EgfSeries::exp_linear(Rational(-static_cast<long>(m)), kN) * apply_ezd(inner, m));
        for (std::size_t n = 0; n <= kN; ++n) {
          std::ostringstream point;
          point << "rodrigues n=" << n << " m=" << m << " k=" << k << " a=" << a.str();
          ok &= expect(log, series.term(n) == m_hpb_form1(static_cast<unsigned>(n), m, k, a),
                       point.str());
        }
      }
  for (unsigned m = 0; m <= 3; ++m) {
    MStirlingTable table(kN, m);
    for (unsigned k = 0; k <= 5; ++k) {
      EgfSeries series = m_stirling_egf(k, m, kN);
      for (std::size_t n = 0; n <= kN; ++n) {
        std::ostringstream point;
        point << "triangle-egf n=" << n << " k=" << k << " m=" << m;
        ok &= expect(log,
                     series.term(n) == Rational(table.entry(static_cast<unsigned>(n), k)),
                     point.str());
      }
    }
  }
  return ok;
}

bool criterion_polynomials(std::string& log) {
  bool ok = true;
  for (long k = -3; k <= 3; ++k)
    for (const Rational& a : kFourAs) {
      for (unsigned n = 0; n <= 8; ++n)
        for (unsigned m = 0; n + m <= 8; ++m) {
          std::ostringstream point;
          point << "n=" << n << " m=" << m << " k=" << k << " a=" << a.str();
          ok &= expect(log,
                       hpb_poly_convolution(n, m, k, a).poly ==
                           hpb_poly_explicit(n, m, k, a).poly,
                       point.str() + " explicit-form");
        }
      RecurrenceReport recurrence = hpb_poly_recurrence_check(8, k, a);
      std::ostringstream point;
      point << "recurrence k=" << k << " a=" << a.str();
      ok &= expect(log, recurrence.ok(), point.str());
    }
  for (unsigned m = 0; m <= 4; ++m)
    for (unsigned n = 0; n <= 6; ++n)
      for (unsigned l = 0; l <= 6; ++l) {
        auto [lhs, rhs] = lemma_identity(n, l, m);
        std::ostringstream point;
        point << "lemma n=" << n << " l=" << l << " m=" << m;
        ok &= expect(log, lhs == rhs, point.str());
      }
  for (unsigned k = 0; k <= 3; ++k)
    for (const Rational& a : kFourAs)
      for (unsigned n = 0; n <= 8; ++n)
        for (unsigned m = 0; n + m <= 8; ++m) {
          std::ostringstream point;
          point << "negative n=" << n << " m=" << m << " k=" << k << " a=" << a.str();
          ok &= expect(log,
                       hpb_poly_negative(n, m, k, a).poly ==
                           hpb_poly_convolution(n, m, -static_cast<long>(k), a).poly,
                       point.str());
        }
  for (unsigned n = 0; n <= 8; ++n)
    for (unsigned k = 0; k <= 8; ++k) {
      std::ostringstream point;
      point << "corollary n=" << n << " k=" << k;
      ok &= expect(log,
                   corollary_last(n, k) ==
                       hpb_poly_convolution(n, 0, -static_cast<long>(k), Rational(1)).poly,
                   point.str());
    }
  return ok;
}

bool criterion_graphs(std::string& log) {
  bool ok = true;
  for (unsigned n = 0; n <= 5; ++n)
    for (unsigned m = 0; m <= 3; ++m)
      for (unsigned k = 0; k <= n + m; ++k) {
        std::ostringstream point;
        point << "theorem35 n=" << n << " k=" << k << " m=" << m;
        ok &= expect(log, theorem35_check(n, k, m), point.str());
      }
  for (unsigned n = 0; n <= 4; ++n) {
    std::vector<std::pair<unsigned, unsigned>> all_edges;
    for (unsigned u = 0; u < n; ++u)
      for (unsigned v = u + 1; v < n; ++v) all_edges.emplace_back(u, v);
    for (unsigned long mask = 0; mask < (1ul << all_edges.size()); ++mask) {
      SimpleGraph g(n);
      for (std::size_t e = 0; e < all_edges.size(); ++e)
        if ((mask >> e) & 1) g.add_edge(all_edges[e].first, all_edges[e].second);
      Polynomial pb = pbar(g);
      for (unsigned x = 0; x <= 3; ++x) {
        std::ostringstream point;
        point << "bruteforce n=" << n << " mask=" << mask << " x=" << x;
        ok &= expect(log,
                     pb(Rational(static_cast<long>(x))) == Rational(pbar_bruteforce(g, x)),
                     point.str());
      }
    }
  }
  return ok;
}

bool criterion_verify_all(std::string& log) {
  verify::Report report = verify::run_suite("all", 42);
  return expect(log, report.ok(),
                "verify all: " + std::to_string(report.total_failures()) + " failures");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "table-reproduction", 1.0, criterion_tables},
      {2, "four-way-m-stirling-agreement", 5.0, criterion_four_way},
      {3, "three-way-m-hpb-agreement", 10.0, criterion_three_way},
      {4, "bernoulli-specialization", 5.0, criterion_bernoulli},
      {5, "duality", 5.0, criterion_duality},
      {6, "negative-index-consistency", 5.0, criterion_negative},
      {7, "egf-identities", 10.0, criterion_egf},
      {8, "polynomial-identities", 30.0, criterion_polynomials},
      {9, "graph-connection", 30.0, criterion_graphs},
      {10, "verify-all-under-two-minutes", 120.0, criterion_verify_all},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    std::string log;
    auto start = std::chrono::steady_clock::now();
    bool ok = criterion.body(log);
    double seconds = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    bool in_budget = seconds < criterion.budget_seconds;
    if (ok && in_budget) {
      std::printf("PASS %2d %-34s (%.3fs)\n", criterion.number, criterion.name.c_str(),
                  seconds);
    } else {
      ++failures;
      std::printf("FAIL %2d %-34s (%.3fs)%s%s\n", criterion.number, criterion.name.c_str(),
                  seconds, in_budget ? "" : " over time budget",
                  log.empty() ? "" : (" first mismatch: " + log).c_str());
    }
  }
  if (failures > 0) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
