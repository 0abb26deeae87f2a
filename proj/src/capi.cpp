#include "polybern.h"

#include <cstring>
#include <memory>
#include <string>
#include <vector>

#include "polybern/chromatic.hpp"
#include "polybern/error.hpp"
#include "polybern/hpb.hpp"
#include "polybern/hpbpoly.hpp"
#include "polybern/mstirling.hpp"
#include "polybern/polynomial.hpp"
#include "polybern/rational.hpp"
#include "polybern/stirling.hpp"
#include "polybern/verify.hpp"

using polybern::Integer;
using polybern::Polynomial;
using polybern::Rational;

// A table handle holds pre-rendered cells plus the defined-region shape,
// so consumers never re-derive triangle layout.
struct pb_table {
  std::vector<std::vector<std::string>> cells;  // rectangular
  std::vector<int64_t> defined_cols;            // per row: cells [0, defined) hold values
};

struct pb_poly {
  Polynomial poly;
};

struct pb_graph {
  polybern::SimpleGraph graph;
};

namespace {

thread_local std::string last_error;

pb_status status_of(polybern::errc code) {
  using polybern::errc;
  switch (code) {
    case errc::invalid_argument: return PB_ERR_INVALID_ARGUMENT;
    case errc::parse: return PB_ERR_PARSE;
    case errc::domain: return PB_ERR_DOMAIN;
    case errc::order_mismatch: return PB_ERR_ORDER_MISMATCH;
    case errc::order_underflow: return PB_ERR_ORDER_UNDERFLOW;
    case errc::compose_domain: return PB_ERR_COMPOSE_DOMAIN;
    case errc::size_limit: return PB_ERR_SIZE_LIMIT;
    case errc::non_integer: return PB_ERR_NON_INTEGER;
    case errc::internal: return PB_ERR_INTERNAL;
  }
  return PB_ERR_INTERNAL;
}

template <typename Fn>
pb_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const polybern::error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    last_error = e.what();
    return PB_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

pb_status fail(pb_status status, const std::string& message) {
  last_error = message;
  return status;
}

bool check_out(const void* out) { return out != nullptr; }

pb_status require_nonneg(int64_t v, const char* name) {
  if (v < 0)
    return fail(PB_ERR_INVALID_ARGUMENT,
                std::string("parameter ") + name + " must be non-negative");
  return PB_OK;
}

pb_status parse_rational(const char* text, const char* name, Rational& out) {
  if (text == nullptr)
    return fail(PB_ERR_INVALID_ARGUMENT, std::string("parameter ") + name + " is null");
  return guarded([&]() {
    out = Rational::from_string(text);
    return PB_OK;
  });
}

unsigned as_unsigned(int64_t v) { return static_cast<unsigned>(v); }

}  // namespace

extern "C" {

const char* pb_version(void) { return "0.1.0"; }

const char* pb_status_name(pb_status status) {
  switch (status) {
    case PB_OK: return "ok";
    case PB_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case PB_ERR_PARSE: return "parse-error";
    case PB_ERR_DOMAIN: return "parameter-domain-error";
    case PB_ERR_ORDER_MISMATCH: return "order-mismatch";
    case PB_ERR_ORDER_UNDERFLOW: return "order-underflow";
    case PB_ERR_COMPOSE_DOMAIN: return "composition-domain-error";
    case PB_ERR_SIZE_LIMIT: return "size-limit";
    case PB_ERR_NON_INTEGER: return "non-integer";
    case PB_ERR_VERIFY_FAILED: return "verification-failed";
    case PB_ERR_INTERNAL: return "internal-error";
  }
  return "unknown";
}

const char* pb_last_error_message(void) { return last_error.c_str(); }

void pb_string_free(char* s) { delete[] s; }

pb_status pb_stirling_first(int64_t n, int64_t i, char** out) {
  if (!check_out(out)) return fail(PB_ERR_INVALID_ARGUMENT, "out is null");
  if (auto st = require_nonneg(n, "n"); st != PB_OK) return st;
  if (auto st = require_nonneg(i, "i"); st != PB_OK) return st;
  return guarded([&]() {
    *out = dup_string(polybern::stirling_first(as_unsigned(n), as_unsigned(i)).get_str());
    return PB_OK;
  });
}

pb_status pb_stirling_second(int64_t n, int64_t i, char** out) {
  if (!check_out(out)) return fail(PB_ERR_INVALID_ARGUMENT, "out is null");
  if (auto st = require_nonneg(n, "n"); st != PB_OK) return st;
  if (auto st = require_nonneg(i, "i"); st != PB_OK) return st;
  return guarded([&]() {
    *out = dup_string(polybern::stirling_second(as_unsigned(n), as_unsigned(i)).get_str());
    return PB_OK;
  });
}

pb_status pb_weighted_stirling(int64_t n, int64_t i, const char* x, char** out) {
  if (!check_out(out)) return fail(PB_ERR_INVALID_ARGUMENT, "out is null");
  if (auto st = require_nonneg(n, "n"); st != PB_OK) return st;
  if (auto st = require_nonneg(i, "i"); st != PB_OK) return st;
  Rational xr;
  if (auto st = parse_rational(x, "x", xr); st != PB_OK) return st;
  return guarded([&]() {
    *out = dup_string(polybern::weighted_stirling(as_unsigned(n), as_unsigned(i), xr).str());
    return PB_OK;
  });
}

pb_status pb_r_stirling(int64_t n, int64_t i, int64_t r, char** out) {
  if (!check_out(out)) return fail(PB_ERR_INVALID_ARGUMENT, "out is null");
  if (auto st = require_nonneg(n, "n"); st != PB_OK) return st;
  if (auto st = require_nonneg(i, "i"); st != PB_OK) return st;
  if (auto st = require_nonneg(r, "r"); st != PB_OK) return st;
  return guarded([&]() {
    *out = dup_string(
        polybern::r_stirling(as_unsigned(n), as_unsigned(i), as_unsigned(r)).get_str());
    return PB_OK;
  });
}

pb_status pb_lah(int64_t m, int64_t k, char** out) {
  if (!check_out(out)) return fail(PB_ERR_INVALID_ARGUMENT, "out is null");
  if (auto st = require_nonneg(m, "m"); st != PB_OK) return st;
  if (auto st = require_nonneg(k, "k"); st != PB_OK) return st;
  return guarded([&]() {
    *out = dup_string(polybern::lah(as_unsigned(m), as_unsigned(k)).get_str());
    return PB_OK;
  });
}

pb_status pb_m_stirling(int64_t n, int64_t k, int64_t m, char** out) {
  if (!check_out(out)) return fail(PB_ERR_INVALID_ARGUMENT, "out is null");
  if (auto st = require_nonneg(n, "n"); st != PB_OK) return st;
  if (auto st = require_nonneg(k, "k"); st != PB_OK) return st;
  if (auto st = require_nonneg(m, "m"); st != PB_OK) return st;
  return guarded([&]() {
    *out = dup_string(
        polybern::m_stirling_explicit(as_unsigned(n), as_unsigned(k), as_unsigned(m)).get_str());
    return PB_OK;
  });
}

pb_status pb_weighted_m_stirling(int64_t n, int64_t k, const char* x, int64_t m,
                                 char** out) {
  if (!check_out(out)) return fail(PB_ERR_INVALID_ARGUMENT, "out is null");
  if (auto st = require_nonneg(n, "n"); st != PB_OK) return st;
  if (auto st = require_nonneg(k, "k"); st != PB_OK) return st;
  if (auto st = require_nonneg(m, "m"); st != PB_OK) return st;
  Rational xr;
  if (auto st = parse_rational(x, "x", xr); st != PB_OK) return st;
  return guarded([&]() {
    *out = dup_string(
        polybern::weighted_m_stirling(as_unsigned(n), as_unsigned(k), xr, as_unsigned(m)).str());
    return PB_OK;
  });
}

pb_status pb_hurwitz_pb(int64_t n, int64_t k, const char* a, char** out) {
  if (!check_out(out)) return fail(PB_ERR_INVALID_ARGUMENT, "out is null");
  if (auto st = require_nonneg(n, "n"); st != PB_OK) return st;
  Rational ar;
  if (auto st = parse_rational(a, "a", ar); st != PB_OK) return st;
  return guarded([&]() {
    *out = dup_string(polybern::hurwitz_pb(as_unsigned(n), k, ar).str());
    return PB_OK;
  });
}

pb_status pb_m_hpb(int64_t n, int64_t m, int64_t k, const char* a,
                   const char* algorithm, char** out) {
  if (!check_out(out)) return fail(PB_ERR_INVALID_ARGUMENT, "out is null");
  if (auto st = require_nonneg(n, "n"); st != PB_OK) return st;
  if (auto st = require_nonneg(m, "m"); st != PB_OK) return st;
  Rational ar;
  if (auto st = parse_rational(a, "a", ar); st != PB_OK) return st;
  std::string route = algorithm == nullptr ? "explicit" : algorithm;
  return guarded([&]() -> pb_status {
    Rational value;
    if (route == "explicit") {
      value = polybern::m_hpb_form1(as_unsigned(n), as_unsigned(m), k, ar);
    } else if (route == "form2") {
      value = polybern::m_hpb_form2(as_unsigned(n), as_unsigned(m), k, ar);
    } else if (route == "matrix") {
      polybern::HpbMatrix matrix(as_unsigned(n) + as_unsigned(m), k, ar);
      value = matrix.entry(as_unsigned(n), as_unsigned(m));
    } else {
      return fail(PB_ERR_INVALID_ARGUMENT,
                  "unknown algorithm \"" + route + "\" (explicit, form2, matrix)");
    }
    *out = dup_string(value.str());
    return PB_OK;
  });
}

pb_status pb_m_hpb_negative(int64_t n, int64_t m, int64_t kpos, const char* a,
                            char** out) {
  if (!check_out(out)) return fail(PB_ERR_INVALID_ARGUMENT, "out is null");
  if (auto st = require_nonneg(n, "n"); st != PB_OK) return st;
  if (auto st = require_nonneg(m, "m"); st != PB_OK) return st;
  if (auto st = require_nonneg(kpos, "k"); st != PB_OK) return st;
  Rational ar;
  if (auto st = parse_rational(a, "a", ar); st != PB_OK) return st;
  return guarded([&]() {
    *out = dup_string(
        polybern::m_hpb_negative(as_unsigned(n), as_unsigned(m), as_unsigned(kpos), ar).str());
    return PB_OK;
  });
}

pb_status pb_bernoulli(int64_t n, char** out) {
  if (!check_out(out)) return fail(PB_ERR_INVALID_ARGUMENT, "out is null");
  if (auto st = require_nonneg(n, "n"); st != PB_OK) return st;
  return guarded([&]() {
    *out = dup_string(polybern::bernoulli(as_unsigned(n)).str());
    return PB_OK;
  });
}

pb_status pb_table_create(const char* kind, int64_t max_n, const char* arg,
                          pb_table** out) {
  if (!check_out(out)) return fail(PB_ERR_INVALID_ARGUMENT, "out is null");
  if (kind == nullptr) return fail(PB_ERR_INVALID_ARGUMENT, "kind is null");
  if (auto st = require_nonneg(max_n, "max_n"); st != PB_OK) return st;
  std::string k = kind;
  return guarded([&]() -> pb_status {
    unsigned rows = as_unsigned(max_n) + 1;
    auto table = std::make_unique<pb_table>();
    auto fill = [&](unsigned cols, auto defined, auto cell) {
      table->cells.assign(rows, std::vector<std::string>(cols));
      table->defined_cols.assign(rows, 0);
      for (unsigned r = 0; r < rows; ++r) {
        int64_t upto = 0;
        for (unsigned cidx = 0; cidx < cols; ++cidx)
          if (defined(r, cidx)) {
            table->cells[r][cidx] = cell(r, cidx);
            upto = cidx + 1;
          }
        table->defined_cols[r] = upto;
      }
    };
    if (k == "first") {
      fill(rows, [](unsigned r, unsigned c) { return c <= r; },
           [](unsigned r, unsigned c) { return polybern::stirling_first(r, c).get_str(); });
    } else if (k == "second") {
      fill(rows, [](unsigned r, unsigned c) { return c <= r; },
           [](unsigned r, unsigned c) { return polybern::stirling_second(r, c).get_str(); });
    } else if (k == "weighted") {
      Rational xr;
      if (auto st = parse_rational(arg, "x", xr); st != PB_OK) return st;
      fill(rows, [](unsigned r, unsigned c) { return c <= r; },
           [&](unsigned r, unsigned c) { return polybern::weighted_stirling(r, c, xr).str(); });
    } else if (k == "r") {
      if (arg == nullptr) return fail(PB_ERR_INVALID_ARGUMENT, "parameter r is null");
      Rational rr = Rational::from_string(arg);
      if (!rr.is_integer() || rr.sign() < 0)
        return fail(PB_ERR_INVALID_ARGUMENT, "parameter r must be a non-negative integer");
      unsigned r_off = static_cast<unsigned>(rr.num().get_ui());
      fill(rows, [](unsigned r, unsigned c) { return c <= r; },
           [&](unsigned r, unsigned c) { return polybern::r_stirling(r, c, r_off).get_str(); });
    } else if (k == "lah") {
      fill(rows, [](unsigned r, unsigned c) { return c <= r; },
           [](unsigned r, unsigned c) { return polybern::lah(r, c).get_str(); });
    } else if (k == "mstirling") {
      if (arg == nullptr) return fail(PB_ERR_INVALID_ARGUMENT, "parameter m is null");
      Rational mr = Rational::from_string(arg);
      if (!mr.is_integer() || mr.sign() < 0)
        return fail(PB_ERR_INVALID_ARGUMENT, "parameter m must be a non-negative integer");
      unsigned m = static_cast<unsigned>(mr.num().get_ui());
      polybern::MStirlingTable mt(as_unsigned(max_n), m);
      fill(mt.cols(), [&](unsigned r, unsigned c) { return mt.in_triangle(r, c); },
           [&](unsigned r, unsigned c) { return mt.entry(r, c).get_str(); });
    } else {
      return fail(PB_ERR_INVALID_ARGUMENT, "unknown table kind \"" + k + "\"");
    }
    *out = table.release();
    return PB_OK;
  });
}

int64_t pb_table_rows(const pb_table* t) {
  return t == nullptr ? 0 : static_cast<int64_t>(t->cells.size());
}

int64_t pb_table_cols(const pb_table* t) {
  if (t == nullptr || t->cells.empty()) return 0;
  return static_cast<int64_t>(t->cells[0].size());
}

int pb_table_defined(const pb_table* t, int64_t row, int64_t col) {
  if (t == nullptr || row < 0 || col < 0) return 0;
  if (row >= pb_table_rows(t) || col >= pb_table_cols(t)) return 0;
  return col < t->defined_cols[static_cast<std::size_t>(row)] ? 1 : 0;
}

pb_status pb_table_entry(const pb_table* t, int64_t row, int64_t col, char** out) {
  if (!check_out(out)) return fail(PB_ERR_INVALID_ARGUMENT, "out is null");
  if (t == nullptr) return fail(PB_ERR_INVALID_ARGUMENT, "table is null");
  if (!pb_table_defined(t, row, col))
    return fail(PB_ERR_INVALID_ARGUMENT, "table cell out of the defined region");
  *out = dup_string(t->cells[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)]);
  return PB_OK;
}

void pb_table_free(pb_table* t) { delete t; }

pb_status pb_hpb_poly(int64_t n, int64_t m, int64_t k, const char* a,
                      const char* route, pb_poly** out) {
  if (!check_out(out)) return fail(PB_ERR_INVALID_ARGUMENT, "out is null");
  if (auto st = require_nonneg(n, "n"); st != PB_OK) return st;
  if (auto st = require_nonneg(m, "m"); st != PB_OK) return st;
  Rational ar;
  if (auto st = parse_rational(a, "a", ar); st != PB_OK) return st;
  std::string r = route == nullptr ? "convolution" : route;
  return guarded([&]() -> pb_status {
    Polynomial poly;
    if (r == "convolution") {
      poly = polybern::hpb_poly_convolution(as_unsigned(n), as_unsigned(m), k, ar).poly;
    } else if (r == "explicit") {
      poly = polybern::hpb_poly_explicit(as_unsigned(n), as_unsigned(m), k, ar).poly;
    } else {
      return fail(PB_ERR_INVALID_ARGUMENT,
                  "unknown route \"" + r + "\" (convolution, explicit)");
    }
    *out = new pb_poly{std::move(poly)};
    return PB_OK;
  });
}

pb_status pb_hpb_poly_negative(int64_t n, int64_t m, int64_t kpos, const char* a,
                               pb_poly** out) {
  if (!check_out(out)) return fail(PB_ERR_INVALID_ARGUMENT, "out is null");
  if (auto st = require_nonneg(n, "n"); st != PB_OK) return st;
  if (auto st = require_nonneg(m, "m"); st != PB_OK) return st;
  if (auto st = require_nonneg(kpos, "k"); st != PB_OK) return st;
  Rational ar;
  if (auto st = parse_rational(a, "a", ar); st != PB_OK) return st;
  return guarded([&]() {
    *out = new pb_poly{
        polybern::hpb_poly_negative(as_unsigned(n), as_unsigned(m), as_unsigned(kpos), ar).poly};
    return PB_OK;
  });
}

pb_status pb_corollary_poly(int64_t n, int64_t kpos, pb_poly** out) {
  if (!check_out(out)) return fail(PB_ERR_INVALID_ARGUMENT, "out is null");
  if (auto st = require_nonneg(n, "n"); st != PB_OK) return st;
  if (auto st = require_nonneg(kpos, "k"); st != PB_OK) return st;
  return guarded([&]() {
    *out = new pb_poly{polybern::corollary_last(as_unsigned(n), as_unsigned(kpos))};
    return PB_OK;
  });
}

int64_t pb_poly_degree(const pb_poly* p) {
  if (p == nullptr) return -1;
  auto d = p->poly.degree();
  return d ? static_cast<int64_t>(*d) : -1;
}

pb_status pb_poly_coeff(const pb_poly* p, int64_t i, char** out) {
  if (!check_out(out)) return fail(PB_ERR_INVALID_ARGUMENT, "out is null");
  if (p == nullptr) return fail(PB_ERR_INVALID_ARGUMENT, "polynomial is null");
  if (auto st = require_nonneg(i, "i"); st != PB_OK) return st;
  *out = dup_string(p->poly.coeff(static_cast<std::size_t>(i)).str());
  return PB_OK;
}

pb_status pb_poly_eval(const pb_poly* p, const char* x, char** out) {
  if (!check_out(out)) return fail(PB_ERR_INVALID_ARGUMENT, "out is null");
  if (p == nullptr) return fail(PB_ERR_INVALID_ARGUMENT, "polynomial is null");
  Rational xr;
  if (auto st = parse_rational(x, "x", xr); st != PB_OK) return st;
  return guarded([&]() {
    *out = dup_string(p->poly(xr).str());
    return PB_OK;
  });
}

pb_status pb_poly_str(const pb_poly* p, char** out) {
  if (!check_out(out)) return fail(PB_ERR_INVALID_ARGUMENT, "out is null");
  if (p == nullptr) return fail(PB_ERR_INVALID_ARGUMENT, "polynomial is null");
  *out = dup_string(p->poly.str());
  return PB_OK;
}

void pb_poly_free(pb_poly* p) { delete p; }

pb_status pb_graph_parse(const char* text, pb_graph** out) {
  if (!check_out(out)) return fail(PB_ERR_INVALID_ARGUMENT, "out is null");
  if (text == nullptr) return fail(PB_ERR_INVALID_ARGUMENT, "text is null");
  return guarded([&]() {
    *out = new pb_graph{polybern::SimpleGraph::parse(text)};
    return PB_OK;
  });
}

int64_t pb_graph_vertices(const pb_graph* g) {
  return g == nullptr ? 0 : g->graph.vertex_count();
}

int64_t pb_graph_edges(const pb_graph* g) {
  return g == nullptr ? 0 : static_cast<int64_t>(g->graph.edges().size());
}

pb_status pb_graph_chromatic(const pb_graph* g, pb_poly** out) {
  if (!check_out(out)) return fail(PB_ERR_INVALID_ARGUMENT, "out is null");
  if (g == nullptr) return fail(PB_ERR_INVALID_ARGUMENT, "graph is null");
  return guarded([&]() {
    *out = new pb_poly{polybern::chromatic_polynomial(g->graph)};
    return PB_OK;
  });
}

pb_status pb_graph_pbar(const pb_graph* g, pb_poly** out) {
  if (!check_out(out)) return fail(PB_ERR_INVALID_ARGUMENT, "out is null");
  if (g == nullptr) return fail(PB_ERR_INVALID_ARGUMENT, "graph is null");
  return guarded([&]() {
    *out = new pb_poly{polybern::pbar(g->graph)};
    return PB_OK;
  });
}

pb_status pb_graph_pbar_bruteforce(const pb_graph* g, int64_t x, char** out) {
  if (!check_out(out)) return fail(PB_ERR_INVALID_ARGUMENT, "out is null");
  if (g == nullptr) return fail(PB_ERR_INVALID_ARGUMENT, "graph is null");
  if (auto st = require_nonneg(x, "x"); st != PB_OK) return st;
  return guarded([&]() {
    *out = dup_string(
        polybern::pbar_bruteforce(g->graph, as_unsigned(x)).get_str());
    return PB_OK;
  });
}

void pb_graph_free(pb_graph* g) { delete g; }

pb_status pb_verify(const char* suite, uint64_t seed, char** json_report) {
  if (!check_out(json_report)) return fail(PB_ERR_INVALID_ARGUMENT, "json_report is null");
  if (suite == nullptr) return fail(PB_ERR_INVALID_ARGUMENT, "suite is null");
  return guarded([&]() -> pb_status {
    polybern::verify::Report report = polybern::verify::run_suite(suite, seed);
    *json_report = dup_string(report.to_json());
    if (!report.ok()) {
      last_error = "verification failed: " + std::to_string(report.total_failures()) +
                   " mismatching points";
      return PB_ERR_VERIFY_FAILED;
    }
    return PB_OK;
  });
}

}  // extern "C"
