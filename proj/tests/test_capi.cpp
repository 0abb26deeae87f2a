#include <cstring>
#include <string>

#include "doctest.h"
#include "json.hpp"

#include "polybern.h"

namespace {

std::string take(char* s) {
  std::string out = s == nullptr ? "" : s;
  pb_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("version and status names") {
  CHECK(pb_version() == std::string("0.1.0"));
  CHECK(pb_status_name(PB_OK) == std::string("ok"));
  CHECK(pb_status_name(PB_ERR_DOMAIN) == std::string("parameter-domain-error"));
}

TEST_CASE("scalar sequence values") {
  char* out = nullptr;
  REQUIRE(pb_stirling_second(4, 2, &out) == PB_OK);
  CHECK(take(out) == "7");
  REQUIRE(pb_stirling_first(3, 2, &out) == PB_OK);
  CHECK(take(out) == "-3");
  REQUIRE(pb_weighted_stirling(2, 1, "1/2", &out) == PB_OK);
  CHECK(take(out) == "2");
  REQUIRE(pb_r_stirling(2, 1, 1, &out) == PB_OK);
  CHECK(take(out) == "3");
  REQUIRE(pb_lah(3, 2, &out) == PB_OK);
  CHECK(take(out) == "6");
  REQUIRE(pb_m_stirling(5, 2, 3, &out) == PB_OK);
  CHECK(take(out) == "378");
  REQUIRE(pb_weighted_m_stirling(2, 3, "0", 2, &out) == PB_OK);
  CHECK(take(out) == "7");
  REQUIRE(pb_hurwitz_pb(2, -1, "1", &out) == PB_OK);
  CHECK(take(out) == "4");
  REQUIRE(pb_bernoulli(4, &out) == PB_OK);
  CHECK(take(out) == "-1/30");
}

TEST_CASE("argument validation surfaces typed errors and messages") {
  char* out = nullptr;
  CHECK(pb_stirling_second(-1, 0, &out) == PB_ERR_INVALID_ARGUMENT);
  CHECK(std::strlen(pb_last_error_message()) > 0);
  CHECK(pb_stirling_second(4, 2, nullptr) == PB_ERR_INVALID_ARGUMENT);
  CHECK(pb_hurwitz_pb(1, 1, "zzz", &out) == PB_ERR_PARSE);
  CHECK(pb_hurwitz_pb(1, 1, "-2", &out) == PB_ERR_DOMAIN);
  CHECK(std::string(pb_last_error_message()).find("a") != std::string::npos);
  CHECK(pb_hurwitz_pb(1, 1, nullptr, &out) == PB_ERR_INVALID_ARGUMENT);
}

TEST_CASE("m-generalized values by route") {
  char* out = nullptr;
  REQUIRE(pb_m_hpb(1, 1, 1, "1", nullptr, &out) == PB_OK);
  CHECK(take(out) == "1/3");
  REQUIRE(pb_m_hpb(1, 1, 1, "1", "form2", &out) == PB_OK);
  CHECK(take(out) == "1/3");
  REQUIRE(pb_m_hpb(1, 1, 1, "1", "matrix", &out) == PB_OK);
  CHECK(take(out) == "1/3");
  CHECK(pb_m_hpb(1, 1, 1, "1", "quantum", &out) == PB_ERR_INVALID_ARGUMENT);

  REQUIRE(pb_m_hpb_negative(1, 0, 1, "1", &out) == PB_OK);
  CHECK(take(out) == "2");
  REQUIRE(pb_m_hpb_negative(0, 3, 2, "1/2", &out) == PB_OK);
  CHECK(take(out) == "1/4");
}

TEST_CASE("tables carry shape information") {
  pb_table* table = nullptr;
  REQUIRE(pb_table_create("mstirling", 7, "1", &table) == PB_OK);
  CHECK(pb_table_rows(table) == 8);
  CHECK(pb_table_cols(table) == 9);
  CHECK(pb_table_defined(table, 0, 1) == 1);
  CHECK(pb_table_defined(table, 0, 2) == 0);  // above the n+m diagonal
  char* out = nullptr;
  REQUIRE(pb_table_entry(table, 7, 3, &out) == PB_OK);
  CHECK(take(out) == "966");
  CHECK(pb_table_entry(table, 0, 2, &out) == PB_ERR_INVALID_ARGUMENT);
  pb_table_free(table);

  CHECK(pb_table_create("nope", 3, nullptr, &table) == PB_ERR_INVALID_ARGUMENT);
  REQUIRE(pb_table_create("second", 4, nullptr, &table) == PB_OK);
  REQUIRE(pb_table_entry(table, 4, 2, &out) == PB_OK);
  CHECK(take(out) == "7");
  pb_table_free(table);
}

TEST_CASE("polynomial handles") {
  pb_poly* poly = nullptr;
  REQUIRE(pb_hpb_poly(1, 0, 1, "1", nullptr, &poly) == PB_OK);
  CHECK(pb_poly_degree(poly) == 1);
  char* out = nullptr;
  REQUIRE(pb_poly_coeff(poly, 0, &out) == PB_OK);
  CHECK(take(out) == "1/2");
  REQUIRE(pb_poly_coeff(poly, 1, &out) == PB_OK);
  CHECK(take(out) == "-1");
  REQUIRE(pb_poly_str(poly, &out) == PB_OK);
  CHECK(take(out) == "1/2 - x");
  REQUIRE(pb_poly_eval(poly, "2", &out) == PB_OK);
  CHECK(take(out) == "-3/2");
  pb_poly_free(poly);

  REQUIRE(pb_corollary_poly(1, 1, &poly) == PB_OK);
  REQUIRE(pb_poly_str(poly, &out) == PB_OK);
  CHECK(take(out) == "2 - x");
  pb_poly_free(poly);

  REQUIRE(pb_hpb_poly_negative(1, 0, 1, "1", &poly) == PB_OK);
  REQUIRE(pb_poly_str(poly, &out) == PB_OK);
  CHECK(take(out) == "2 - x");
  pb_poly_free(poly);
}

TEST_CASE("graph handles") {
  pb_graph* graph = nullptr;
  REQUIRE(pb_graph_parse("n 2\n0 1\n", &graph) == PB_OK);
  CHECK(pb_graph_vertices(graph) == 2);
  CHECK(pb_graph_edges(graph) == 1);

  pb_poly* poly = nullptr;
  char* out = nullptr;
  REQUIRE(pb_graph_chromatic(graph, &poly) == PB_OK);
  REQUIRE(pb_poly_str(poly, &out) == PB_OK);
  CHECK(take(out) == "-x + x^2");
  pb_poly_free(poly);

  REQUIRE(pb_graph_pbar(graph, &poly) == PB_OK);
  REQUIRE(pb_poly_str(poly, &out) == PB_OK);
  CHECK(take(out) == "x + x^2");
  pb_poly_free(poly);

  REQUIRE(pb_graph_pbar_bruteforce(graph, 2, &out) == PB_OK);
  CHECK(take(out) == "6");
  pb_graph_free(graph);

  CHECK(pb_graph_parse("0 1\n", &graph) == PB_ERR_PARSE);
}

TEST_CASE("verification through the C API") {
  char* report = nullptr;
  REQUIRE(pb_verify("tables", 0, &report) == PB_OK);
  auto parsed = nlohmann::json::parse(take(report));
  CHECK(parsed.at("passed").get<bool>());
  CHECK(parsed.at("checks").size() == 3);

  CHECK(pb_verify("bogus", 0, &report) == PB_ERR_INVALID_ARGUMENT);
}
