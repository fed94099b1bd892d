#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <memory>
#include <string>

#include "fibocube/fibocube.h"

namespace {

std::string take(char* s) {
  std::string out = s == nullptr ? "" : s;
  fc_string_free(s);
  return out;
}

struct Config {
  fc_config* cfg = nullptr;
  Config() { REQUIRE(fc_config_new(&cfg) == FC_OK); }
  ~Config() { fc_config_free(cfg); }
};

}  // namespace

TEST_CASE("version") { CHECK(std::string(fc_version()) == "1.0.0"); }

TEST_CASE("config") {
  Config c;
  CHECK(fc_config_dimension_cap(c.cfg) == 25);
  CHECK(fc_config_workers(c.cfg) >= 1);
  CHECK(fc_config_set_dimension_cap(c.cfg, 12) == FC_OK);
  CHECK(fc_config_dimension_cap(c.cfg) == 12);
  CHECK(fc_config_set_dimension_cap(c.cfg, 31) == FC_ERR_INVALID_ARGUMENT);
  CHECK(fc_config_set_dimension_cap(c.cfg, 1) == FC_ERR_INVALID_ARGUMENT);
  CHECK(fc_config_set_workers(c.cfg, 0) == FC_ERR_INVALID_ARGUMENT);
  CHECK(fc_config_set_workers(c.cfg, 2) == FC_OK);
  CHECK(fc_config_new(nullptr) == FC_ERR_INVALID_ARGUMENT);
}

TEST_CASE("classify") {
  fc_classification* c = nullptr;
  REQUIRE(fc_classify("101", &c) == FC_OK);
  CHECK(fc_classification_is_bad(c) == 1);
  CHECK(fc_classification_index(c) == 4);
  REQUIRE(fc_classification_witness_count(c) == 1);
  char* json = nullptr;
  REQUIRE(fc_classification_witness_json(c, 0, &json) == FC_OK);
  const std::string witness = take(json);
  CHECK(witness.find("\"alpha\":\"1111\"") != std::string::npos);
  CHECK(fc_classification_witness_json(c, 1, &json) == FC_ERR_INVALID_ARGUMENT);
  char* text = nullptr;
  REQUIRE(fc_classification_render(c, FC_FORMAT_TEXT, &text) == FC_OK);
  CHECK(take(text).starts_with("bad B=4\n"));
  CHECK(fc_classification_render(c, FC_FORMAT_DOT, &text) == FC_ERR_INVALID_ARGUMENT);
  fc_classification_free(c);

  REQUIRE(fc_classify("11", &c) == FC_OK);
  CHECK(fc_classification_is_bad(c) == 0);
  CHECK(fc_classification_index(c) == 0);
  fc_classification_free(c);

  CHECK(fc_classify("1x1", &c) == FC_ERR_INVALID_ARGUMENT);
  CHECK(std::string(fc_last_error()).find("invalid character") != std::string::npos);
  CHECK(fc_classify("", &c) == FC_ERR_INVALID_ARGUMENT);
  CHECK(fc_classify(nullptr, &c) == FC_ERR_INVALID_ARGUMENT);
}

TEST_CASE("witness verify and lift") {
  fc_classification* c = nullptr;
  REQUIRE(fc_classify("101", &c) == FC_OK);
  char* json = nullptr;
  REQUIRE(fc_classification_witness_json(c, 0, &json) == FC_OK);
  const std::string witness = take(json);
  fc_classification_free(c);

  int ok = 0;
  char* reason = nullptr;
  REQUIRE(fc_witness_verify(witness.c_str(), &ok, &reason) == FC_OK);
  CHECK(ok == 1);
  CHECK(take(reason) == "none");

  std::string tampered = witness;
  tampered.replace(tampered.find("\"beta\":\"1001\""), 13, "\"beta\":\"1011\"");
  REQUIRE(fc_witness_verify(tampered.c_str(), &ok, &reason) == FC_OK);
  CHECK(ok == 0);
  CHECK(take(reason) == "beta-contains-pattern");

  char* lifted = nullptr;
  REQUIRE(fc_witness_lift(witness.c_str(), 5, &lifted) == FC_OK);
  CHECK(take(lifted).find("\"alpha\":\"01111\"") != std::string::npos);
  CHECK(fc_witness_lift(witness.c_str(), 3, &lifted) == FC_ERR_INVALID_ARGUMENT);
  CHECK(fc_witness_verify("{not json", &ok, nullptr) == FC_ERR_INVALID_ARGUMENT);
}

TEST_CASE("brute-force index") {
  Config c;
  int bad = 0;
  int index = 0;
  REQUIRE(fc_index_bruteforce("0011", c.cfg, &bad, &index) == FC_OK);
  CHECK(bad == 1);
  CHECK(index == 7);
  REQUIRE(fc_index_bruteforce("110", c.cfg, &bad, &index) == FC_OK);
  CHECK(bad == 0);
  REQUIRE(fc_config_set_dimension_cap(c.cfg, 6) == FC_OK);
  CHECK(fc_index_bruteforce("0011", c.cfg, &bad, &index) == FC_ERR_CAP_EXCEEDED);
}

TEST_CASE("graphs") {
  Config c;
  fc_graph* g = nullptr;
  REQUIRE(fc_graph_build("101", 4, c.cfg, &g) == FC_OK);
  CHECK(fc_graph_vertex_count(g) == 12);
  int dist = 0;
  REQUIRE(fc_graph_distance(g, "1111", "1001", &dist) == FC_OK);
  CHECK(dist == 4);
  CHECK(fc_graph_distance(g, "1010", "1001", &dist) == FC_ERR_INVALID_ARGUMENT);
  int iso = 1;
  REQUIRE(fc_graph_is_isometric(g, c.cfg, &iso) == FC_OK);
  CHECK(iso == 0);
  char* out = nullptr;
  REQUIRE(fc_graph_render(g, FC_FORMAT_DOT, &out) == FC_OK);
  CHECK(take(out).starts_with("graph \"Q4(101)\" {"));
  REQUIRE(fc_graph_render(g, FC_FORMAT_JSON, &out) == FC_OK);
  CHECK(take(out).find("\"vertex_count\":12") != std::string::npos);
  fc_graph_free(g);

  CHECK(fc_graph_build("11", 26, c.cfg, &g) == FC_ERR_CAP_EXCEEDED);
  REQUIRE(fc_config_set_dimension_cap(c.cfg, 10) == FC_OK);
  CHECK(fc_graph_build("11", 11, c.cfg, &g) == FC_ERR_CAP_EXCEEDED);
}

TEST_CASE("overlap graph, census and verify") {
  char* out = nullptr;
  REQUIRE(fc_overlap_graph_render(10, 3, FC_FORMAT_JSON, &out) == FC_OK);
  CHECK(take(out).find("\"k1\":10") != std::string::npos);
  CHECK(fc_overlap_graph_render(0, 3, FC_FORMAT_DOT, &out) == FC_ERR_INVALID_ARGUMENT);

  Config c;
  REQUIRE(fc_census(4, c.cfg, FC_FORMAT_CSV, &out) == FC_OK);
  CHECK(take(out) ==
        "length,total,good_count,bad_count,good_fraction,index_histogram,p_histogram,oracle_confirmed\n"
        "4,16,8,8,0.500000,5:6;7:2,2:6;3:2,true\n");
  CHECK(fc_census(15, c.cfg, FC_FORMAT_CSV, &out) == FC_ERR_CAP_EXCEEDED);

  int all_pass = 0;
  REQUIRE(fc_verify("all", 4, c.cfg, FC_FORMAT_TEXT, &out, &all_pass) == FC_OK);
  const std::string text = take(out);
  CHECK(all_pass == 1);
  CHECK(text.find("FAIL") == std::string::npos);
  CHECK(fc_verify("bogus", 4, c.cfg, FC_FORMAT_TEXT, &out, &all_pass) == FC_ERR_INVALID_ARGUMENT);
}
