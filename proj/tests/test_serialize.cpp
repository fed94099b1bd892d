#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fibocube/serialize.hpp"

using namespace fibocube;
using namespace fibocube::serialize;

namespace {
Pattern P(const char* s) { return Pattern::parse(s); }
}  // namespace

TEST_CASE("witness JSON keeps field order") {
  const auto c = structural::classify(P("101"));
  REQUIRE(c.witnesses.size() == 1);
  CHECK(to_json(c.witnesses[0]).dump() ==
        R"({"pattern":"101","dimension":4,"p":2,"flips":[2,3],"offsets":{"2":1,"3":2},)"
        R"("shift":1,"alpha":"1111","beta":"1001"})");
}

TEST_CASE("witness JSON round trip") {
  for (int n = 3; n <= 6; ++n) {
    for (const auto& f : all_patterns(n)) {
      for (const auto& w : structural::classify(f).witnesses) {
        CHECK(witness_from_json(Json::parse(to_json(w).dump())) == w);
      }
    }
  }
}

TEST_CASE("malformed witness JSON") {
  CHECK_THROWS_AS(witness_from_json(Json::parse(R"({"pattern":"101"})")), Error);
  CHECK_THROWS_AS(witness_from_json(Json::parse(
                      R"({"pattern":"1x1","dimension":4,"p":2,"flips":[2,3],"offsets":{},"shift":1,"alpha":"1111","beta":"1001"})")),
                  Error);
  CHECK_THROWS_AS(witness_from_json(Json::parse(
                      R"({"pattern":"101","dimension":4,"p":2,"flips":[2,3],"offsets":{"a":1},"shift":1,"alpha":"1111","beta":"1001"})")),
                  Error);
}

TEST_CASE("classification output") {
  const auto good = structural::classify(P("11"));
  CHECK(to_text(good) == "good\n");
  CHECK(to_json(good, P("11")).dump() == R"({"pattern":"11","verdict":"good","index":null,"witnesses":[]})");
  const auto bad = structural::classify(P("101"));
  CHECK(to_text(bad).starts_with("bad B=4\n{\"pattern\":\"101\""));
  CHECK(to_json(bad, P("101"))["index"] == 4);
}

TEST_CASE("report round trip and text") {
  harness::TheoremReport ok{"structural-equals-oracle", "|f| in [1, 3]", true, 14, std::nullopt};
  harness::TheoremReport bad{"index-below-twice-length", "|f| in [1, 4]", false, 30,
                             harness::Counterexample{"0011", 9, "made up"}};
  CHECK(report_from_json(to_json(ok)) == ok);
  CHECK(report_from_json(to_json(bad)) == bad);
  CHECK(to_text({ok, bad}) ==
        "PASS structural-equals-oracle  [|f| in [1, 3]]  checked=14\n"
        "FAIL index-below-twice-length  [|f| in [1, 4]]  checked=30  counterexample: f=0011 d=9 (made up)\n");
}

TEST_CASE("census output") {
  const auto row = harness::census(4);
  CHECK(census_from_json(to_json(row)) == row);
  CHECK(census_csv_header() ==
        "length,total,good_count,bad_count,good_fraction,index_histogram,p_histogram,oracle_confirmed\n");
  CHECK(to_csv(row) == "4,16,8,8,0.500000,5:6;7:2,2:6;3:2,true\n");
  CHECK(to_text(row).starts_with("length 4: 8 good / 16 (0.500000), 8 bad [oracle-confirmed]\n"));
}

TEST_CASE("graph export") {
  const auto G = oracle::build_graph(P("11"), 3);
  CHECK(graph_dot(G) ==
        "graph \"Q3(11)\" {\n"
        "  \"000\";\n  \"001\";\n  \"010\";\n  \"100\";\n  \"101\";\n"
        "  \"000\" -- \"001\";\n  \"000\" -- \"010\";\n  \"000\" -- \"100\";\n"
        "  \"001\" -- \"101\";\n  \"100\" -- \"101\";\n"
        "}\n");
  const Json j = graph_json(G);
  CHECK(j["vertex_count"] == 5);
  CHECK(j["adjacency"]["000"] == Json::array({"001", "010", "100"}));
}

TEST_CASE("overlap graph JSON") {
  const Json j = overlap_graph_json(periodicity::build_overlap_graph(2, 4));
  CHECK(j["g"] == 2);
  CHECK(j["edges"].size() == 6);
  CHECK(j["edges"][1]["equation"] == Json::array({2, 1}));
}
