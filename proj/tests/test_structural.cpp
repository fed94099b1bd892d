#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fibocube/oracle.hpp"
#include "fibocube/structural.hpp"
#include "naive_oracle.hpp"

using namespace fibocube;
using namespace fibocube::structural;

namespace {
Word W(const char* s) { return Word::parse(s); }
Pattern P(const char* s) { return Pattern::parse(s); }

CriticalWitness witness_101() {
  const auto ws = two_flip_candidates(P("101"));
  REQUIRE(ws.size() == 1);
  return ws.front();
}
}  // namespace

TEST_CASE("two-flip witness for 101") {
  const auto w = witness_101();
  CHECK(w.dimension == 4);
  CHECK(w.p == 2);
  CHECK(w.shift == 1);
  CHECK(w.alpha == W("1111"));
  CHECK(w.beta == W("1001"));
  CHECK(w.flips == std::vector<int>{2, 3});
  CHECK(w.offsets == std::map<int, int>{{2, 1}, {3, 2}});
  CHECK(verify_witness(w).ok);
}

TEST_CASE("three-flip candidates") {
  CHECK(three_flip_candidates(P("0110")).empty());
  const auto ws = three_flip_candidates(P("0011"));
  REQUIRE_FALSE(ws.empty());
  CHECK(ws.front().dimension == 7);
  CHECK(ws.front().p == 3);
  CHECK(ws.front().shift == 1);
  for (const auto& w : ws) CHECK(verify_witness(w).ok);
}

TEST_CASE("classify small patterns") {
  CHECK_FALSE(classify(P("11")).bad());
  CHECK_FALSE(classify(P("1")).bad());
  CHECK_FALSE(classify(P("110")).bad());
  const auto c = classify(P("101"));
  CHECK(c.bad());
  CHECK(c.index == 4);
  CHECK(classify(P("010")).index == 4);
  CHECK(classify(P("0011")).index == 7);
  CHECK(classify(P("1100")).index == 7);
  for (const char* f : {"0010", "0100", "0110", "1001", "1011", "1101"}) {
    CHECK(classify(P(f)).index == 5);
  }
  for (const char* f : {"0001", "0111", "1000", "1110", "0101", "1010", "0000", "1111"}) {
    CHECK_FALSE(classify(P(f)).bad());
  }
}

TEST_CASE("0011 has only three-flip witnesses at its index") {
  const auto c = classify(P("0011"));
  REQUIRE(c.bad());
  for (const auto& w : c.witnesses) CHECK(w.p == 3);
  CHECK(two_flip_candidates(P("0011")).empty());
}

TEST_CASE("witnesses are sorted and unique") {
  for (int n = 3; n <= 8; ++n) {
    for (const auto& f : all_patterns(n)) {
      const auto c = classify(f);
      for (std::size_t i = 1; i < c.witnesses.size(); ++i) {
        const auto& a = c.witnesses[i - 1];
        const auto& b = c.witnesses[i];
        CHECK(std::tie(a.dimension, a.alpha, a.beta) < std::tie(b.dimension, b.alpha, b.beta));
        CHECK(std::minmax(a.alpha, a.beta) != std::minmax(b.alpha, b.beta));
      }
      for (const auto& w : c.witnesses) {
        CHECK(w.dimension == c.index);
        CHECK(verify_witness(w).ok);
      }
    }
  }
}

TEST_CASE("classification matches the naive oracle up to length 5") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& f : all_patterns(n)) {
      const auto c = classify(f);
      const auto expected = naive::index(f.str(), 2 * n - 1);
      CHECK_MESSAGE(c.bad() == expected.has_value(), f.str());
      if (expected) CHECK_MESSAGE(c.index == *expected, f.str());
    }
  }
}

TEST_CASE("classification matches the library oracle at length 6") {
  for (const auto& f : all_patterns(6)) {
    const auto c = classify(f);
    const auto o = oracle::index_bruteforce(f);
    CHECK_MESSAGE(c.bad() == o.bad, f.str());
    if (o.bad) CHECK_MESSAGE(c.index == o.index, f.str());
  }
}

TEST_CASE("verify_witness rejects tampering") {
  const auto good = witness_101();

  auto w = good;
  w.beta = W("1011");
  CHECK(verify_witness(w).reason == WitnessFailure::BetaContainsPattern);

  w = good;
  w.alpha = W("1101");
  CHECK(verify_witness(w).reason == WitnessFailure::AlphaContainsPattern);

  w = good;
  w.beta = W("111");
  CHECK(verify_witness(w).reason == WitnessFailure::LengthMismatch);

  w = good;
  w.beta = W("0001");
  CHECK(verify_witness(w).reason == WitnessFailure::HammingMismatch);

  w = good;
  w.flips = {1, 2};
  w.offsets = {{1, 1}, {2, 1}};
  CHECK(verify_witness(w).reason == WitnessFailure::FlipsNotDiffering);

  w = good;
  w.offsets[2] = 2;
  CHECK(verify_witness(w).reason == WitnessFailure::MissingCopy);

  CHECK(to_string(WitnessFailure::MissingCopy) == "missing-copy");
  CHECK(to_string(WitnessFailure::None) == "none");
}

TEST_CASE("verify_witness throws on malformed input") {
  auto w = witness_101();
  w.p = 1;
  CHECK_THROWS_AS(verify_witness(w), Error);
  w = witness_101();
  w.p = 3;
  CHECK_THROWS_AS(verify_witness(w), Error);
  w = witness_101();
  w.flips = {3, 2};
  CHECK_THROWS_AS(verify_witness(w), Error);
  w = witness_101();
  w.flips = {2, 5};
  CHECK_THROWS_AS(verify_witness(w), Error);
  w = witness_101();
  w.offsets.erase(3);
  CHECK_THROWS_AS(verify_witness(w), Error);
}

TEST_CASE("lift_witness") {
  const auto w = witness_101();
  const auto w5 = lift_witness(w, 5);
  CHECK(w5.alpha == W("01111"));
  CHECK(w5.beta == W("01001"));
  CHECK(w5.flips == std::vector<int>{3, 4});
  CHECK(w5.offsets == std::map<int, int>{{3, 2}, {4, 3}});
  CHECK(verify_witness(w5).ok);
  const auto w6 = lift_witness(w, 6);
  CHECK(w6.alpha == W("001111"));
  CHECK(verify_witness(w6).ok);
  CHECK(lift_witness(w, 4) == w);
  CHECK_THROWS_AS(lift_witness(w, 3), Error);
}

TEST_CASE("lifted witnesses stay valid") {
  for (int n = 2; n <= 7; ++n) {
    for (const auto& f : all_patterns(n)) {
      const auto c = classify(f);
      for (const auto& w : c.witnesses) {
        for (int d = c.index; d <= c.index + 6; ++d) CHECK(verify_witness(lift_witness(w, d)).ok);
      }
    }
  }
}
