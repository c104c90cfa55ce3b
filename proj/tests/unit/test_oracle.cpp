#include <random>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "splitcircle/catalog.hpp"
#include "splitcircle/oracle.hpp"

using namespace splitcircle;
using namespace splitcircle::testing;

TEST_SUITE("brute-oracle") {
  TEST_CASE("circle oracle examples") {
    CHECK(oracle_is_circle(tent_graph()));
    CHECK(oracle_is_circle(four_tent_graph()));
    CHECK(oracle_is_circle(co_four_tent_graph()));
    CHECK(oracle_is_circle(net_graph()));
    CHECK_FALSE(oracle_is_circle(make_fsc(FscFamily::TentJoinK1).graph));
    CHECK_FALSE(oracle_is_circle(make_fsc(FscFamily::EvenSun, 4).graph));
    for (AuxTarget t : {AuxTarget::W5, AuxTarget::W7, AuxTarget::BW3}) {
      CHECK_FALSE(oracle_is_circle(aux_graph(t)));
    }
  }

  TEST_CASE("circle oracle enforces its cap") {
    OracleConfig cfg;
    cfg.circle_cap = 5;
    try {
      oracle_is_circle(cycle_graph(6), cfg);
      FAIL("expected TooLarge");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::TooLarge);
    }
  }

  TEST_CASE("circle oracle is invariant under relabelling") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 40; ++trial) {
      Graph g = random_graph(rng, 7, 0.5);
      Graph h = relabel(g, random_permutation(rng, 7));
      CHECK(oracle_is_circle(g) == oracle_is_circle(h));
    }
  }

  TEST_CASE("circle verdict is invariant under local complementation") {
    for (int n = 1; n <= 5; ++n) {
      std::set<std::string> seen;
      for_each_labelled_graph(n, [&](const Graph& g) {
        if (!seen.insert(canonical_form(g)).second) return;
        bool base = oracle_is_circle(g);
        for (int u = 0; u < n; ++u) CHECK(oracle_is_circle(local_complement(g, u)) == base);
      });
    }
    std::mt19937_64 rng(62);
    for (int trial = 0; trial < 200; ++trial) {
      Graph g = random_graph(rng, 7, 0.5);
      int u = trial % 7;
      CHECK(oracle_is_circle(local_complement(g, u)) == oracle_is_circle(g));
    }
  }

  TEST_CASE("2-nested oracle examples") {
    CHECK_FALSE(oracle_is_2nested(make_matrix_pattern("D2").instance).two_nested);
    EnrichedMatrix red_l = make_matrix({"10"}, {Label::L}, {Color::Red});
    OracleTwoNested r = oracle_is_2nested(red_l);
    CHECK(r.two_nested);
    REQUIRE(r.certificate);
    CHECK(verify_certificate(red_l, *r.certificate));
  }

  TEST_CASE("nested oracle examples") {
    CHECK_FALSE(oracle_is_nested(make_matrix({"110", "011"})));
    CHECK(oracle_is_nested(make_matrix({"11", "11"})));
    OracleConfig cfg;
    cfg.matrix_cap = 3;
    CHECK_THROWS_AS(oracle_is_nested(make_matrix({"1111"}), cfg), Error);
  }

  TEST_CASE("split graph enumeration counts") {
    CHECK(enumerate_split_graphs(1).size() == 1);
    CHECK(enumerate_split_graphs(2).size() == 2);
    CHECK(enumerate_split_graphs(3).size() == 4);
    auto four = enumerate_split_graphs(4);
    CHECK(four.size() == 9);
    for (const Graph& g : four) {
      CHECK_FALSE(are_isomorphic(g, cycle_graph(4)));
      CHECK(is_split_graph(g));
    }
  }

  TEST_CASE("enumeration matches a filter over all labelled graphs") {
    for (int n = 1; n <= 6; ++n) {
      std::set<std::string> expected;
      for_each_labelled_graph(n, [&](const Graph& g) {
        if (is_split_graph(g)) expected.insert(canonical_form(g));
      });
      std::set<std::string> got;
      for (const Graph& g : enumerate_split_graphs(n)) got.insert(canonical_form(g));
      CHECK(got == expected);
    }
  }

  TEST_CASE("random generators are seeded and in range") {
    std::mt19937_64 a(63), b(63);
    for (int trial = 0; trial < 20; ++trial) {
      Graph g = random_split_graph(a, 9, 0.5);
      CHECK(g == random_split_graph(b, 9, 0.5));
      CHECK(is_split_graph(g));
      EnrichedMatrix m = random_enriched_matrix(a, 4, 5);
      CHECK(m == random_enriched_matrix(b, 4, 5));
      CHECK(m.row_count() <= 4);
      CHECK(m.cols <= 5);
    }
  }
}
