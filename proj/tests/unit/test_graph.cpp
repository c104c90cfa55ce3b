#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "splitcircle/catalog.hpp"
#include "splitcircle/oracle.hpp"
#include "splitcircle/graph.hpp"

using namespace splitcircle;
using namespace splitcircle::testing;

namespace {

// Brute-force induced containment: some |pattern|-subset of g, in some order,
// reproduces pattern exactly.
bool contains_by_subsets(const Graph& g, const Graph& pattern) {
  bool found = false;
  for_each_subset(g.n(), pattern.n(), [&](const std::vector<int>& idx) {
    if (!found && are_isomorphic(induced_subgraph(g, idx), pattern)) found = true;
  });
  return found;
}

int center_of(const Graph& g) {
  for (int v = 0; v < g.n(); ++v) {
    if (g.degree(v) == g.n() - 1) return v;
  }
  return -1;
}

}  // namespace

TEST_SUITE("graph-core") {
  TEST_CASE("graph rejects loops and bad ids") {
    Graph g(3);
    CHECK_THROWS_AS(g.add_edge(1, 1), Error);
    CHECK_THROWS_AS(g.add_edge(0, 3), Error);
    g.add_edge(0, 2);
    CHECK(g.adjacent(2, 0));
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 2}});
  }

  TEST_CASE("induced subgraph of the tent clique is a triangle") {
    Graph t = tent_graph();
    CHECK(induced_subgraph(t, {0, 1, 2}) == complete_graph(3));
    CHECK(induced_subgraph(t, {}).n() == 0);
  }

  TEST_CASE("induced subgraph rejects duplicates and out-of-range ids") {
    Graph t = tent_graph();
    try {
      induced_subgraph(t, {0, 0});
      FAIL("expected InvalidVertex");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::InvalidVertex);
    }
    CHECK_THROWS_AS(induced_subgraph(t, {7}), Error);
  }

  TEST_CASE("induced subgraph matches a direct edge filter") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
      Graph g = random_graph(rng, 8, 0.5);
      std::vector<int> vs = random_permutation(rng, 8);
      vs.resize(5);
      Graph h = induced_subgraph(g, vs);
      for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) {
          if (i != j) CHECK(h.adjacent(i, j) == g.adjacent(vs[i], vs[j]));
        }
      }
    }
  }

  TEST_CASE("complement") {
    CHECK(complement(complete_graph(4)).edge_count() == 0);
    CHECK(are_isomorphic(complement(cycle_graph(5)), cycle_graph(5)));
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 20; ++trial) {
      Graph g = random_graph(rng, 7, 0.4);
      CHECK(complement(complement(g)) == g);
    }
  }

  TEST_CASE("local complement toggles exactly the neighbourhood") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 30; ++trial) {
      Graph g = random_graph(rng, 7, 0.5);
      int u = trial % 7;
      Graph h = local_complement(g, u);
      for (int a = 0; a < 7; ++a) {
        for (int b = a + 1; b < 7; ++b) {
          bool inside = g.adjacent(u, a) && g.adjacent(u, b);
          CHECK(h.adjacent(a, b) == (inside != g.adjacent(a, b)));
        }
      }
      CHECK(local_complement(h, u) == g);
    }
    CHECK_THROWS_AS(local_complement(complete_graph(3), 3), Error);
  }

  TEST_CASE("the 3-sun with centre becomes BW3 at its centre") {
    FscMember m = make_fsc(FscFamily::OddSunCenter, 3);
    const int c = 6;  // clique 0..2, petals 3..5, then the centre
    CHECK(are_isomorphic(local_complement(m.graph, c), aux_graph(AuxTarget::BW3)));
  }

  TEST_CASE("tent join K1 at its universal vertex is not BW3") {
    FscMember m = make_fsc(FscFamily::TentJoinK1);
    int c = center_of(m.graph);
    REQUIRE(c >= 0);
    CHECK_FALSE(are_isomorphic(local_complement(m.graph, c), aux_graph(AuxTarget::BW3)));
  }

  TEST_CASE("5-sun with centre reaches W5 through the centre and the petals") {
    FscMember m = make_fsc(FscFamily::OddSunCenter, 5);
    Graph h = apply_script(m.graph, {10, 5, 6, 7, 8, 9});
    CHECK(find_induced(h, aux_graph(AuxTarget::W5)).has_value());
  }

  TEST_CASE("pivot expands to three local complements") {
    Graph p3 = path_graph(3);
    Graph by_hand = local_complement(local_complement(local_complement(p3, 0), 1), 0);
    CHECK(pivot(p3, 0, 1) == by_hand);
    // P3 a-b-c pivoted on ab: N(a)={b}, N(b)={a,c}; the result is the path b-a-c.
    CHECK(by_hand.adjacent(0, 2));
    CHECK(by_hand.adjacent(0, 1));
    CHECK_FALSE(by_hand.adjacent(1, 2));

    Graph c4 = cycle_graph(4);
    CHECK(pivot(pivot(c4, 0, 1), 0, 1) == c4);
    try {
      pivot(c4, 0, 2);
      FAIL("expected NotAnEdge");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotAnEdge);
    }
  }

  TEST_CASE("split composition") {
    Graph star(3, {{0, 1}, {0, 2}});
    Graph c = split_composition(star, 0, star, 0);
    CHECK(c.n() == 4);
    CHECK(are_isomorphic(c, cycle_graph(4)));

    // A P3 glued at an endpoint marker hangs a path of length two off the
    // marker's neighbour.
    Graph g = cycle_graph(5);
    Graph host(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}});
    Graph p3 = path_graph(3);
    Graph glued = split_composition(host, 5, p3, 0);
    Graph expected(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {5, 6}});
    CHECK(are_isomorphic(glued, expected));
    CHECK(glued.n() == host.n() + p3.n() - 2);

    try {
      split_composition(g, 0, path_graph(2), 0);
      FAIL("expected FactorTooSmall");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::FactorTooSmall);
    }
  }

  TEST_CASE("find_induced examples") {
    FscMember m = make_fsc(FscFamily::TentJoinK1);
    auto e = find_induced(m.graph, tent_graph());
    REQUIRE(e);
    CHECK(is_induced_embedding(m.graph, tent_graph(), *e));
    CHECK_FALSE(find_induced(complete_graph(3), complete_graph(4)));
  }

  TEST_CASE("find_induced agrees with subset enumeration") {
    std::mt19937_64 rng(14);
    std::uniform_int_distribution<int> size(3, 6);
    for (int trial = 0; trial < 40; ++trial) {
      Graph host = trial % 2 ? random_split_graph(rng, 10, 0.5) : random_graph(rng, 9, 0.5);
      Graph pattern = trial % 4 == 0 ? net_graph() : random_graph(rng, size(rng), 0.5);
      auto e = find_induced(host, pattern);
      CHECK(e.has_value() == contains_by_subsets(host, pattern));
      if (e) CHECK(is_induced_embedding(host, pattern, *e));
    }
  }

  TEST_CASE("are_isomorphic") {
    std::mt19937_64 rng(15);
    Graph c5 = cycle_graph(5);
    CHECK(are_isomorphic(c5, relabel(c5, random_permutation(rng, 5))));
    CHECK_FALSE(are_isomorphic(aux_graph(AuxTarget::W5), aux_graph(AuxTarget::W7)));
    Graph k3k1(4, {{0, 1}, {1, 2}, {0, 2}});
    Graph paw(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
    CHECK_FALSE(are_isomorphic(k3k1, paw));
  }

  TEST_CASE("canonical form is a relabelling invariant") {
    std::mt19937_64 rng(16);
    for (int trial = 0; trial < 30; ++trial) {
      Graph g = random_graph(rng, 7, 0.45);
      Graph h = relabel(g, random_permutation(rng, 7));
      CHECK(canonical_form(g) == canonical_form(h));
    }
    CHECK(canonical_form(path_graph(4)) != canonical_form(cycle_graph(4)));
  }

  TEST_CASE("graph text format round-trips bit for bit") {
    Graph g = parse_graph("# a comment\n4 3\n2 3\n0 1\n# another\n1 2\n");
    CHECK(g.n() == 4);
    CHECK(g.edge_count() == 3);
    std::string text = format_graph(g);
    CHECK(text == "4 3\n0 1\n1 2\n2 3\n");
    CHECK(format_graph(parse_graph(text)) == text);
    CHECK_THROWS_AS(parse_graph("3 2\n0 1\n"), Error);
    CHECK_THROWS_AS(parse_graph("2 1\n0 0\n"), Error);
  }

  TEST_CASE("double local complement is the identity on all graphs up to 5 vertices") {
    for (int n = 1; n <= 5; ++n) {
      for_each_labelled_graph(n, [&](const Graph& g) {
        for (int u = 0; u < n; ++u) CHECK(local_complement(local_complement(g, u), u) == g);
      });
    }
  }
}
