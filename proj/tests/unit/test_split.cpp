#include "doctest.h"
#include "helpers.hpp"
#include "splitcircle/catalog.hpp"
#include "splitcircle/oracle.hpp"
#include "splitcircle/partition.hpp"
#include "splitcircle/split.hpp"

using namespace splitcircle;
using namespace splitcircle::testing;

namespace {

VertexSet set_of(std::initializer_list<int> vs) {
  VertexSet s;
  for (int v : vs) s.set(v);
  return s;
}

Graph extend(const Graph& g, int extra) {
  Graph h(g.n() + extra);
  for (auto [u, v] : g.edges()) h.add_edge(u, v);
  return h;
}

// The co-4-tent k1,k3,k5,s1,s13,s35,s5 plus a clique vertex adjacent to
// s1,s13,s35 (class K2) and one adjacent to s13,s35,s5 (class K4).
Graph co4tent_with_k2_k4() {
  Graph g = extend(co_four_tent_graph(), 2);
  for (int k : {0, 1, 2}) {
    g.add_edge(k, 7);
    g.add_edge(k, 8);
  }
  g.add_edge(7, 8);
  for (int s : {3, 4, 5}) g.add_edge(7, s);
  for (int s : {4, 5, 6}) g.add_edge(8, s);
  return g;
}

}  // namespace

TEST_SUITE("split-structure") {
  TEST_CASE("split partition examples") {
    SplitPartition sp = split_partition(tent_graph());
    CHECK(sp.K == set_of({0, 1, 2}));
    CHECK(sp.S == set_of({3, 4, 5}));

    SplitPartition k5 = split_partition(complete_graph(5));
    CHECK(k5.K == full_set(5));
    CHECK(k5.S.none());

    try {
      split_partition(cycle_graph(4));
      FAIL("expected NotSplit");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotSplit);
    }
  }

  TEST_CASE("split partition agrees with exhaustive bipartitions up to 7 vertices") {
    for (int n = 1; n <= 6; ++n) {
      for_each_labelled_graph(n, [&](const Graph& g) {
        auto ex = split_partition_exhaustive(g);
        if (!ex) {
          CHECK_THROWS_AS(split_partition(g), Error);
          return;
        }
        SplitPartition sp = split_partition(g);
        CHECK(is_valid_split_partition(g, sp));
        CHECK(sp.K == ex->K);
      });
    }
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 400; ++trial) {
      Graph g = random_graph(rng, 7, 0.5);
      auto ex = split_partition_exhaustive(g);
      if (!ex) {
        CHECK_THROWS_AS(split_partition(g), Error);
        continue;
      }
      CHECK(split_partition(g).K == ex->K);
    }
  }

  TEST_CASE("detect_case examples") {
    Graph t = tent_graph();
    CaseWitness cw = detect_case(t, split_partition(t));
    CHECK(cw.kind == CaseKind::Tent);
    CHECK(cw.embedding == Embedding{0, 1, 2, 3, 4, 5});

    Graph ft = four_tent_graph();
    CHECK(detect_case(ft, split_partition(ft)).kind == CaseKind::FourTent);
    CHECK_FALSE(find_induced(ft, t));

    Graph pendant(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
    CHECK(detect_case(pendant, split_partition(pendant)).kind == CaseKind::None);
  }

  TEST_CASE("detect_case embeddings are typed induced embeddings") {
    for (int n = 6; n <= 8; ++n) {
      for (const Graph& g : enumerate_split_graphs(n)) {
        SplitPartition sp = split_partition(g);
        CaseWitness cw = detect_case(g, sp);
        // Tent detection agrees with untyped induced search.
        CHECK((cw.kind == CaseKind::Tent) == find_induced(g, tent_graph()).has_value());
        if (cw.kind == CaseKind::None) continue;
        Graph a = anchor_graph(cw.kind);
        REQUIRE(is_induced_embedding(g, a, cw.embedding));
        for (int i = 0; i < a.n(); ++i) {
          bool clique_side = i < anchor_clique_size(cw.kind);
          CHECK((clique_side ? sp.K : sp.S)[cw.embedding[i]]);
        }
      }
    }
  }

  TEST_CASE("net dispatch on the plain net decomposes") {
    Graph net = net_graph();
    SplitPartition sp = split_partition(net);
    CaseWitness cw = detect_case(net, sp);
    REQUIRE(cw.kind == CaseKind::Net);
    NetDispatch nd = dispatch_net(net, sp, cw);
    CHECK_FALSE(nd.found_four_tent);
    REQUIRE(nd.decomposition);
    CHECK(nd.decomposition->factor_one.n() < net.n());
    CHECK(nd.decomposition->factor_two.n() < net.n());
    CHECK(are_isomorphic(nd.decomposition->recompose(), net));
  }

  TEST_CASE("net with K2 and K4 nonempty yields a 4-tent") {
    // Net k1,k3,k5,s1,s3,s5 plus k2 ~ s1,s3 and k4 ~ s3,s5.
    Graph g = extend(net_graph(), 2);
    for (int k : {0, 1, 2}) {
      g.add_edge(k, 6);
      g.add_edge(k, 7);
    }
    g.add_edge(6, 7);
    g.add_edge(6, 3);
    g.add_edge(6, 4);
    g.add_edge(7, 4);
    g.add_edge(7, 5);
    SplitPartition sp = split_partition(g);
    auto net = find_anchor(g, sp, CaseKind::Net);
    REQUIRE(net);
    NetDispatch nd = dispatch_net(g, sp, {CaseKind::Net, *net});
    CHECK(nd.found_four_tent);
    CHECK(is_induced_embedding(g, four_tent_graph(), nd.four_tent));
  }

  TEST_CASE("net dispatch rejects other cases") {
    Graph t = tent_graph();
    SplitPartition sp = split_partition(t);
    try {
      dispatch_net(t, sp, detect_case(t, sp));
      FAIL("expected WrongCase");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::WrongCase);
    }
  }

  TEST_CASE("co-4-tent reduction separates a private stable vertex of K5") {
    Graph g = extend(co_four_tent_graph(), 1);
    g.add_edge(2, 7);  // private neighbour of k5
    SplitPartition sp = split_partition(g);
    CaseWitness cw = detect_case(g, sp);
    REQUIRE(cw.kind == CaseKind::CoFourTent);
    KResult kr = partition_K(g, sp, cw);
    REQUIRE(kr.partition);
    REQUIRE(kr.partition->classes[4].none());
    auto d = reduce_co4tent_prime(g, sp, *kr.partition);
    REQUIRE(d);
    // One factor keeps the rest of the graph and drops vertex 7.
    bool dropped = std::find(d->part_two.begin(), d->part_two.end(), 7) == d->part_two.end();
    CHECK(dropped);
    CHECK(are_isomorphic(d->recompose(), g));
  }

  TEST_CASE("co-4-tent reduction needs an empty K2 or K4") {
    Graph g = co4tent_with_k2_k4();
    SplitPartition sp = split_partition(g);
    CaseWitness cw = detect_case(g, sp);
    REQUIRE(cw.kind == CaseKind::CoFourTent);
    KResult kr = partition_K(g, sp, cw);
    REQUIRE(kr.partition);
    try {
      reduce_co4tent_prime(g, sp, *kr.partition);
      FAIL("expected NotDecomposable");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotDecomposable);
    }
  }

  TEST_CASE("class splits recompose to the source") {
    for (int n = 5; n <= 7; ++n) {
      for (const Graph& g : enumerate_split_graphs(n)) {
        SplitPartition sp = split_partition(g);
        for (int k = 0; k < n; ++k) {
          if (!sp.K[k]) continue;
          VertexSet cls;
          cls.set(k);
          auto d = class_split(g, sp, cls);
          if (!d) continue;
          CHECK(d->factor_one.n() >= 3);
          CHECK(d->factor_two.n() >= 3);
          CHECK(are_isomorphic(d->recompose(), g));
        }
      }
    }
  }
}
