#include <random>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "splitcircle/catalog.hpp"
#include "splitcircle/chord.hpp"
#include "splitcircle/model.hpp"
#include "splitcircle/oracle.hpp"
#include "splitcircle/partition.hpp"

using namespace splitcircle;
using namespace splitcircle::testing;

namespace {

ChordModel word(std::vector<int> w) {
  ChordModel m;
  m.word = std::move(w);
  return m;
}

// Interlacement computed from chord endpoints: u and v cross iff exactly one
// endpoint of v lies strictly between the endpoints of u.
Graph crossings_by_endpoints(const ChordModel& m) {
  const int n = m.vertex_count();
  std::vector<int> first(n, -1), second(n, -1);
  for (int p = 0; p < static_cast<int>(m.word.size()); ++p) {
    int v = m.word[p];
    (first[v] < 0 ? first[v] : second[v]) = p;
  }
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      bool a = first[u] < first[v] && first[v] < second[u];
      bool b = first[u] < second[v] && second[v] < second[u];
      if (a != b) g.add_edge(u, v);
    }
  }
  return g;
}

ChordModel random_word(std::mt19937_64& rng, int n) {
  ChordModel m;
  for (int v = 0; v < n; ++v) {
    m.word.push_back(v);
    m.word.push_back(v);
  }
  std::shuffle(m.word.begin(), m.word.end(), rng);
  return m;
}

ChordModel model_for(const Graph& g) {
  SplitPartition sp = split_partition(g);
  CaseWitness cw = detect_case(g, sp);
  KResult kr = partition_K(g, sp, cw);
  SResult sr = partition_S(g, sp, *kr.partition);
  CaseMatrices cm = build_case_matrices(g, sp, *kr.partition, *sr.partition);
  CaseVerdict v = case_verdict(cm, false);
  return build_model(g, sp, *kr.partition, cm, v).model;
}

}  // namespace

TEST_SUITE("chord-model") {
  TEST_CASE("interlacement examples") {
    CHECK(interlacement(word({0, 1, 0, 1})) == complete_graph(2));
    CHECK(interlacement(word({0, 0, 1, 1})).edge_count() == 0);
    CHECK(interlacement(word({0, 1, 2, 0, 1, 2})) == complete_graph(3));
  }

  TEST_CASE("malformed words are rejected") {
    try {
      interlacement(word({0, 1, 0}));
      FAIL("expected NotDoubleOccurrence");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotDoubleOccurrence);
    }
    CHECK_THROWS_AS(validate_model(word({0, 0, 0, 1})), Error);
    CHECK_THROWS_AS(validate_model(word({0, 2, 0, 2})), Error);
  }

  TEST_CASE("interlacement matches an endpoint computation") {
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 100; ++trial) {
      ChordModel m = random_word(rng, 7);
      CHECK(interlacement(m) == crossings_by_endpoints(m));
    }
  }

  TEST_CASE("interlacement is invariant under rotation and reflection") {
    std::mt19937_64 rng(52);
    for (int trial = 0; trial < 50; ++trial) {
      ChordModel m = random_word(rng, 6);
      Graph g = interlacement(m);
      for (int s = 0; s < 12; ++s) CHECK(interlacement(rotate_model(m, s)) == g);
      CHECK(interlacement(reflect_model(m)) == g);
    }
  }

  TEST_CASE("model text format round-trips") {
    ChordModel m = word({2, 0, 1, 2, 0, 1});
    std::string text = format_model(m);
    CHECK(text == "2 0 1 2 0 1\n");
    CHECK(parse_model(text) == m);
    CHECK_THROWS_AS(parse_model("0 1 x\n"), Error);
  }

  TEST_CASE("oracle model search examples") {
    auto c5 = oracle_model_search(cycle_graph(5));
    REQUIRE(c5);
    CHECK(interlacement(*c5) == cycle_graph(5));
    CHECK_FALSE(oracle_model_search(aux_graph(AuxTarget::W5)));
    auto k4 = oracle_model_search(complete_graph(4));
    REQUIRE(k4);
    CHECK(interlacement(*k4) == complete_graph(4));
    try {
      oracle_model_search(complete_graph(10), 9);
      FAIL("expected TooLarge");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::TooLarge);
    }
  }

  TEST_CASE("canonical search loses no graph on up to 5 vertices") {
    for (int n = 1; n <= 5; ++n) {
      std::set<std::string> seen;
      for_each_labelled_graph(n, [&](const Graph& g) {
        if (!seen.insert(canonical_form(g)).second) return;
        auto fast = oracle_model_search(g);
        auto slow = naive_model_search(g);
        CHECK(fast.has_value() == slow.has_value());
        if (fast) CHECK(interlacement(*fast) == g);
      });
    }
  }

  TEST_CASE("anchor models interlace to their anchors") {
    for (const Graph& g : {tent_graph(), four_tent_graph()}) {
      ChordModel m = model_for(g);
      CHECK(interlacement(m) == g);
      REQUIRE(m.arcs.size() == m.word.size());
    }
  }

  TEST_CASE("tent arcs are contiguous runs named after clique classes") {
    ChordModel m = model_for(tent_graph());
    std::vector<std::string> runs;
    for (size_t p = 0; p < m.arcs.size(); ++p) {
      if (runs.empty() || runs.back() != m.arcs[p]) runs.push_back(m.arcs[p]);
    }
    if (runs.size() > 1 && runs.front() == runs.back()) runs.pop_back();
    std::set<std::string> distinct(runs.begin(), runs.end());
    CHECK(distinct.size() == runs.size());
    // K2, K4 and K6 are empty, so six of the twelve arcs carry endpoints.
    CHECK(distinct == std::set<std::string>{"K1-", "K1+", "K3-", "K3+", "K5-", "K5+"});
  }

  TEST_CASE("a new S12 vertex crosses exactly its neighbours") {
    // Tent plus k2 (sees s13) and a stable vertex seeing k1 and k2.
    Graph g(8);
    for (auto [u, v] : tent_graph().edges()) g.add_edge(u, v);
    for (int k : {0, 1, 2}) g.add_edge(6, k);
    g.add_edge(6, 3);
    g.add_edge(7, 0);
    g.add_edge(7, 6);
    ChordModel m = model_for(g);
    CHECK(interlacement(m) == g);
  }

  TEST_CASE("build_model requires a passing verdict") {
    Graph g = tent_graph();
    SplitPartition sp = split_partition(g);
    KResult kr = partition_K(g, sp, detect_case(g, sp));
    SResult sr = partition_S(g, sp, *kr.partition);
    CaseMatrices cm = build_case_matrices(g, sp, *kr.partition, *sr.partition);
    CaseVerdict failed = case_verdict(cm, false);
    failed.circle_ok = false;
    try {
      build_model(g, sp, *kr.partition, cm, failed);
      FAIL("expected InvalidState");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::InvalidState);
    }
  }

  TEST_CASE("split model synthesis is exact on small split graphs") {
    for (int n = 1; n <= 7; ++n) {
      for (const Graph& g : enumerate_split_graphs(n)) {
        auto m = synthesize_split_model(g, split_partition(g));
        CHECK(m.has_value() == oracle_is_circle(g));
        if (m) CHECK(interlacement(*m) == g);
      }
    }
  }

  TEST_CASE("placement rejects orders whose neighbourhoods are not intervals") {
    // Stable vertex 4 sees clique vertices 0 and 2 of the order 0 1 2 3.
    Graph g(5);
    for (int a = 0; a < 4; ++a) {
      for (int b = a + 1; b < 4; ++b) g.add_edge(a, b);
    }
    g.add_edge(4, 0);
    g.add_edge(4, 2);
    SplitPartition sp = split_partition(g);
    CHECK_FALSE(place_on_order(g, sp, {0, 1, 2, 3}));
    auto ok = place_on_order(g, sp, {0, 2, 1, 3});
    REQUIRE(ok);
    CHECK(interlacement(*ok) == g);
  }

  TEST_CASE("SVG rendering") {
    ChordModel ab = word({0, 1, 0, 1});
    std::string svg = render_svg(ab);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("version=\"1.1\"") != std::string::npos);
    size_t chords = 0;
    for (size_t p = svg.find("class=\"chord\""); p != std::string::npos;
         p = svg.find("class=\"chord\"", p + 1)) {
      ++chords;
    }
    CHECK(chords == 2);
    CHECK(render_svg(ab) == svg);

    ChordModel tent = model_for(tent_graph());
    std::string tent_svg = render_svg(tent);
    for (const char* arc : {"K1-", "K1+", "K3-", "K3+", "K5-", "K5+"}) {
      CHECK(tent_svg.find(arc) != std::string::npos);
    }
  }
}
