#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "splitcircle/catalog.hpp"
#include "splitcircle/oracle.hpp"

using namespace splitcircle;
using namespace splitcircle::testing;

namespace {

// Same dimensions and a row/column permutation taking one matrix to the other.
bool same_up_to_permutation(const EnrichedMatrix& a, const EnrichedMatrix& b) {
  if (a.cols != b.cols || a.row_count() != b.row_count()) return false;
  Pattern p;
  p.cols = b.cols;
  for (const RowBits& bits : b.rows) p.rows.push_back({bits, {Label::U}, -1});
  return find_subconfiguration(a, p).has_value();
}

bool is_clique(const Graph& g, const std::vector<int>& vs) {
  for (size_t i = 0; i < vs.size(); ++i) {
    for (size_t j = i + 1; j < vs.size(); ++j) {
      if (!g.adjacent(vs[i], vs[j])) return false;
    }
  }
  return true;
}

bool is_stable(const Graph& g, const std::vector<int>& vs) {
  for (size_t i = 0; i < vs.size(); ++i) {
    for (size_t j = i + 1; j < vs.size(); ++j) {
      if (g.adjacent(vs[i], vs[j])) return false;
    }
  }
  return true;
}

// The S0(k) shape: the k cyclic pairs of consecutive columns and an all-ones row.
EnrichedMatrix s0_shape(int k) {
  std::vector<std::string> rows;
  for (int i = 0; i < k; ++i) {
    std::string r(k, '0');
    r[i] = r[(i + 1) % k] = '1';
    rows.push_back(r);
  }
  rows.push_back(std::string(k, '1'));
  return make_matrix(rows);
}

}  // namespace

TEST_SUITE("obstruction-catalog") {
  TEST_CASE("family sizes and parameter checks") {
    FscMember t = make_fsc(FscFamily::OddSunCenter, 3);
    CHECK(t.graph.n() == 7);
    CHECK(make_fsc(FscFamily::OddSunCenter, 7).graph.n() == 15);
    CHECK(make_fsc(FscFamily::EvenSun, 6).graph.n() == 12);
    try {
      make_fsc(FscFamily::EvenSun, 3);
      FAIL("expected InvalidParameter");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::InvalidParameter);
    }
    CHECK_THROWS_AS(make_fsc(FscFamily::F1, 4), Error);
    CHECK_THROWS_AS(make_fsc(FscFamily::OddSunCenter, 1), Error);
  }

  TEST_CASE("every member is split with its canonical partition") {
    for (const FscMember& m : fsc_members_up_to(13)) {
      CAPTURE(to_string(m.family));
      CAPTURE(m.k);
      CHECK(is_clique(m.graph, m.clique));
      CHECK(is_stable(m.graph, m.stable));
      CHECK(static_cast<int>(m.clique.size() + m.stable.size()) == m.graph.n());
      // Clique vertices come first.
      for (size_t i = 0; i < m.clique.size(); ++i) CHECK(m.clique[i] == static_cast<int>(i));
    }
  }

  TEST_CASE("member matrices match their matrix families") {
    CHECK(same_up_to_permutation(member_matrix(make_fsc(FscFamily::F1, 5)),
                                 make_matrix_pattern("F1", 5).instance));
    for (int k : {4, 6, 8}) {
      CHECK(same_up_to_permutation(member_matrix(make_fsc(FscFamily::EvenSun, k)),
                                   make_matrix_pattern("MI", k).instance));
    }
    for (int k : {3, 5, 7}) {
      CHECK(same_up_to_permutation(member_matrix(make_fsc(FscFamily::OddSunCenter, k)),
                                   s0_shape(k)));
    }
    CHECK(same_up_to_permutation(make_matrix_pattern("S0", 4).instance, s0_shape(4)));
    CHECK(same_up_to_permutation(member_matrix(make_fsc(FscFamily::TentJoinK1)),
                                 make_matrix_pattern("M0").instance));
  }

  TEST_CASE("member_from_matrix inverts member_matrix") {
    for (const FscMember& m : fsc_members_up_to(11)) {
      FscMember back = member_from_matrix(m.family, m.k, member_matrix(m));
      CHECK(are_isomorphic(back.graph, m.graph));
    }
  }

  TEST_CASE("matrix pattern examples") {
    EnrichedMatrix d0 = make_matrix_pattern("D0").instance;
    CHECK(d0 == make_matrix({"10", "01"}, {Label::L, Label::L}));
    EnrichedMatrix d0_dual = make_matrix_pattern("D0", 0, 0, true).instance;
    CHECK(d0_dual.labels == std::vector<Label>{Label::R, Label::R});

    EnrichedMatrix s0 = make_matrix_pattern("S0", 4).instance;
    CHECK(s0.row_count() == 5);
    CHECK(s0.cols == 4);

    EnrichedMatrix m0 = make_matrix_pattern("M0").instance;
    CHECK(m0.row_count() == 3);
    CHECK(m0.cols == 4);
    CHECK(m0.rows[0] == make_matrix({"1011"}).rows[0]);

    CHECK_THROWS_AS(make_matrix_pattern("NoSuchFamily"), Error);
  }

  TEST_CASE("auxiliary graphs are the expected wheels") {
    CHECK(are_isomorphic(aux_graph(AuxTarget::W5), wheel_graph(5)));
    CHECK(are_isomorphic(aux_graph(AuxTarget::W7), wheel_graph(7)));
    CHECK(aux_graph(AuxTarget::C6Bar) == complement(cycle_graph(6)));
    CHECK(aux_graph(AuxTarget::BW3).n() == 7);
  }

  TEST_CASE("named scripts from the obstruction proofs") {
    ReductionScript s3 = reduction_script(make_fsc(FscFamily::OddSunCenter, 3));
    CHECK(s3.sequence == std::vector<int>{6});
    CHECK(s3.target == AuxTarget::BW3);

    ReductionScript s6 = reduction_script(make_fsc(FscFamily::EvenSun, 6));
    CHECK(s6.target == AuxTarget::C6Bar);
    std::vector<int> petals(s6.sequence.begin(), s6.sequence.begin() + 6);
    CHECK(petals == std::vector<int>{6, 7, 8, 9, 10, 11});

    ReductionScript s9 = reduction_script(make_fsc(FscFamily::OddSunCenter, 9));
    CHECK(s9.target == AuxTarget::C6Bar);
    CHECK(s9.sequence.front() == 18);
  }

  TEST_CASE("every script up to k = 10 reaches its target") {
    for (FscFamily f : {FscFamily::OddSunCenter, FscFamily::EvenSun}) {
      for (int k = 3; k <= 10; ++k) {
        if (!fsc_valid_parameter(f, k)) continue;
        FscMember m = make_fsc(f, k);
        ReductionScript s = reduction_script(m);
        CAPTURE(to_string(f));
        CAPTURE(k);
        CHECK(find_induced(apply_script(m.graph, s.sequence), aux_graph(s.target)).has_value());
      }
    }
  }

  TEST_CASE("members up to 9 vertices are non-circle and vertex-minimal") {
    for (const FscMember& m : fsc_members_up_to(9)) {
      CAPTURE(to_string(m.family));
      CAPTURE(m.k);
      CHECK_FALSE(oracle_is_circle(m.graph));
      for (int v = 0; v < m.graph.n(); ++v) {
        std::vector<int> keep;
        for (int u = 0; u < m.graph.n(); ++u) {
          if (u != v) keep.push_back(u);
        }
        CHECK(oracle_is_circle(induced_subgraph(m.graph, keep)));
      }
    }
  }

  TEST_CASE("members are pairwise non-isomorphic") {
    std::set<std::string> forms;
    auto all = fsc_members_up_to(11);
    for (const FscMember& m : all) forms.insert(canonical_form(m.graph));
    CHECK(forms.size() == all.size());
  }

  TEST_CASE("members are ordered by vertex count") {
    auto all = fsc_members_up_to(12);
    for (size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1].graph.n() <= all[i].graph.n());
  }
}
