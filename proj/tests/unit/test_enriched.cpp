#include <algorithm>
#include <set>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "splitcircle/catalog.hpp"
#include "splitcircle/enriched.hpp"
#include "splitcircle/oracle.hpp"

using namespace splitcircle;
using namespace splitcircle::testing;

namespace {

// A 0-gem is a pair of rows that meet without either containing the other.
bool has_zero_gem_by_scan(const EnrichedMatrix& a) {
  for (int i = 0; i < a.row_count(); ++i) {
    for (int j = i + 1; j < a.row_count(); ++j) {
      const RowBits& x = a.rows[i];
      const RowBits& y = a.rows[j];
      if ((x & y).any() && (x & ~y).any() && (y & ~x).any()) return true;
    }
  }
  return false;
}

bool consecutive(const RowBits& bits, const ColumnOrdering& order) {
  int first = -1, last = -1, count = 0;
  for (int p = 0; p < static_cast<int>(order.size()); ++p) {
    if (!bits[order[p]]) continue;
    if (first < 0) first = p;
    last = p;
    ++count;
  }
  return count == 0 || last - first + 1 == count;
}

// The three LR-ordering conditions checked directly.
bool lr_ordering_by_definition(const EnrichedMatrix& a, const ColumnOrdering& order) {
  const int m = a.cols;
  for (int r = 0; r < a.row_count(); ++r) {
    const RowBits& bits = a.rows[r];
    if (a.labels[r] == Label::LR) {
      RowBits comp = bits;
      for (int c = 0; c < m; ++c) comp.flip(c);
      for (int c = m; c < kMaxVertices; ++c) comp.reset(c);
      if (!consecutive(comp, order)) return false;
      continue;
    }
    if (!consecutive(bits, order)) return false;
    if (bits.none()) continue;
    if (a.labels[r] == Label::L && !bits[order.front()]) return false;
    if (a.labels[r] == Label::R && !bits[order.back()]) return false;
  }
  return true;
}

std::vector<ColumnOrdering> all_permutations(int m) {
  ColumnOrdering p(m);
  for (int i = 0; i < m; ++i) p[i] = i;
  std::vector<ColumnOrdering> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::multiset<std::string> tag_families(const std::vector<ForbiddenHit>& hits) {
  std::multiset<std::string> out;
  for (const ForbiddenHit& h : hits) out.insert(h.tag);
  return out;
}

EnrichedMatrix permute(const EnrichedMatrix& a, std::mt19937_64& rng) {
  std::vector<int> rows = random_permutation(rng, a.row_count());
  std::vector<int> cols = random_permutation(rng, a.cols);
  return submatrix(a, rows, cols);
}

}  // namespace

TEST_SUITE("enriched-matrix") {
  TEST_CASE("enriched matrix text format round-trips") {
    std::string text = "3 4\nL red 1100\nR - 0011\nLR blue 0000\n";
    EnrichedMatrix a = parse_matrix(text);
    CHECK(a.row_count() == 3);
    CHECK(a.labels[2] == Label::LR);
    CHECK(a.colors[0] == Color::Red);
    CHECK(format_matrix(a) == text);
    CHECK_THROWS_AS(parse_matrix("1 2\nQ - 10\n"), Error);
    CHECK_THROWS_AS(parse_matrix("1 2\nU - 101\n"), Error);
  }

  TEST_CASE("dual mirrors columns and swaps L and R") {
    EnrichedMatrix a = make_matrix({"110", "001"}, {Label::L, Label::R});
    EnrichedMatrix d = dual(a);
    CHECK(d == make_matrix({"011", "100"}, {Label::R, Label::L}));
    CHECK(dual(d) == a);
  }

  TEST_CASE("nested examples") {
    EnrichedMatrix gem = make_matrix({"110", "011"});
    NestedResult r = is_nested(gem);
    CHECK_FALSE(r.nested);
    REQUIRE(r.gem);
    CHECK(is_zero_gem(gem, *r.gem));
    CHECK(is_nested(make_matrix({"10", "01"})).nested);
    CHECK(is_nested(make_matrix({"11", "11"})).nested);
  }

  TEST_CASE("is_nested matches a pairwise scan and the permutation oracle") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 300; ++trial) {
      EnrichedMatrix a = random_enriched_matrix(rng, 5, 5);
      NestedResult r = is_nested(a);
      CHECK(r.nested == !has_zero_gem_by_scan(a));
      CHECK(r.nested == oracle_is_nested(a));
      if (!r.nested) {
        REQUIRE(r.gem);
        CHECK(is_zero_gem(a, *r.gem));
      }
    }
  }

  TEST_CASE("star_tagged adds the tag columns and distinguished rows") {
    EnrichedMatrix empty_lr = make_matrix({"000"}, {Label::LR});
    TaggedMatrix t = star_tagged(empty_lr);
    CHECK(t.matrix.cols == 5);
    CHECK(t.tag_left == 3);
    CHECK(t.tag_right == 4);
    REQUIRE(t.matrix.row_count() == 3);
    for (int c = 0; c < 5; ++c) CHECK(t.matrix.at(0, c));

    TaggedMatrix u = star_tagged(make_matrix({"10"}));
    CHECK(u.matrix.row_count() == 3);
    CHECK(u.matrix.cols == 4);
    CHECK_FALSE(u.matrix.at(0, 2));
    CHECK_FALSE(u.matrix.at(0, 3));

    EnrichedMatrix d3 = make_matrix_pattern("D3").instance;
    TaggedMatrix s = star_tagged(d3);
    for (int r = 0; r < d3.row_count(); ++r) {
      Label l = d3.labels[r];
      CHECK(s.matrix.at(r, s.tag_left) == (l == Label::L || l == Label::LR));
      CHECK(s.matrix.at(r, s.tag_right) == (l == Label::R || l == Label::LR));
    }
  }

  TEST_CASE("LR-ordering examples") {
    auto single_l = lr_orderings(make_matrix({"01"}, {Label::L}));
    REQUIRE(single_l.size() == 1);
    CHECK(single_l[0] == ColumnOrdering{1, 0});
    CHECK(lr_orderings(make_matrix_pattern("MI", 3).instance).empty());
  }

  TEST_CASE("LR-orderings equal a filter over all permutations") {
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 200; ++trial) {
      EnrichedMatrix a = random_enriched_matrix(rng, 4, 4);
      std::vector<ColumnOrdering> expected;
      for (const ColumnOrdering& p : all_permutations(a.cols)) {
        if (lr_ordering_by_definition(a, p)) expected.push_back(p);
      }
      std::vector<ColumnOrdering> got;
      for_each_lr_ordering(
          a, [&](const ColumnOrdering& o) {
            got.push_back(o);
            return true;
          },
          false);
      std::sort(got.begin(), got.end());
      CHECK(got == expected);
      for (const ColumnOrdering& p : expected) CHECK(is_lr_ordering(a, p));
    }
  }

  TEST_CASE("without LR rows every LR-ordering is suitable") {
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 100; ++trial) {
      EnrichedMatrix a = random_enriched_matrix(rng, 4, 4);
      for (Label& l : a.labels) {
        if (l == Label::LR) l = Label::U;
      }
      for (int r = 0; r < a.row_count(); ++r) {
        if (a.labels[r] == Label::U) a.colors[r] = Color::None;
      }
      CHECK(suitable_orderings(a) == lr_orderings(a));
    }
  }

  TEST_CASE("forbidden detection examples") {
    EnrichedMatrix d0 = make_matrix_pattern("D0").instance;
    auto hits = detect_forbidden(d0);
    REQUIRE_FALSE(hits.empty());
    CHECK(tag_families(hits).count("D0") == 1);
    CHECK(detect_forbidden(make_matrix({"000", "000"})).empty());
    CHECK(find_subconfiguration(make_matrix_pattern("S2", 4).instance,
                                make_matrix_pattern("S2", 4).pattern));
  }

  TEST_CASE("forbidden detection is invariant under row and column permutations") {
    std::mt19937_64 rng(34);
    for (const MatrixPattern& mp : theorem_matrices(5)) {
      if (mp.instance.cols > 7) continue;
      auto before = tag_families(detect_forbidden(mp.instance));
      auto after = tag_families(detect_forbidden(permute(mp.instance, rng)));
      CHECK(before == after);
    }
  }

  TEST_CASE("admissibility") {
    CHECK_FALSE(is_admissible(make_matrix_pattern("D1").instance));
    CHECK(is_admissible(make_matrix({"1"})));
  }

  TEST_CASE("2-nested examples") {
    CHECK_FALSE(is_2nested(make_matrix_pattern("D0").instance).two_nested);
    CHECK_FALSE(is_2nested(make_matrix_pattern("D2").instance).two_nested);
    TwoNestedResult one = is_2nested(make_matrix({"11"}));
    REQUIRE(one.two_nested);
    REQUIRE(one.certificate);
    CHECK(one.certificate->blocks.size() == 1);
    CHECK(verify_certificate(make_matrix({"11"}), *one.certificate));
  }

  TEST_CASE("tampered certificates are rejected") {
    // A full LR row has two blocks that must carry different colours.
    EnrichedMatrix lr = make_matrix({"11", "10"}, {Label::LR, Label::L}, {Color::None, Color::Red});
    TwoNestedResult r = is_2nested(lr);
    REQUIRE(r.two_nested);
    TwoNestedCertificate c = *r.certificate;
    CHECK(verify_certificate(lr, c));
    for (Block& b : c.blocks) {
      if (b.row == 0) b.color = Color::Red;
    }
    CHECK_FALSE(verify_certificate(lr, c));

    // Two overlapping U rows must be coloured differently.
    EnrichedMatrix gem = make_matrix({"110", "011"});
    TwoNestedResult g = is_2nested(gem);
    REQUIRE(g.two_nested);
    TwoNestedCertificate same = *g.certificate;
    for (Block& b : same.blocks) b.color = Color::Blue;
    std::string why;
    CHECK_FALSE(verify_certificate(gem, same, &why));
    CHECK_FALSE(why.empty());
  }

  TEST_CASE("is_2nested agrees with the oracle on small matrices") {
    std::mt19937_64 rng(35);
    for (int trial = 0; trial < 400; ++trial) {
      EnrichedMatrix a = random_enriched_matrix(rng, 3, 4);
      TwoNestedResult r = is_2nested(a);
      CHECK(r.two_nested == oracle_is_2nested(a).two_nested);
      if (r.two_nested) {
        REQUIRE(r.certificate);
        CHECK(verify_certificate(a, *r.certificate));
      }
    }
  }

  TEST_CASE("is_2nested agrees with the oracle on every catalog matrix within the cap") {
    for (const MatrixPattern& mp : theorem_matrices(6)) {
      if (mp.instance.cols > 7) continue;
      CAPTURE(mp.tag);
      CHECK(is_2nested(mp.instance).two_nested == oracle_is_2nested(mp.instance).two_nested);
    }
  }

  TEST_CASE("2-nested matrices contain none of the listed subconfigurations") {
    std::mt19937_64 rng(36);
    for (int trial = 0; trial < 300; ++trial) {
      EnrichedMatrix a = random_enriched_matrix(rng, 4, 5);
      if (!oracle_is_2nested(a).two_nested) continue;
      CHECK(is_admissible(a));
    }
  }
}
