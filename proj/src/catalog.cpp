#include "splitcircle/catalog.hpp"

#include <algorithm>
#include <map>

namespace splitcircle {

const char* to_string(FscFamily family) {
  switch (family) {
    case FscFamily::TentJoinK1: return "TentJoinK1";
    case FscFamily::OddSunCenter: return "OddSunCenter";
    case FscFamily::EvenSun: return "EvenSun";
    case FscFamily::MII: return "MII";
    case FscFamily::MIII: return "MIII";
    case FscFamily::MIII3: return "MIII3";
    case FscFamily::MIV: return "MIV";
    case FscFamily::MV: return "MV";
    case FscFamily::F0: return "F0";
    case FscFamily::F1: return "F1";
    case FscFamily::F2: return "F2";
  }
  return "?";
}

std::vector<FscFamily> all_fsc_families() {
  return {FscFamily::TentJoinK1, FscFamily::OddSunCenter, FscFamily::EvenSun, FscFamily::MII,
          FscFamily::MIII,       FscFamily::MIII3,        FscFamily::MIV,     FscFamily::MV,
          FscFamily::F0,         FscFamily::F1,           FscFamily::F2};
}

FscFamily parse_fsc_family(const std::string& name) {
  for (FscFamily f : all_fsc_families()) {
    if (name == to_string(f)) return f;
  }
  throw Error(ErrorKind::InvalidParameter, "unknown family '" + name + "'");
}

bool fsc_is_parametric(FscFamily family) {
  switch (family) {
    case FscFamily::OddSunCenter:
    case FscFamily::EvenSun:
    case FscFamily::MII:
    case FscFamily::MIII:
    case FscFamily::F1:
    case FscFamily::F2:
      return true;
    default:
      return false;
  }
}

bool fsc_valid_parameter(FscFamily family, int k) {
  switch (family) {
    case FscFamily::OddSunCenter: return k >= 3 && k % 2 == 1;
    case FscFamily::EvenSun:
    case FscFamily::MII:
    case FscFamily::MIII: return k >= 4 && k % 2 == 0;
    case FscFamily::F1:
    case FscFamily::F2: return k >= 5 && k % 2 == 1;
    default: return true;
  }
}

namespace {

RowBits bits_of(std::initializer_list<int> cols) {
  RowBits b;
  for (int c : cols) b.set(c);
  return b;
}

RowBits range_bits(int lo, int hi) {  // inclusive
  RowBits b;
  for (int c = lo; c <= hi; ++c) b.set(c);
  return b;
}

EnrichedMatrix plain_matrix(int cols, const std::vector<RowBits>& rows) {
  EnrichedMatrix a;
  a.cols = cols;
  for (const auto& r : rows) a.add_row(r, Label::U);
  return a;
}

// The Tucker matrix M_I(k): row i has ones in columns i and i+1 (cyclically).
std::vector<RowBits> cycle_rows(int k) {
  std::vector<RowBits> rows;
  for (int i = 0; i < k; ++i) rows.push_back(bits_of({i, (i + 1) % k}));
  return rows;
}

EnrichedMatrix fsc_matrix(FscFamily family, int k) {
  switch (family) {
    case FscFamily::TentJoinK1:
      return plain_matrix(4, {bits_of({0, 2, 3}), bits_of({0, 1, 2}), bits_of({1, 2, 3})});
    case FscFamily::EvenSun:
      return plain_matrix(k, cycle_rows(k));
    case FscFamily::MII: {
      std::vector<RowBits> rows;
      for (int i = 0; i + 1 <= k - 2; ++i) rows.push_back(bits_of({i, i + 1}));
      RowBits a = range_bits(0, k - 3);
      a.set(k - 1);
      rows.push_back(a);
      rows.push_back(range_bits(1, k - 1));
      return plain_matrix(k, rows);
    }
    case FscFamily::MIII:
    case FscFamily::MIII3: {
      std::vector<RowBits> rows;
      for (int i = 0; i + 1 <= k - 1; ++i) rows.push_back(bits_of({i, i + 1}));
      RowBits last = range_bits(1, k - 2);
      last.set(k);
      rows.push_back(last);
      return plain_matrix(k + 1, rows);
    }
    case FscFamily::MIV:
      return plain_matrix(6, {bits_of({0, 1}), bits_of({2, 3}), bits_of({4, 5}),
                              bits_of({1, 3, 5})});
    case FscFamily::MV:
      return plain_matrix(5, {bits_of({0, 1}), bits_of({2, 3}), range_bits(0, 3),
                              bits_of({0, 3, 4})});
    case FscFamily::F0:
      return plain_matrix(5, {range_bits(0, 2), range_bits(1, 3), range_bits(2, 4)});
    case FscFamily::F1: {
      int q = k - 1;
      std::vector<RowBits> rows{range_bits(1, q - 1), range_bits(0, q - 2)};
      for (int t = q - 2; t >= 0; --t) rows.push_back(bits_of({t, t + 1}));
      return plain_matrix(q, rows);
    }
    case FscFamily::F2: {
      std::vector<RowBits> rows{range_bits(1, k - 2)};
      for (int t = 0; t + 1 <= k - 1; ++t) rows.push_back(bits_of({t, t + 1}));
      return plain_matrix(k, rows);
    }
    case FscFamily::OddSunCenter:
      break;
  }
  throw Error(ErrorKind::InvalidParameter, "no matrix form for family");
}

}  // namespace

FscMember member_from_matrix(FscFamily family, int k, const EnrichedMatrix& a) {
  FscMember m;
  m.family = family;
  m.k = k;
  const int c = a.cols;
  const int r = a.row_count();
  m.graph = Graph(c + r);
  for (int i = 0; i < c; ++i) {
    m.clique.push_back(i);
    for (int j = i + 1; j < c; ++j) m.graph.add_edge(i, j);
  }
  for (int s = 0; s < r; ++s) {
    m.stable.push_back(c + s);
    for (int i = 0; i < c; ++i) {
      if (a.rows[s][i]) m.graph.add_edge(c + s, i);
    }
  }
  return m;
}

FscMember make_fsc(FscFamily family, int k) {
  if (!fsc_is_parametric(family)) {
    k = family == FscFamily::MIII3 ? 3 : 0;
  } else if (!fsc_valid_parameter(family, k)) {
    throw Error(ErrorKind::InvalidParameter,
                std::string(to_string(family)) + " does not accept k = " + std::to_string(k));
  }
  if (family == FscFamily::OddSunCenter) {
    // Clique v_1..v_k, petals w_i ~ v_i, v_{i+1}, then the center.
    EnrichedMatrix a = plain_matrix(k, cycle_rows(k));
    a.add_row(range_bits(0, k - 1), Label::U);
    return member_from_matrix(family, k, a);
  }
  return member_from_matrix(family, k, fsc_matrix(family, k));
}

EnrichedMatrix member_matrix(const FscMember& member) {
  EnrichedMatrix a;
  a.cols = static_cast<int>(member.clique.size());
  for (int s : member.stable) {
    RowBits b;
    for (size_t i = 0; i < member.clique.size(); ++i) {
      if (member.graph.adjacent(s, member.clique[i])) b.set(i);
    }
    a.add_row(b, Label::U);
  }
  a.row_ids = member.stable;
  a.col_ids = member.clique;
  return a;
}

std::vector<FscMember> fsc_members_up_to(int max_vertices) {
  std::vector<FscMember> out;
  for (FscFamily f : all_fsc_families()) {
    if (!fsc_is_parametric(f)) {
      FscMember m = make_fsc(f);
      if (m.graph.n() <= max_vertices) out.push_back(m);
      continue;
    }
    for (int k = 3; k <= max_vertices; ++k) {
      if (!fsc_valid_parameter(f, k)) continue;
      FscMember m = make_fsc(f, k);
      if (m.graph.n() <= max_vertices) out.push_back(m);
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const FscMember& x, const FscMember& y) {
    return x.graph.n() < y.graph.n();
  });
  return out;
}

// ---------------------------------------------------------------- auxiliary graphs

const char* to_string(AuxTarget target) {
  switch (target) {
    case AuxTarget::W5: return "W5";
    case AuxTarget::W7: return "W7";
    case AuxTarget::BW3: return "BW3";
    case AuxTarget::C6Bar: return "C6bar";
  }
  return "?";
}

Graph aux_graph(AuxTarget target) {
  switch (target) {
    case AuxTarget::W5: return wheel_graph(5);
    case AuxTarget::W7: return wheel_graph(7);
    case AuxTarget::BW3: {
      // Hub 6 on the 6-cycle v1 w1 v2 w2 v3 w3, adjacent to v1, v2, v3.
      Graph g = cycle_graph(6);
      Graph h(7);
      for (auto [u, v] : g.edges()) h.add_edge(u, v);
      for (int v : {0, 2, 4}) h.add_edge(6, v);
      return h;
    }
    case AuxTarget::C6Bar: return complement(cycle_graph(6));
  }
  throw Error(ErrorKind::InvalidParameter, "unknown target");
}

Graph tent_graph() {
  // k1 k3 k5 s13 s35 s51
  return Graph(6, {{0, 1}, {0, 2}, {1, 2}, {3, 0}, {3, 1}, {4, 1}, {4, 2}, {5, 2}, {5, 0}});
}

Graph four_tent_graph() {
  // k1 k2 k4 k5 s12 s24 s45
  return Graph(7, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {4, 0}, {4, 1}, {5, 1},
                   {5, 2}, {6, 2}, {6, 3}});
}

Graph co_four_tent_graph() {
  // k1 k3 k5 s1 s13 s35 s5
  return Graph(7, {{0, 1}, {0, 2}, {1, 2}, {3, 0}, {4, 0}, {4, 1}, {5, 1}, {5, 2}, {6, 2}});
}

Graph net_graph() {
  // k1 k3 k5 s1 s3 s5
  return Graph(6, {{0, 1}, {0, 2}, {1, 2}, {3, 0}, {4, 1}, {5, 2}});
}

Graph apply_script(const Graph& g, const std::vector<int>& sequence) {
  Graph h = g;
  for (int v : sequence) h = local_complement(h, v);
  return h;
}

ReductionScript reduction_script(const FscMember& member) {
  ReductionScript s;
  const int k = member.k;
  // Vertex numbering: v_i = i-1, w_i = k+i-1, center = 2k.
  auto v = [&](int i) { return ((i - 1) % k + k) % k; };
  auto w = [&](int i) { return k + ((i - 1) % k + k) % k; };
  if (member.family == FscFamily::OddSunCenter) {
    int x = 2 * k;
    if (k == 3) {
      s.sequence = {x};
      s.target = AuxTarget::BW3;
      return s;
    }
    s.sequence.push_back(x);
    for (int i = 1; i <= k; ++i) s.sequence.push_back(w(i));
    std::vector<int> rim;
    for (int i = 1; i <= k; ++i) rim.push_back(v(i));
    while (rim.size() >= 8) {
      s.sequence.push_back(rim[0]);
      s.sequence.push_back(rim[1]);
      s.sequence.push_back(rim.back());
      rim.pop_back();
      rim.erase(rim.begin(), rim.begin() + 2);
    }
    if (rim.size() == 6) {
      s.sequence.push_back(rim[0]);
      s.sequence.push_back(rim[3]);
      s.sequence.push_back(x);
      s.target = AuxTarget::C6Bar;
    } else {
      s.target = rim.size() == 5 ? AuxTarget::W5 : AuxTarget::W7;
    }
    return s;
  }
  if (member.family == FscFamily::EvenSun) {
    if (k == 4) {
      s.sequence = {w(1), w(2), w(3), w(4), v(1), w(4), w(1), w(3), v(3), w(2), v(1)};
      s.target = AuxTarget::C6Bar;
      return s;
    }
    if (k == 6) {
      for (int i = 1; i <= 6; ++i) s.sequence.push_back(w(i));
      s.target = AuxTarget::C6Bar;
      return s;
    }
    if (k == 8 || k == 10) {
      for (int i = 1; i <= k; ++i) s.sequence.push_back(w(i));
      for (int i : {1, 2, 4, 3}) s.sequence.push_back(v(i));
      s.target = k == 8 ? AuxTarget::BW3 : AuxTarget::C6Bar;
      return s;
    }
    throw Error(ErrorKind::NoScript,
                "no reduction script for EvenSun(" + std::to_string(k) + ")");
  }
  throw Error(ErrorKind::NoScript, std::string("no reduction script for ") +
                                       to_string(member.family));
}

// ---------------------------------------------------------------- matrix patterns

namespace {

struct RowSpec {
  std::string label;  // "U", "L", "R", "LR", "L|LR", "R|LR", "*"
  char colour;        // '-', 'g', 'o'
  RowBits bits;
};

std::vector<Label> accepts_of(const std::string& label) {
  if (label == "U") return {Label::U};
  if (label == "L") return {Label::L};
  if (label == "R") return {Label::R};
  if (label == "LR") return {Label::LR};
  if (label == "L|LR") return {Label::L, Label::LR};
  if (label == "R|LR") return {Label::R, Label::LR};
  return {Label::U, Label::L, Label::R, Label::LR};
}

MatrixPattern build(const std::string& tag, const std::string& family, int cols,
                    const std::vector<RowSpec>& rows, bool on_star = false) {
  MatrixPattern mp;
  mp.tag = tag;
  mp.family = family;
  mp.instance.cols = cols;
  mp.pattern.tag = tag;
  mp.pattern.cols = cols;
  mp.pattern.on_star = on_star;
  for (const RowSpec& r : rows) {
    auto acc = accepts_of(r.label);
    Color c = r.colour == 'g' ? Color::Red : r.colour == 'o' ? Color::Blue : Color::None;
    mp.instance.add_row(r.bits, acc.front(), c);
    PatternRow pr;
    pr.bits = r.bits;
    pr.accepts = acc;
    pr.color_var = r.colour == 'g' ? 0 : r.colour == 'o' ? 1 : -1;
    mp.pattern.rows.push_back(pr);
  }
  return mp;
}

RowBits pair_bits(int t) { return bits_of({t, t + 1}); }

RowBits from_string(const std::string& s) {
  RowBits b;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1') b.set(i);
  }
  return b;
}

RowBits all_but(int q, std::initializer_list<int> zeros) {
  RowBits b = range_bits(0, q - 1);
  for (int z : zeros) b.reset(z);
  return b;
}

[[noreturn]] void bad_parameter(const std::string& family, int k, int l) {
  throw Error(ErrorKind::InvalidParameter, "pattern " + family + " does not accept k = " +
                                               std::to_string(k) + ", l = " + std::to_string(l));
}

std::string with_k(const std::string& family, int k) {
  return family + "(" + std::to_string(k) + ")";
}

std::string with_kl(const std::string& family, int k, int l) {
  return family + "(" + std::to_string(k) + "," + std::to_string(l) + ")";
}

MatrixPattern fixed_pattern(const std::string& f) {
  auto S = [](const char* label, char colour, const char* bits) {
    return RowSpec{label, colour, from_string(bits)};
  };
  if (f == "M0") return build(f, f, 4, {S("U", '-', "1011"), S("U", '-', "1110"), S("U", '-', "0111")});
  if (f == "MII4")
    return build(f, f, 4, {S("U", '-', "0111"), S("U", '-', "1100"), S("U", '-', "0110"),
                           S("U", '-', "1101")});
  if (f == "MV")
    return build(f, f, 5, {S("U", '-', "11000"), S("U", '-', "00110"), S("U", '-', "11110"),
                           S("U", '-', "10011")});
  if (f == "D0") return build(f, f, 2, {S("L", '-', "10"), S("L", '-', "01")});
  if (f == "D1") return build(f, f, 1, {S("L", 'g', "1"), S("R", 'g', "1")});
  if (f == "D2") return build(f, f, 2, {S("L", 'g', "10"), S("R", 'o', "10")});
  if (f == "D3")
    return build(f, f, 3, {S("L", 'g', "100"), S("R", 'o', "001"), S("LR", '-', "010")});
  if (f == "D4") return build(f, f, 1, {S("L", 'g', "1"), S("L", 'o', "1"), S("LR", '-', "0")});
  if (f == "D5") return build(f, f, 1, {S("L", 'g', "1"), S("R", 'o', "1"), S("LR", '-', "1")});
  if (f == "D6")
    return build(f, f, 2, {S("L", 'g', "10"), S("R", 'g', "01"), S("LR", '-', "00")});
  if (f == "D7")
    return build(f, f, 3, {S("L", '-', "100"), S("LR", '-', "010"), S("LR", '-', "001")});
  if (f == "D8")
    return build(f, f, 3, {S("L", '-', "110"), S("LR", '-', "101"), S("LR", '-', "011")});
  if (f == "D9")
    return build(f, f, 4, {S("L", '-', "1110"), S("LR", '-', "1100"), S("LR", '-', "1001")});
  if (f == "D10")
    return build(f, f, 4, {S("L", 'g', "1100"), S("R", 'o', "0011"), S("LR", '-', "1011"),
                           S("LR", '-', "1101")});
  if (f == "D11")
    return build(f, f, 3, {S("LR", '-', "100"), S("LR", '-', "010"), S("LR", '-', "001")});
  if (f == "D12")
    return build(f, f, 3, {S("LR", '-', "101"), S("LR", '-', "110"), S("LR", '-', "011")});
  if (f == "D13")
    return build(f, f, 4, {S("LR", '-', "1100"), S("LR", '-', "0110"), S("LR", '-', "0011")});
  if (f == "F0")
    return build(f, f, 5, {S("U", '-', "11100"), S("U", '-', "01110"), S("U", '-', "00111")});
  if (f == "F'0")
    return build(f, f, 4, {S("L|LR", '-', "1100"), S("U", '-', "1110"), S("U", '-', "0111")});
  if (f == "F''0")
    return build(f, f, 3, {S("L", '-', "110"), S("U", '-', "111"), S("R", '-', "011")});
  if (f == "S6(3)")
    return build(f, "S6", 3, {S("LR", '-', "110"), S("R", '-', "011"), S("U", '-', "110")});
  if (f == "S6'(3)")
    return build(f, "S6'", 3, {S("LR", '-', "110"), S("R", '-', "011"), S("U", '-', "111")});
  if (f == "S7(3)")
    return build(f, "S7", 5, {S("LR", '-', "11001"), S("LR", '-', "10011"), S("U", '-', "11100")});
  if (f == "M'4")
    return build(f, f, 5, {S("L", '-', "10000"), S("U", '-', "01100"), S("U", '-', "00011"),
                           S("U", '-', "10101")}, true);
  if (f == "M''4")
    return build(f, f, 4, {S("L", '-', "1000"), S("R", '-', "0100"), S("U", '-', "0011"),
                           S("U", '-', "1101")}, true);
  if (f == "M'5")
    return build(f, f, 4, {S("U", '-', "1100"), S("U", '-', "0011"), S("R", '-', "1001"),
                           S("U", '-', "1111")}, true);
  if (f == "M''5")
    return build(f, f, 4, {S("L", '-', "1000"), S("U", '-', "0110"), S("U", '-', "1011"),
                           S("L", '-', "1110")}, true);
  if (f == "MIV")
    return build(f, "Tucker", 6, {S("*", '-', "110000"), S("*", '-', "001100"),
                                  S("*", '-', "000011"), S("*", '-', "010101")}, true);
  if (f == "MV*")
    return build(f, "Tucker", 5, {S("*", '-', "11000"), S("*", '-', "00110"),
                                  S("*", '-', "11110"), S("*", '-', "10011")}, true);
  throw Error(ErrorKind::InvalidParameter, "unknown pattern family '" + f + "'");
}

MatrixPattern parametric_pattern(const std::string& f, int k, int l) {
  std::vector<RowSpec> rows;
  auto add = [&](const char* label, char colour, RowBits bits) {
    rows.push_back(RowSpec{label, colour, bits});
  };
  auto path = [&](int from, int to) {  // U-rows {t, t+1} for t = from..to
    for (int t = from; t <= to; ++t) add("U", '-', pair_bits(t));
  };
  bool even = k % 2 == 0;
  if (f == "S0") {
    if (k < 4 || k % 2) bad_parameter(f, k, l);
    add("U", '-', range_bits(0, k - 1));
    path(0, k - 2);
    add("U", '-', bits_of({0, k - 1}));
    return build(with_k(f, k), f, k, rows);
  }
  if (f == "F1" || f == "F2") {
    if (k < 5 || k % 2 == 0) bad_parameter(f, k, l);
    EnrichedMatrix a = fsc_matrix(f == "F1" ? FscFamily::F1 : FscFamily::F2, k);
    for (const auto& r : a.rows) add("U", '-', r);
    return build(with_k(f, k), f, a.cols, rows);
  }
  if (f == "F'1") {
    if (k < 5 || k % 2 == 0) bad_parameter(f, k, l);
    int q = k - 2;
    add("U", '-', range_bits(0, q - 1));
    add("L|LR", '-', range_bits(0, q - 2));
    for (int t = q - 2; t >= 0; --t) add("U", '-', pair_bits(t));
    add("L|LR", '-', bits_of({0}));
    return build(with_k(f, k), f, q, rows);
  }
  if (f == "F'2") {
    if (k < 5 || k % 2 == 0) bad_parameter(f, k, l);
    int q = k - 1;
    add("U", '-', range_bits(0, q - 2));
    add("L|LR", '-', bits_of({0}));
    path(0, q - 2);
    return build(with_k(f, k), f, q, rows);
  }
  if (f == "S1") {
    if (k < 3 || (even && k < 4)) bad_parameter(f, k, l);
    int q = even ? k - 2 : k;
    add("L", '-', bits_of({0}));
    path(0, q - 2);
    add("LR", '-', bits_of({q - 1}));
    if (even) add("L", '-', range_bits(0, q - 1));
    return build(with_k(f, k), f, q, rows);
  }
  if (f == "S2" || f == "S3") {
    if (k < 3) bad_parameter(f, k, l);
    int q = k - 1;
    char last = even ? 'o' : 'g';
    add("L", 'o', bits_of({0}));
    path(0, q - 2);
    if (f == "S2") {
      add("L", last, range_bits(0, q - 2));
    } else {
      add("R", last, bits_of({q - 1}));
    }
    return build(with_k(f, k), f, q, rows);
  }
  if (f == "S4") {
    if (k < 4) bad_parameter(f, k, l);
    int q = k - 1;
    char last = even ? 'g' : 'o';
    add("LR", '-', range_bits(0, q - 1));
    add("L", 'o', bits_of({0}));
    path(0, q - 2);
    add("R", last, bits_of({q - 1}));
    return build(with_k(f, k), f, q, rows);
  }
  if (f == "S5") {
    if (k < 4) bad_parameter(f, k, l);
    int q = k - 2;
    char last = even ? 'g' : 'o';
    add("L", 'o', bits_of({0}));
    path(0, q - 2);
    add("LR", '-', range_bits(0, q - 2));
    add("L", last, range_bits(0, q - 1));
    return build(with_k(f, k), f, q, rows);
  }
  if (f == "S6") {
    if (k < 4) bad_parameter(f, k, l);
    int q = k;
    add("LR", '-', range_bits(0, q - 2));
    add("R", 'o', range_bits(1, q - 1));
    path(0, q - 2);
    return build(with_k(f, k), f, q, rows);
  }
  if (f == "S7") {
    if (k < 4 || k % 2) bad_parameter(f, k, l);
    int q = k + 1;
    add("LR", '-', bits_of({0, 1}));
    add("LR", '-', bits_of({0, q - 1}));
    path(1, q - 2);
    return build(with_k(f, k), f, q, rows);
  }
  if (f == "S8") {
    if (k < 4 || k % 2) bad_parameter(f, k, l);
    add("LR", '-', bits_of({0, k - 1}));
    path(0, k - 2);
    return build(with_k(f, k), f, k, rows);
  }
  if (f == "P0" || f == "P1" || f == "P2") {
    char last = even ? 'o' : 'g';
    int min_k0 = f == "P0" ? 4 : f == "P1" ? 5 : 7;
    if (l == 0) {
      if (k < min_k0) bad_parameter(f, k, l);
      int q = f == "P0" ? k : k - 1;
      add("L", 'g', bits_of({0, 1}));
      int post = 2;
      if (f == "P0") {
        add("LR", '-', all_but(q, {1, 2}));
      } else if (f == "P1") {
        add("LR", '-', all_but(q, {1}));
        add("LR", '-', all_but(q, {2}));
      } else {
        add("LR", '-', all_but(q, {1}));
        add("LR", '-', all_but(q, {3}));
        add("LR", '-', all_but(q, {2}));
        add("LR", '-', all_but(q, {3, 4}));
        post = 4;
      }
      path(post, q - 2);
      add("R", last, bits_of({q - 1}));
      if (post > q - 1) bad_parameter(f, k, l);
      return build(with_kl(f, k, l), f, q, rows);
    }
    int q = f == "P0" ? k - 1 : k - 2;
    int post = f == "P0" ? l + 1 : f == "P1" ? l + 1 : l + 3;
    if (l < 0 || post > q - 2) bad_parameter(f, k, l);
    add("L", 'g', bits_of({0}));
    path(0, l - 1);
    if (f == "P0") {
      add("LR", '-', all_but(q, {l, l + 1}));
    } else if (f == "P1") {
      add("LR", '-', all_but(q, {l}));
      add("LR", '-', all_but(q, {l + 1}));
    } else {
      add("LR", '-', all_but(q, {l}));
      add("LR", '-', all_but(q, {l + 2}));
      add("LR", '-', all_but(q, {l + 1}));
      add("LR", '-', all_but(q, {l + 2, l + 3}));
    }
    path(post, q - 2);
    add("R", last, bits_of({q - 1}));
    return build(with_kl(f, k, l), f, q, rows);
  }
  // Families matched inside A*.
  if (f == "M'2" || f == "M''2" || f == "M'3") {
    if (k < 4) bad_parameter(f, k, l);
    int q = k;
    if (f == "M'2") add("U", '-', range_bits(0, q - 1));
    if (f == "M''2") add("R", '-', range_bits(0, q - 1));
    add("L", '-', bits_of({0}));
    path(0, q - 3);
    if (f == "M'2") add("L", '-', all_but(q, {q - 2}));
    if (f == "M''2") {
      add("R", '-', bits_of({q - 2}));
      add("L", '-', range_bits(0, q - 1));
    }
    if (f == "M'3") add("U", '-', all_but(q, {q - 2}));
    return build(with_k(f, k), f, q, rows, true);
  }
  if (f == "M''3") {
    if (k < 4) bad_parameter(f, k, l);
    int q = k;
    path(0, q - 2);
    add("R", '-', range_bits(1, q - 2));
    return build(with_k(f, k), f, q, rows, true);
  }
  if (f == "MI") {
    if (k < 3) bad_parameter(f, k, l);
    for (const auto& r : cycle_rows(k)) add("*", '-', r);
    return build(with_k(f, k), "Tucker", k, rows, true);
  }
  if (f == "MII" || f == "MIII") {
    if (k < (f == "MII" ? 4 : 3)) bad_parameter(f, k, l);
    EnrichedMatrix a = fsc_matrix(f == "MII" ? FscFamily::MII : FscFamily::MIII, k);
    for (const auto& r : a.rows) add("*", '-', r);
    return build(with_k(f, k), "Tucker", a.cols, rows, true);
  }
  throw Error(ErrorKind::InvalidParameter, "unknown pattern family '" + f + "'");
}

const std::vector<std::string>& fixed_families() {
  static const std::vector<std::string> names = {
      "M0",  "MII4", "MV",  "D0",   "D1",     "D2",     "D3",    "D4",  "D5",   "D6",
      "D7",  "D8",   "D9",  "D10",  "D11",    "D12",    "D13",   "F0",  "F'0",  "F''0",
      "S6(3)", "S6'(3)", "S7(3)", "M'4", "M''4", "M'5", "M''5", "MIV", "MV*"};
  return names;
}

const std::vector<std::string>& k_families() {
  static const std::vector<std::string> names = {"S0", "F1", "F2", "F'1", "F'2", "S1", "S2",
                                                 "S3", "S4", "S5", "S6", "S7", "S8", "M'2",
                                                 "M''2", "M'3", "M''3", "MI", "MII", "MIII"};
  return names;
}

MatrixPattern dual_pattern(const MatrixPattern& mp) {
  MatrixPattern d = mp;
  d.tag = mp.tag + "^d";
  d.instance = dual(mp.instance);
  for (size_t i = 0; i < d.pattern.rows.size(); ++i) {
    d.pattern.rows[i].bits = d.instance.rows[i];
    for (Label& a : d.pattern.rows[i].accepts) {
      if (a == Label::L) {
        a = Label::R;
      } else if (a == Label::R) {
        a = Label::L;
      }
    }
  }
  d.pattern.tag = d.tag;
  return d;
}

}  // namespace

MatrixPattern make_matrix_pattern(const std::string& family, int k, int l, bool dual_variant) {
  MatrixPattern mp;
  bool fixed = std::find(fixed_families().begin(), fixed_families().end(), family) !=
               fixed_families().end();
  if (fixed) {
    mp = fixed_pattern(family);
  } else if (family == "P0" || family == "P1" || family == "P2" ||
             std::find(k_families().begin(), k_families().end(), family) !=
                 k_families().end()) {
    mp = parametric_pattern(family, k, l);
  } else {
    throw Error(ErrorKind::InvalidParameter, "unknown pattern family '" + family + "'");
  }
  return dual_variant ? dual_pattern(mp) : mp;
}

std::vector<MatrixPattern> catalog_patterns(int max_rows, int max_cols, bool include_star) {
  std::vector<MatrixPattern> out;
  auto push = [&](const MatrixPattern& mp) {
    if (mp.pattern.on_star && !include_star) return;
    int extra = mp.pattern.on_star ? 2 : 0;
    if (static_cast<int>(mp.pattern.rows.size()) > max_rows + extra ||
        mp.pattern.cols > max_cols + extra) {
      return;
    }
    out.push_back(mp);
    MatrixPattern d = dual_pattern(mp);
    if (!(d.instance == mp.instance)) out.push_back(d);
  };
  for (const auto& f : fixed_families()) push(make_matrix_pattern(f));
  int cap = std::max(max_rows, max_cols) + 4;
  for (const auto& f : k_families()) {
    for (int k = 3; k <= cap; ++k) {
      try {
        push(make_matrix_pattern(f, k));
      } catch (const Error&) {
      }
    }
  }
  for (const char* f : {"P0", "P1", "P2"}) {
    for (int k = 4; k <= cap; ++k) {
      for (int l = 0; l <= k; ++l) {
        try {
          push(make_matrix_pattern(f, k, l));
        } catch (const Error&) {
        }
      }
    }
  }
  return out;
}

std::vector<MatrixPattern> theorem_matrices(int max_k) {
  std::vector<MatrixPattern> out;
  for (const auto& mp : catalog_patterns(max_k + 2, max_k + 2, false)) out.push_back(mp);
  return out;
}

}  // namespace splitcircle
