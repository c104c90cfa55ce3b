#include "splitcircle/partition.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace splitcircle {

int KPartition::class_of(int v) const {
  for (int i = 1; i <= class_count(); ++i) {
    if (classes[i][v]) return i;
  }
  return 0;
}

std::string class_tag(CaseKind kind, const SClass& c) {
  switch (c.kind) {
    case SKind::Isolated: return "S0";
    case SKind::EmptyLR: return kind == CaseKind::FourTent ? "S[15]" : "S[86]";
    case SKind::LR: return kind == CaseKind::FourTent ? "S[16" : "S76]";
    case SKind::Ordinary: break;
  }
  return "S" + std::to_string(c.a) + std::to_string(c.b);
}

namespace {

int class_count_of(CaseKind kind) {
  switch (kind) {
    case CaseKind::Tent:
    case CaseKind::FourTent: return 6;
    case CaseKind::CoFourTent: return 8;
    case CaseKind::Net: return 7;
    case CaseKind::None: break;
  }
  throw Error(ErrorKind::WrongCase, "no partition for this case");
}

ForbiddenFound forbidden_from(const Graph& g, const std::vector<int>& replay, std::string reason) {
  ForbiddenFound f;
  f.witness = replay.empty() ? find_fsc_witness(g) : replay_witness(g, replay);
  f.reason = std::move(reason);
  return f;
}

// Class of a clique vertex from its adjacency to the anchor stable vertices,
// encoded as a bit mask in anchor order; 0 when no class applies.
int k_class(CaseKind kind, unsigned mask) {
  switch (kind) {
    case CaseKind::Tent: {
      // bits: s13, s35, s51
      static const std::map<unsigned, int> t = {{0b101, 1}, {0b001, 2}, {0b011, 3},
                                                {0b010, 4}, {0b110, 5}, {0b100, 6}};
      auto it = t.find(mask);
      return it == t.end() ? 0 : it->second;
    }
    case CaseKind::FourTent: {
      // bits: s12, s24, s45
      static const std::map<unsigned, int> t = {{0b001, 1}, {0b011, 2}, {0b010, 3},
                                                {0b110, 4}, {0b100, 5}, {0b000, 6}};
      auto it = t.find(mask);
      return it == t.end() ? 0 : it->second;
    }
    case CaseKind::CoFourTent: {
      // bits: s1, s13, s35, s5
      static const std::map<unsigned, int> t = {{0b0011, 1}, {0b0111, 2}, {0b0110, 3},
                                                {0b1110, 4}, {0b1100, 5}, {0b0100, 6},
                                                {0b0000, 7}, {0b0010, 8}};
      auto it = t.find(mask);
      return it == t.end() ? 0 : it->second;
    }
    default: break;
  }
  return 0;
}

int anchor_stable_begin(CaseKind kind) { return anchor_clique_size(kind); }

}  // namespace

KResult partition_K(const Graph& g, const SplitPartition& sp, const CaseWitness& cw) {
  if (cw.kind != CaseKind::Tent && cw.kind != CaseKind::FourTent &&
      cw.kind != CaseKind::CoFourTent) {
    throw Error(ErrorKind::WrongCase, "partition_K needs a tent, 4-tent or co-4-tent witness");
  }
  KPartition kp;
  kp.kind = cw.kind;
  kp.anchor = cw.embedding;
  kp.classes.assign(class_count_of(cw.kind) + 1, VertexSet());
  const int first = anchor_stable_begin(cw.kind);
  const int stable_count = static_cast<int>(cw.embedding.size()) - first;
  for (int k = 0; k < g.n(); ++k) {
    if (!sp.K[k]) continue;
    unsigned mask = 0;
    for (int j = 0; j < stable_count; ++j) {
      if (g.adjacent(k, cw.embedding[first + j])) mask |= 1u << j;
    }
    int c = k_class(cw.kind, mask);
    if (c == 0) {
      std::vector<int> replay = cw.embedding;
      replay.push_back(k);
      return {std::nullopt, forbidden_from(g, replay, "clique vertex " + std::to_string(k) +
                                                          " fits no class")};
    }
    kp.classes[c].set(k);
  }
  return {kp, std::nullopt};
}

// ---------------------------------------------------------------- S partition

bool allowed_cell(CaseKind kind, int a, int b) {
  static const std::set<int> tent = {11, 12, 13, 14, 22, 23, 25, 26, 33, 34, 35, 36,
                                     41, 42, 44, 45, 51, 52, 55, 56, 61, 63, 64, 66};
  static const std::set<int> four = {11, 12, 13, 14, 15, 16, 22, 23, 24, 25, 26, 33,
                                     34, 35, 36, 44, 45, 46, 55, 56, 61, 62, 63, 64,
                                     65, 66};
  static const std::set<int> co = {11, 12, 13, 14, 16, 17, 22, 23, 25, 26, 27, 33, 34,
                                   35, 36, 44, 45, 46, 55, 66, 74, 75, 76, 77, 82, 83,
                                   84, 85, 86, 87, 88};
  int key = a * 10 + b;
  switch (kind) {
    case CaseKind::Tent: return tent.count(key) > 0;
    case CaseKind::FourTent: return four.count(key) > 0;
    case CaseKind::CoFourTent: return co.count(key) > 0;
    default: break;
  }
  return false;
}

namespace {

// Cells whose vertices must be complete to a given class.
int required_complete(CaseKind kind, int a, int b) {
  static const std::map<int, int> tent = {{14, 1}, {41, 1}, {36, 3}, {63, 3}, {52, 5}, {25, 5}};
  static const std::map<int, int> four = {{13, 1}, {14, 4}, {46, 4}, {64, 4},
                                          {25, 2}, {26, 2}, {62, 2}, {35, 5}};
  static const std::map<int, int> co = {{13, 1}, {14, 1}, {16, 6}, {25, 5}, {27, 2},
                                        {35, 5}, {46, 4}, {74, 4}, {82, 2}, {85, 8}};
  const std::map<int, int>* t = kind == CaseKind::Tent       ? &tent
                                : kind == CaseKind::FourTent ? &four
                                                             : &co;
  auto it = t->find(a * 10 + b);
  return it == t->end() ? 0 : it->second;
}

struct Touch {
  std::vector<char> adj;
  std::vector<char> comp;
};

Touch touch_of(const Graph& g, const KPartition& kp, int s) {
  const int n = kp.class_count();
  Touch t{std::vector<char>(n + 1, 0), std::vector<char>(n + 1, 1)};
  for (int i = 1; i <= n; ++i) {
    VertexSet hit = g.neighbors(s) & kp.classes[i];
    t.adj[i] = hit.any();
    t.comp[i] = hit == kp.classes[i];
  }
  return t;
}

// Cells (a, b) such that s touches K_a and K_b, is complete to the classes
// strictly between them going cyclically from a to b, and misses the rest.
std::vector<std::pair<int, int>> candidate_cells(const Touch& t, int n) {
  std::vector<std::pair<int, int>> out;
  for (int a = 1; a <= n; ++a) {
    if (!t.adj[a]) continue;
    for (int b = 1; b <= n; ++b) {
      if (!t.adj[b]) continue;
      bool ok = true;
      if (a == b) {
        for (int c = 1; c <= n && ok; ++c) ok = c == a || !t.adj[c];
      } else {
        int c = a % n + 1;
        for (; c != b && ok; c = c % n + 1) ok = t.comp[c];
        for (c = b % n + 1; c != a && ok; c = c % n + 1) ok = !t.adj[c];
      }
      if (ok) out.push_back({a, b});
    }
  }
  return out;
}

bool complete_range(const Touch& t, int lo, int hi) {
  for (int c = lo; c <= hi; ++c) {
    if (!t.comp[c]) return false;
  }
  return true;
}

}  // namespace

SResult partition_S(const Graph& g, const SplitPartition& sp, const KPartition& kp) {
  const CaseKind kind = kp.kind;
  if (kind != CaseKind::Tent && kind != CaseKind::FourTent && kind != CaseKind::CoFourTent) {
    throw Error(ErrorKind::WrongCase, "partition_S needs a tent, 4-tent or co-4-tent partition");
  }
  const int n = kp.class_count();
  SPartition out;
  out.kind = kind;
  out.of.assign(g.n(), SClass{});
  for (int s = 0; s < g.n(); ++s) {
    if (!sp.S[s]) continue;
    if ((g.neighbors(s) & sp.K).none()) continue;
    Touch t = touch_of(g, kp, s);
    SClass c;
    c.kind = SKind::Ordinary;
    bool special = false;
    if (kind == CaseKind::FourTent && complete_range(t, 1, 5)) {
      c.kind = t.adj[6] ? SKind::LR : SKind::EmptyLR;
      special = true;
    }
    if (kind == CaseKind::CoFourTent && complete_range(t, 1, 6) && t.comp[8]) {
      c.kind = t.adj[7] ? SKind::LR : SKind::EmptyLR;
      special = true;
    }
    if (!special) {
      std::vector<std::pair<int, int>> cells;
      for (auto cell : candidate_cells(t, n)) {
        if (allowed_cell(kind, cell.first, cell.second)) cells.push_back(cell);
      }
      if (cells.empty()) {
        return {std::nullopt,
                forbidden_from(g, {}, "stable vertex " + std::to_string(s) + " fits no allowed cell")};
      }
      c.a = cells.front().first;
      c.b = cells.front().second;
      int need = required_complete(kind, c.a, c.b);
      if (need != 0 && !t.comp[need]) {
        return {std::nullopt, forbidden_from(g, {}, "stable vertex " + std::to_string(s) + " in " +
                                                         class_tag(kind, c) +
                                                         " is not complete to K" +
                                                         std::to_string(need))};
      }
    }
    out.of[s] = c;
  }
  return {out, std::nullopt};
}

// ---------------------------------------------------------------- matrices

namespace {

struct RowSpec {
  Label label = Label::U;
  Color color = Color::None;
};

using ColorTable = std::map<int, Color>;  // key a * 10 + b

constexpr Color R = Color::Red;
constexpr Color B = Color::Blue;

// Displayed representative matrices; absent keys are omitted rows.
const std::map<int, ColorTable>& four_tent_tables() {
  static const std::map<int, ColorTable> t = [] {
    std::map<int, ColorTable> m;
    m[1] = {{11, Color::None}, {12, R}, {14, B}, {15, B}, {16, B}, {61, B}};
    m[2] = {{12, R}, {22, Color::None}, {23, B}, {24, B}};
    m[3] = {{13, R}, {23, B}, {33, Color::None}, {34, B}, {35, R}, {36, R}};
    m[6] = {{16, B}, {26, B}, {36, R}, {46, R}, {56, B}, {61, R},
            {62, B}, {63, B}, {64, R}, {65, R}, {66, Color::None}};
    auto mirror = [](int i) { return i == 6 ? 6 : 6 - i; };
    for (auto [target, source] : {std::pair{5, 1}, std::pair{4, 2}}) {
      ColorTable out;
      for (auto [key, col] : m[source]) {
        int a = key / 10, b = key % 10;
        out[mirror(b) * 10 + mirror(a)] = opposite(col);
      }
      m[target] = out;
    }
    return m;
  }();
  return t;
}

const std::map<int, ColorTable>& co_four_tent_tables() {
  static const std::map<int, ColorTable> t = [] {
    std::map<int, ColorTable> m;
    m[1] = {{11, Color::None}, {12, R}, {16, B}, {17, B}};
    m[2] = {{12, R}, {22, Color::None}, {23, B}, {25, B}, {26, B}};
    m[3] = {{13, R}, {23, B}, {33, Color::None}, {34, R}, {35, B}, {36, B}, {83, R}};
    m[6] = {{26, B}, {36, B}, {46, B}, {66, Color::None}, {76, R}, {86, R}};
    m[7] = {{17, B}, {27, B}, {74, B}, {75, B}, {76, B}, {77, Color::None}, {87, B}};
    auto mirror = [](int i) {
      static const int mm[9] = {0, 5, 4, 3, 2, 1, 8, 7, 6};
      return mm[i];
    };
    for (auto [target, source] : {std::pair{4, 2}, std::pair{5, 1}, std::pair{8, 6}}) {
      ColorTable out;
      for (auto [key, col] : m[source]) {
        int a = key / 10, b = key % 10;
        out[mirror(b) * 10 + mirror(a)] = opposite(col);
      }
      m[target] = out;
    }
    return m;
  }();
  return t;
}

// In the 4-tent and co-4-tent matrices a labelled row complete to its class
// is left out, as the displayed matrices do for the classes that are always
// complete.
constexpr bool kOmitCompleteRows = true;

bool is_lr_class(CaseKind kind, int i) {
  return (kind == CaseKind::FourTent && i == 6) || (kind == CaseKind::CoFourTent && i == 7);
}

// Label and colour of the row of s in the matrix of class i, or nullopt when
// the row is absent.
std::optional<RowSpec> row_spec(CaseKind kind, int i, const SClass& c, bool complete_to_i) {
  if (c.kind == SKind::Isolated) return std::nullopt;
  if (c.kind == SKind::EmptyLR || c.kind == SKind::LR) {
    if (!is_lr_class(kind, i)) return std::nullopt;
    return RowSpec{Label::LR, Color::None};
  }
  if (c.a != i && c.b != i) return std::nullopt;
  if (c.a == c.b) return RowSpec{Label::U, Color::None};
  if (kind == CaseKind::Tent) {
    RowSpec r;
    r.label = c.a == i ? Label::R : Label::L;
    if (i % 2 == 1) {
      r.color = c.a == i ? Color::Red : Color::Blue;
    } else {
      int other = c.a == i ? c.b : c.a;
      r.color = (other == i % 6 + 1 || other == (i + 4) % 6 + 1) ? Color::Red : Color::Blue;
    }
    return r;
  }
  if (complete_to_i && kOmitCompleteRows) return std::nullopt;
  const auto& tables = kind == CaseKind::FourTent ? four_tent_tables() : co_four_tent_tables();
  const ColorTable& t = tables.at(i);
  auto it = t.find(c.a * 10 + c.b);
  if (it == t.end()) return std::nullopt;
  RowSpec r;
  r.color = it->second;
  if (kind == CaseKind::FourTent) {
    r.label = c.a == i ? Label::R : Label::L;
  } else {
    r.label = c.a == i ? Label::L : Label::R;
  }
  return r;
}

std::string matrix_letter(CaseKind kind) {
  switch (kind) {
    case CaseKind::Tent: return "A";
    case CaseKind::FourTent: return "B";
    case CaseKind::CoFourTent: return "C";
    default: break;
  }
  return "M";
}

}  // namespace

std::optional<Color> empty_lr_color(const EnrichedMatrix& m) {
  bool to_blue = false, to_red = false;
  for (int r = 0; r < m.row_count(); ++r) {
    Label l = m.labels[r];
    Color c = m.colors[r];
    if ((l == Label::L && c == Color::Red) || (l == Label::R && c == Color::Blue)) to_blue = true;
    if ((l == Label::L && c == Color::Blue) || (l == Label::R && c == Color::Red)) to_red = true;
  }
  if (to_blue && to_red) return std::nullopt;
  return to_blue ? Color::Blue : to_red ? Color::Red : Color::None;
}

EnrichedMatrix color_empty_lr_rows(const EnrichedMatrix& m, bool* conflict) {
  EnrichedMatrix out = m;
  bool has_empty = false;
  for (int r = 0; r < m.row_count(); ++r) {
    has_empty |= m.labels[r] == Label::LR && m.rows[r].none();
  }
  if (conflict) *conflict = false;
  if (!has_empty) return out;
  std::optional<Color> c = empty_lr_color(m);
  if (!c) {
    if (conflict) *conflict = true;
    return out;
  }
  for (int r = 0; r < out.row_count(); ++r) {
    if (out.labels[r] == Label::LR && out.rows[r].none()) out.colors[r] = *c;
  }
  return out;
}

CaseMatrices build_case_matrices(const Graph& g, const SplitPartition& sp, const KPartition& kp,
                                 const SPartition& spart) {
  const CaseKind kind = kp.kind;
  const int n = kp.class_count();
  CaseMatrices cm;
  cm.kind = kind;
  auto adjacency = [&](int s, const std::vector<int>& cols) {
    RowBits bits;
    for (size_t j = 0; j < cols.size(); ++j) {
      if (g.adjacent(s, cols[j])) bits.set(j);
    }
    return bits;
  };
  auto complete_to = [&](int s, int i) {
    return (g.neighbors(s) & kp.classes[i]) == kp.classes[i];
  };
  // Colour of the row of s in matrix i, None when absent.
  std::vector<std::vector<Color>> color_in(n + 1, std::vector<Color>(g.n(), Color::None));
  std::vector<std::vector<char>> present(n + 1, std::vector<char>(g.n(), 0));
  for (int i = 1; i <= n; ++i) {
    CaseMatrix m;
    m.name = matrix_letter(kind) + std::to_string(i);
    m.index = i;
    m.matrix.col_ids = members(kp.classes[i]);
    m.matrix.cols = static_cast<int>(m.matrix.col_ids.size());
    for (int s = 0; s < g.n(); ++s) {
      if (!sp.S[s]) continue;
      auto spec = row_spec(kind, i, spart.of[s], complete_to(s, i));
      if (!spec) continue;
      m.matrix.add_row(adjacency(s, m.matrix.col_ids), spec->label, spec->color, s);
      color_in[i][s] = spec->color;
      present[i][s] = 1;
    }
    if (is_lr_class(kind, i)) {
      bool conflict = false;
      m.matrix = color_empty_lr_rows(m.matrix, &conflict);
      if (conflict && !cm.forbidden) {
        cm.forbidden = ForbiddenFound{find_fsc_witness(g),
                                      "empty LR rows of " + m.name + " admit no colour"};
      }
    }
    cm.per_class.push_back(std::move(m));
  }

  // Colour-union matrices over all of K plus c_L and c_R.
  std::vector<int> all_cols;
  std::vector<int> class_begin(n + 2, 0);
  for (int i = 1; i <= n; ++i) {
    class_begin[i] = static_cast<int>(all_cols.size());
    for (int v : members(kp.classes[i])) all_cols.push_back(v);
  }
  class_begin[n + 1] = static_cast<int>(all_cols.size());
  const int mk = static_cast<int>(all_cols.size());
  const int c_left = mk, c_right = mk + 1;
  std::array<CaseMatrix, 4> u;
  const char* suffix[4] = {"r", "b", "r-b", "b-r"};
  for (int q = 0; q < 4; ++q) {
    u[q].name = matrix_letter(kind) + "_" + suffix[q];
    u[q].matrix.cols = q < 2 ? mk + 2 : mk;
    u[q].matrix.col_ids = all_cols;
    if (q < 2) {
      u[q].matrix.col_ids.push_back(-1);
      u[q].matrix.col_ids.push_back(-2);
    }
  }
  auto range_bits = [&](int s, int lo_class, int hi_class) {
    RowBits bits;
    for (int j = class_begin[lo_class]; j < class_begin[hi_class + 1]; ++j) {
      if (g.adjacent(s, all_cols[j])) bits.set(j);
    }
    return bits;
  };
  for (int s = 0; s < g.n(); ++s) {
    if (!sp.S[s]) continue;
    const SClass& c = spart.of[s];
    if (c.kind != SKind::Ordinary || c.a == c.b) continue;
    const int i = c.a, j = c.b;
    Color ci = color_in[i][s], cj = color_in[j][s];
    if (!present[i][s] && !present[j][s]) continue;
    if (!present[i][s]) ci = i < j ? cj : opposite(cj);
    if (!present[j][s]) cj = i < j ? ci : opposite(ci);
    RowBits full = range_bits(s, 1, n);
    for (int q = 0; q < 2; ++q) {
      Color want = q == 0 ? Color::Red : Color::Blue;
      RowBits bits;
      if (i < j) {
        if (ci == want) bits = full;
      } else {
        if (ci == want) {
          bits |= range_bits(s, i, n);
          bits.set(c_right);
        }
        if (cj == want) {
          bits |= range_bits(s, 1, j);
          bits.set(c_left);
        }
      }
      if (bits.any()) u[q].matrix.add_row(bits, Label::U, Color::None, s);
    }
    if (i > j) {
      int q = ci == Color::Red ? 2 : 3;
      u[q].matrix.add_row(full, Label::U, Color::None, s);
    }
  }
  for (auto& m : u) cm.unions.push_back(std::move(m));
  return cm;
}

CaseVerdict case_verdict(const CaseMatrices& cm, bool enforce_unions) {
  CaseVerdict v;
  v.circle_ok = true;
  v.unions_enforced = enforce_unions;
  for (const CaseMatrix& m : cm.per_class) {
    MatrixCheck c;
    c.name = m.name;
    TwoNestedResult r = is_2nested(m.matrix);
    c.passed = r.two_nested;
    c.reason = r.reason;
    c.certificate = r.certificate;
    v.checks.push_back(std::move(c));
  }
  for (const CaseMatrix& m : cm.unions) {
    MatrixCheck c;
    c.name = m.name;
    c.union_matrix = true;
    NestedResult r = is_nested(m.matrix);
    c.passed = r.nested;
    if (!r.nested && r.gem) {
      c.reason = "0-gem on rows " + std::to_string(r.gem->row_a) + " and " +
                 std::to_string(r.gem->row_b);
    }
    v.checks.push_back(std::move(c));
  }
  for (size_t k = 0; k < v.checks.size(); ++k) {
    if (!v.checks[k].passed && (enforce_unions || !v.checks[k].union_matrix)) {
      v.circle_ok = false;
      v.failed = static_cast<int>(k);
      break;
    }
  }
  if (cm.forbidden) {
    v.circle_ok = false;
    if (v.failed < 0) {
      MatrixCheck c;
      c.name = "empty-LR colouring";
      c.reason = cm.forbidden->reason;
      v.checks.push_back(c);
      v.failed = static_cast<int>(v.checks.size()) - 1;
    }
  }
  return v;
}

std::optional<Decomposition> reduce_co4tent_prime(const Graph& g, const SplitPartition& sp,
                                                  const KPartition& kp) {
  if (kp.kind != CaseKind::CoFourTent) {
    throw Error(ErrorKind::WrongCase, "prime reduction applies to the co-4-tent case");
  }
  if (kp.classes[2].any() && kp.classes[4].any()) {
    throw Error(ErrorKind::NotDecomposable, "K2 and K4 are both nonempty");
  }
  const VertexSet& centre = kp.classes[4].none() ? kp.classes[5] : kp.classes[1];
  return class_split(g, sp, centre);
}

std::string debug_dump(const KPartition& kp, const SPartition& spart, const CaseMatrices& cm) {
  nlohmann::ordered_json j;
  j["case"] = to_string(kp.kind);
  nlohmann::ordered_json kc = nlohmann::ordered_json::object();
  for (int i = 1; i <= kp.class_count(); ++i) kc["K" + std::to_string(i)] = members(kp.classes[i]);
  j["K"] = kc;
  std::map<std::string, std::vector<int>> groups;
  for (int s = 0; s < static_cast<int>(spart.of.size()); ++s) {
    if (spart.of[s].kind == SKind::Isolated && spart.of[s].a == 0) continue;
    groups[class_tag(spart.kind, spart.of[s])].push_back(s);
  }
  j["S"] = groups;
  nlohmann::ordered_json ms = nlohmann::ordered_json::object();
  for (const auto& m : cm.per_class) ms[m.name] = format_matrix(m.matrix);
  for (const auto& m : cm.unions) ms[m.name] = format_matrix(m.matrix);
  j["matrices"] = ms;
  return j.dump(2);
}

}  // namespace splitcircle
