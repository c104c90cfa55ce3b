#include "splitcircle/enriched.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace splitcircle {

const char* to_string(Label label) {
  switch (label) {
    case Label::U: return "U";
    case Label::L: return "L";
    case Label::R: return "R";
    case Label::LR: return "LR";
  }
  return "?";
}

const char* to_string(Color color) {
  switch (color) {
    case Color::None: return "-";
    case Color::Red: return "red";
    case Color::Blue: return "blue";
  }
  return "?";
}

Color opposite(Color c) {
  if (c == Color::Red) return Color::Blue;
  if (c == Color::Blue) return Color::Red;
  return Color::None;
}

void EnrichedMatrix::add_row(const RowBits& bits, Label label, Color color, int id) {
  rows.push_back(bits);
  labels.push_back(label);
  colors.push_back(color);
  if (id >= 0 || !row_ids.empty()) {
    row_ids.resize(rows.size() - 1, -1);
    row_ids.push_back(id);
  }
}

bool EnrichedMatrix::operator==(const EnrichedMatrix& other) const {
  return cols == other.cols && rows == other.rows && labels == other.labels &&
         colors == other.colors;
}

EnrichedMatrix make_matrix(const std::vector<std::string>& bit_rows,
                           const std::vector<Label>& labels,
                           const std::vector<Color>& colors) {
  EnrichedMatrix a;
  a.cols = bit_rows.empty() ? 0 : static_cast<int>(bit_rows.front().size());
  for (size_t i = 0; i < bit_rows.size(); ++i) {
    const std::string& s = bit_rows[i];
    if (static_cast<int>(s.size()) != a.cols) {
      throw Error(ErrorKind::InvalidParameter, "ragged matrix row '" + s + "'");
    }
    RowBits bits;
    for (int c = 0; c < a.cols; ++c) {
      if (s[c] == '1') {
        bits.set(c);
      } else if (s[c] != '0') {
        throw Error(ErrorKind::InvalidParameter, "bad matrix entry in '" + s + "'");
      }
    }
    a.add_row(bits, i < labels.size() ? labels[i] : Label::U,
              i < colors.size() ? colors[i] : Color::None);
  }
  return a;
}

namespace {

Label parse_label(const std::string& t) {
  if (t == "U") return Label::U;
  if (t == "L") return Label::L;
  if (t == "R") return Label::R;
  if (t == "LR") return Label::LR;
  throw Error(ErrorKind::ParseError, "unknown row label '" + t + "'");
}

Color parse_color(const std::string& t) {
  if (t == "-") return Color::None;
  if (t == "red") return Color::Red;
  if (t == "blue") return Color::Blue;
  throw Error(ErrorKind::ParseError, "unknown row color '" + t + "'");
}

}  // namespace

EnrichedMatrix parse_matrix(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    lines.push_back(line);
  }
  if (lines.empty()) throw Error(ErrorKind::ParseError, "missing matrix header");
  std::istringstream header(lines[0]);
  int n = -1, m = -1;
  if (!(header >> n >> m) || n < 0 || m < 0 || m > kMaxVertices) {
    throw Error(ErrorKind::ParseError, "bad matrix header '" + lines[0] + "'");
  }
  if (static_cast<int>(lines.size()) - 1 != n) {
    throw Error(ErrorKind::ParseError, "expected " + std::to_string(n) + " matrix rows, found " +
                                           std::to_string(lines.size() - 1));
  }
  EnrichedMatrix a;
  a.cols = m;
  for (int i = 1; i <= n; ++i) {
    std::istringstream row(lines[i]);
    std::string label, color, bits;
    if (!(row >> label >> color)) {
      throw Error(ErrorKind::ParseError, "bad matrix row '" + lines[i] + "'");
    }
    row >> bits;
    if (static_cast<int>(bits.size()) != m) {
      throw Error(ErrorKind::ParseError, "row width differs from header in '" + lines[i] + "'");
    }
    RowBits b;
    for (int c = 0; c < m; ++c) {
      if (bits[c] == '1') {
        b.set(c);
      } else if (bits[c] != '0') {
        throw Error(ErrorKind::ParseError, "bad matrix entry in '" + lines[i] + "'");
      }
    }
    a.add_row(b, parse_label(label), parse_color(color));
  }
  return a;
}

std::string format_matrix(const EnrichedMatrix& a) {
  std::ostringstream out;
  out << a.row_count() << ' ' << a.cols << '\n';
  for (int r = 0; r < a.row_count(); ++r) {
    out << to_string(a.labels[r]) << ' ' << to_string(a.colors[r]);
    if (a.cols > 0) {
      out << ' ';
      for (int c = 0; c < a.cols; ++c) out << (a.rows[r][c] ? '1' : '0');
    }
    out << '\n';
  }
  return out.str();
}

EnrichedMatrix dual(const EnrichedMatrix& a) {
  EnrichedMatrix d = a;
  for (int r = 0; r < a.row_count(); ++r) {
    RowBits b;
    for (int c = 0; c < a.cols; ++c) {
      if (a.rows[r][c]) b.set(a.cols - 1 - c);
    }
    d.rows[r] = b;
    if (a.labels[r] == Label::L) d.labels[r] = Label::R;
    if (a.labels[r] == Label::R) d.labels[r] = Label::L;
  }
  if (!a.col_ids.empty()) std::reverse(d.col_ids.begin(), d.col_ids.end());
  return d;
}

EnrichedMatrix submatrix(const EnrichedMatrix& a, const std::vector<int>& rows,
                         const std::vector<int>& cols) {
  EnrichedMatrix s;
  s.cols = static_cast<int>(cols.size());
  for (int r : rows) {
    RowBits b;
    for (size_t j = 0; j < cols.size(); ++j) {
      if (a.rows[r][cols[j]]) b.set(j);
    }
    s.add_row(b, a.labels[r], a.colors[r], a.row_ids.empty() ? -1 : a.row_ids[r]);
  }
  if (!a.col_ids.empty()) {
    for (int c : cols) s.col_ids.push_back(a.col_ids[c]);
  }
  return s;
}

// ---------------------------------------------------------------- nestedness

NestedResult is_nested(const EnrichedMatrix& a) {
  NestedResult res;
  for (int i = 0; i < a.row_count(); ++i) {
    for (int j = i + 1; j < a.row_count(); ++j) {
      RowBits both = a.rows[i] & a.rows[j];
      RowBits only_i = a.rows[i] & ~a.rows[j];
      RowBits only_j = a.rows[j] & ~a.rows[i];
      if (both.any() && only_i.any() && only_j.any()) {
        res.nested = false;
        GemWitness w;
        w.row_a = i;
        w.row_b = j;
        w.cols = {static_cast<int>(only_i._Find_first()), static_cast<int>(both._Find_first()),
                  static_cast<int>(only_j._Find_first())};
        res.gem = w;
        return res;
      }
    }
  }
  return res;
}

bool is_zero_gem(const EnrichedMatrix& a, const GemWitness& w) {
  if (w.row_a < 0 || w.row_b < 0 || w.row_a == w.row_b) return false;
  if (w.row_a >= a.row_count() || w.row_b >= a.row_count()) return false;
  for (int c : w.cols) {
    if (c < 0 || c >= a.cols) return false;
  }
  if (w.cols[0] == w.cols[1] || w.cols[1] == w.cols[2] || w.cols[0] == w.cols[2]) return false;
  const RowBits& x = a.rows[w.row_a];
  const RowBits& y = a.rows[w.row_b];
  return x[w.cols[0]] && !y[w.cols[0]] && x[w.cols[1]] && y[w.cols[1]] && !x[w.cols[2]] &&
         y[w.cols[2]];
}

// ---------------------------------------------------------------- orderings

namespace {

// Positions of a row's ones under an ordering, as a bitset over positions.
RowBits positions_of(const RowBits& row, const ColumnOrdering& order) {
  RowBits p;
  for (size_t i = 0; i < order.size(); ++i) {
    if (row[order[i]]) p.set(i);
  }
  return p;
}

bool is_interval(const RowBits& p) {
  if (p.none()) return true;
  size_t lo = p._Find_first();
  size_t count = p.count();
  for (size_t i = lo; i < lo + count; ++i) {
    if (!p[i]) return false;
  }
  return true;
}

RowBits interval_bits(int begin, int end) {
  RowBits b;
  for (int i = begin; i < end; ++i) b.set(i);
  return b;
}

// Incremental feasibility of a partial ordering, one row at a time.
struct RowTracker {
  enum class Kind { Consecutive, Prefix, Suffix };
  Kind kind = Kind::Consecutive;
  RowBits ones;
  int size = 0;
};

}  // namespace

bool is_lr_ordering(const EnrichedMatrix& a, const ColumnOrdering& order) {
  if (static_cast<int>(order.size()) != a.cols) return false;
  std::vector<char> seen(a.cols, 0);
  for (int c : order) {
    if (c < 0 || c >= a.cols || seen[c]) return false;
    seen[c] = 1;
  }
  int m = a.cols;
  for (int r = 0; r < a.row_count(); ++r) {
    RowBits p = positions_of(a.rows[r], order);
    int s = static_cast<int>(p.count());
    switch (a.labels[r]) {
      case Label::U:
        if (!is_interval(p)) return false;
        break;
      case Label::L:
        if (p != interval_bits(0, s)) return false;
        break;
      case Label::R:
        if (p != interval_bits(m - s, m)) return false;
        break;
      case Label::LR:
        if (!is_interval(interval_bits(0, m) & ~p)) return false;
        break;
    }
  }
  return true;
}

void for_each_lr_ordering(const EnrichedMatrix& a,
                          const std::function<bool(const ColumnOrdering&)>& visit,
                          bool break_twin_symmetry) {
  const int m = a.cols;
  const int n = a.row_count();
  std::vector<RowTracker> trackers(n);
  for (int r = 0; r < n; ++r) {
    RowTracker& t = trackers[r];
    t.ones = a.rows[r];
    switch (a.labels[r]) {
      case Label::U: t.kind = RowTracker::Kind::Consecutive; break;
      case Label::L: t.kind = RowTracker::Kind::Prefix; break;
      case Label::R: t.kind = RowTracker::Kind::Suffix; break;
      case Label::LR:
        t.kind = RowTracker::Kind::Consecutive;
        t.ones = full_set(m) & ~a.rows[r];
        break;
    }
    t.size = static_cast<int>(t.ones.count());
  }
  // twin_before[c]: an identical column with smaller index, or -1.
  std::vector<int> twin_before(m, -1);
  if (break_twin_symmetry) {
    for (int c = 0; c < m; ++c) {
      for (int d = c - 1; d >= 0; --d) {
        bool same = true;
        for (int r = 0; r < n && same; ++r) same = a.rows[r][c] == a.rows[r][d];
        if (same) {
          twin_before[c] = d;
          break;
        }
      }
    }
  }
  ColumnOrdering order;
  order.reserve(m);
  std::vector<char> used(m, 0);
  // Per-row state for consecutive rows: placed ones, and whether the run closed.
  std::vector<int> placed(n, 0);
  std::vector<char> closed(n, 0);
  bool stop = false;

  std::function<void()> rec = [&]() {
    if (stop) return;
    int pos = static_cast<int>(order.size());
    if (pos == m) {
      if (!visit(order)) stop = true;
      return;
    }
    for (int c = 0; c < m && !stop; ++c) {
      if (used[c]) continue;
      if (twin_before[c] >= 0 && !used[twin_before[c]]) continue;
      bool ok = true;
      std::vector<std::pair<int, std::pair<int, char>>> undo;
      for (int r = 0; r < n && ok; ++r) {
        const RowTracker& t = trackers[r];
        bool one = t.ones[c];
        switch (t.kind) {
          case RowTracker::Kind::Prefix:
            ok = one == (pos < t.size);
            break;
          case RowTracker::Kind::Suffix:
            ok = one == (pos >= m - t.size);
            break;
          case RowTracker::Kind::Consecutive:
            if (one) {
              if (closed[r]) {
                ok = false;
              } else {
                undo.push_back({r, {placed[r], closed[r]}});
                ++placed[r];
              }
            } else if (placed[r] > 0 && placed[r] < t.size) {
              ok = false;
            } else if (placed[r] > 0 && !closed[r]) {
              undo.push_back({r, {placed[r], closed[r]}});
              closed[r] = 1;
            }
            break;
        }
      }
      if (ok) {
        used[c] = 1;
        order.push_back(c);
        rec();
        order.pop_back();
        used[c] = 0;
      }
      for (auto it = undo.rbegin(); it != undo.rend(); ++it) {
        placed[it->first] = it->second.first;
        closed[it->first] = it->second.second;
      }
    }
  };
  rec();
}

std::vector<ColumnOrdering> lr_orderings(const EnrichedMatrix& a, size_t limit) {
  std::vector<ColumnOrdering> out;
  for_each_lr_ordering(
      a,
      [&](const ColumnOrdering& o) {
        out.push_back(o);
        return out.size() < limit;
      },
      false);
  return out;
}

// ---------------------------------------------------------------- blocks

std::vector<Block> row_blocks(const EnrichedMatrix& a, const ColumnOrdering& order, int row,
                              int split_at) {
  std::vector<Block> out;
  const int m = a.cols;
  RowBits p = positions_of(a.rows[row], order);
  if (p.none()) return out;
  int s = static_cast<int>(p.count());
  auto make = [&](BlockKind kind, int begin, int end) {
    Block b;
    b.row = row;
    b.kind = kind;
    b.begin = begin;
    b.end = end;
    return b;
  };
  switch (a.labels[row]) {
    case Label::U: {
      int lo = static_cast<int>(p._Find_first());
      out.push_back(make(BlockKind::U, lo, lo + s));
      break;
    }
    case Label::L:
      out.push_back(make(BlockKind::L, 0, s));
      break;
    case Label::R:
      out.push_back(make(BlockKind::R, m - s, m));
      break;
    case Label::LR: {
      if (s == m) {
        int cut = std::clamp(split_at, 0, m);
        if (cut > 0) out.push_back(make(BlockKind::L, 0, cut));
        if (cut < m) out.push_back(make(BlockKind::R, cut, m));
        break;
      }
      int left = 0;
      while (left < m && p[left]) ++left;
      int right = 0;
      while (right < m && p[m - 1 - right]) ++right;
      if (left > 0) out.push_back(make(BlockKind::L, 0, left));
      if (right > 0) out.push_back(make(BlockKind::R, m - right, m));
      break;
    }
  }
  return out;
}

namespace {

bool blocks_intersect(const Block& x, const Block& y) {
  return x.begin < y.end && y.begin < x.end;
}

bool block_contains(const Block& outer, const Block& inner) {
  return outer.begin <= inner.begin && inner.end <= outer.end;
}

bool blocks_overlap(const Block& x, const Block& y) {
  return blocks_intersect(x, y) && !block_contains(x, y) && !block_contains(y, x);
}

bool rows_overlap(const RowBits& x, const RowBits& y) {
  return (x & y).any() && (x & ~y).any() && (y & ~x).any();
}

// All blocks of the matrix for one ordering and one split per full LR-row.
std::vector<Block> all_blocks(const EnrichedMatrix& a, const ColumnOrdering& order,
                              const std::vector<int>& full_rows, const std::vector<int>& splits) {
  std::vector<Block> blocks;
  for (int r = 0; r < a.row_count(); ++r) {
    int cut = 0;
    for (size_t i = 0; i < full_rows.size(); ++i) {
      if (full_rows[i] == r) cut = splits[i];
    }
    auto rb = row_blocks(a, order, r, cut);
    blocks.insert(blocks.end(), rb.begin(), rb.end());
  }
  return blocks;
}

std::vector<int> full_lr_rows(const EnrichedMatrix& a) {
  std::vector<int> out;
  for (int r = 0; r < a.row_count(); ++r) {
    if (a.labels[r] == Label::LR && a.cols > 0 &&
        static_cast<int>(a.rows[r].count()) == a.cols) {
      out.push_back(r);
    }
  }
  return out;
}

// Visits every split vector for the full LR-rows (each split in [0, m]).
template <typename F>
bool for_each_split(int m, size_t count, F&& f) {
  std::vector<int> splits(count, 0);
  while (true) {
    if (f(splits)) return true;
    size_t i = 0;
    while (i < count && splits[i] == m) splits[i++] = 0;
    if (i == count) return false;
    ++splits[i];
  }
}

// Suitability clauses together with condition 4 of the block bi-colouring.
bool blocks_suitable(const EnrichedMatrix& a, const std::vector<Block>& blocks) {
  for (const Block& x : blocks) {
    if (a.labels[x.row] != Label::LR || x.kind == BlockKind::U) continue;
    BlockKind other = x.kind == BlockKind::L ? BlockKind::R : BlockKind::L;
    for (const Block& y : blocks) {
      if (y.kind == other && blocks_intersect(x, y)) return false;
    }
  }
  for (int r = 0; r < a.row_count(); ++r) {
    if (a.labels[r] != Label::LR) continue;
    const Block* lb = nullptr;
    const Block* rb = nullptr;
    for (const Block& x : blocks) {
      if (x.row != r) continue;
      if (x.kind == BlockKind::L) lb = &x;
      if (x.kind == BlockKind::R) rb = &x;
    }
    if (!lb || !rb) continue;
    for (const Block& u : blocks) {
      if (u.kind == BlockKind::U && blocks_intersect(*lb, u) && blocks_intersect(*rb, u)) {
        return false;
      }
    }
  }
  return true;
}

// Union-find with parity: parity(x) is the colour of x relative to its root.
class ParityUnionFind {
 public:
  explicit ParityUnionFind(int n) : parent_(n), parity_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  std::pair<int, int> find(int x) {
    int p = 0;
    int root = x;
    while (parent_[root] != root) {
      p ^= parity_[root];
      root = parent_[root];
    }
    // Path compression.
    int cur = x;
    int cur_p = p;
    while (parent_[cur] != cur) {
      int next = parent_[cur];
      int next_p = cur_p ^ parity_[cur];
      parent_[cur] = root;
      parity_[cur] = cur_p;
      cur = next;
      cur_p = next_p;
    }
    return {root, p};
  }

  // Requires parity(x) xor parity(y) == diff; returns false on contradiction.
  bool unite(int x, int y, int diff) {
    auto [rx, px] = find(x);
    auto [ry, py] = find(y);
    if (rx == ry) return (px ^ py) == diff;
    parent_[rx] = ry;
    parity_[rx] = px ^ py ^ diff;
    return true;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> parity_;
};

// Solves the colouring constraints for a fixed block set; fills block colours.
bool colour_blocks(const EnrichedMatrix& a, std::vector<Block>& blocks, std::string* why) {
  const int nb = static_cast<int>(blocks.size());
  const int red = nb;
  ParityUnionFind uf(nb + 1);
  auto same = [&](int x, int y, const char* rule) {
    if (uf.unite(x, y, 0)) return true;
    if (why) *why = rule;
    return false;
  };
  auto differ = [&](int x, int y, const char* rule) {
    if (uf.unite(x, y, 1)) return true;
    if (why) *why = rule;
    return false;
  };
  for (int i = 0; i < nb; ++i) {
    const Block& x = blocks[i];
    Color c = a.colors[x.row];
    if (c == Color::Red && !same(i, red, "row pre-colour")) return false;
    if (c == Color::Blue && !differ(i, red, "row pre-colour")) return false;
  }
  for (int i = 0; i < nb; ++i) {
    for (int j = i + 1; j < nb; ++j) {
      const Block& x = blocks[i];
      const Block& y = blocks[j];
      bool x_lr = a.labels[x.row] == Label::LR;
      bool y_lr = a.labels[y.row] == Label::LR;
      if (x.row == y.row) {
        if (x_lr && !differ(i, j, "LR-row blocks share a colour")) return false;
        continue;
      }
      bool lr_pair = (x.kind == BlockKind::L && y.kind == BlockKind::R) ||
                     (x.kind == BlockKind::R && y.kind == BlockKind::L);
      if (lr_pair && blocks_intersect(x, y) &&
          !differ(i, j, "intersecting L-block and R-block")) {
        return false;
      }
      if (x.kind == BlockKind::U && y.kind == BlockKind::U && blocks_overlap(x, y) &&
          !differ(i, j, "overlapping U-blocks")) {
        return false;
      }
      if ((x.kind == BlockKind::U) != (y.kind == BlockKind::U)) {
        const Block& u = x.kind == BlockKind::U ? x : y;
        const Block& e = x.kind == BlockKind::U ? y : x;
        if (blocks_intersect(u, e) && !block_contains(e, u) &&
            !differ(i, j, "U-block leaves a same-coloured L/R-block")) {
          return false;
        }
      }
      if (x.kind == y.kind && x.kind != BlockKind::U && x_lr != y_lr) {
        const Block& inner = x_lr ? x : y;
        const Block& outer = x_lr ? y : x;
        bool proper = block_contains(outer, inner) &&
                      (outer.end - outer.begin) > (inner.end - inner.begin);
        if (proper && !differ(i, j, "LR-block properly inside an L/R-row block")) return false;
      }
    }
  }
  // Condition 8: an LR-row missing its L-block (R-block) forces the L-blocks
  // (R-blocks) of labelled rows to share one colour.
  for (BlockKind side : {BlockKind::L, BlockKind::R}) {
    bool some_missing = false;
    for (int r = 0; r < a.row_count() && !some_missing; ++r) {
      if (a.labels[r] != Label::LR) continue;
      bool has = false;
      for (const Block& x : blocks) has = has || (x.row == r && x.kind == side);
      some_missing = !has;
    }
    if (!some_missing) continue;
    int first = -1;
    for (int i = 0; i < nb; ++i) {
      if (blocks[i].kind != side || a.labels[blocks[i].row] == Label::LR) continue;
      if (first < 0) {
        first = i;
      } else if (!same(first, i, "LR-row without a block meets two colours")) {
        return false;
      }
    }
  }
  // Condition 9: overlapping LR-rows.
  for (int r1 = 0; r1 < a.row_count(); ++r1) {
    if (a.labels[r1] != Label::LR) continue;
    for (int r2 = r1 + 1; r2 < a.row_count(); ++r2) {
      if (a.labels[r2] != Label::LR || !rows_overlap(a.rows[r1], a.rows[r2])) continue;
      for (int i = 0; i < nb; ++i) {
        for (int j = 0; j < nb; ++j) {
          const Block& x = blocks[i];
          const Block& y = blocks[j];
          bool pair = ((x.row == r1 && y.row == r2) || (x.row == r2 && y.row == r1)) &&
                      x.kind == BlockKind::L && y.kind == BlockKind::R;
          if (pair && !same(i, j, "overlapping LR-rows")) return false;
        }
      }
    }
  }
  int red_root = uf.find(red).first;
  int red_parity = uf.find(red).second;
  for (int i = 0; i < nb; ++i) {
    auto [root, p] = uf.find(i);
    int colour = root == red_root ? (p ^ red_parity) : p;
    blocks[i].color = colour == 0 ? Color::Red : Color::Blue;
  }
  return true;
}

}  // namespace

bool is_suitable_ordering(const EnrichedMatrix& a, const ColumnOrdering& order) {
  if (!is_lr_ordering(a, order)) return false;
  auto full = full_lr_rows(a);
  return for_each_split(a.cols, full.size(), [&](const std::vector<int>& splits) {
    return blocks_suitable(a, all_blocks(a, order, full, splits));
  });
}

std::vector<ColumnOrdering> suitable_orderings(const EnrichedMatrix& a, size_t limit) {
  std::vector<ColumnOrdering> out;
  for_each_lr_ordering(
      a,
      [&](const ColumnOrdering& o) {
        if (is_suitable_ordering(a, o)) out.push_back(o);
        return out.size() < limit;
      },
      false);
  return out;
}

TaggedMatrix star_tagged(const EnrichedMatrix& a) {
  TaggedMatrix t;
  EnrichedMatrix& s = t.matrix;
  const int m = a.cols;
  s.cols = m + 2;
  t.tag_left = m;
  t.tag_right = m + 1;
  for (int r = 0; r < a.row_count(); ++r) {
    RowBits b = a.labels[r] == Label::LR ? (full_set(m) & ~a.rows[r]) : a.rows[r];
    if (a.labels[r] == Label::L || a.labels[r] == Label::LR) b.set(m);
    if (a.labels[r] == Label::R || a.labels[r] == Label::LR) b.set(m + 1);
    s.add_row(b, a.labels[r], a.colors[r]);
  }
  RowBits all_l = full_set(m);
  all_l.set(m);
  RowBits all_r = full_set(m);
  all_r.set(m + 1);
  s.add_row(all_l, Label::L);
  s.add_row(all_r, Label::R);
  return t;
}

// ---------------------------------------------------------------- 2-nestedness

TwoNestedResult is_2nested(const EnrichedMatrix& a) {
  TwoNestedResult res;
  bool orderable = false;
  bool suitable = false;
  std::string last_conflict;
  auto full = full_lr_rows(a);
  for_each_lr_ordering(a, [&](const ColumnOrdering& order) {
    orderable = true;
    bool found = for_each_split(a.cols, full.size(), [&](const std::vector<int>& splits) {
      auto blocks = all_blocks(a, order, full, splits);
      if (!blocks_suitable(a, blocks)) return false;
      suitable = true;
      std::string why;
      if (!colour_blocks(a, blocks, &why)) {
        last_conflict = why;
        return false;
      }
      res.two_nested = true;
      res.certificate = TwoNestedCertificate{order, blocks};
      return true;
    });
    return !found;
  });
  if (res.two_nested) return res;
  if (!orderable) {
    res.reason = "not LR-orderable";
  } else if (!suitable) {
    res.reason = "no suitable LR-ordering";
  } else {
    res.reason = "no block bi-colouring (" + last_conflict + ")";
  }
  if (a.row_count() <= 12 && a.cols <= 8) {
    auto hits = detect_forbidden(a, true);
    if (!hits.empty()) res.reason = "contains " + hits.front().tag + "; " + res.reason;
  }
  return res;
}

bool verify_certificate(const EnrichedMatrix& a, const TwoNestedCertificate& cert,
                        std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  const int m = a.cols;
  if (!is_lr_ordering(a, cert.ordering)) return fail("ordering is not an LR-ordering");
  for (const Block& b : cert.blocks) {
    if (b.row < 0 || b.row >= a.row_count()) return fail("block row out of range");
    if (b.begin < 0 || b.end > m || b.begin >= b.end) return fail("empty or out-of-range block");
    if (b.color == Color::None) return fail("uncoloured block");
  }
  // Blocks must be exactly the row's blocks, up to the split of a full LR-row.
  for (int r = 0; r < a.row_count(); ++r) {
    std::vector<Block> mine;
    for (const Block& b : cert.blocks) {
      if (b.row == r) mine.push_back(b);
    }
    RowBits p = positions_of(a.rows[r], cert.ordering);
    bool full = a.labels[r] == Label::LR && m > 0 && static_cast<int>(p.count()) == m;
    int cut = 0;
    if (full) {
      cut = m;
      for (const Block& b : mine) {
        if (b.kind == BlockKind::R) cut = b.begin;
      }
    }
    auto expect = row_blocks(a, cert.ordering, r, cut);
    if (expect.size() != mine.size()) return fail("row " + std::to_string(r) + " block count");
    for (size_t i = 0; i < mine.size(); ++i) {
      bool match = false;
      for (const Block& e : expect) {
        match = match || (e.kind == mine[i].kind && e.begin == mine[i].begin &&
                          e.end == mine[i].end);
      }
      if (!match) return fail("row " + std::to_string(r) + " block shape");
    }
  }
  const auto& bl = cert.blocks;
  if (!blocks_suitable(a, bl)) return fail("ordering is not suitable");
  auto is_lr = [&](const Block& b) { return a.labels[b.row] == Label::LR; };
  for (size_t i = 0; i < bl.size(); ++i) {
    const Block& x = bl[i];
    Color pre = a.colors[x.row];
    if (pre != Color::None && x.color != pre) return fail("block ignores row pre-colour");
    for (size_t j = 0; j < bl.size(); ++j) {
      if (i == j) continue;
      const Block& y = bl[j];
      bool same_colour = x.color == y.color;
      if (x.row == y.row) {
        if (is_lr(x) && same_colour) return fail("LR-row blocks share a colour");
        continue;
      }
      if (x.kind == BlockKind::L && y.kind == BlockKind::R && blocks_intersect(x, y) &&
          same_colour) {
        return fail("intersecting L-block and R-block share a colour");
      }
      if (x.kind == BlockKind::U && y.kind == BlockKind::U && same_colour &&
          blocks_overlap(x, y)) {
        return fail("overlapping U-blocks share a colour");
      }
      if (x.kind != BlockKind::U && y.kind == BlockKind::U && same_colour &&
          blocks_intersect(x, y) && !block_contains(x, y)) {
        return fail("U-block leaves a same-coloured L/R-block");
      }
      if (x.kind == y.kind && x.kind != BlockKind::U && is_lr(x) && !is_lr(y) &&
          block_contains(y, x) && (y.end - y.begin) > (x.end - x.begin) && same_colour) {
        return fail("LR-block properly inside a same-coloured L/R-row block");
      }
      // Gem criteria on blocks.
      if (same_colour && blocks_overlap(x, y)) return fail("monochromatic gem");
      bool strictly_inside = block_contains(y, x) && (y.end - y.begin) > (x.end - x.begin);
      if (same_colour && strictly_inside &&
          ((x.kind != BlockKind::U && !is_lr(x) && y.kind == BlockKind::U) ||
           (is_lr(x) && !is_lr(y)))) {
        return fail("monochromatic weak gem");
      }
    }
  }
  for (BlockKind side : {BlockKind::L, BlockKind::R}) {
    bool some_missing = false;
    for (int r = 0; r < a.row_count(); ++r) {
      if (a.labels[r] != Label::LR) continue;
      bool has = false;
      for (const Block& x : bl) has = has || (x.row == r && x.kind == side);
      some_missing = some_missing || !has;
    }
    if (!some_missing) continue;
    bool red = false, blue = false;
    for (const Block& x : bl) {
      if (x.kind != side || is_lr(x)) continue;
      red = red || x.color == Color::Red;
      blue = blue || x.color == Color::Blue;
    }
    if (red && blue) return fail("LR-row without a block while labelled blocks differ");
  }
  for (int r1 = 0; r1 < a.row_count(); ++r1) {
    for (int r2 = 0; r2 < a.row_count(); ++r2) {
      if (r1 == r2 || a.labels[r1] != Label::LR || a.labels[r2] != Label::LR) continue;
      if (!rows_overlap(a.rows[r1], a.rows[r2])) continue;
      for (const Block& x : bl) {
        for (const Block& y : bl) {
          if (x.row == r1 && y.row == r2 && x.kind == BlockKind::L && y.kind == BlockKind::R &&
              x.color != y.color) {
            return fail("overlapping LR-rows with mismatched blocks");
          }
        }
      }
      // Doubly-weak gem: a shared column in blocks of the same colour.
      for (const Block& x : bl) {
        for (const Block& y : bl) {
          if (x.row == r1 && y.row == r2 && blocks_intersect(x, y) && x.color == y.color) {
            return fail("badly-coloured doubly-weak gem");
          }
        }
      }
    }
  }
  return true;
}

}  // namespace splitcircle
