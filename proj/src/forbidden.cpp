#include <algorithm>
#include <cctype>
#include <functional>

#include "splitcircle/catalog.hpp"
#include "splitcircle/enriched.hpp"

namespace splitcircle {

namespace {

bool label_accepted(const PatternRow& pr, Label label) {
  return std::find(pr.accepts.begin(), pr.accepts.end(), label) != pr.accepts.end();
}

// Colour variables: equal variables need equal colours, distinct variables
// distinct colours; every constrained row must be coloured.
bool colours_consistent(const Pattern& p, const std::vector<int>& row_map,
                        const EnrichedMatrix& a, size_t upto) {
  Color var_colour[2] = {Color::None, Color::None};
  for (size_t i = 0; i < upto; ++i) {
    int v = p.rows[i].color_var;
    if (v < 0) continue;
    Color c = a.colors[row_map[i]];
    if (c == Color::None) return false;
    if (var_colour[v] == Color::None) {
      var_colour[v] = c;
    } else if (var_colour[v] != c) {
      return false;
    }
  }
  return !(var_colour[0] != Color::None && var_colour[0] == var_colour[1]);
}

}  // namespace

std::optional<ForbiddenHit> find_subconfiguration(const EnrichedMatrix& a, const Pattern& p) {
  const int pr = static_cast<int>(p.rows.size());
  const int pc = p.cols;
  if (pr > a.row_count() || pc > a.cols) return std::nullopt;
  // Candidate host rows per pattern row by label and colour availability.
  std::vector<std::vector<int>> candidates(pr);
  for (int i = 0; i < pr; ++i) {
    for (int r = 0; r < a.row_count(); ++r) {
      if (!label_accepted(p.rows[i], a.labels[r])) continue;
      if (p.rows[i].color_var >= 0 && a.colors[r] == Color::None) continue;
      if (a.rows[r].count() < p.rows[i].bits.count()) continue;
      candidates[i].push_back(r);
    }
    if (candidates[i].empty()) return std::nullopt;
  }
  std::vector<int> col_map(pc, -1);
  std::vector<char> col_used(a.cols, 0);
  std::vector<int> row_map(pr, -1);
  std::vector<char> row_used(a.row_count(), 0);
  // Host rows still compatible with every pattern row, given assigned columns.
  auto row_fits = [&](int i, int r, int assigned) {
    for (int j = 0; j < assigned; ++j) {
      if (a.rows[r][col_map[j]] != p.rows[i].bits[j]) return false;
    }
    return true;
  };
  std::function<bool(int)> assign_rows = [&](int i) -> bool {
    if (i == pr) return colours_consistent(p, row_map, a, pr);
    for (int r : candidates[i]) {
      if (row_used[r] || !row_fits(i, r, pc)) continue;
      row_map[i] = r;
      if (!colours_consistent(p, row_map, a, i + 1)) continue;
      row_used[r] = 1;
      if (assign_rows(i + 1)) return true;
      row_used[r] = 0;
    }
    return false;
  };
  std::function<bool(int)> assign_cols = [&](int j) -> bool {
    if (j == pc) return assign_rows(0);
    for (int c = 0; c < a.cols; ++c) {
      if (col_used[c]) continue;
      col_map[j] = c;
      bool viable = true;
      for (int i = 0; i < pr && viable; ++i) {
        bool any = false;
        for (int r : candidates[i]) {
          if (row_fits(i, r, j + 1)) {
            any = true;
            break;
          }
        }
        viable = any;
      }
      if (!viable) continue;
      col_used[c] = 1;
      if (assign_cols(j + 1)) return true;
      col_used[c] = 0;
    }
    col_map[j] = -1;
    return false;
  };
  if (!assign_cols(0)) return std::nullopt;
  ForbiddenHit hit;
  hit.tag = p.tag;
  hit.rows = row_map;
  hit.cols = col_map;
  return hit;
}

namespace {

// Two rows with equal pre-colours forming a 0-gem.
std::optional<ForbiddenHit> monochromatic_gem(const EnrichedMatrix& a) {
  for (int i = 0; i < a.row_count(); ++i) {
    for (int j = i + 1; j < a.row_count(); ++j) {
      if (a.colors[i] == Color::None || a.colors[i] != a.colors[j]) continue;
      RowBits both = a.rows[i] & a.rows[j];
      RowBits only_i = a.rows[i] & ~a.rows[j];
      RowBits only_j = a.rows[j] & ~a.rows[i];
      if (both.any() && only_i.any() && only_j.any()) {
        ForbiddenHit hit;
        hit.tag = "monochromatic gem";
        hit.rows = {i, j};
        hit.cols = {static_cast<int>(only_i._Find_first()), static_cast<int>(both._Find_first()),
                    static_cast<int>(only_j._Find_first())};
        return hit;
      }
    }
  }
  return std::nullopt;
}

// A* without tag columns.
EnrichedMatrix star_plain(const EnrichedMatrix& a) {
  TaggedMatrix t = star_tagged(a);
  std::vector<int> rows(t.matrix.row_count());
  for (int r = 0; r < t.matrix.row_count(); ++r) rows[r] = r;
  std::vector<int> cols(a.cols);
  for (int c = 0; c < a.cols; ++c) cols[c] = c;
  return submatrix(t.matrix, rows, cols);
}

}  // namespace

std::vector<ForbiddenHit> detect_forbidden(const EnrichedMatrix& a, bool first_per_family) {
  std::vector<ForbiddenHit> hits;
  std::vector<std::string> seen_families;
  EnrichedMatrix star = star_plain(a);
  EnrichedMatrix tagged = star_tagged(a).matrix;
  for (const MatrixPattern& mp : catalog_patterns(a.row_count(), a.cols, true)) {
    if (first_per_family && std::find(seen_families.begin(), seen_families.end(), mp.family) !=
                                seen_families.end()) {
      continue;
    }
    const EnrichedMatrix& host = !mp.pattern.on_star ? a
                                 : mp.family == "Tucker" ? tagged
                                                         : star;
    auto hit = find_subconfiguration(host, mp.pattern);
    if (!hit) continue;
    if (mp.pattern.on_star) hit->tag = "A*: " + hit->tag;
    hits.push_back(*hit);
    seen_families.push_back(mp.family);
  }
  if (auto gem = monochromatic_gem(a)) hits.push_back(*gem);
  return hits;
}

bool is_admissible(const EnrichedMatrix& a) {
  for (const MatrixPattern& mp : catalog_patterns(a.row_count(), a.cols, false)) {
    const std::string& f = mp.family;
    bool in_scope = (f.size() >= 2 && f[0] == 'D' && std::isdigit(static_cast<unsigned char>(f[1]))) ||
                    (f[0] == 'S' && f != "S0") || f[0] == 'P';
    if (!in_scope) continue;
    if (find_subconfiguration(a, mp.pattern)) return false;
  }
  return true;
}

}  // namespace splitcircle
