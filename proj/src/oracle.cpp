#include "splitcircle/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <numeric>
#include <set>
#include <unordered_map>

#include "splitcircle/chord.hpp"

namespace splitcircle {

OracleConfig default_oracle_config() {
  OracleConfig cfg;
  if (const char* env = std::getenv("SPLIT_CIRCLE_CAP")) {
    try {
      int cap = std::stoi(env);
      if (cap > 0) cfg.circle_cap = cap;
    } catch (const std::exception&) {
    }
  }
  return cfg;
}

bool oracle_is_circle(const Graph& g, const OracleConfig& cfg) {
  if (g.n() > cfg.circle_cap) {
    throw Error(ErrorKind::TooLarge, "circle oracle limited to " +
                                         std::to_string(cfg.circle_cap) + " vertices");
  }
  static std::mutex mu;
  static std::unordered_map<std::string, bool> memo;
  std::string key = canonical_form(g);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  bool verdict = oracle_model_search(g, cfg.circle_cap).has_value();
  std::lock_guard<std::mutex> lock(mu);
  memo.emplace(key, verdict);
  return verdict;
}

// ---------------------------------------------------------------- 2-nested oracle

namespace {

struct OBlock {
  int row;
  char kind;  // 'U', 'L', 'R'
  int lo;     // inclusive positions
  int hi;
};

bool ointersect(const OBlock& x, const OBlock& y) { return x.lo <= y.hi && y.lo <= x.hi; }
bool ocontains(const OBlock& outer, const OBlock& inner) {
  return outer.lo <= inner.lo && inner.hi <= outer.hi;
}

// Positions (under the ordering) where row r has a one.
std::vector<int> row_positions(const EnrichedMatrix& a, const std::vector<int>& order, int r) {
  std::vector<int> pos;
  for (int i = 0; i < a.cols; ++i) {
    if (a.rows[r][order[i]]) pos.push_back(i);
  }
  return pos;
}

bool consecutive(const std::vector<int>& pos) {
  return pos.empty() || pos.back() - pos.front() + 1 == static_cast<int>(pos.size());
}

bool oracle_lr_ordering(const EnrichedMatrix& a, const std::vector<int>& order) {
  const int m = a.cols;
  for (int r = 0; r < a.row_count(); ++r) {
    auto pos = row_positions(a, order, r);
    Label lab = a.labels[r];
    if (lab != Label::LR && !consecutive(pos)) return false;
    if (lab == Label::L && !pos.empty() && pos.front() != 0) return false;
    if (lab == Label::R && !pos.empty() && pos.back() != m - 1) return false;
    if (lab == Label::LR) {
      std::vector<int> comp;
      for (int i = 0; i < m; ++i) {
        if (std::find(pos.begin(), pos.end(), i) == pos.end()) comp.push_back(i);
      }
      if (!consecutive(comp)) return false;
    }
  }
  return true;
}

bool verify_colouring(const EnrichedMatrix& a, const std::vector<OBlock>& bl,
                      const std::vector<int>& colour) {
  auto is_lr = [&](int i) { return a.labels[bl[i].row] == Label::LR; };
  const int nb = static_cast<int>(bl.size());
  for (int i = 0; i < nb; ++i) {
    // Condition 2.
    Color pre = a.colors[bl[i].row];
    if (pre == Color::Red && colour[i] != 0) return false;
    if (pre == Color::Blue && colour[i] != 1) return false;
    for (int j = 0; j < nb; ++j) {
      if (i == j) continue;
      const OBlock& x = bl[i];
      const OBlock& y = bl[j];
      bool same = colour[i] == colour[j];
      // Condition 1.
      if (x.row == y.row && is_lr(i) && same) return false;
      // Condition 3, and its mirror for R-blocks.
      if (is_lr(i) && x.kind != 'U' && y.kind == x.kind && !is_lr(j) &&
          a.labels[y.row] == (x.kind == 'L' ? Label::L : Label::R) && ocontains(y, x) &&
          (y.hi - y.lo) > (x.hi - x.lo) && same) {
        return false;
      }
      // Condition 4.
      if (is_lr(i) && x.kind == 'L' && y.kind == 'R' && ointersect(x, y)) return false;
      if (is_lr(i) && x.kind == 'R' && y.kind == 'L' && ointersect(x, y)) return false;
      // Condition 5.
      if (x.kind == 'L' && y.kind == 'R' && ointersect(x, y) && same) return false;
      // Condition 6.
      if (x.kind == 'U' && y.kind == 'U' && same && ointersect(x, y) && !ocontains(x, y) &&
          !ocontains(y, x)) {
        return false;
      }
      // Condition 7.
      if ((x.kind == 'L' || x.kind == 'R') && y.kind == 'U' && same && ointersect(x, y) &&
          !ocontains(x, y)) {
        return false;
      }
    }
  }
  // Condition 8.
  for (char side : {'L', 'R'}) {
    bool red = false, blue = false;
    for (int i = 0; i < nb; ++i) {
      if (bl[i].kind != side || is_lr(i)) continue;
      (colour[i] == 0 ? red : blue) = true;
    }
    if (!(red && blue)) continue;
    for (int r = 0; r < a.row_count(); ++r) {
      if (a.labels[r] != Label::LR) continue;
      bool has = false;
      for (const OBlock& b : bl) has = has || (b.row == r && b.kind == side);
      if (!has) return false;
    }
  }
  // Condition 9.
  for (int r1 = 0; r1 < a.row_count(); ++r1) {
    for (int r2 = 0; r2 < a.row_count(); ++r2) {
      if (r1 == r2 || a.labels[r1] != Label::LR || a.labels[r2] != Label::LR) continue;
      const RowBits& x = a.rows[r1];
      const RowBits& y = a.rows[r2];
      bool overlap = (x & y).any() && (x & ~y).any() && (y & ~x).any();
      if (!overlap) continue;
      for (int i = 0; i < nb; ++i) {
        for (int j = 0; j < nb; ++j) {
          if (bl[i].row == r1 && bl[j].row == r2 && bl[i].kind == 'L' && bl[j].kind == 'R' &&
              colour[i] != colour[j]) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

bool oracle_suitable(const EnrichedMatrix& a, const std::vector<OBlock>& bl) {
  for (int r = 0; r < a.row_count(); ++r) {
    if (a.labels[r] != Label::LR) continue;
    int li = -1, ri = -1;
    for (int i = 0; i < static_cast<int>(bl.size()); ++i) {
      if (bl[i].row != r) continue;
      if (bl[i].kind == 'L') li = i;
      if (bl[i].kind == 'R') ri = i;
    }
    if (li >= 0 && ri >= 0) {
      for (const OBlock& y : bl) {
        if (y.kind == 'R' && ointersect(bl[li], y)) return false;
        if (y.kind == 'L' && ointersect(bl[ri], y)) return false;
      }
      for (const OBlock& y : bl) {
        if (y.kind == 'U' && ointersect(bl[li], y) && ointersect(bl[ri], y)) return false;
      }
    }
  }
  return true;
}

}  // namespace

OracleTwoNested oracle_is_2nested(const EnrichedMatrix& a, const OracleConfig& cfg) {
  if (a.cols > cfg.matrix_cap) {
    throw Error(ErrorKind::TooLarge, "2-nested oracle limited to " +
                                         std::to_string(cfg.matrix_cap) + " columns");
  }
  OracleTwoNested res;
  const int m = a.cols;
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  do {
    if (!oracle_lr_ordering(a, order)) continue;
    // Full LR-rows: every split point.
    std::vector<int> full;
    for (int r = 0; r < a.row_count(); ++r) {
      if (a.labels[r] == Label::LR && m > 0 && static_cast<int>(a.rows[r].count()) == m) {
        full.push_back(r);
      }
    }
    std::vector<int> split(full.size(), 0);
    while (true) {
      std::vector<OBlock> bl;
      for (int r = 0; r < a.row_count(); ++r) {
        auto pos = row_positions(a, order, r);
        if (pos.empty()) continue;
        int s = static_cast<int>(pos.size());
        switch (a.labels[r]) {
          case Label::U: bl.push_back({r, 'U', pos.front(), pos.back()}); break;
          case Label::L: bl.push_back({r, 'L', 0, s - 1}); break;
          case Label::R: bl.push_back({r, 'R', m - s, m - 1}); break;
          case Label::LR: {
            auto it = std::find(full.begin(), full.end(), r);
            if (it != full.end()) {
              int cut = split[it - full.begin()];
              if (cut > 0) bl.push_back({r, 'L', 0, cut - 1});
              if (cut < m) bl.push_back({r, 'R', cut, m - 1});
              break;
            }
            int left = 0;
            while (left < s && pos[left] == left) ++left;
            int right = 0;
            while (right < s && pos[s - 1 - right] == m - 1 - right) ++right;
            if (left > 0) bl.push_back({r, 'L', 0, left - 1});
            if (right > 0) bl.push_back({r, 'R', m - right, m - 1});
            break;
          }
        }
      }
      if (oracle_suitable(a, bl)) {
        const int nb = static_cast<int>(bl.size());
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << nb); ++mask) {
          std::vector<int> colour(nb);
          for (int i = 0; i < nb; ++i) colour[i] = (mask >> i) & 1;
          if (!verify_colouring(a, bl, colour)) continue;
          TwoNestedCertificate cert;
          cert.ordering = order;
          for (int i = 0; i < nb; ++i) {
            Block b;
            b.row = bl[i].row;
            b.kind = bl[i].kind == 'U' ? BlockKind::U
                     : bl[i].kind == 'L' ? BlockKind::L
                                         : BlockKind::R;
            b.begin = bl[i].lo;
            b.end = bl[i].hi + 1;
            b.color = colour[i] == 0 ? Color::Red : Color::Blue;
            cert.blocks.push_back(b);
          }
          res.two_nested = true;
          res.certificate = cert;
          return res;
        }
      }
      size_t i = 0;
      while (i < split.size() && split[i] == m) split[i++] = 0;
      if (i == split.size()) break;
      ++split[i];
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return res;
}

bool oracle_is_nested(const EnrichedMatrix& a, const OracleConfig& cfg) {
  if (a.cols > cfg.matrix_cap) {
    throw Error(ErrorKind::TooLarge, "nested oracle limited to " +
                                         std::to_string(cfg.matrix_cap) + " columns");
  }
  std::vector<int> order(a.cols);
  std::iota(order.begin(), order.end(), 0);
  do {
    std::vector<std::pair<int, int>> spans;
    bool ok = true;
    for (int r = 0; r < a.row_count() && ok; ++r) {
      auto pos = row_positions(a, order, r);
      ok = consecutive(pos);
      if (!pos.empty()) spans.push_back({pos.front(), pos.back()});
    }
    for (size_t i = 0; i < spans.size() && ok; ++i) {
      for (size_t j = i + 1; j < spans.size() && ok; ++j) {
        auto [a1, b1] = spans[i];
        auto [a2, b2] = spans[j];
        bool disjoint = b1 < a2 || b2 < a1;
        bool nested = (a1 <= a2 && b2 <= b1) || (a2 <= a1 && b1 <= b2);
        ok = disjoint || nested;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(order.begin(), order.end()));
  return false;
}

// ---------------------------------------------------------------- split graphs

bool is_split_graph(const Graph& g) {
  // Hammer-Simeone degree sequence test.
  std::vector<int> deg(g.n());
  for (int v = 0; v < g.n(); ++v) deg[v] = g.degree(v);
  std::sort(deg.rbegin(), deg.rend());
  int mx = 0;
  for (int i = 0; i < g.n(); ++i) {
    if (deg[i] >= i) mx = i + 1;
  }
  long lhs = 0, rhs = static_cast<long>(mx) * (mx - 1);
  for (int i = 0; i < mx; ++i) lhs += deg[i];
  for (int i = mx; i < g.n(); ++i) rhs += deg[i];
  return lhs == rhs;
}

std::vector<Graph> enumerate_split_graphs(int n) {
  if (n < 0 || n > 9) throw Error(ErrorKind::TooLarge, "split enumeration limited to n <= 9");
  std::vector<Graph> out;
  std::set<std::string> seen;
  for (int a = n; a >= 0; --a) {
    int b = n - a;
    int subsets = 1 << a;
    // Non-decreasing sequences of b neighbourhoods.
    std::vector<int> nb(b, 0);
    std::function<void(int, int)> rec = [&](int i, int lo) {
      if (i == b) {
        Graph g(n);
        for (int x = 0; x < a; ++x) {
          for (int y = x + 1; y < a; ++y) g.add_edge(x, y);
        }
        for (int s = 0; s < b; ++s) {
          for (int x = 0; x < a; ++x) {
            if (nb[s] >> x & 1) g.add_edge(a + s, x);
          }
        }
        if (seen.insert(canonical_form(g)).second) out.push_back(g);
        return;
      }
      for (int mask = lo; mask < subsets; ++mask) {
        nb[i] = mask;
        rec(i + 1, mask);
      }
    };
    rec(0, 0);
  }
  return out;
}

Graph random_split_graph(std::mt19937_64& rng, int n, double p) {
  std::uniform_int_distribution<int> size_dist(1, std::max(1, n - 1));
  std::bernoulli_distribution coin(p);
  int a = n <= 1 ? n : size_dist(rng);
  Graph g(n);
  for (int x = 0; x < a; ++x) {
    for (int y = x + 1; y < a; ++y) g.add_edge(x, y);
  }
  for (int s = a; s < n; ++s) {
    for (int x = 0; x < a; ++x) {
      if (coin(rng)) g.add_edge(s, x);
    }
  }
  // Random relabelling so clique vertices are not always first.
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return induced_subgraph(g, perm);
}

EnrichedMatrix random_enriched_matrix(std::mt19937_64& rng, int max_rows, int max_cols) {
  std::uniform_int_distribution<int> rows_dist(1, max_rows);
  std::uniform_int_distribution<int> cols_dist(1, max_cols);
  std::uniform_int_distribution<int> label_dist(0, 3);
  std::uniform_int_distribution<int> colour_dist(0, 2);
  std::bernoulli_distribution coin(0.5);
  EnrichedMatrix a;
  a.cols = cols_dist(rng);
  int n = rows_dist(rng);
  Color empty_lr = coin(rng) ? Color::Red : Color::Blue;
  bool colour_empty_lr = coin(rng);
  for (int r = 0; r < n; ++r) {
    Label lab = static_cast<Label>(label_dist(rng));
    RowBits bits;
    for (int c = 0; c < a.cols; ++c) {
      if (coin(rng)) bits.set(c);
    }
    Color col = Color::None;
    if (lab == Label::L || lab == Label::R) col = static_cast<Color>(colour_dist(rng));
    if (lab == Label::LR && bits.none() && colour_empty_lr) col = empty_lr;
    a.add_row(bits, lab, col);
  }
  return a;
}

}  // namespace splitcircle
