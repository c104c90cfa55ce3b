#include "splitcircle/model.hpp"

#include <algorithm>
#include <functional>

namespace splitcircle {

namespace {

// Implication-graph 2-SAT over boolean variables; literal 2v is "v true".
class TwoSat {
 public:
  explicit TwoSat(int vars) : n_(vars), graph_(2 * vars) {}

  // Forbids (v == a) and (w == b) holding together.
  void forbid(int v, bool a, int w, bool b) {
    int x = lit(v, a), y = lit(w, b);
    graph_[x].push_back(y ^ 1);
    graph_[y].push_back(x ^ 1);
  }

  void forbid(int v, bool a) { graph_[lit(v, a)].push_back(lit(v, !a)); }

  std::optional<std::vector<bool>> solve() {
    const int m = 2 * n_;
    std::vector<int> index(m, -1), low(m, 0), comp(m, -1), stack;
    std::vector<char> on(m, 0);
    int counter = 0, comps = 0;
    std::function<void(int)> dfs = [&](int u) {
      index[u] = low[u] = counter++;
      stack.push_back(u);
      on[u] = 1;
      for (int w : graph_[u]) {
        if (index[w] < 0) {
          dfs(w);
          low[u] = std::min(low[u], low[w]);
        } else if (on[w]) {
          low[u] = std::min(low[u], index[w]);
        }
      }
      if (low[u] == index[u]) {
        while (true) {
          int w = stack.back();
          stack.pop_back();
          on[w] = 0;
          comp[w] = comps;
          if (w == u) break;
        }
        ++comps;
      }
    };
    for (int u = 0; u < m; ++u) {
      if (index[u] < 0) dfs(u);
    }
    std::vector<bool> value(n_);
    for (int v = 0; v < n_; ++v) {
      if (comp[2 * v] == comp[2 * v + 1]) return std::nullopt;
      // Tarjan numbers components in reverse topological order.
      value[v] = comp[2 * v] < comp[2 * v + 1];
    }
    return value;
  }

 private:
  static int lit(int v, bool a) { return 2 * v + (a ? 0 : 1); }
  int n_;
  std::vector<std::vector<int>> graph_;
};

struct Chord {
  int p = 0;
  int q = 0;
};

bool interleave(const Chord& x, const Chord& y) {
  return (x.p < y.p && y.p < x.q && x.q < y.q) || (y.p < x.p && x.p < y.q && y.q < x.q);
}

Chord normalized(int a, int b) { return a < b ? Chord{a, b} : Chord{b, a}; }

}  // namespace

std::optional<ChordModel> place_on_order(const Graph& g, const SplitPartition& sp,
                                         const std::vector<int>& order,
                                         const std::vector<std::string>& arc_names) {
  const int m = static_cast<int>(order.size());
  if (m != static_cast<int>(sp.K.count())) {
    throw Error(ErrorKind::InvalidState, "order must list every clique vertex once");
  }
  std::vector<int> pos(g.n(), -1);
  for (int i = 0; i < m; ++i) pos[order[i]] = i;

  std::vector<int> isolated, full, partial;
  std::vector<int> start(g.n(), 0), length(g.n(), 0);
  for (int s = 0; s < g.n(); ++s) {
    if (!sp.S[s]) continue;
    VertexSet nb = g.neighbors(s) & sp.K;
    int l = static_cast<int>(nb.count());
    if (l == 0) {
      isolated.push_back(s);
      continue;
    }
    if (l == m) {
      full.push_back(s);
      continue;
    }
    // Start of the circular interval: a member whose predecessor is outside.
    int x = -1;
    for (int i = 0; i < m && x < 0; ++i) {
      if (nb[order[i]] && !nb[order[(i + m - 1) % m]]) x = i;
    }
    for (int t = 0; t < l; ++t) {
      if (!nb[order[(x + t) % m]]) return std::nullopt;
    }
    start[s] = x;
    length[s] = l;
    partial.push_back(s);
  }

  const int cnt = static_cast<int>(partial.size());
  auto chord_of = [&](int idx, bool second) {
    int s = partial[idx];
    int base = start[s] + (second ? m : 0);
    return normalized(base % (2 * m), (base + length[s]) % (2 * m));
  };
  std::vector<std::array<Chord, 2>> options(cnt);
  for (int i = 0; i < cnt; ++i) options[i] = {chord_of(i, false), chord_of(i, true)};

  std::optional<std::vector<bool>> choice;
  int shift = 0;
  for (int t = 0; t < (full.empty() ? 1 : m) && !choice; ++t) {
    TwoSat sat(cnt);
    Chord diameter{t, t + m};
    for (int i = 0; i < cnt; ++i) {
      for (int a = 0; a < 2; ++a) {
        if (!full.empty() && interleave(options[i][a], diameter)) sat.forbid(i, a == 1);
        for (int j = i + 1; j < cnt; ++j) {
          for (int b = 0; b < 2; ++b) {
            if (interleave(options[i][a], options[j][b])) sat.forbid(i, a == 1, j, b == 1);
          }
        }
      }
    }
    choice = sat.solve();
    shift = t;
  }
  if (!choice) return std::nullopt;

  std::vector<Chord> chords;
  std::vector<int> owner;
  for (int i = 0; i < cnt; ++i) {
    chords.push_back(options[i][(*choice)[i] ? 1 : 0]);
    owner.push_back(partial[i]);
  }
  for (int s : full) {
    chords.push_back({shift, shift + m});
    owner.push_back(s);
  }
  // Endpoints per gap; gap k lies just before clique slot k.
  struct End {
    int chord;
    bool closing;
  };
  std::vector<std::vector<End>> gaps(2 * m);
  for (int c = 0; c < static_cast<int>(chords.size()); ++c) {
    gaps[chords[c].p].push_back({c, false});
    gaps[chords[c].q].push_back({c, true});
  }
  ChordModel model;
  const bool named = !arc_names.empty();
  auto arc_at = [&](int slot) {
    if (!named) return std::string();
    int k = ((slot % (2 * m)) + 2 * m) % (2 * m);
    return arc_names[k % m] + (k < m ? "-" : "+");
  };
  for (int s : isolated) {
    model.word.push_back(s);
    model.word.push_back(s);
    if (named) {
      model.arcs.push_back(arc_at(-1));
      model.arcs.push_back(arc_at(-1));
    }
  }
  for (int k = 0; k < 2 * m; ++k) {
    std::vector<End>& ends = gaps[k];
    std::sort(ends.begin(), ends.end(), [&](const End& x, const End& y) {
      if (x.closing != y.closing) return x.closing;
      const Chord& a = chords[x.chord];
      const Chord& b = chords[y.chord];
      if (x.closing) {
        if (a.p != b.p) return a.p > b.p;
        return x.chord > y.chord;
      }
      if (a.q != b.q) return a.q > b.q;
      return x.chord < y.chord;
    });
    for (const End& e : ends) {
      model.word.push_back(owner[e.chord]);
      if (named) model.arcs.push_back(arc_at(k - 1));
    }
    model.word.push_back(order[k % m]);
    if (named) model.arcs.push_back(arc_at(k));
  }
  if (interlacement(model) != g) return std::nullopt;
  return model;
}

std::optional<ChordModel> synthesize_split_model(const Graph& g, const SplitPartition& sp,
                                                 long max_orders) {
  std::vector<int> cols = members(sp.K);
  const int m = static_cast<int>(cols.size());
  if (m == 0) return place_on_order(g, sp, {});
  EnrichedMatrix a;
  a.cols = m;
  RowBits first;
  first.set(0);
  a.add_row(first, Label::L);
  for (int s = 0; s < g.n(); ++s) {
    if (!sp.S[s]) continue;
    RowBits bits;
    for (int j = 0; j < m; ++j) {
      if (g.adjacent(s, cols[j])) bits.set(j);
    }
    int l = static_cast<int>(bits.count());
    if (l == 0 || l == m) continue;
    a.add_row(bits, bits[0] ? Label::LR : Label::U);
  }
  std::optional<ChordModel> found;
  long seen = 0;
  for_each_lr_ordering(a, [&](const ColumnOrdering& o) {
    std::vector<int> order;
    for (int c : o) order.push_back(cols[c]);
    found = place_on_order(g, sp, order);
    return !found && ++seen < max_orders;
  });
  return found;
}

BuiltModel build_model(const Graph& g, const SplitPartition& sp, const KPartition& kp,
                       const CaseMatrices& cm, const CaseVerdict& verdict) {
  if (!verdict.circle_ok) throw Error(ErrorKind::InvalidState, "build_model needs a passing verdict");
  const int n = kp.class_count();
  std::vector<std::vector<int>> pi(n + 1);
  for (int i = 1; i <= n; ++i) {
    const CaseMatrix& m = cm.per_class[i - 1];
    const auto& cert = verdict.checks[i - 1].certificate;
    if (cert && static_cast<int>(cert->ordering.size()) == m.matrix.cols) {
      for (int c : cert->ordering) pi[i].push_back(m.matrix.col_ids[c]);
    } else {
      pi[i] = m.matrix.col_ids;
    }
  }
  std::vector<int> class_order;
  for (int i = 1; i <= n; ++i) class_order.push_back(i);
  if (kp.kind == CaseKind::CoFourTent) std::reverse(class_order.begin(), class_order.end());
  for (int attempt = 0; attempt < 2; ++attempt) {
    std::vector<int> order;
    std::vector<std::string> names;
    for (int i : class_order) {
      for (int v : pi[i]) {
        order.push_back(v);
        names.push_back("K" + std::to_string(i));
      }
    }
    if (auto model = place_on_order(g, sp, order, names)) return {*model, "classes"};
    std::reverse(class_order.begin(), class_order.end());
    for (auto& p : pi) std::reverse(p.begin(), p.end());
  }
  if (auto model = synthesize_split_model(g, sp)) return {*model, "search"};
  throw Error(ErrorKind::InternalInconsistency, "no circle model found for a passing verdict");
}

}  // namespace splitcircle
