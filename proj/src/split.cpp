#include "splitcircle/split.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "splitcircle/catalog.hpp"

namespace splitcircle {

namespace {

bool is_clique(const Graph& g, const VertexSet& k) {
  for (int u = 0; u < g.n(); ++u) {
    if (!k[u]) continue;
    VertexSet rest = k;
    rest.reset(u);
    if ((g.neighbors(u) & rest) != rest) return false;
  }
  return true;
}

bool is_stable(const Graph& g, const VertexSet& s) {
  for (int u = 0; u < g.n(); ++u) {
    if (s[u] && (g.neighbors(u) & s).any()) return false;
  }
  return true;
}

bool sorted_less(const VertexSet& a, const VertexSet& b) {
  std::vector<int> x = members(a), y = members(b);
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

}  // namespace

bool is_valid_split_partition(const Graph& g, const SplitPartition& sp) {
  VertexSet all = full_set(g.n());
  if ((sp.K | sp.S) != all || (sp.K & sp.S).any()) return false;
  return is_clique(g, sp.K) && is_stable(g, sp.S);
}

SplitPartition split_partition(const Graph& g) {
  const int n = g.n();
  if (n == 0) return {};
  // Degree-sequence test: the m highest-degree vertices form the clique.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });
  int m = 0;
  for (int i = 0; i < n; ++i) {
    if (g.degree(order[i]) >= i) m = i + 1;
  }
  SplitPartition sp;
  for (int i = 0; i < m; ++i) sp.K.set(order[i]);
  sp.S = full_set(n) & ~sp.K;
  if (!is_valid_split_partition(g, sp)) {
    if (n <= 12) {
      auto ex = split_partition_exhaustive(g);
      if (ex) return *ex;
    }
    throw Error(ErrorKind::NotSplit, "graph has no clique/stable partition");
  }
  // Grow K to a maximum clique.
  for (int s = 0; s < n; ++s) {
    if (sp.S[s] && (g.neighbors(s) & sp.K) == sp.K) {
      sp.K.set(s);
      sp.S.reset(s);
    }
  }
  // Other maximum partitions differ by one swap k <-> s with N(s) = K - k.
  SplitPartition best = sp;
  for (int s = 0; s < n; ++s) {
    if (!sp.S[s]) continue;
    VertexSet missing = sp.K & ~g.neighbors(s);
    if (missing.count() != 1) continue;
    int k = static_cast<int>(missing._Find_first());
    if ((g.neighbors(k) & sp.S).any()) continue;
    SplitPartition alt = sp;
    alt.K.reset(k);
    alt.K.set(s);
    alt.S.reset(s);
    alt.S.set(k);
    if (sorted_less(alt.K, best.K)) best = alt;
  }
  return best;
}

std::optional<SplitPartition> split_partition_exhaustive(const Graph& g) {
  const int n = g.n();
  if (n > 16) throw Error(ErrorKind::TooLarge, "exhaustive split search is limited to 16 vertices");
  std::optional<SplitPartition> best;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    SplitPartition sp;
    for (int v = 0; v < n; ++v) (mask >> v & 1 ? sp.K : sp.S).set(v);
    if (!is_valid_split_partition(g, sp)) continue;
    if (!best || sp.K.count() > best->K.count() ||
        (sp.K.count() == best->K.count() && sorted_less(sp.K, best->K))) {
      best = sp;
    }
  }
  return best;
}

const char* to_string(CaseKind kind) {
  switch (kind) {
    case CaseKind::Tent: return "tent";
    case CaseKind::FourTent: return "4-tent";
    case CaseKind::CoFourTent: return "co-4-tent";
    case CaseKind::Net: return "net";
    case CaseKind::None: return "none";
  }
  return "?";
}

Graph anchor_graph(CaseKind kind) {
  switch (kind) {
    case CaseKind::Tent: return tent_graph();
    case CaseKind::FourTent: return four_tent_graph();
    case CaseKind::CoFourTent: return co_four_tent_graph();
    case CaseKind::Net: return net_graph();
    case CaseKind::None: break;
  }
  throw Error(ErrorKind::WrongCase, "no anchor graph for this case");
}

int anchor_clique_size(CaseKind kind) {
  switch (kind) {
    case CaseKind::FourTent: return 4;
    case CaseKind::Tent:
    case CaseKind::CoFourTent:
    case CaseKind::Net: return 3;
    case CaseKind::None: break;
  }
  throw Error(ErrorKind::WrongCase, "no anchor graph for this case");
}

std::optional<Embedding> find_anchor(const Graph& g, const SplitPartition& sp, CaseKind kind) {
  const Graph a = anchor_graph(kind);
  const int p = a.n();
  const int kc = anchor_clique_size(kind);
  Embedding map(p, -1);
  VertexSet used;
  std::function<bool(int)> rec = [&](int i) -> bool {
    if (i == p) return true;
    const VertexSet& pool = i < kc ? sp.K : sp.S;
    for (int v = 0; v < g.n(); ++v) {
      if (!pool[v] || used[v]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) ok = a.adjacent(i, j) == g.adjacent(v, map[j]);
      if (!ok) continue;
      map[i] = v;
      used.set(v);
      if (rec(i + 1)) return true;
      used.reset(v);
    }
    map[i] = -1;
    return false;
  };
  if (rec(0)) return map;
  return std::nullopt;
}

CaseWitness detect_case(const Graph& g, const SplitPartition& sp) {
  for (CaseKind kind : {CaseKind::Tent, CaseKind::FourTent, CaseKind::CoFourTent, CaseKind::Net}) {
    if (auto e = find_anchor(g, sp, kind)) return {kind, *e};
  }
  return {};
}

Graph Decomposition::recompose() const {
  return split_composition(factor_one, marker_one, factor_two, marker_two);
}

std::optional<Decomposition> class_split(const Graph& g, const SplitPartition& sp,
                                         const VertexSet& clique_class) {
  if (clique_class.none()) return std::nullopt;
  VertexSet a = clique_class;
  for (int s = 0; s < g.n(); ++s) {
    if (!sp.S[s]) continue;
    VertexSet nb = g.neighbors(s);
    if (nb.any() && (nb & ~clique_class).none()) a.set(s);
  }
  VertexSet b = full_set(g.n()) & ~a;
  // Frontiers: vertices with a neighbour across the cut.
  VertexSet front_a, front_b;
  for (int v = 0; v < g.n(); ++v) {
    if (a[v] && (g.neighbors(v) & b).any()) front_a.set(v);
    if (b[v] && (g.neighbors(v) & a).any()) front_b.set(v);
  }
  for (int v = 0; v < g.n(); ++v) {
    if (a[v] && front_a[v] && (g.neighbors(v) & b) != front_b) return std::nullopt;
    if (b[v] && front_b[v] && (g.neighbors(v) & a) != front_a) return std::nullopt;
  }
  if (a.count() < 2 || b.count() < 2) return std::nullopt;
  auto make = [&](const VertexSet& side, const VertexSet& front, Graph& out,
                  std::vector<int>& part, int& marker) {
    part = members(side);
    std::vector<int> vs = part;
    out = induced_subgraph(g, vs);
    Graph h(out.n() + 1);
    for (auto [x, y] : out.edges()) h.add_edge(x, y);
    marker = out.n();
    for (int i = 0; i < static_cast<int>(part.size()); ++i) {
      if (front[part[i]]) h.add_edge(i, marker);
    }
    out = h;
  };
  Decomposition d;
  make(a, front_a, d.factor_one, d.part_one, d.marker_one);
  make(b, front_b, d.factor_two, d.part_two, d.marker_two);
  return d;
}

NetDispatch dispatch_net(const Graph& g, const SplitPartition& sp, const CaseWitness& cw) {
  if (cw.kind != CaseKind::Net || cw.embedding.size() != 6) {
    throw Error(ErrorKind::WrongCase, "dispatch_net needs a net witness");
  }
  const int s1 = cw.embedding[3], s3 = cw.embedding[4], s5 = cw.embedding[5];
  NetDispatch out;
  out.classes.assign(8, VertexSet());
  for (int k = 0; k < g.n(); ++k) {
    if (!sp.K[k]) continue;
    bool a1 = g.adjacent(k, s1), a3 = g.adjacent(k, s3), a5 = g.adjacent(k, s5);
    int cls = -1;
    if (a1 && !a3 && !a5) cls = 1;
    if (a1 && a3 && !a5) cls = 2;
    if (!a1 && a3 && !a5) cls = 3;
    if (!a1 && a3 && a5) cls = 4;
    if (!a1 && !a3 && a5) cls = 5;
    if (a1 && !a3 && a5) cls = 6;
    if (!a1 && !a3 && !a5) cls = 7;
    if (cls < 0) {
      out.unclassified.set(k);
      continue;
    }
    out.classes[cls].set(k);
  }
  if (out.unclassified.any()) return out;
  int nonempty = out.classes[2].any() + out.classes[4].any() + out.classes[6].any();
  if (nonempty >= 2) {
    auto e = find_anchor(g, sp, CaseKind::FourTent);
    if (!e) throw Error(ErrorKind::InternalInconsistency, "net with two even classes but no 4-tent");
    out.found_four_tent = true;
    out.four_tent = *e;
    return out;
  }
  // The odd class between the two empty even classes is split off.
  int centre = !out.classes[2].any() && !out.classes[4].any() ? 3
               : !out.classes[4].any() && !out.classes[6].any() ? 5
                                                                 : 1;
  out.decomposition = class_split(g, sp, out.classes[centre]);
  return out;
}

}  // namespace splitcircle
