#include "splitcircle/graph.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace splitcircle {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidVertex: return "InvalidVertex";
    case ErrorKind::NotAnEdge: return "NotAnEdge";
    case ErrorKind::FactorTooSmall: return "FactorTooSmall";
    case ErrorKind::NotSplit: return "NotSplit";
    case ErrorKind::NotDecomposable: return "NotDecomposable";
    case ErrorKind::WrongCase: return "WrongCase";
    case ErrorKind::InvalidParameter: return "InvalidParameter";
    case ErrorKind::NotDoubleOccurrence: return "NotDoubleOccurrence";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::InvalidState: return "InvalidState";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::NoScript: return "NoScript";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) {
    throw Error(ErrorKind::TooLarge, "vertex count " + std::to_string(n) + " outside [0, " +
                                         std::to_string(kMaxVertices) + "]");
  }
  adj_.assign(static_cast<size_t>(n), VertexSet{});
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::check_vertex(int u) const {
  if (u < 0 || u >= n_) {
    throw Error(ErrorKind::InvalidVertex, "vertex " + std::to_string(u) + " not in [0, " +
                                              std::to_string(n_) + ")");
  }
}

bool Graph::adjacent(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return adj_[u][v];
}

const VertexSet& Graph::neighbors(int u) const {
  check_vertex(u);
  return adj_[u];
}

int Graph::degree(int u) const { return static_cast<int>(neighbors(u).count()); }

int Graph::edge_count() const {
  size_t total = 0;
  for (const auto& s : adj_) total += s.count();
  return static_cast<int>(total / 2);
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw Error(ErrorKind::InvalidVertex, "self-loop on vertex " + std::to_string(u));
  adj_[u].set(v);
  adj_[v].set(u);
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  adj_[u].reset(v);
  adj_[v].reset(u);
}

void Graph::toggle_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) return;
  adj_[u].flip(v);
  adj_[v].flip(u);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      if (adj_[u][v]) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<int> Graph::neighbor_list(int u) const { return members(neighbors(u)); }

bool Graph::operator==(const Graph& other) const { return n_ == other.n_ && adj_ == other.adj_; }

VertexSet full_set(int n) {
  VertexSet s;
  for (int i = 0; i < n; ++i) s.set(i);
  return s;
}

std::vector<int> members(const VertexSet& s) {
  std::vector<int> out;
  for (int i = 0; i < kMaxVertices; ++i) {
    if (s[i]) out.push_back(i);
  }
  return out;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vs) {
  VertexSet seen;
  for (int v : vs) {
    if (v < 0 || v >= g.n()) {
      throw Error(ErrorKind::InvalidVertex, "vertex " + std::to_string(v) + " out of range");
    }
    if (seen[v]) throw Error(ErrorKind::InvalidVertex, "duplicate vertex " + std::to_string(v));
    seen.set(v);
  }
  const int k = static_cast<int>(vs.size());
  Graph h(k);
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (g.adjacent(vs[i], vs[j])) h.add_edge(i, j);
    }
  }
  return h;
}

Graph complement(const Graph& g) {
  Graph h(g.n());
  for (int u = 0; u < g.n(); ++u) {
    for (int v = u + 1; v < g.n(); ++v) {
      if (!g.adjacent(u, v)) h.add_edge(u, v);
    }
  }
  return h;
}

Graph local_complement(const Graph& g, int u) {
  Graph h = g;
  const std::vector<int> nb = g.neighbor_list(u);
  for (size_t i = 0; i < nb.size(); ++i) {
    for (size_t j = i + 1; j < nb.size(); ++j) h.toggle_edge(nb[i], nb[j]);
  }
  return h;
}

Graph pivot(const Graph& g, int u, int v) {
  if (!g.adjacent(u, v)) {
    throw Error(ErrorKind::NotAnEdge,
                "pivot requires an edge, got " + std::to_string(u) + " " + std::to_string(v));
  }
  return local_complement(local_complement(local_complement(g, u), v), u);
}

Graph split_composition(const Graph& g1, int v1, const Graph& g2, int v2) {
  if (g1.n() < 3 || g2.n() < 3) {
    throw Error(ErrorKind::FactorTooSmall, "split composition needs factors with at least 3 vertices");
  }
  g1.neighbors(v1);
  g2.neighbors(v2);
  std::vector<int> map1(g1.n(), -1), map2(g2.n(), -1);
  int next = 0;
  for (int u = 0; u < g1.n(); ++u) {
    if (u != v1) map1[u] = next++;
  }
  for (int u = 0; u < g2.n(); ++u) {
    if (u != v2) map2[u] = next++;
  }
  Graph h(next);
  for (auto [a, b] : g1.edges()) {
    if (a != v1 && b != v1) h.add_edge(map1[a], map1[b]);
  }
  for (auto [a, b] : g2.edges()) {
    if (a != v2 && b != v2) h.add_edge(map2[a], map2[b]);
  }
  for (int a : g1.neighbor_list(v1)) {
    for (int b : g2.neighbor_list(v2)) h.add_edge(map1[a], map2[b]);
  }
  return h;
}

namespace {

// Pattern vertices ordered so that each one is maximally connected to the prefix.
std::vector<int> search_order(const Graph& p) {
  std::vector<int> order;
  std::vector<bool> used(p.n(), false);
  std::vector<int> links(p.n(), 0);
  for (int step = 0; step < p.n(); ++step) {
    int best = -1;
    for (int v = 0; v < p.n(); ++v) {
      if (used[v]) continue;
      if (best < 0 || links[v] > links[best] ||
          (links[v] == links[best] && p.degree(v) > p.degree(best))) {
        best = v;
      }
    }
    used[best] = true;
    order.push_back(best);
    for (int w : p.neighbor_list(best)) ++links[w];
  }
  return order;
}

bool extend_embedding(const Graph& g, const Graph& p, const std::vector<int>& order, size_t depth,
                      Embedding& map, VertexSet& used) {
  if (depth == order.size()) return true;
  const int pv = order[depth];
  VertexSet cand = full_set(g.n()) & ~used;
  for (size_t i = 0; i < depth; ++i) {
    const int q = order[i];
    const VertexSet& nq = g.neighbors(map[q]);
    cand &= p.adjacent(pv, q) ? nq : ~nq;
  }
  const int need = p.degree(pv);
  for (int h = 0; h < g.n(); ++h) {
    if (!cand[h] || g.degree(h) < need) continue;
    map[pv] = h;
    used.set(h);
    if (extend_embedding(g, p, order, depth + 1, map, used)) return true;
    used.reset(h);
  }
  map[pv] = -1;
  return false;
}

}  // namespace

std::optional<Embedding> find_induced(const Graph& g, const Graph& pattern) {
  if (pattern.n() > g.n()) return std::nullopt;
  Embedding map(pattern.n(), -1);
  VertexSet used;
  if (extend_embedding(g, pattern, search_order(pattern), 0, map, used)) return map;
  return std::nullopt;
}

bool is_induced_embedding(const Graph& g, const Graph& pattern, const Embedding& e) {
  if (static_cast<int>(e.size()) != pattern.n()) return false;
  VertexSet seen;
  for (int h : e) {
    if (h < 0 || h >= g.n() || seen[h]) return false;
    seen.set(h);
  }
  for (int a = 0; a < pattern.n(); ++a) {
    for (int b = a + 1; b < pattern.n(); ++b) {
      if (pattern.adjacent(a, b) != g.adjacent(e[a], e[b])) return false;
    }
  }
  return true;
}

bool are_isomorphic(const Graph& g1, const Graph& g2) {
  if (g1.n() != g2.n() || g1.edge_count() != g2.edge_count()) return false;
  std::vector<int> d1(g1.n()), d2(g2.n());
  for (int v = 0; v < g1.n(); ++v) d1[v] = g1.degree(v);
  for (int v = 0; v < g2.n(); ++v) d2[v] = g2.degree(v);
  std::sort(d1.begin(), d1.end());
  std::sort(d2.begin(), d2.end());
  if (d1 != d2) return false;
  return find_induced(g1, g2).has_value();
}

namespace {

// Colour refinement to the coarsest equitable partition; colours are renumbered
// by sorted signature so the result depends only on the isomorphism type.
std::vector<int> refine(const Graph& g, std::vector<int> color) {
  const int n = g.n();
  for (;;) {
    std::vector<std::pair<std::vector<int>, int>> sig(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> s{color[v]};
      std::vector<int> nb;
      for (int w : g.neighbor_list(v)) nb.push_back(color[w]);
      std::sort(nb.begin(), nb.end());
      s.insert(s.end(), nb.begin(), nb.end());
      sig[v] = {std::move(s), v};
    }
    std::vector<std::vector<int>> keys;
    for (auto& [s, v] : sig) keys.push_back(s);
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    std::vector<int> next(n);
    for (int v = 0; v < n; ++v) {
      next[v] = static_cast<int>(std::lower_bound(keys.begin(), keys.end(), sig[v].first) - keys.begin());
    }
    const int before = static_cast<int>(std::set<int>(color.begin(), color.end()).size());
    const int after = static_cast<int>(keys.size());
    color = std::move(next);
    if (after == before) return color;
  }
}

void canon_search(const Graph& g, const std::vector<int>& color, std::string& best) {
  const int n = g.n();
  std::map<int, std::vector<int>> cells;
  for (int v = 0; v < n; ++v) cells[color[v]].push_back(v);
  const std::vector<int>* target = nullptr;
  for (auto& [c, cell] : cells) {
    if (cell.size() > 1) {
      target = &cell;
      break;
    }
  }
  if (target == nullptr) {
    std::vector<int> at(n);
    for (int v = 0; v < n; ++v) at[color[v]] = v;
    std::string s;
    s.reserve(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) s.push_back(g.adjacent(at[i], at[j]) ? '1' : '0');
    }
    if (best.empty() || s < best) best = s;
    return;
  }
  std::vector<int> tried;
  for (int v : *target) {
    // Swapping two twins is an automorphism that fixes the colouring, so
    // individualising either one leads to the same subtree.
    bool dup = false;
    for (int w : tried) {
      VertexSet a = g.neighbors(v), b = g.neighbors(w);
      a.reset(w);
      b.reset(v);
      if (a == b) {
        dup = true;
        break;
      }
    }
    if (dup) continue;
    tried.push_back(v);
    std::vector<int> c2(n);
    for (int u = 0; u < n; ++u) c2[u] = 2 * color[u] + (u == v ? 0 : 1);
    canon_search(g, refine(g, c2), best);
  }
}

}  // namespace

std::string canonical_form(const Graph& g) {
  if (g.n() == 0) return "0:";
  std::string best;
  canon_search(g, refine(g, std::vector<int>(g.n(), 0)), best);
  return std::to_string(g.n()) + ":" + best;
}

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    lines.push_back(line);
  }
  if (lines.empty()) throw Error(ErrorKind::ParseError, "missing header line");
  std::istringstream header(lines[0]);
  long n = -1, m = -1;
  if (!(header >> n >> m) || n < 0 || m < 0) {
    throw Error(ErrorKind::ParseError, "header must be 'n m'");
  }
  if (static_cast<long>(lines.size()) - 1 != m) {
    throw Error(ErrorKind::ParseError, "expected " + std::to_string(m) + " edge lines, found " +
                                           std::to_string(lines.size() - 1));
  }
  Graph g(static_cast<int>(n));
  for (long i = 1; i <= m; ++i) {
    std::istringstream row(lines[i]);
    long u = -1, v = -1;
    std::string extra;
    if (!(row >> u >> v) || (row >> extra)) {
      throw Error(ErrorKind::ParseError, "bad edge line: '" + lines[i] + "'");
    }
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw Error(ErrorKind::InvalidVertex, "edge endpoint out of range in '" + lines[i] + "'");
    }
    if (u == v) throw Error(ErrorKind::ParseError, "self-loop in '" + lines[i] + "'");
    if (g.adjacent(static_cast<int>(u), static_cast<int>(v))) {
      throw Error(ErrorKind::ParseError, "duplicate edge '" + lines[i] + "'");
    }
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  return g;
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  const auto es = g.edges();
  out << g.n() << ' ' << es.size() << '\n';
  for (auto [u, v] : es) out << u << ' ' << v << '\n';
  return out.str();
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph cycle_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph wheel_graph(int rim) {
  Graph g(rim + 1);
  for (int i = 0; i < rim; ++i) {
    g.add_edge(i, (i + 1) % rim);
    g.add_edge(i, rim);
  }
  return g;
}

}  // namespace splitcircle
