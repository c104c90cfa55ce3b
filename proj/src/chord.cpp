#include "splitcircle/chord.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace splitcircle {

void validate_model(const ChordModel& m) {
  if (m.word.size() % 2 != 0) {
    throw Error(ErrorKind::NotDoubleOccurrence, "word length is odd");
  }
  const int n = m.vertex_count();
  std::vector<int> count(n, 0);
  for (int v : m.word) {
    if (v < 0 || v >= n) {
      throw Error(ErrorKind::NotDoubleOccurrence,
                  "id " + std::to_string(v) + " outside [0, " + std::to_string(n) + ")");
    }
    ++count[v];
  }
  for (int v = 0; v < n; ++v) {
    if (count[v] != 2) {
      throw Error(ErrorKind::NotDoubleOccurrence, "vertex " + std::to_string(v) + " occurs " +
                                                      std::to_string(count[v]) + " times");
    }
  }
  if (!m.arcs.empty() && m.arcs.size() != m.word.size()) {
    throw Error(ErrorKind::NotDoubleOccurrence, "arc annotation length differs from word");
  }
}

Graph interlacement(const ChordModel& m) {
  validate_model(m);
  const int n = m.vertex_count();
  std::vector<int> first(n, -1), second(n, -1);
  for (int i = 0; i < static_cast<int>(m.word.size()); ++i) {
    int v = m.word[i];
    (first[v] < 0 ? first[v] : second[v]) = i;
  }
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      bool v1_inside = first[u] < first[v] && first[v] < second[u];
      bool v2_inside = first[u] < second[v] && second[v] < second[u];
      if (v1_inside != v2_inside) g.add_edge(u, v);
    }
  }
  return g;
}

ChordModel parse_model(const std::string& text) {
  ChordModel m;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream row(line);
    std::string tok;
    while (row >> tok) {
      try {
        size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        m.word.push_back(v);
      } catch (const std::exception&) {
        throw Error(ErrorKind::ParseError, "bad vertex id '" + tok + "' in model");
      }
    }
  }
  validate_model(m);
  return m;
}

std::string format_model(const ChordModel& m) {
  std::ostringstream out;
  for (size_t i = 0; i < m.word.size(); ++i) {
    if (i) out << ' ';
    out << m.word[i];
  }
  out << '\n';
  return out.str();
}

ChordModel rotate_model(const ChordModel& m, int shift) {
  ChordModel r = m;
  const int len = static_cast<int>(m.word.size());
  if (len == 0) return r;
  int s = ((shift % len) + len) % len;
  std::rotate(r.word.begin(), r.word.begin() + s, r.word.end());
  if (!r.arcs.empty()) std::rotate(r.arcs.begin(), r.arcs.begin() + s, r.arcs.end());
  return r;
}

ChordModel reflect_model(const ChordModel& m) {
  ChordModel r = m;
  std::reverse(r.word.begin(), r.word.end());
  std::reverse(r.arcs.begin(), r.arcs.end());
  return r;
}

std::string render_svg(const ChordModel& m) {
  validate_model(m);
  const double cx = 260.0, cy = 260.0, radius = 200.0;
  const int len = static_cast<int>(m.word.size());
  auto angle = [&](double i) { return 2.0 * M_PI * i / std::max(len, 1) - M_PI / 2.0; };
  auto fmt = [](double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", std::abs(x) < 5e-4 ? 0.0 : x);
    return std::string(buf);
  };
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"520\" "
         "height=\"520\" viewBox=\"0 0 520 520\">\n";
  out << "  <circle cx=\"" << fmt(cx) << "\" cy=\"" << fmt(cy) << "\" r=\"" << fmt(radius)
      << "\" fill=\"none\" stroke=\"#888888\" stroke-width=\"1\"/>\n";
  std::vector<int> first(m.vertex_count(), -1);
  for (int i = 0; i < len; ++i) {
    int v = m.word[i];
    if (first[v] < 0) {
      first[v] = i;
      continue;
    }
    double a1 = angle(first[v]), a2 = angle(i);
    out << "  <line class=\"chord\" data-vertex=\"" << v << "\" x1=\""
        << fmt(cx + radius * std::cos(a1)) << "\" y1=\"" << fmt(cy + radius * std::sin(a1))
        << "\" x2=\"" << fmt(cx + radius * std::cos(a2)) << "\" y2=\""
        << fmt(cy + radius * std::sin(a2)) << "\" stroke=\"#1f4e79\" stroke-width=\"1.5\"/>\n";
  }
  for (int i = 0; i < len; ++i) {
    double a = angle(i);
    out << "  <text x=\"" << fmt(cx + (radius + 14) * std::cos(a)) << "\" y=\""
        << fmt(cy + (radius + 14) * std::sin(a))
        << "\" font-size=\"10\" text-anchor=\"middle\" dominant-baseline=\"middle\">"
        << m.word[i] << "</text>\n";
  }
  if (!m.arcs.empty()) {
    int i = 0;
    while (i < len) {
      int j = i;
      while (j + 1 < len && m.arcs[j + 1] == m.arcs[i]) ++j;
      if (!m.arcs[i].empty()) {
        double a = angle((i + j) / 2.0);
        out << "  <text class=\"arc\" x=\"" << fmt(cx + (radius + 36) * std::cos(a)) << "\" y=\""
            << fmt(cy + (radius + 36) * std::sin(a))
            << "\" font-size=\"11\" fill=\"#a33\" text-anchor=\"middle\">" << m.arcs[i]
            << "</text>\n";
      }
      i = j + 1;
    }
  }
  out << "</svg>\n";
  return out.str();
}

// ---------------------------------------------------------------- exhaustive search

namespace {

// Scans the word left to right. Open chords are kept in the order in which
// they must close: for x opened before y, x closes first iff x and y cross.
class ChordSearch {
 public:
  explicit ChordSearch(const Graph& g) : g_(g), n_(g.n()) {}

  std::optional<ChordModel> run() {
    if (n_ == 0) return ChordModel{};
    word_.clear();
    order_.clear();
    opened_.reset();
    closed_.reset();
    open(0);
    if (!search()) return std::nullopt;
    ChordModel m;
    m.word = word_;
    return m;
  }

 private:
  void open(int u) {
    int pos = static_cast<int>((g_.neighbors(u) & opened_ & ~closed_).count());
    order_.insert(order_.begin() + pos, u);
    opened_.set(u);
    word_.push_back(u);
  }

  std::string key() const {
    std::string k = opened_.to_string().substr(kMaxVertices - n_) + "|" +
                    closed_.to_string().substr(kMaxVertices - n_) + "|";
    for (int v : order_) k += static_cast<char>('A' + v);
    return k;
  }

  bool search() {
    if (static_cast<int>(closed_.count()) == n_) return true;
    std::string k = key();
    if (failed_.count(k)) return false;
    // Close the chord that must close first.
    if (!order_.empty()) {
      int v = order_.front();
      if ((g_.neighbors(v) & ~opened_).none()) {
        order_.erase(order_.begin());
        closed_.set(v);
        word_.push_back(v);
        if (search()) return true;
        word_.pop_back();
        closed_.reset(v);
        order_.insert(order_.begin(), v);
      }
    }
    VertexSet live = opened_ & ~closed_;
    for (int u = 0; u < n_; ++u) {
      if (opened_[u]) continue;
      const VertexSet& nu = g_.neighbors(u);
      if ((nu & closed_).any()) continue;
      size_t need = (nu & live).count();
      bool prefix = true;
      for (size_t i = 0; i < need && prefix; ++i) prefix = nu[order_[i]];
      if (!prefix) continue;
      auto saved = order_;
      open(u);
      if (search()) return true;
      word_.pop_back();
      opened_.reset(u);
      order_ = saved;
    }
    failed_.insert(k);
    return false;
  }

  const Graph& g_;
  int n_;
  std::vector<int> word_;
  std::vector<int> order_;
  VertexSet opened_;
  VertexSet closed_;
  std::unordered_set<std::string> failed_;
};

}  // namespace

std::optional<ChordModel> oracle_model_search(const Graph& g, int cap) {
  if (g.n() > cap) {
    throw Error(ErrorKind::TooLarge, "model search limited to " + std::to_string(cap) +
                                         " vertices, graph has " + std::to_string(g.n()));
  }
  ChordSearch search(g);
  auto m = search.run();
  if (m && interlacement(*m) != g) {
    throw Error(ErrorKind::InternalInconsistency, "model search produced a wrong model");
  }
  return m;
}

std::optional<ChordModel> naive_model_search(const Graph& g) {
  const int n = g.n();
  if (n > 6) throw Error(ErrorKind::TooLarge, "naive model search limited to 6 vertices");
  if (n == 0) return ChordModel{};
  // Every perfect matching of 2n positions, then every labelling of its chords.
  std::vector<int> slot(2 * n, -1);
  std::vector<std::pair<int, int>> chords;
  std::optional<ChordModel> found;
  std::function<void()> match = [&]() {
    if (found) return;
    int i = 0;
    while (i < 2 * n && slot[i] >= 0) ++i;
    if (i == 2 * n) {
      std::vector<int> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      do {
        ChordModel m;
        m.word.assign(2 * n, -1);
        for (int c = 0; c < n; ++c) {
          m.word[chords[c].first] = perm[c];
          m.word[chords[c].second] = perm[c];
        }
        if (interlacement(m) == g) {
          found = m;
          return;
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
      return;
    }
    int c = static_cast<int>(chords.size());
    slot[i] = c;
    for (int j = i + 1; j < 2 * n && !found; ++j) {
      if (slot[j] >= 0) continue;
      slot[j] = c;
      chords.push_back({i, j});
      match();
      chords.pop_back();
      slot[j] = -1;
    }
    slot[i] = -1;
  };
  match();
  return found;
}

}  // namespace splitcircle
