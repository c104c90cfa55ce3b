#pragma once

#include <bitset>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "splitcircle/error.hpp"

namespace splitcircle {

inline constexpr int kMaxVertices = 128;

using VertexSet = std::bitset<kMaxVertices>;

// Maps pattern vertex i to host vertex embedding[i].
using Embedding = std::vector<int>;

class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  int n() const { return n_; }
  bool adjacent(int u, int v) const;
  const VertexSet& neighbors(int u) const;
  int degree(int u) const;
  int edge_count() const;

  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  void toggle_edge(int u, int v);

  // Canonical edge list: pairs (u, v) with u < v in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;
  std::vector<int> neighbor_list(int u) const;

  bool operator==(const Graph& other) const;
  bool operator!=(const Graph& other) const { return !(*this == other); }

 private:
  void check_vertex(int u) const;

  int n_ = 0;
  std::vector<VertexSet> adj_;
};

VertexSet full_set(int n);
std::vector<int> members(const VertexSet& s);

Graph induced_subgraph(const Graph& g, const std::vector<int>& vs);
Graph complement(const Graph& g);
Graph local_complement(const Graph& g, int u);
Graph pivot(const Graph& g, int u, int v);

// Vertices of g1 other than v1 keep their relative order and come first,
// followed by the vertices of g2 other than v2.
Graph split_composition(const Graph& g1, int v1, const Graph& g2, int v2);

std::optional<Embedding> find_induced(const Graph& g, const Graph& pattern);
bool is_induced_embedding(const Graph& g, const Graph& pattern, const Embedding& e);
bool are_isomorphic(const Graph& g1, const Graph& g2);

// A relabeling-invariant string; equal strings iff the graphs are isomorphic.
std::string canonical_form(const Graph& g);

Graph parse_graph(const std::string& text);
std::string format_graph(const Graph& g);
Graph read_graph_file(const std::string& path);

// Named small graphs used across the library.
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph wheel_graph(int rim);

}  // namespace splitcircle
