#pragma once

#include <optional>
#include <string>
#include <vector>

#include "splitcircle/graph.hpp"

namespace splitcircle {

struct SplitPartition {
  VertexSet K;
  VertexSet S;
};

// Maximum |K|; ties broken by the lexicographically least sorted K.
SplitPartition split_partition(const Graph& g);

// Exhaustive bipartition search, for cross-checking (n <= 16).
std::optional<SplitPartition> split_partition_exhaustive(const Graph& g);

bool is_valid_split_partition(const Graph& g, const SplitPartition& sp);

enum class CaseKind { Tent, FourTent, CoFourTent, Net, None };

const char* to_string(CaseKind kind);

// Anchor graph of a case, with its K-vertices listed first (see catalog.hpp).
Graph anchor_graph(CaseKind kind);
int anchor_clique_size(CaseKind kind);

struct CaseWitness {
  CaseKind kind = CaseKind::None;
  Embedding embedding;
};

// Lexicographically least typed embedding of the anchor, or nullopt.
std::optional<Embedding> find_anchor(const Graph& g, const SplitPartition& sp, CaseKind kind);

CaseWitness detect_case(const Graph& g, const SplitPartition& sp);

// A split decomposition of g into two factors glued at marker vertices.
// part_one lists the vertices of g that live in factor_one, in factor order;
// the marker is the last vertex of each factor.
struct Decomposition {
  Graph factor_one;
  int marker_one = -1;
  std::vector<int> part_one;
  Graph factor_two;
  int marker_two = -1;
  std::vector<int> part_two;

  Graph recompose() const;
};

// The split (A, V - A) around a clique class: A is the class together with
// every stable vertex whose nonempty neighbourhood lies inside the class.
// Returns nullopt when this is not a split of g or a side is too small.
std::optional<Decomposition> class_split(const Graph& g, const SplitPartition& sp,
                                         const VertexSet& clique_class);

struct NetDispatch {
  bool found_four_tent = false;
  Embedding four_tent;
  std::optional<Decomposition> decomposition;
  // Net classes K1..K7 (index 0 unused).
  std::vector<VertexSet> classes;
  // Clique vertices adjacent to all three net stable vertices.
  VertexSet unclassified;
};

NetDispatch dispatch_net(const Graph& g, const SplitPartition& sp, const CaseWitness& cw);

}  // namespace splitcircle
