#pragma once

#include <optional>
#include <string>
#include <vector>

#include "splitcircle/catalog.hpp"
#include "splitcircle/graph.hpp"

namespace splitcircle {

// An induced copy of a minimal non-circle split graph: vertices[i] is the
// host vertex playing member vertex i.
struct FscWitness {
  FscFamily family = FscFamily::TentJoinK1;
  int k = 0;
  std::vector<int> vertices;
};

// Searches catalog members with at most g.n() vertices, smallest first.
std::optional<FscWitness> search_fsc_witness(const Graph& g);

// As search_fsc_witness, but a missing witness is an InternalInconsistency.
FscWitness find_fsc_witness(const Graph& g);

// Looks for a witness inside the subgraph induced by the given vertices and
// falls back to a search over all of g.
FscWitness replay_witness(const Graph& g, const std::vector<int>& vertices);

bool verify_witness(const Graph& g, const FscWitness& w);

}  // namespace splitcircle
