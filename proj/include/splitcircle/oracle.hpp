#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "splitcircle/enriched.hpp"
#include "splitcircle/graph.hpp"

namespace splitcircle {

struct OracleConfig {
  int circle_cap = 9;
  int matrix_cap = 8;
  std::uint64_t seed = 20240611;
};

// Reads SPLIT_CIRCLE_CAP when set.
OracleConfig default_oracle_config();

bool oracle_is_circle(const Graph& g, const OracleConfig& cfg = default_oracle_config());

struct OracleTwoNested {
  bool two_nested = false;
  std::optional<TwoNestedCertificate> certificate;
};

OracleTwoNested oracle_is_2nested(const EnrichedMatrix& a,
                                  const OracleConfig& cfg = default_oracle_config());
bool oracle_is_nested(const EnrichedMatrix& a, const OracleConfig& cfg = default_oracle_config());

// One representative per isomorphism class of split graphs on n vertices.
std::vector<Graph> enumerate_split_graphs(int n);

bool is_split_graph(const Graph& g);

// A random split graph: clique of size a, n - a stable vertices, each
// clique/stable pair adjacent with probability p.
Graph random_split_graph(std::mt19937_64& rng, int n, double p = 0.5);

EnrichedMatrix random_enriched_matrix(std::mt19937_64& rng, int max_rows, int max_cols);

}  // namespace splitcircle
