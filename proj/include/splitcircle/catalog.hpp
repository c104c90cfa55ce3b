#pragma once

#include <string>
#include <vector>

#include "splitcircle/enriched.hpp"
#include "splitcircle/graph.hpp"

namespace splitcircle {

enum class FscFamily {
  TentJoinK1,
  OddSunCenter,
  EvenSun,
  MII,
  MIII,
  MIII3,
  MIV,
  MV,
  F0,
  F1,
  F2,
};

const char* to_string(FscFamily family);
FscFamily parse_fsc_family(const std::string& name);
std::vector<FscFamily> all_fsc_families();

// Whether the family takes k, and whether k is valid for it.
bool fsc_is_parametric(FscFamily family);
bool fsc_valid_parameter(FscFamily family, int k);

struct FscMember {
  FscFamily family = FscFamily::TentJoinK1;
  int k = 0;
  Graph graph;
  // Rows of A(S,K) are the stable vertices, columns the clique vertices.
  std::vector<int> clique;
  std::vector<int> stable;
};

// The A(S,K) matrix of a member, all rows unlabelled.
EnrichedMatrix member_matrix(const FscMember& member);

// Builds the split graph whose clique is the column set and whose stable
// vertices are the rows of the 0/1 matrix. Clique vertices come first.
FscMember member_from_matrix(FscFamily family, int k, const EnrichedMatrix& a);

FscMember make_fsc(FscFamily family, int k = 0);

// Members ordered by vertex count, then family order, with at most max_vertices vertices.
std::vector<FscMember> fsc_members_up_to(int max_vertices);

// ---------------------------------------------------------------- auxiliary graphs

enum class AuxTarget { W5, W7, BW3, C6Bar };

const char* to_string(AuxTarget target);
Graph aux_graph(AuxTarget target);
Graph tent_graph();        // k1,k3,k5,s13,s35,s51 as vertices 0..5
Graph four_tent_graph();   // k1,k2,k4,k5,s12,s24,s45 as vertices 0..6
Graph co_four_tent_graph();  // k1,k3,k5,s1,s13,s35,s5 as vertices 0..6
Graph net_graph();         // k1,k3,k5,s1,s3,s5 as vertices 0..5

struct ReductionScript {
  std::vector<int> sequence;
  AuxTarget target = AuxTarget::W5;
};

ReductionScript reduction_script(const FscMember& member);
Graph apply_script(const Graph& g, const std::vector<int>& sequence);

// ---------------------------------------------------------------- matrix patterns

struct MatrixPattern {
  std::string tag;  // e.g. "D3", "S2(5)", "P1(7,1)"
  std::string family;  // e.g. "D", "S2", "Tucker"
  EnrichedMatrix instance;
  Pattern pattern;
};

// tag is a family name such as "M0", "MII4", "MV", "S0", "D0".."D13", "F0",
// "F1", "F2", "F'0", "F''0", "F'1", "F'2", "S1".."S8", "S6'3", "P0", "P1",
// "P2", "M'2", "M''2", "M'3", "M''3", "M'4", "M''4", "M'5", "M''5",
// "MI", "MII", "MIII", "MIV", "MV*". k and l are used by parametric families.
MatrixPattern make_matrix_pattern(const std::string& family, int k = 0, int l = 0,
                                  bool dual_variant = false);

// Every pattern of the listed families with parameters up to the given bounds.
std::vector<MatrixPattern> catalog_patterns(int max_rows, int max_cols, bool include_star = true);

// Patterns that must fail the 2-nested test as stand-alone matrices.
std::vector<MatrixPattern> theorem_matrices(int max_k);

}  // namespace splitcircle
