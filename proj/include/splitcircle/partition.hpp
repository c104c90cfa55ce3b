#pragma once

#include <optional>
#include <string>
#include <vector>

#include "splitcircle/enriched.hpp"
#include "splitcircle/graph.hpp"
#include "splitcircle/split.hpp"
#include "splitcircle/witness.hpp"

namespace splitcircle {

// Clique classes K1..Kn of a case; classes[0] is unused.
struct KPartition {
  CaseKind kind = CaseKind::None;
  Embedding anchor;
  std::vector<VertexSet> classes;

  int class_count() const { return static_cast<int>(classes.size()) - 1; }
  // Class index of a clique vertex, 0 when absent.
  int class_of(int v) const;
};

enum class SKind {
  Isolated,  // no neighbour in K
  Ordinary,  // S_ab, with a == b for S_aa
  EmptyLR,   // S_[15] (4-tent) and S_[86] (co-4-tent): all-zero LR row
  LR,        // S_[16 (4-tent) and S_76] (co-4-tent): LR row
};

struct SClass {
  SKind kind = SKind::Isolated;
  int a = 0;
  int b = 0;
  bool operator==(const SClass& o) const { return kind == o.kind && a == o.a && b == o.b; }
};

std::string class_tag(CaseKind kind, const SClass& c);

struct SPartition {
  CaseKind kind = CaseKind::None;
  std::vector<SClass> of;  // indexed by vertex; meaningful on S only
};

struct ForbiddenFound {
  FscWitness witness;
  std::string reason;
};

struct KResult {
  std::optional<KPartition> partition;
  std::optional<ForbiddenFound> forbidden;
};

struct SResult {
  std::optional<SPartition> partition;
  std::optional<ForbiddenFound> forbidden;
};

KResult partition_K(const Graph& g, const SplitPartition& sp, const CaseWitness& cw);
SResult partition_S(const Graph& g, const SplitPartition& sp, const KPartition& kp);

// Allowed S_ab cells of a case (1-based indices).
bool allowed_cell(CaseKind kind, int a, int b);

struct CaseMatrix {
  std::string name;
  int index = 0;  // class index for per-class matrices, 0 for union matrices
  EnrichedMatrix matrix;
};

struct CaseMatrices {
  CaseKind kind = CaseKind::None;
  std::vector<CaseMatrix> per_class;
  std::vector<CaseMatrix> unions;  // r, b, r-b, b-r
  std::optional<ForbiddenFound> forbidden;  // raised by the empty LR-row colouring
};

CaseMatrices build_case_matrices(const Graph& g, const SplitPartition& sp, const KPartition& kp,
                                 const SPartition& spart);

// Fixes the shared colour of the all-zero LR rows. Returns the colour chosen
// (None when free) or nullopt when both triggers fire.
std::optional<Color> empty_lr_color(const EnrichedMatrix& m);
EnrichedMatrix color_empty_lr_rows(const EnrichedMatrix& m, bool* conflict = nullptr);

struct MatrixCheck {
  std::string name;
  bool union_matrix = false;
  bool passed = false;
  std::string reason;
  std::optional<TwoNestedCertificate> certificate;
};

struct CaseVerdict {
  bool circle_ok = false;
  bool unions_enforced = true;
  int failed = -1;  // index into checks
  std::vector<MatrixCheck> checks;
};

// With enforce_unions false the union matrices are still checked and
// reported, but a failure does not clear circle_ok.
CaseVerdict case_verdict(const CaseMatrices& cm, bool enforce_unions = true);

// The co-4-tent split off K5 (when K4 is empty) or K1 (when K2 is empty).
std::optional<Decomposition> reduce_co4tent_prime(const Graph& g, const SplitPartition& sp,
                                                  const KPartition& kp);

// JSON text with the classes and every matrix in the enriched-matrix format.
std::string debug_dump(const KPartition& kp, const SPartition& spart, const CaseMatrices& cm);

}  // namespace splitcircle
