#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "splitcircle/graph.hpp"

namespace splitcircle {

enum class Label { U, L, R, LR };
enum class Color { None, Red, Blue };

const char* to_string(Label label);
const char* to_string(Color color);
Color opposite(Color c);

using RowBits = VertexSet;

// A 0/1 matrix whose rows carry a label and an optional colour.
struct EnrichedMatrix {
  int cols = 0;
  std::vector<RowBits> rows;
  std::vector<Label> labels;
  std::vector<Color> colors;
  // Optional provenance: the S-vertex of each row and K-vertex of each column.
  std::vector<int> row_ids;
  std::vector<int> col_ids;

  int row_count() const { return static_cast<int>(rows.size()); }
  bool at(int r, int c) const { return rows[r][c]; }
  void add_row(const RowBits& bits, Label label, Color color = Color::None, int id = -1);
  bool operator==(const EnrichedMatrix& other) const;
};

EnrichedMatrix make_matrix(const std::vector<std::string>& bit_rows,
                           const std::vector<Label>& labels = {},
                           const std::vector<Color>& colors = {});

EnrichedMatrix parse_matrix(const std::string& text);
std::string format_matrix(const EnrichedMatrix& a);

// Mirror image: columns reversed, L and R exchanged.
EnrichedMatrix dual(const EnrichedMatrix& a);

// Keeps the listed rows and columns in the given order.
EnrichedMatrix submatrix(const EnrichedMatrix& a, const std::vector<int>& rows,
                         const std::vector<int>& cols);

// ---------------------------------------------------------------- nestedness

struct GemWitness {
  int row_a = -1;
  int row_b = -1;
  // Columns in row_a only, in both rows, in row_b only.
  std::array<int, 3> cols{-1, -1, -1};
};

struct NestedResult {
  bool nested = true;
  std::optional<GemWitness> gem;
};

NestedResult is_nested(const EnrichedMatrix& a);
bool is_zero_gem(const EnrichedMatrix& a, const GemWitness& w);

// ---------------------------------------------------------------- orderings

using ColumnOrdering = std::vector<int>;  // position -> column

bool is_lr_ordering(const EnrichedMatrix& a, const ColumnOrdering& order);
bool is_suitable_ordering(const EnrichedMatrix& a, const ColumnOrdering& order);

// Invokes visit for each LR-ordering; stops early when visit returns false.
// Columns that are identical in every row are kept in increasing index order.
void for_each_lr_ordering(const EnrichedMatrix& a,
                          const std::function<bool(const ColumnOrdering&)>& visit,
                          bool break_twin_symmetry = true);

std::vector<ColumnOrdering> lr_orderings(const EnrichedMatrix& a, size_t limit = 1u << 20);
std::vector<ColumnOrdering> suitable_orderings(const EnrichedMatrix& a, size_t limit = 1u << 20);

// A* with the two tag columns: column m is c_L and column m+1 is c_R, the
// last two rows are the distinguished all-ones L and R rows.
struct TaggedMatrix {
  EnrichedMatrix matrix;
  int tag_left = -1;
  int tag_right = -1;
};

TaggedMatrix star_tagged(const EnrichedMatrix& a);

// ---------------------------------------------------------------- blocks

enum class BlockKind { U, L, R };

struct Block {
  int row = -1;
  BlockKind kind = BlockKind::U;
  int begin = 0;  // positions [begin, end) of the ordering
  int end = 0;
  Color color = Color::None;
};

struct TwoNestedCertificate {
  ColumnOrdering ordering;
  std::vector<Block> blocks;
};

// Blocks of a row under an ordering. A full LR-row is split at split_at:
// L-block [0, split_at) and R-block [split_at, m).
std::vector<Block> row_blocks(const EnrichedMatrix& a, const ColumnOrdering& order, int row,
                              int split_at);

struct TwoNestedResult {
  bool two_nested = false;
  std::optional<TwoNestedCertificate> certificate;
  std::string reason;
};

TwoNestedResult is_2nested(const EnrichedMatrix& a);
bool verify_certificate(const EnrichedMatrix& a, const TwoNestedCertificate& c,
                        std::string* why = nullptr);

// ---------------------------------------------------------------- forbidden patterns

// A row of a forbidden pattern. Rows sharing a colour variable must carry equal
// colours, rows with different variables distinct colours; variable -1 means
// the row's colour is unconstrained.
struct PatternRow {
  RowBits bits;
  std::vector<Label> accepts;
  int color_var = -1;
};

struct Pattern {
  std::string tag;
  int cols = 0;
  std::vector<PatternRow> rows;
  bool on_star = false;  // searched in A*_tag instead of A
};

struct ForbiddenHit {
  std::string tag;
  std::vector<int> rows;
  std::vector<int> cols;
};

// Returns the row/column selection realising the pattern, if any.
std::optional<ForbiddenHit> find_subconfiguration(const EnrichedMatrix& a, const Pattern& p);

std::vector<ForbiddenHit> detect_forbidden(const EnrichedMatrix& a, bool first_per_family = true);
bool is_admissible(const EnrichedMatrix& a);

}  // namespace splitcircle
