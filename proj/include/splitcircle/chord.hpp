#pragma once

#include <optional>
#include <string>
#include <vector>

#include "splitcircle/graph.hpp"

namespace splitcircle {

// A double occurrence word: every vertex id in [0, n) appears exactly twice.
struct ChordModel {
  std::vector<int> word;
  // Optional per-position arc names (same length as word when present).
  std::vector<std::string> arcs;

  int vertex_count() const { return static_cast<int>(word.size() / 2); }
  bool operator==(const ChordModel& other) const { return word == other.word; }
};

void validate_model(const ChordModel& m);
Graph interlacement(const ChordModel& m);

ChordModel parse_model(const std::string& text);
std::string format_model(const ChordModel& m);

ChordModel rotate_model(const ChordModel& m, int shift);
ChordModel reflect_model(const ChordModel& m);

std::string render_svg(const ChordModel& m);

// Exhaustive search for a word whose interlacement equals g.
std::optional<ChordModel> oracle_model_search(const Graph& g, int cap = 9);

// Unrestricted search over all placements (no pruning); tiny graphs only.
std::optional<ChordModel> naive_model_search(const Graph& g);

}  // namespace splitcircle
