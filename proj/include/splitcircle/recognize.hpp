#pragma once

#include <optional>
#include <string>
#include <vector>

#include "splitcircle/chord.hpp"
#include "splitcircle/graph.hpp"
#include "splitcircle/split.hpp"
#include "splitcircle/witness.hpp"

namespace splitcircle {

enum class Status { Circle, NotCircle, NotSplit };

const char* to_string(Status s);
Status parse_status(const std::string& s);

struct MatrixSummary {
  std::string name;
  bool union_matrix = false;  // union matrices report "nested", the others "twoNested"
  bool passed = false;
  std::string reason;
};

struct Trace {
  std::string case_name;
  std::vector<MatrixSummary> matrices;
};

struct Verdict {
  Status status = Status::NotSplit;
  std::optional<ChordModel> model;
  std::optional<FscWitness> witness;
  Trace trace;
};

struct RecognizeOptions {
  bool build_model = true;
  bool find_witness = true;
};

Verdict recognize(const Graph& g, const RecognizeOptions& options = {});

// Glues two chord models at their marker chords; vertices of the result are
// numbered as in split_composition(g1, marker_one, g2, marker_two).
ChordModel compose_models(const ChordModel& m1, int marker_one, const ChordModel& m2,
                          int marker_two);

struct ProducedDecomposition {
  Graph source;
  Decomposition decomposition;
};

// Every split decomposition recognition performs on g, factors included.
std::vector<ProducedDecomposition> collect_decompositions(const Graph& g);

std::string verdict_to_json(const Verdict& v);
Verdict verdict_from_json(const std::string& text);

}  // namespace splitcircle
