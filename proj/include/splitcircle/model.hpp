#pragma once

#include <optional>
#include <string>
#include <vector>

#include "splitcircle/chord.hpp"
#include "splitcircle/partition.hpp"
#include "splitcircle/split.hpp"

namespace splitcircle {

// Places a split graph on a circle whose clique word is P P for the given
// cyclic order P of K: each stable chord crosses a circular interval of P in
// one of the two copies, and the copies are chosen by 2-SAT so that no two
// stable chords cross. arc_names[i] names the arc of the clique vertex P[i]
// (the copies get suffixes '-' and '+'). Returns nullopt when some
// neighbourhood is not an interval of P or no copy choice works.
std::optional<ChordModel> place_on_order(const Graph& g, const SplitPartition& sp,
                                         const std::vector<int>& order,
                                         const std::vector<std::string>& arc_names = {});

// Exact model search for split graphs: enumerates the cyclic orders of K in
// which every stable neighbourhood is an interval, then places the chords.
// Gives up (nullopt) after max_orders orders.
std::optional<ChordModel> synthesize_split_model(const Graph& g, const SplitPartition& sp,
                                                 long max_orders = 2000000);

struct BuiltModel {
  ChordModel model;
  // "classes" when the concatenated class orderings worked, "search" otherwise.
  std::string method;
};

// Builds a model from the certificates of a passing case verdict.
BuiltModel build_model(const Graph& g, const SplitPartition& sp, const KPartition& kp,
                       const CaseMatrices& cm, const CaseVerdict& verdict);

}  // namespace splitcircle
