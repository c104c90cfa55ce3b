#include "splitcircle/witness.hpp"

namespace splitcircle {

std::optional<FscWitness> search_fsc_witness(const Graph& g) {
  for (const FscMember& m : fsc_members_up_to(g.n())) {
    if (auto e = find_induced(g, m.graph)) return FscWitness{m.family, m.k, *e};
  }
  return std::nullopt;
}

FscWitness find_fsc_witness(const Graph& g) {
  if (auto w = search_fsc_witness(g)) return *w;
  throw Error(ErrorKind::InternalInconsistency,
              "no minimal non-circle split graph found in a graph judged non-circle");
}

FscWitness replay_witness(const Graph& g, const std::vector<int>& vertices) {
  Graph h = induced_subgraph(g, vertices);
  if (auto w = search_fsc_witness(h)) {
    for (int& v : w->vertices) v = vertices[v];
    return *w;
  }
  return find_fsc_witness(g);
}

bool verify_witness(const Graph& g, const FscWitness& w) {
  if (!fsc_valid_parameter(w.family, w.k) && fsc_is_parametric(w.family)) return false;
  FscMember m = make_fsc(w.family, w.k);
  if (static_cast<int>(w.vertices.size()) != m.graph.n()) return false;
  for (int v : w.vertices) {
    if (v < 0 || v >= g.n()) return false;
  }
  return is_induced_embedding(g, m.graph, w.vertices);
}

}  // namespace splitcircle
