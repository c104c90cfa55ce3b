#pragma once

#include <algorithm>
#include <ostream>
#include <random>
#include <vector>

#include "splitcircle/graph.hpp"

namespace splitcircle::testing {

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution edge(p);
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (edge(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

inline Graph relabel(const Graph& g, const std::vector<int>& perm) {
  Graph h(g.n());
  for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
  return h;
}

inline std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Every labelled graph on n vertices, by edge mask.
template <class F>
void for_each_labelled_graph(int n, F&& f) {
  std::vector<std::pair<int, int>> slots;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) slots.push_back({a, b});
  }
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    Graph g(n);
    for (size_t i = 0; i < slots.size(); ++i) {
      if (mask >> i & 1) g.add_edge(slots[i].first, slots[i].second);
    }
    f(g);
  }
}

// Index subsets of size k of {0..n-1}, in lexicographic order.
template <class F>
void for_each_subset(int n, int k, F&& f) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  while (true) {
    f(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace splitcircle::testing
