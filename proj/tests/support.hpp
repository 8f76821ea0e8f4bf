#pragma once

#include <random>
#include <vector>

#include "kmin/graph.hpp"

namespace kmin::testing {

/// G(n, p) sample; deterministic for a given engine state.
inline Graph random_graph(int n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.push_back({u, v});
  return Graph(n, edges);
}

inline std::vector<Vertex> all_vertices(const Graph& g) {
  std::vector<Vertex> out(g.order());
  for (int i = 0; i < g.order(); ++i) out[i] = i;
  return out;
}

}  // namespace kmin::testing
