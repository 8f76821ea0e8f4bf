// Exhaustive reference implementations for small graphs. Nothing here touches
// the flow code.
#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "kmin/graph.hpp"
#include "kmin/minimality.hpp"

namespace oracle {

using kmin::Edge;
using kmin::Graph;
using kmin::Vertex;

// Connectivity of the vertices in `alive` using the edges not in `dead_edges`.
inline bool connected(const Graph& g, std::uint32_t alive, const std::vector<char>& dead_edge = {}) {
  if (alive == 0) return true;
  const int start = std::countr_zero(alive);
  std::uint32_t seen = 1u << start;
  std::vector<int> stack{start};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!((alive >> w) & 1u) || ((seen >> w) & 1u)) continue;
      if (!dead_edge.empty() && dead_edge[*g.edge_index(v, w)]) continue;
      seen |= 1u << w;
      stack.push_back(w);
    }
  }
  return seen == alive;
}

inline std::uint32_t full(int n) { return n >= 32 ? ~0u : ((1u << n) - 1u); }

// Smallest vertex set whose deletion disconnects the rest; n-1 on complete graphs.
inline int kappa(const Graph& g, std::uint32_t alive, const std::vector<char>& dead_edge = {}) {
  const int n = std::popcount(alive);
  if (n <= 1) return 0;
  int best = n - 1;
  for (std::uint32_t s = alive;; s = (s - 1) & alive) {
    const int size = std::popcount(s);
    if (size < best && n - size >= 2 && !connected(g, alive & ~s, dead_edge)) best = size;
    if (s == 0) break;
  }
  return best;
}

// Smallest number of edges between a side and its complement.
inline int lambda(const Graph& g, std::uint32_t alive, const std::vector<char>& dead_edge = {}) {
  const int n = std::popcount(alive);
  if (n <= 1) return 0;
  const int anchor = std::countr_zero(alive);
  const std::uint32_t rest = alive & ~(1u << anchor);
  int best = -1;
  for (std::uint32_t s = rest;; s = (s - 1) & rest) {
    if (s != rest) {
      const std::uint32_t side = s | (1u << anchor);
      int crossing = 0;
      for (int i = 0; i < g.size(); ++i) {
        const Edge e = g.edges()[i];
        if (!dead_edge.empty() && dead_edge[i]) continue;
        if (!((alive >> e.u) & 1u) || !((alive >> e.v) & 1u)) continue;
        if (((side >> e.u) & 1u) != ((side >> e.v) & 1u)) ++crossing;
      }
      if (best < 0 || crossing < best) best = crossing;
    }
    if (s == 0) break;
  }
  return best;
}

inline int kappa(const Graph& g) { return kappa(g, full(g.order())); }
inline int lambda(const Graph& g) { return lambda(g, full(g.order())); }

// Class membership straight from the definitions.
inline bool in_class(const Graph& g, kmin::MinimalityClass c, int k) {
  const bool vertex_conn = kmin::uses_vertex_connectivity(c);
  auto measure = [&](std::uint32_t alive, const std::vector<char>& dead) {
    return vertex_conn ? kappa(g, alive, dead) : lambda(g, alive, dead);
  };
  const std::uint32_t all = full(g.order());
  if (measure(all, {}) < k) return false;
  if (kmin::deletes_vertices(c)) {
    for (Vertex v = 0; v < g.order(); ++v)
      if (measure(all & ~(1u << v), {}) >= k) return false;
  } else {
    std::vector<char> dead(g.size(), 0);
    for (int i = 0; i < g.size(); ++i) {
      dead[i] = 1;
      const bool removable = measure(all, dead) >= k;
      dead[i] = 0;
      if (removable) return false;
    }
  }
  return true;
}

inline int count_degree_at_most(const Graph& g, int bound) {
  int c = 0;
  for (Vertex v = 0; v < g.order(); ++v) c += g.degree(v) <= bound ? 1 : 0;
  return c;
}

}  // namespace oracle
