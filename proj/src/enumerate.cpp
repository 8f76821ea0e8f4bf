#include "kmin/enumerate.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>

#include "kmin/error.hpp"

namespace kmin {

namespace {

using Mask = std::uint16_t;
using Cells = std::vector<std::vector<int>>;

struct Dense {
  int n = 0;
  std::vector<Mask> adj;

  explicit Dense(const Graph& g) : n(g.order()), adj(n, 0) {
    for (Edge e : g.edges()) {
      adj[e.u] |= static_cast<Mask>(1u << e.v);
      adj[e.v] |= static_cast<Mask>(1u << e.u);
    }
  }
};

/// Equitable refinement: split every cell by the vector of neighbour counts
/// into the current cells until nothing changes. Cell order is decided by
/// the count vectors only, so the result is isomorphism invariant.
void refine(const Dense& g, Cells& cells) {
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<Mask> cell_mask(cells.size(), 0);
    for (std::size_t c = 0; c < cells.size(); ++c)
      for (int v : cells[c]) cell_mask[c] |= static_cast<Mask>(1u << v);
    Cells next;
    for (const auto& cell : cells) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      std::vector<std::pair<std::vector<int>, int>> keyed;
      for (int v : cell) {
        std::vector<int> key(cells.size());
        for (std::size_t c = 0; c < cells.size(); ++c) key[c] = std::popcount(static_cast<unsigned>(g.adj[v] & cell_mask[c]));
        keyed.push_back({std::move(key), v});
      }
      std::sort(keyed.begin(), keyed.end());
      std::size_t start = 0;
      for (std::size_t i = 1; i <= keyed.size(); ++i) {
        if (i < keyed.size() && keyed[i].first == keyed[start].first) continue;
        std::vector<int> part;
        for (std::size_t j = start; j < i; ++j) part.push_back(keyed[j].second);
        next.push_back(std::move(part));
        start = i;
      }
    }
    if (next.size() != cells.size()) changed = true;
    cells = std::move(next);
  }
}

std::uint64_t code_of(const Dense& g, const std::vector<int>& order) {
  std::uint64_t code = 0;
  for (int j = 1; j < g.n; ++j)
    for (int i = 0; i < j; ++i) code = (code << 1) | ((g.adj[order[i]] >> order[j]) & 1u);
  return code;
}

/// Individualisation-refinement search; keeps the largest leaf code.
void search(const Dense& g, Cells cells, std::uint64_t& best, std::vector<int>& best_order, bool& found) {
  refine(g, cells);
  auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
  if (target == cells.end()) {
    std::vector<int> order;
    for (const auto& c : cells) order.push_back(c.front());
    const std::uint64_t code = code_of(g, order);
    if (!found || code > best) {
      best = code;
      best_order = order;
      found = true;
    }
    return;
  }
  const std::size_t at = static_cast<std::size_t>(target - cells.begin());
  for (int v : cells[at]) {
    Cells branch(cells.begin(), cells.begin() + at);
    branch.push_back({v});
    std::vector<int> rest;
    for (int w : cells[at])
      if (w != v) rest.push_back(w);
    branch.push_back(std::move(rest));
    branch.insert(branch.end(), cells.begin() + at + 1, cells.end());
    search(g, std::move(branch), best, best_order, found);
  }
}

std::pair<std::uint64_t, std::vector<int>> canonical(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder) fail(ErrorCode::TooLarge, "canonical form is limited to 10 vertices");
  Dense d(g);
  Cells cells(1);
  for (int v = 0; v < d.n; ++v) cells[0].push_back(v);
  if (d.n == 0) return {0, {}};
  std::uint64_t best = 0;
  std::vector<int> order;
  bool found = false;
  search(d, std::move(cells), best, order, found);
  return {best, order};
}

Graph relabel(const Graph& g, const std::vector<int>& order) {
  std::vector<int> position(g.order());
  for (int i = 0; i < g.order(); ++i) position[order[i]] = i;
  std::vector<Edge> edges;
  for (Edge e : g.edges()) edges.push_back(Edge::of(position[e.u], position[e.v]));
  return Graph(g.order(), edges);
}

}  // namespace

Graph canonical_form(const Graph& g) { return relabel(g, canonical(g).second); }

std::uint64_t canonical_code(const Graph& g) { return canonical(g).first; }

std::vector<Graph> nonisomorphic_graphs(int n) {
  if (n < 1 || n > kMaxEnumerationOrder) fail(ErrorCode::InvalidArgument, "enumeration order must be in [1, 9]");
  std::vector<Graph> level{Graph(1)};
  for (int m = 2; m <= n; ++m) {
    std::unordered_set<std::uint64_t> seen;
    std::vector<std::pair<std::uint64_t, Graph>> next;
    for (const Graph& base : level) {
      for (std::uint32_t subset = 0; subset < (1u << (m - 1)); ++subset) {
        std::vector<Edge> edges = base.edges();
        for (int v = 0; v < m - 1; ++v)
          if ((subset >> v) & 1u) edges.push_back({v, m - 1});
        Graph candidate(m, edges);
        auto [code, order] = canonical(candidate);
        if (seen.insert(code).second) next.push_back({code, relabel(candidate, order)});
      }
    }
    std::sort(next.begin(), next.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    level.clear();
    for (auto& item : next) level.push_back(std::move(item.second));
  }
  return level;
}

void for_each_graph(int max_n, const std::function<void(const Graph&)>& visit) {
  for (int n = 1; n <= max_n; ++n)
    for (const Graph& g : nonisomorphic_graphs(n)) visit(g);
}

Graph random_graph(int n, double p, std::uint64_t seed) {
  if (n < 0) fail(ErrorCode::InvalidArgument, "order must be non-negative");
  if (!(p >= 0.0 && p <= 1.0)) fail(ErrorCode::InvalidArgument, "edge probability must be in [0, 1]");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.push_back({u, v});
  return Graph(n, edges);
}

}  // namespace kmin
