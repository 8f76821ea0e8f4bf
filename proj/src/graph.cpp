#include "kmin/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <tuple>

#include "kmin/error.hpp"

namespace kmin {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::Empty: return "Empty";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::NoSuchEdge: return "NoSuchEdge";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::NoSeparatorThroughX: return "NoSeparatorThroughX";
    case ErrorCode::WitnessNotFound: return "WitnessNotFound";
    case ErrorCode::NoMinimalRegion: return "NoMinimalRegion";
    case ErrorCode::ClassMismatch: return "ClassMismatch";
    case ErrorCode::NotConverged: return "NotConverged";
    case ErrorCode::ValidationFailed: return "ValidationFailed";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

std::vector<Vertex> sorted_unique(std::vector<Vertex> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<char> membership(int n, std::span<const Vertex> set) {
  std::vector<char> in(n, 0);
  for (Vertex v : set) {
    if (v < 0 || v >= n) fail(ErrorCode::InvalidArgument, "vertex " + std::to_string(v) + " out of range");
    in[v] = 1;
  }
  return in;
}

Graph::Graph(int order) {
  if (order < 0) fail(ErrorCode::InvalidArgument, "negative order");
  adjacency_.resize(order);
}

Graph::Graph(int order, std::span<const Edge> edges) : Graph(order) {
  edges_.reserve(edges.size());
  for (Edge e : edges) {
    if (e.u == e.v) fail(ErrorCode::InvalidArgument, "self-loop at " + std::to_string(e.u));
    if (e.u < 0 || e.v < 0 || e.u >= order || e.v >= order)
      fail(ErrorCode::InvalidArgument, "edge endpoint out of range");
    edges_.push_back(Edge::of(e.u, e.v));
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    fail(ErrorCode::InvalidArgument, "parallel edge in simple graph");
  for (Edge e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& row : adjacency_) std::sort(row.begin(), row.end());
}

bool Graph::adjacent(Vertex a, Vertex b) const {
  const auto& row = adjacency_[a];
  return std::binary_search(row.begin(), row.end(), b);
}

std::optional<int> Graph::edge_index(Vertex a, Vertex b) const {
  Edge e = Edge::of(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<int>(it - edges_.begin());
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& row : adjacency_) best = std::max(best, static_cast<int>(row.size()));
  return best;
}

int Graph::min_degree() const {
  if (adjacency_.empty()) return 0;
  int best = order();
  for (const auto& row : adjacency_) best = std::min(best, static_cast<int>(row.size()));
  return best;
}

bool Graph::is_complete() const {
  const long long n = order();
  return static_cast<long long>(edges_.size()) == n * (n - 1) / 2;
}

bool Graph::is_connected() const {
  if (order() <= 1) return true;
  return components().size() == 1;
}

std::vector<std::vector<Vertex>> Graph::components() const {
  return components_without(*this, {}, {});
}

std::vector<std::vector<Vertex>> components_without(const Graph& g,
                                                    std::span<const Vertex> removed_vertices,
                                                    std::span<const Edge> removed_edges) {
  const int n = g.order();
  std::vector<char> gone = membership(n, removed_vertices);
  std::vector<Edge> cut(removed_edges.begin(), removed_edges.end());
  for (auto& e : cut) e = Edge::of(e.u, e.v);
  std::sort(cut.begin(), cut.end());
  auto is_cut = [&](Vertex a, Vertex b) {
    return !cut.empty() && std::binary_search(cut.begin(), cut.end(), Edge::of(a, b));
  };

  std::vector<int> comp(n, -1);
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (gone[s] || comp[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    comp[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      out[id].push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (gone[w] || comp[w] >= 0 || is_cut(v, w)) continue;
        comp[w] = id;
        stack.push_back(w);
      }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  Subgraph out;
  out.original = sorted_unique({keep.begin(), keep.end()});
  out.local.assign(g.order(), -1);
  for (int i = 0; i < static_cast<int>(out.original.size()); ++i) {
    Vertex v = out.original[i];
    if (v < 0 || v >= g.order()) fail(ErrorCode::InvalidArgument, "vertex out of range");
    out.local[v] = i;
  }
  std::vector<Edge> edges;
  for (Edge e : g.edges()) {
    if (out.local[e.u] >= 0 && out.local[e.v] >= 0) edges.push_back(Edge::of(out.local[e.u], out.local[e.v]));
  }
  out.graph = Graph(static_cast<int>(out.original.size()), edges);
  return out;
}

Subgraph delete_vertices(const Graph& g, std::span<const Vertex> removed) {
  std::vector<char> gone = membership(g.order(), removed);
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!gone[v]) keep.push_back(v);
  return induced_subgraph(g, keep);
}

Subgraph delete_vertex(const Graph& g, Vertex v) {
  const Vertex one[] = {v};
  return delete_vertices(g, one);
}

Graph delete_edges(const Graph& g, std::span<const Edge> removed) {
  std::vector<Edge> cut(removed.begin(), removed.end());
  for (auto& e : cut) {
    e = Edge::of(e.u, e.v);
    if (!g.edge_index(e.u, e.v)) fail(ErrorCode::NoSuchEdge, "edge not in graph");
  }
  std::sort(cut.begin(), cut.end());
  std::vector<Edge> keep;
  for (Edge e : g.edges())
    if (!std::binary_search(cut.begin(), cut.end(), e)) keep.push_back(e);
  return Graph(g.order(), keep);
}

Graph delete_edge(const Graph& g, Edge e) {
  const Edge one[] = {e};
  return delete_edges(g, one);
}

DegreeProfile degree_profile(const Graph& g) {
  DegreeProfile p;
  p.degrees.resize(g.order());
  for (Vertex v = 0; v < g.order(); ++v) p.degrees[v] = g.degree(v);
  p.multiset = p.degrees;
  std::sort(p.multiset.begin(), p.multiset.end());
  p.max_degree = p.multiset.empty() ? 0 : p.multiset.back();
  return p;
}

std::vector<Vertex> small_degree_set(const Graph& g, int n) {
  if (n < 0) fail(ErrorCode::InvalidArgument, "small_degree_set: n must be non-negative");
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) <= n) out.push_back(v);
  return out;
}

// ---------------------------------------------------------------------------

MultiGraph::MultiGraph(int order, std::span<const MultiEdge> edges) : order_(order), degree_(order, 0) {
  if (order < 0) fail(ErrorCode::InvalidArgument, "negative order");
  std::map<std::pair<Vertex, Vertex>, int> merged;
  for (const MultiEdge& e : edges) {
    if (e.u == e.v) fail(ErrorCode::InvalidArgument, "self-loop in multigraph");
    if (e.u < 0 || e.v < 0 || e.u >= order || e.v >= order)
      fail(ErrorCode::InvalidArgument, "multigraph edge endpoint out of range");
    if (e.multiplicity < 0) fail(ErrorCode::InvalidArgument, "negative multiplicity");
    merged[{std::min(e.u, e.v), std::max(e.u, e.v)}] += e.multiplicity;
  }
  for (const auto& [pair, mult] : merged) {
    if (mult == 0) continue;
    edges_.push_back({pair.first, pair.second, mult});
    degree_[pair.first] += mult;
    degree_[pair.second] += mult;
  }
}

MultiGraph::MultiGraph(const Graph& simple) : order_(simple.order()), degree_(simple.order(), 0) {
  for (Edge e : simple.edges()) {
    edges_.push_back({e.u, e.v, 1});
    ++degree_[e.u];
    ++degree_[e.v];
  }
}

int MultiGraph::multiplicity(Vertex a, Vertex b) const {
  MultiEdge key{std::min(a, b), std::max(a, b), 0};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key,
                             [](const MultiEdge& x, const MultiEdge& y) {
                               return std::tie(x.u, x.v) < std::tie(y.u, y.v);
                             });
  if (it == edges_.end() || it->u != key.u || it->v != key.v) return 0;
  return it->multiplicity;
}

int MultiGraph::max_degree() const {
  return degree_.empty() ? 0 : *std::max_element(degree_.begin(), degree_.end());
}

int MultiGraph::min_degree() const {
  return degree_.empty() ? 0 : *std::min_element(degree_.begin(), degree_.end());
}

int MultiGraph::total_multiplicity() const {
  int total = 0;
  for (const auto& e : edges_) total += e.multiplicity;
  return total;
}

Graph MultiGraph::simple() const {
  std::vector<Edge> edges;
  for (const auto& e : edges_) edges.push_back({e.u, e.v});
  return Graph(order_, edges);
}

Subdivision MultiGraph::subdivide() const {
  Subdivision out;
  out.original_order = order_;
  std::vector<Edge> edges;
  int next = order_;
  for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
    for (int c = 0; c < edges_[i].multiplicity; ++c) {
      edges.push_back({edges_[i].u, next});
      edges.push_back({edges_[i].v, next});
      out.pair_of_midpoint.push_back(i);
      ++next;
    }
  }
  out.graph = Graph(next, edges);
  return out;
}

std::vector<Vertex> small_degree_set(const MultiGraph& g, int n) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) <= n) out.push_back(v);
  return out;
}

// ---------------------------------------------------------------------------

bool Region::contains(Vertex v) const {
  return std::binary_search(vertices.begin(), vertices.end(), v);
}

std::vector<Vertex> Region::interior() const {
  std::vector<Vertex> out;
  std::set_difference(vertices.begin(), vertices.end(), vertex_boundary.begin(), vertex_boundary.end(),
                      std::back_inserter(out));
  return out;
}

std::vector<Vertex> vertex_boundary(const Graph& g, std::span<const Vertex> set) {
  std::vector<char> in = membership(g.order(), set);
  std::vector<Vertex> out;
  for (Vertex v : sorted_unique({set.begin(), set.end()})) {
    for (Vertex w : g.neighbors(v)) {
      if (!in[w]) {
        out.push_back(v);
        break;
      }
    }
  }
  return out;
}

std::vector<Edge> edge_boundary(const Graph& g, std::span<const Vertex> set) {
  std::vector<char> in = membership(g.order(), set);
  std::vector<Edge> out;
  for (Edge e : g.edges())
    if (in[e.u] != in[e.v]) out.push_back(e);
  return out;
}

int edge_boundary_weight(const MultiGraph& g, std::span<const Vertex> set) {
  std::vector<char> in = membership(g.order(), set);
  int total = 0;
  for (const auto& e : g.edges())
    if (in[e.u] != in[e.v]) total += e.multiplicity;
  return total;
}

std::vector<Vertex> neighborhood(const Graph& g, std::span<const Vertex> set) {
  std::vector<char> in = membership(g.order(), set);
  std::vector<Vertex> out;
  for (Vertex v : set)
    for (Vertex w : g.neighbors(v))
      if (!in[w]) out.push_back(w);
  return sorted_unique(std::move(out));
}

bool induces_connected(const Graph& g, std::span<const Vertex> set) {
  if (set.empty()) return false;
  std::vector<char> in = membership(g.order(), set);
  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> stack{set.front()};
  seen[set.front()] = 1;
  int reached = 0;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    ++reached;
    for (Vertex w : g.neighbors(v)) {
      if (in[w] && !seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  int distinct = 0;
  for (char c : in) distinct += c;
  return reached == distinct;
}

Region region_of(const Graph& g, std::span<const Vertex> vertices) {
  if (vertices.empty()) fail(ErrorCode::Empty, "region must be non-empty");
  Region r;
  r.vertices = sorted_unique({vertices.begin(), vertices.end()});
  if (!induces_connected(g, r.vertices)) fail(ErrorCode::NotConnected, "region does not induce a connected subgraph");
  r.vertex_boundary = vertex_boundary(g, r.vertices);
  r.edge_boundary = edge_boundary(g, r.vertices);
  return r;
}

Vertex LabeledGraph::vertex(std::string_view label) const {
  for (int i = 0; i < static_cast<int>(labels.size()); ++i)
    if (labels[i] == label) return i;
  fail(ErrorCode::InvalidArgument, "no vertex labelled '" + std::string(label) + "'");
}

}  // namespace kmin
