#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kmin {

using Vertex = int;

/// Undirected edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  static Edge of(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }
  bool has(Vertex x) const { return u == x || v == x; }
  Vertex other(Vertex x) const { return x == u ? v : u; }

  auto operator<=>(const Edge&) const = default;
};

/// Finite simple undirected graph on vertices 0..n-1. Immutable after
/// construction; edges are kept sorted so edge indices are canonical.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int order);
  /// Throws InvalidArgument on loops, parallel edges or out-of-range ends.
  Graph(int order, std::span<const Edge> edges);
  Graph(int order, std::initializer_list<Edge> edges)
      : Graph(order, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const { return static_cast<int>(adjacency_.size()); }
  int size() const { return static_cast<int>(edges_.size()); }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  bool adjacent(Vertex a, Vertex b) const;

  const std::vector<Edge>& edges() const { return edges_; }
  std::optional<int> edge_index(Vertex a, Vertex b) const;

  int max_degree() const;
  int min_degree() const;
  bool is_complete() const;
  bool is_connected() const;

  /// Connected components, each sorted, ordered by smallest vertex.
  std::vector<std::vector<Vertex>> components() const;

  bool operator==(const Graph& other) const { return edges_ == other.edges_ && order() == other.order(); }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Edge> edges_;
};

/// Result of deleting vertices: the new graph plus index translation.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> original;   // new index -> old index
  std::vector<Vertex> local;      // old index -> new index, -1 if absent
};

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep);
Subgraph delete_vertices(const Graph& g, std::span<const Vertex> removed);
Subgraph delete_vertex(const Graph& g, Vertex v);

/// Vertex indices are unchanged by edge deletion.
Graph delete_edges(const Graph& g, std::span<const Edge> removed);
Graph delete_edge(const Graph& g, Edge e);

/// Sorted components of g - removed_vertices - removed_edges.
std::vector<std::vector<Vertex>> components_without(const Graph& g,
                                                    std::span<const Vertex> removed_vertices,
                                                    std::span<const Edge> removed_edges = {});

struct DegreeProfile {
  std::vector<int> degrees;
  int max_degree = 0;
  std::vector<int> multiset;  // sorted ascending
};

DegreeProfile degree_profile(const Graph& g);

/// V_n: every vertex of degree at most n.
std::vector<Vertex> small_degree_set(const Graph& g, int n);

// ---------------------------------------------------------------------------

struct MultiEdge {
  Vertex u = 0;
  Vertex v = 0;
  int multiplicity = 1;
  auto operator<=>(const MultiEdge&) const = default;
};

struct Subdivision;

/// Finite multigraph without loops. Pairs are merged on construction, so
/// {0,1,2} and {0,1,3} become one pair of multiplicity 5.
class MultiGraph {
 public:
  MultiGraph() = default;
  MultiGraph(int order, std::span<const MultiEdge> edges);
  explicit MultiGraph(const Graph& simple);

  int order() const { return order_; }
  const std::vector<MultiEdge>& edges() const { return edges_; }
  int multiplicity(Vertex a, Vertex b) const;
  int degree(Vertex v) const { return degree_[v]; }
  int max_degree() const;
  int min_degree() const;
  int total_multiplicity() const;

  /// Underlying simple graph (multiplicities dropped).
  Graph simple() const;
  /// Every parallel copy of every edge gets its own midpoint vertex.
  Subdivision subdivide() const;

 private:
  int order_ = 0;
  std::vector<MultiEdge> edges_;
  std::vector<int> degree_;
};

struct Subdivision {
  Graph graph;
  int original_order = 0;
  /// For vertex original_order + i: index into MultiGraph::edges().
  std::vector<int> pair_of_midpoint;
};

std::vector<Vertex> small_degree_set(const MultiGraph& g, int n);

// ---------------------------------------------------------------------------

/// Connected induced subgraph with its boundaries relative to the host.
struct Region {
  std::vector<Vertex> vertices;
  std::vector<Vertex> vertex_boundary;
  std::vector<Edge> edge_boundary;

  bool profound() const { return vertices.size() > vertex_boundary.size(); }
  bool is_k_region(int k) const { return static_cast<int>(vertex_boundary.size()) == k; }
  bool contains(Vertex v) const;
  std::vector<Vertex> interior() const;
};

/// Throws Empty or NotConnected.
Region region_of(const Graph& g, std::span<const Vertex> vertices);

/// Boundaries of an arbitrary vertex set (no connectivity requirement).
std::vector<Vertex> vertex_boundary(const Graph& g, std::span<const Vertex> set);
std::vector<Edge> edge_boundary(const Graph& g, std::span<const Vertex> set);
int edge_boundary_weight(const MultiGraph& g, std::span<const Vertex> set);
/// Open neighbourhood N(set) \ set.
std::vector<Vertex> neighborhood(const Graph& g, std::span<const Vertex> set);
bool induces_connected(const Graph& g, std::span<const Vertex> set);

/// Mixed vertex/edge set, |S| = |S_V| + |S_E|.
struct MixedSet {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  int size() const { return static_cast<int>(vertices.size() + edges.size()); }
};

// ---------------------------------------------------------------------------

/// Construction output: graph plus one label per vertex, so witnesses can be
/// reported in construction coordinates.
struct LabeledGraph {
  Graph graph;
  std::vector<std::string> labels;

  /// Throws InvalidArgument if the label does not exist.
  Vertex vertex(std::string_view label) const;
};

std::vector<Vertex> sorted_unique(std::vector<Vertex> v);
std::vector<char> membership(int n, std::span<const Vertex> set);

}  // namespace kmin
