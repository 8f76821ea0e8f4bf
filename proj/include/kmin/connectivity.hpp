#pragma once

#include <optional>
#include <span>
#include <vector>

#include "kmin/flow.hpp"
#include "kmin/graph.hpp"

namespace kmin {

/// Vertex set T with the components of G - T.
struct Separator {
  std::vector<Vertex> vertices;
  std::vector<std::vector<Vertex>> sides;

  int size() const { return static_cast<int>(vertices.size()); }
};

/// Edge cut F = E(A, B). For multigraphs `weight` counts multiplicities.
struct Cut {
  std::vector<Edge> edges;
  std::vector<Vertex> side_a;
  std::vector<Vertex> side_b;
  int weight = 0;

  int size() const { return weight; }
  bool contains(Edge e) const;
};

/// Flow kernel shared by all connectivity queries on one host graph.
///
/// Vertices and edges can be masked out, which is how the minimality
/// predicates evaluate G - v and G - e without rebuilding anything. A masked
/// graph with at most one vertex left has connectivity 0 (K^1 is not
/// considered 1-connected).
class ConnectivityKernel {
 public:
  explicit ConnectivityKernel(const Graph& g);
  explicit ConnectivityKernel(const MultiGraph& g);

  void remove_vertex(Vertex v) { vertex_gone_[v] = 1; }
  void remove_edge(int edge_index) { edge_gone_[edge_index] = 1; }
  void restore_vertex(Vertex v) { vertex_gone_[v] = 0; }
  void restore_edge(int edge_index) { edge_gone_[edge_index] = 0; }
  /// Multigraph edge deletion: lowers the multiplicity of one pair.
  void set_edge_weight(int edge_index, int weight) { weight_[edge_index] = weight; }
  void restore_all();

  int active_order() const;
  bool active_connected() const;

  int vertex_connectivity();
  int edge_connectivity();
  bool is_k_connected(int k);
  bool is_k_edge_connected(int k);

  /// Local connectivities; s and t must be active. For the vertex version s
  /// and t must not be adjacent.
  int local_vertex_connectivity(Vertex s, Vertex t, int limit = FlowNetwork::kInfinity);
  int local_edge_connectivity(Vertex s, Vertex t, int limit = FlowNetwork::kInfinity);

  /// Minimum s-t vertex separator, source-minimal.
  std::vector<Vertex> min_separator_between(Vertex s, Vertex t);
  /// Minimum s-t cut, source side minimal; edges reported as host edges.
  Cut min_cut_between(Vertex s, Vertex t);

  /// Global minimum separator of the active graph; nullopt when complete.
  std::optional<std::vector<Vertex>> min_separator();
  Cut min_cut();

 private:
  void prepare_vertex_network();
  void prepare_edge_network();
  bool active_adjacent(Vertex a, Vertex b) const;
  std::vector<Vertex> active_vertices() const;

  int n_;
  std::vector<Edge> edges_;
  std::vector<int> weight_;
  std::vector<int> base_weight_;
  std::vector<std::vector<std::pair<Vertex, int>>> incident_;  // (neighbour, edge index)
  std::vector<char> vertex_gone_;
  std::vector<char> edge_gone_;

  FlowNetwork vertex_net_;
  std::vector<int> split_arc_;                    // v_in -> v_out
  std::vector<std::pair<int, int>> vertex_edge_arcs_;
  FlowNetwork edge_net_;
  std::vector<int> edge_arc_;
};

int vertex_connectivity(const Graph& g);
int edge_connectivity(const Graph& g);
int edge_connectivity(const MultiGraph& g);
/// Independent route: lambda over original-vertex pairs of the subdivision.
int edge_connectivity_by_subdivision(const MultiGraph& g);
bool is_k_connected(const Graph& g, int k);
bool is_k_edge_connected(const Graph& g, int k);
bool is_k_edge_connected(const MultiGraph& g, int k);

/// Minimum separator of G; nullopt for complete graphs.
std::optional<Separator> min_vertex_separator(const Graph& g);
Cut min_edge_cut(const Graph& g);
Cut min_edge_cut(const MultiGraph& g);

/// Minimum separator among those containing x, nullopt when none exists.
std::optional<Separator> min_separator_containing(const Graph& g, Vertex x);

/// Minimum cut among cuts containing e (= minimum cut separating its ends).
Cut min_cut_containing_edge(const Graph& g, Edge e);
Cut min_cut_containing_edge(const MultiGraph& g, Edge e);

enum class PathMode { Vertex, Edge };

/// Maximum disjoint A-B path family together with a dual separator (vertex
/// mode) or cut (edge mode) of the same size.
struct PathSystem {
  std::vector<std::vector<Vertex>> paths;
  std::vector<Vertex> separator;
  std::vector<Edge> cut;
  int value = 0;
};

/// `edge_capacity` (indexed like g.edges()) is only read in edge mode; empty
/// means every edge has capacity 1. In edge mode A and B must be disjoint.
PathSystem max_disjoint_paths(const Graph& g, std::span<const Vertex> a, std::span<const Vertex> b,
                              PathMode mode, std::span<const int> edge_capacity = {});

struct Connectivity {
  int kappa = 0;
  int lambda = 0;
};

/// Exhaustive oracle, independent of any flow code. Guarded to n <= 12.
Connectivity brute_force_connectivity(const Graph& g);

}  // namespace kmin
