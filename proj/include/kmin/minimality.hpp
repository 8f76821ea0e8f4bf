#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kmin/graph.hpp"

namespace kmin {

enum class MinimalityClass { EdgeMinKConn, VertexMinKConn, EdgeMinKEdgeConn, VertexMinKEdgeConn };

inline constexpr std::array<MinimalityClass, 4> kAllClasses = {
    MinimalityClass::EdgeMinKConn, MinimalityClass::VertexMinKConn, MinimalityClass::EdgeMinKEdgeConn,
    MinimalityClass::VertexMinKEdgeConn};

/// 'a'..'d'.
char class_letter(MinimalityClass c);
const char* class_name(MinimalityClass c);
/// Accepts a letter or the enum name. Throws InvalidArgument.
MinimalityClass parse_class(std::string_view text);

bool uses_vertex_connectivity(MinimalityClass c);
bool deletes_vertices(MinimalityClass c);

/// Why a predicate failed. `value` is the connectivity that refutes it:
/// the base value for BelowK, the value after deletion otherwise.
struct Certificate {
  enum class Kind { None, BelowK, RemovableEdge, RemovableVertex };
  Kind kind = Kind::None;
  std::optional<Edge> edge;
  std::optional<Vertex> vertex;
  int value = 0;
};

const char* to_string(Certificate::Kind kind);

struct MinimalityResult {
  MinimalityClass cls{};
  int k = 0;
  bool holds = false;
  int base = 0;                      // kappa(G) or lambda(G)
  std::vector<int> deletion_values;  // per edge (g.edges() order) or per vertex
  Certificate certificate;
};

MinimalityResult is_edge_min_k_connected(const Graph& g, int k);
MinimalityResult is_vertex_min_k_connected(const Graph& g, int k);
MinimalityResult is_edge_min_k_edge_connected(const Graph& g, int k);
MinimalityResult is_edge_min_k_edge_connected(const MultiGraph& g, int k);
MinimalityResult is_vertex_min_k_edge_connected(const Graph& g, int k);
MinimalityResult is_vertex_min_k_edge_connected(const MultiGraph& g, int k);

MinimalityResult check_class(const Graph& g, MinimalityClass c, int k);

/// Re-checks a failing certificate (or the base value) from scratch.
bool certificate_refutes(const Graph& g, const MinimalityResult& r);

struct ClassificationReport {
  std::string graph_id;
  int k = 0;
  std::array<MinimalityResult, 4> results;
};

ClassificationReport classify(const Graph& g, int k, std::string graph_id = {});

/// Connectivity data for all k at once: kappa, lambda and the largest value
/// after a single deletion. Class membership for any k follows from these
/// because every predicate is "base >= k and every deletion < k".
/// The max_* fields stop growing once they reach the base value, after which
/// the class is empty for every k anyway.
struct MinimalityProfile {
  int kappa = 0;
  int lambda = 0;
  int max_kappa_minus_edge = -1;
  int max_kappa_minus_vertex = -1;
  int max_lambda_minus_edge = -1;
  int max_lambda_minus_vertex = -1;

  bool in_class(MinimalityClass c, int k) const;
};

MinimalityProfile minimality_profile(const Graph& g);

}  // namespace kmin
