#include "kmin/minimality.hpp"

#include <algorithm>

#include "kmin/connectivity.hpp"
#include "kmin/error.hpp"

namespace kmin {

char class_letter(MinimalityClass c) { return static_cast<char>('a' + static_cast<int>(c)); }

const char* class_name(MinimalityClass c) {
  switch (c) {
    case MinimalityClass::EdgeMinKConn: return "EdgeMinKConn";
    case MinimalityClass::VertexMinKConn: return "VertexMinKConn";
    case MinimalityClass::EdgeMinKEdgeConn: return "EdgeMinKEdgeConn";
    case MinimalityClass::VertexMinKEdgeConn: return "VertexMinKEdgeConn";
  }
  return "?";
}

MinimalityClass parse_class(std::string_view text) {
  for (MinimalityClass c : kAllClasses) {
    if (text.size() == 1 && (text[0] == class_letter(c) || text[0] == class_letter(c) - 'a' + 'A')) return c;
    if (text == class_name(c)) return c;
  }
  fail(ErrorCode::InvalidArgument, "unknown class '" + std::string(text) + "' (expected a, b, c or d)");
}

bool uses_vertex_connectivity(MinimalityClass c) {
  return c == MinimalityClass::EdgeMinKConn || c == MinimalityClass::VertexMinKConn;
}

bool deletes_vertices(MinimalityClass c) {
  return c == MinimalityClass::VertexMinKConn || c == MinimalityClass::VertexMinKEdgeConn;
}

const char* to_string(Certificate::Kind kind) {
  switch (kind) {
    case Certificate::Kind::None: return "none";
    case Certificate::Kind::BelowK: return "below_k";
    case Certificate::Kind::RemovableEdge: return "removable_edge";
    case Certificate::Kind::RemovableVertex: return "removable_vertex";
  }
  return "?";
}

namespace {

void check_args(int order, int k) {
  if (k < 1) fail(ErrorCode::InvalidArgument, "k must be at least 1");
  if (order < 2) fail(ErrorCode::TooSmall, "minimality predicates need at least 2 vertices");
}

int measure(ConnectivityKernel& kernel, bool vertex_version) {
  return vertex_version ? kernel.vertex_connectivity() : kernel.edge_connectivity();
}

MinimalityResult finish(MinimalityResult r, const std::vector<Edge>& edges) {
  if (r.base < r.k) {
    r.certificate = {Certificate::Kind::BelowK, std::nullopt, std::nullopt, r.base};
    return r;
  }
  const bool by_vertex = deletes_vertices(r.cls);
  for (std::size_t i = 0; i < r.deletion_values.size(); ++i) {
    if (r.deletion_values[i] < r.k) continue;
    Certificate c;
    c.value = r.deletion_values[i];
    if (by_vertex) {
      c.kind = Certificate::Kind::RemovableVertex;
      c.vertex = static_cast<Vertex>(i);
    } else {
      c.kind = Certificate::Kind::RemovableEdge;
      c.edge = edges[i];
    }
    r.certificate = c;
    return r;
  }
  r.holds = true;
  return r;
}

template <class G>
MinimalityResult run(const G& g, MinimalityClass cls, int k, const std::vector<Edge>& edges,
                     const std::vector<int>& multiplicity) {
  check_args(g.order(), k);
  const bool vertex_version = uses_vertex_connectivity(cls);
  ConnectivityKernel kernel(g);
  MinimalityResult r;
  r.cls = cls;
  r.k = k;
  r.base = measure(kernel, vertex_version);
  if (r.base >= k) {
    if (deletes_vertices(cls)) {
      for (Vertex v = 0; v < g.order(); ++v) {
        kernel.remove_vertex(v);
        r.deletion_values.push_back(measure(kernel, vertex_version));
        kernel.restore_vertex(v);
      }
    } else {
      for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
        if (multiplicity.empty()) {
          kernel.remove_edge(i);
          r.deletion_values.push_back(measure(kernel, vertex_version));
          kernel.restore_edge(i);
        } else {
          kernel.set_edge_weight(i, multiplicity[i] - 1);
          r.deletion_values.push_back(measure(kernel, vertex_version));
          kernel.set_edge_weight(i, multiplicity[i]);
        }
      }
    }
  }
  return finish(std::move(r), edges);
}

std::vector<Edge> pairs_of(const MultiGraph& g) {
  std::vector<Edge> out;
  for (const auto& e : g.edges()) out.push_back({e.u, e.v});
  return out;
}

std::vector<int> multiplicities_of(const MultiGraph& g) {
  std::vector<int> out;
  for (const auto& e : g.edges()) out.push_back(e.multiplicity);
  return out;
}

}  // namespace

MinimalityResult is_edge_min_k_connected(const Graph& g, int k) {
  return run(g, MinimalityClass::EdgeMinKConn, k, g.edges(), {});
}

MinimalityResult is_vertex_min_k_connected(const Graph& g, int k) {
  return run(g, MinimalityClass::VertexMinKConn, k, g.edges(), {});
}

MinimalityResult is_edge_min_k_edge_connected(const Graph& g, int k) {
  return run(g, MinimalityClass::EdgeMinKEdgeConn, k, g.edges(), {});
}

MinimalityResult is_edge_min_k_edge_connected(const MultiGraph& g, int k) {
  return run(g, MinimalityClass::EdgeMinKEdgeConn, k, pairs_of(g), multiplicities_of(g));
}

MinimalityResult is_vertex_min_k_edge_connected(const Graph& g, int k) {
  return run(g, MinimalityClass::VertexMinKEdgeConn, k, g.edges(), {});
}

MinimalityResult is_vertex_min_k_edge_connected(const MultiGraph& g, int k) {
  return run(g, MinimalityClass::VertexMinKEdgeConn, k, pairs_of(g), {});
}

MinimalityResult check_class(const Graph& g, MinimalityClass c, int k) {
  switch (c) {
    case MinimalityClass::EdgeMinKConn: return is_edge_min_k_connected(g, k);
    case MinimalityClass::VertexMinKConn: return is_vertex_min_k_connected(g, k);
    case MinimalityClass::EdgeMinKEdgeConn: return is_edge_min_k_edge_connected(g, k);
    case MinimalityClass::VertexMinKEdgeConn: return is_vertex_min_k_edge_connected(g, k);
  }
  fail(ErrorCode::InvalidArgument, "bad class");
}

bool certificate_refutes(const Graph& g, const MinimalityResult& r) {
  const bool vertex_version = uses_vertex_connectivity(r.cls);
  auto value_of = [&](const Graph& h) {
    if (h.order() < 2) return 0;
    return vertex_version ? vertex_connectivity(h) : edge_connectivity(h);
  };
  switch (r.certificate.kind) {
    case Certificate::Kind::None: return false;
    case Certificate::Kind::BelowK: return value_of(g) < r.k;
    case Certificate::Kind::RemovableEdge: return value_of(delete_edge(g, *r.certificate.edge)) >= r.k;
    case Certificate::Kind::RemovableVertex: return value_of(delete_vertex(g, *r.certificate.vertex).graph) >= r.k;
  }
  return false;
}

ClassificationReport classify(const Graph& g, int k, std::string graph_id) {
  ClassificationReport report;
  report.graph_id = std::move(graph_id);
  report.k = k;
  for (std::size_t i = 0; i < kAllClasses.size(); ++i) report.results[i] = check_class(g, kAllClasses[i], k);
  return report;
}

bool MinimalityProfile::in_class(MinimalityClass c, int k) const {
  switch (c) {
    case MinimalityClass::EdgeMinKConn: return kappa >= k && max_kappa_minus_edge < k;
    case MinimalityClass::VertexMinKConn: return kappa >= k && max_kappa_minus_vertex < k;
    case MinimalityClass::EdgeMinKEdgeConn: return lambda >= k && max_lambda_minus_edge < k;
    case MinimalityClass::VertexMinKEdgeConn: return lambda >= k && max_lambda_minus_vertex < k;
  }
  return false;
}

MinimalityProfile minimality_profile(const Graph& g) {
  if (g.order() < 2) fail(ErrorCode::TooSmall, "profile needs at least 2 vertices");
  ConnectivityKernel kernel(g);
  MinimalityProfile p;
  p.kappa = kernel.vertex_connectivity();
  p.lambda = kernel.edge_connectivity();
  if (p.lambda == 0) return p;  // no class holds for any k >= 1
  for (int i = 0; i < g.size(); ++i) {
    kernel.remove_edge(i);
    if (p.max_lambda_minus_edge < p.lambda) p.max_lambda_minus_edge = std::max(p.max_lambda_minus_edge, kernel.edge_connectivity());
    if (p.max_kappa_minus_edge < p.kappa) p.max_kappa_minus_edge = std::max(p.max_kappa_minus_edge, kernel.vertex_connectivity());
    kernel.restore_edge(i);
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    kernel.remove_vertex(v);
    if (p.max_lambda_minus_vertex < p.lambda) p.max_lambda_minus_vertex = std::max(p.max_lambda_minus_vertex, kernel.edge_connectivity());
    if (p.max_kappa_minus_vertex < p.kappa) p.max_kappa_minus_vertex = std::max(p.max_kappa_minus_vertex, kernel.vertex_connectivity());
    kernel.restore_vertex(v);
  }
  return p;
}

}  // namespace kmin
