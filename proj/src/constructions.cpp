#include "kmin/constructions.hpp"

#include <algorithm>
#include <string>

#include "kmin/error.hpp"

namespace kmin {

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  return Graph(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) fail(ErrorCode::InvalidParams, "cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back(Edge::of(i, (i + 1) % n));
  return Graph(n, edges);
}

Graph path_graph(int n) {
  if (n < 1) fail(ErrorCode::InvalidParams, "path needs at least 1 vertex");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, edges);
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.push_back(Edge::of(i, (i + 1) % 5));
    edges.push_back(Edge::of(i, i + 5));
    edges.push_back(Edge::of(5 + i, 5 + (i + 2) % 5));
  }
  return Graph(10, edges);
}

namespace {

template <class Adjacent>
Graph product(const Graph& g1, const Graph& g2, Adjacent adjacent_pair) {
  if (g1.order() == 0 || g2.order() == 0) fail(ErrorCode::InvalidParams, "product of empty graph");
  const int n2 = g2.order();
  const int n = g1.order() * n2;
  std::vector<Edge> edges;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (adjacent_pair(a / n2, a % n2, b / n2, b % n2)) edges.push_back({a, b});
    }
  }
  return Graph(n, edges);
}

std::string pair_label(int i, int c) { return "(" + std::to_string(i) + "," + std::to_string(c) + ")"; }

}  // namespace

Graph strong_product(const Graph& g1, const Graph& g2) {
  return product(g1, g2, [&](int u1, int u2, int v1, int v2) {
    const bool eq1 = u1 == v1, eq2 = u2 == v2;
    const bool adj1 = !eq1 && g1.adjacent(u1, v1);
    const bool adj2 = !eq2 && g2.adjacent(u2, v2);
    return (adj1 && (eq2 || adj2)) || (adj2 && (eq1 || adj1));
  });
}

Graph cartesian_product(const Graph& g1, const Graph& g2) {
  return product(g1, g2, [&](int u1, int u2, int v1, int v2) {
    return (u1 == v1 && g2.adjacent(u2, v2)) || (u2 == v2 && g1.adjacent(u1, v1));
  });
}

Graph square(const Graph& g) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < g.order(); ++v) {
    std::vector<Vertex> reach(g.neighbors(v).begin(), g.neighbors(v).end());
    for (Vertex w : g.neighbors(v))
      for (Vertex x : g.neighbors(w)) reach.push_back(x);
    for (Vertex x : sorted_unique(std::move(reach)))
      if (x > v) edges.push_back({v, x});
  }
  return Graph(g.order(), edges);
}

LabeledGraph ladder(int m) {
  if (m < 2) fail(ErrorCode::InvalidParams, "ladder needs m >= 2");
  LabeledGraph out{cartesian_product(path_graph(m), complete_graph(2)), {}};
  for (int i = 0; i < m; ++i)
    for (int c = 0; c < 2; ++c) out.labels.push_back(pair_label(i, c));
  return out;
}

LabeledGraph strong_cycle(int k, int l) {
  if (k < 2 || k % 2 != 0) fail(ErrorCode::InvalidParams, "strong_cycle needs even k >= 2");
  if (l < 4) fail(ErrorCode::InvalidParams, "strong_cycle needs l >= 4");
  LabeledGraph out{strong_product(cycle_graph(l), complete_graph(k / 2)), {}};
  for (int i = 0; i < l; ++i)
    for (int c = 0; c < k / 2; ++c) out.labels.push_back(pair_label(i, c));
  return out;
}

LabeledGraph strong_cycle_odd(int k, int l, int copy, int a, int b) {
  if (k < 3 || k % 2 == 0) fail(ErrorCode::InvalidParams, "strong_cycle_odd needs odd k >= 3");
  if (l < 4) fail(ErrorCode::InvalidParams, "strong_cycle_odd needs l >= 4");
  const int width = (k + 1) / 2;
  if (copy < 0 || copy >= l || a < 0 || a >= width || b < 0 || b >= width)
    fail(ErrorCode::InvalidParams, "strong_cycle_odd: deleted vertex out of range");
  Graph full = strong_product(cycle_graph(l), complete_graph(width));
  const Vertex removed[] = {copy * width + a, ((copy + 1) % l) * width + b};
  Subgraph sub = delete_vertices(full, removed);
  LabeledGraph out{std::move(sub.graph), {}};
  for (Vertex v : sub.original) out.labels.push_back(pair_label(v / width, v % width));
  return out;
}

LabeledGraph band_graph(int k, int l) {
  if (k < 3 || l < 2) fail(ErrorCode::InvalidParams, "band_graph needs k >= 3 and l >= 2");
  const int width = 2 * (k - 1);
  const int n = width * l + 2;
  const Vertex a = width * l, b = width * l + 1;
  auto member = [&](int copy, int j) { return copy * width + j; };

  std::vector<Edge> edges;
  for (int copy = 0; copy < l; ++copy) {
    for (int i = 0; i < width; ++i)
      for (int j = i + 1; j < width; ++j) edges.push_back({member(copy, i), member(copy, j)});
    if (copy + 1 < l) {
      for (int j = 0; j < k - 1; ++j) edges.push_back({member(copy, k - 1 + j), member(copy + 1, j)});
    }
  }
  for (int j = 0; j < k - 1; ++j) {
    edges.push_back(Edge::of(a, member(0, j)));
    edges.push_back(Edge::of(b, member(l - 1, k - 1 + j)));
  }
  edges.push_back({a, b});

  LabeledGraph out{Graph(n, edges), {}};
  for (int copy = 0; copy < l; ++copy)
    for (int j = 0; j < width; ++j) out.labels.push_back("H" + std::to_string(copy + 1) + ":" + std::to_string(j));
  out.labels.push_back("a");
  out.labels.push_back("b");
  return out;
}

LabeledGraph path_square_example(int l) {
  if (l < 10) fail(ErrorCode::InvalidParams, "path_square_example needs l >= 10");
  Graph sq = square(path_graph(l));
  // 1-based names from the construction, 0-based indices here.
  auto v = [](int i) { return i - 1; };
  std::vector<Edge> edges;
  for (Edge e : sq.edges()) {
    if (e == Edge::of(v(3), v(4)) || e == Edge::of(v(l - 3), v(l - 2))) continue;
    edges.push_back(e);
  }
  edges.push_back(Edge::of(v(1), v(4)));
  edges.push_back(Edge::of(v(l - 3), v(l)));
  LabeledGraph out{Graph(l, edges), {}};
  for (int i = 1; i <= l; ++i) out.labels.push_back("v" + std::to_string(i));
  return out;
}

MultiGraph multipath(int k, int m) {
  if (k < 1 || m < 2) fail(ErrorCode::InvalidParams, "multipath needs k >= 1 and m >= 2");
  std::vector<MultiEdge> edges;
  for (int i = 0; i + 1 < m; ++i) edges.push_back({i, i + 1, k});
  return MultiGraph(m, edges);
}

}  // namespace kmin
