#include "kmin/connectivity.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "kmin/error.hpp"

namespace kmin {

bool Cut::contains(Edge e) const {
  e = Edge::of(e.u, e.v);
  return std::find(edges.begin(), edges.end(), e) != edges.end();
}

// ---------------------------------------------------------------------------
// ConnectivityKernel

ConnectivityKernel::ConnectivityKernel(const Graph& g)
    : n_(g.order()), edges_(g.edges()), weight_(g.size(), 1) {
  incident_.resize(n_);
  for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
    incident_[edges_[i].u].push_back({edges_[i].v, i});
    incident_[edges_[i].v].push_back({edges_[i].u, i});
  }
  restore_all();
}

ConnectivityKernel::ConnectivityKernel(const MultiGraph& g) : n_(g.order()) {
  incident_.resize(n_);
  for (const auto& e : g.edges()) {
    const int i = static_cast<int>(edges_.size());
    edges_.push_back({e.u, e.v});
    weight_.push_back(e.multiplicity);
    incident_[e.u].push_back({e.v, i});
    incident_[e.v].push_back({e.u, i});
  }
  restore_all();
}

void ConnectivityKernel::restore_all() {
  if (base_weight_.empty()) base_weight_ = weight_;
  weight_ = base_weight_;
  vertex_gone_.assign(n_, 0);
  edge_gone_.assign(edges_.size(), 0);

  vertex_net_.reset(2 * n_);
  split_arc_.resize(n_);
  for (Vertex v = 0; v < n_; ++v) split_arc_[v] = vertex_net_.add_arc(2 * v, 2 * v + 1, 1);
  vertex_edge_arcs_.clear();
  for (Edge e : edges_) {
    const int a = vertex_net_.add_arc(2 * e.u + 1, 2 * e.v, FlowNetwork::kInfinity);
    const int b = vertex_net_.add_arc(2 * e.v + 1, 2 * e.u, FlowNetwork::kInfinity);
    vertex_edge_arcs_.push_back({a, b});
  }

  edge_net_.reset(n_);
  edge_arc_.clear();
  for (int i = 0; i < static_cast<int>(edges_.size()); ++i)
    edge_arc_.push_back(edge_net_.add_arc(edges_[i].u, edges_[i].v, weight_[i], weight_[i]));
}

void ConnectivityKernel::prepare_vertex_network() {
  for (Vertex v = 0; v < n_; ++v) vertex_net_.set_capacity(split_arc_[v], vertex_gone_[v] ? 0 : 1);
  for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
    const bool gone = edge_gone_[i] || vertex_gone_[edges_[i].u] || vertex_gone_[edges_[i].v];
    const int cap = gone ? 0 : FlowNetwork::kInfinity;
    vertex_net_.set_capacity(vertex_edge_arcs_[i].first, cap);
    vertex_net_.set_capacity(vertex_edge_arcs_[i].second, cap);
  }
  vertex_net_.clear_flow();
}

void ConnectivityKernel::prepare_edge_network() {
  for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
    const bool gone = edge_gone_[i] || vertex_gone_[edges_[i].u] || vertex_gone_[edges_[i].v];
    const int cap = gone ? 0 : weight_[i];
    edge_net_.set_capacity(edge_arc_[i], cap);
    edge_net_.set_capacity(edge_arc_[i] ^ 1, cap);
  }
  edge_net_.clear_flow();
}

std::vector<Vertex> ConnectivityKernel::active_vertices() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n_; ++v)
    if (!vertex_gone_[v]) out.push_back(v);
  return out;
}

int ConnectivityKernel::active_order() const {
  return static_cast<int>(std::count(vertex_gone_.begin(), vertex_gone_.end(), 0));
}

bool ConnectivityKernel::active_adjacent(Vertex a, Vertex b) const {
  for (auto [w, i] : incident_[a])
    if (w == b && !edge_gone_[i]) return true;
  return false;
}

bool ConnectivityKernel::active_connected() const {
  std::vector<Vertex> active = active_vertices();
  if (active.size() <= 1) return true;
  std::vector<char> seen(n_, 0);
  std::vector<Vertex> stack{active.front()};
  seen[active.front()] = 1;
  std::size_t reached = 0;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    ++reached;
    for (auto [w, i] : incident_[v]) {
      if (vertex_gone_[w] || edge_gone_[i] || seen[w]) continue;
      seen[w] = 1;
      stack.push_back(w);
    }
  }
  return reached == active.size();
}

int ConnectivityKernel::local_vertex_connectivity(Vertex s, Vertex t, int limit) {
  prepare_vertex_network();
  return static_cast<int>(vertex_net_.max_flow(2 * s + 1, 2 * t, limit));
}

int ConnectivityKernel::local_edge_connectivity(Vertex s, Vertex t, int limit) {
  prepare_edge_network();
  return static_cast<int>(edge_net_.max_flow(s, t, limit));
}

std::vector<Vertex> ConnectivityKernel::min_separator_between(Vertex s, Vertex t) {
  prepare_vertex_network();
  vertex_net_.max_flow(2 * s + 1, 2 * t);
  std::vector<char> side = vertex_net_.source_side(2 * s + 1);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n_; ++v)
    if (!vertex_gone_[v] && side[2 * v] && !side[2 * v + 1]) out.push_back(v);
  return out;
}

Cut ConnectivityKernel::min_cut_between(Vertex s, Vertex t) {
  prepare_edge_network();
  Cut cut;
  cut.weight = static_cast<int>(edge_net_.max_flow(s, t));
  std::vector<char> side = edge_net_.source_side(s);
  for (Vertex v = 0; v < n_; ++v) {
    if (vertex_gone_[v]) continue;
    (side[v] ? cut.side_a : cut.side_b).push_back(v);
  }
  for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
    const Edge e = edges_[i];
    if (edge_gone_[i] || vertex_gone_[e.u] || vertex_gone_[e.v]) continue;
    if (side[e.u] != side[e.v]) cut.edges.push_back(e);
  }
  return cut;
}

namespace {

// Pairs (A[i], A[j]) with i <= bound cover every separator of size <= bound:
// the first of A[0..bound] outside the separator has a partner of larger
// index on another side.
template <class Visit>
void scan_pairs(const std::vector<Vertex>& active, int& bound, Visit visit) {
  for (int i = 0; i < static_cast<int>(active.size()) && i <= bound; ++i)
    for (int j = i + 1; j < static_cast<int>(active.size()); ++j) visit(active[i], active[j]);
}

}  // namespace

int ConnectivityKernel::vertex_connectivity() {
  std::vector<Vertex> active = active_vertices();
  const int n = static_cast<int>(active.size());
  if (n <= 1 || !active_connected()) return 0;
  int best = n - 1;
  scan_pairs(active, best, [&](Vertex s, Vertex t) {
    if (best == 0 || active_adjacent(s, t)) return;
    best = std::min(best, local_vertex_connectivity(s, t, best));
  });
  return best;
}

bool ConnectivityKernel::is_k_connected(int k) {
  if (k <= 0) return true;
  std::vector<Vertex> active = active_vertices();
  const int n = static_cast<int>(active.size());
  if (n <= k || !active_connected()) return false;
  int bound = k - 1;
  bool ok = true;
  scan_pairs(active, bound, [&](Vertex s, Vertex t) {
    if (!ok || active_adjacent(s, t)) return;
    if (local_vertex_connectivity(s, t, k) < k) ok = false;
  });
  return ok;
}

std::optional<std::vector<Vertex>> ConnectivityKernel::min_separator() {
  std::vector<Vertex> active = active_vertices();
  const int n = static_cast<int>(active.size());
  if (n <= 1) return std::nullopt;
  if (!active_connected()) return std::vector<Vertex>{};
  int best = n - 1;
  Vertex best_s = -1, best_t = -1;
  scan_pairs(active, best, [&](Vertex s, Vertex t) {
    if (active_adjacent(s, t)) return;
    if (best_s >= 0 && best == 0) return;
    const int value = local_vertex_connectivity(s, t, best_s >= 0 ? best : FlowNetwork::kInfinity);
    if (best_s < 0 || value < best) {
      best = value;
      best_s = s;
      best_t = t;
    }
  });
  if (best_s < 0) return std::nullopt;
  return min_separator_between(best_s, best_t);
}

int ConnectivityKernel::edge_connectivity() {
  std::vector<Vertex> active = active_vertices();
  if (active.size() <= 1 || !active_connected()) return 0;
  int best = FlowNetwork::kInfinity;
  for (std::size_t i = 1; i < active.size(); ++i)
    best = std::min(best, local_edge_connectivity(active[0], active[i], best));
  return best;
}

bool ConnectivityKernel::is_k_edge_connected(int k) {
  if (k <= 0) return true;
  std::vector<Vertex> active = active_vertices();
  if (active.size() <= 1 || !active_connected()) return false;
  for (std::size_t i = 1; i < active.size(); ++i)
    if (local_edge_connectivity(active[0], active[i], k) < k) return false;
  return true;
}

Cut ConnectivityKernel::min_cut() {
  std::vector<Vertex> active = active_vertices();
  if (active.size() <= 1) fail(ErrorCode::TooSmall, "min cut needs at least 2 vertices");
  int best = FlowNetwork::kInfinity;
  Vertex best_t = active[1];
  for (std::size_t i = 1; i < active.size(); ++i) {
    const int value = local_edge_connectivity(active[0], active[i], best);
    if (value < best) {
      best = value;
      best_t = active[i];
    }
  }
  return min_cut_between(active[0], best_t);
}

// ---------------------------------------------------------------------------
// Free functions

namespace {

void require_order(int n, int at_least, const char* what) {
  if (n < at_least)
    fail(ErrorCode::TooSmall, std::string(what) + " needs at least " + std::to_string(at_least) + " vertices");
}

std::vector<std::vector<Vertex>> sides_of(const Graph& g, const std::vector<Vertex>& removed) {
  return components_without(g, removed);
}

}  // namespace

int vertex_connectivity(const Graph& g) {
  require_order(g.order(), 2, "vertex_connectivity");
  return ConnectivityKernel(g).vertex_connectivity();
}

int edge_connectivity(const Graph& g) {
  require_order(g.order(), 2, "edge_connectivity");
  return ConnectivityKernel(g).edge_connectivity();
}

int edge_connectivity(const MultiGraph& g) {
  require_order(g.order(), 2, "edge_connectivity");
  return ConnectivityKernel(g).edge_connectivity();
}

int edge_connectivity_by_subdivision(const MultiGraph& g) {
  require_order(g.order(), 2, "edge_connectivity");
  Subdivision sub = g.subdivide();
  ConnectivityKernel kernel(sub.graph);
  if (!kernel.active_connected()) return 0;
  int best = FlowNetwork::kInfinity;
  for (Vertex v = 1; v < sub.original_order; ++v)
    best = std::min(best, kernel.local_edge_connectivity(0, v, best));
  return best;
}

bool is_k_connected(const Graph& g, int k) { return ConnectivityKernel(g).is_k_connected(k); }
bool is_k_edge_connected(const Graph& g, int k) { return ConnectivityKernel(g).is_k_edge_connected(k); }
bool is_k_edge_connected(const MultiGraph& g, int k) { return ConnectivityKernel(g).is_k_edge_connected(k); }

std::optional<Separator> min_vertex_separator(const Graph& g) {
  require_order(g.order(), 2, "min_vertex_separator");
  auto found = ConnectivityKernel(g).min_separator();
  if (!found) return std::nullopt;
  return Separator{*found, sides_of(g, *found)};
}

Cut min_edge_cut(const Graph& g) {
  require_order(g.order(), 2, "min_edge_cut");
  return ConnectivityKernel(g).min_cut();
}

Cut min_edge_cut(const MultiGraph& g) {
  require_order(g.order(), 2, "min_edge_cut");
  return ConnectivityKernel(g).min_cut();
}

std::optional<Separator> min_separator_containing(const Graph& g, Vertex x) {
  require_order(g.order(), 3, "min_separator_containing");
  if (x < 0 || x >= g.order()) fail(ErrorCode::InvalidArgument, "vertex out of range");
  // A separator T containing x separates some non-adjacent u, w; then T - x
  // separates them in G - x, so |T| = 1 + (minimum separator of G - x).
  ConnectivityKernel kernel(g);
  kernel.remove_vertex(x);
  auto rest = kernel.min_separator();
  if (!rest) return std::nullopt;
  std::vector<Vertex> t = *rest;
  t.push_back(x);
  t = sorted_unique(std::move(t));
  return Separator{t, sides_of(g, t)};
}

Cut min_cut_containing_edge(const Graph& g, Edge e) {
  if (!g.edge_index(e.u, e.v)) fail(ErrorCode::NoSuchEdge, "edge not in graph");
  return ConnectivityKernel(g).min_cut_between(std::min(e.u, e.v), std::max(e.u, e.v));
}

Cut min_cut_containing_edge(const MultiGraph& g, Edge e) {
  if (g.multiplicity(e.u, e.v) == 0) fail(ErrorCode::NoSuchEdge, "edge not in multigraph");
  return ConnectivityKernel(g).min_cut_between(std::min(e.u, e.v), std::max(e.u, e.v));
}

// ---------------------------------------------------------------------------
// Menger path systems

PathSystem max_disjoint_paths(const Graph& g, std::span<const Vertex> a, std::span<const Vertex> b,
                              PathMode mode, std::span<const int> edge_capacity) {
  const int n = g.order();
  if (a.empty() || b.empty()) fail(ErrorCode::InvalidArgument, "max_disjoint_paths needs non-empty A and B");
  std::vector<char> in_a = membership(n, a), in_b = membership(n, b);
  if (!edge_capacity.empty() && static_cast<int>(edge_capacity.size()) != g.size())
    fail(ErrorCode::InvalidArgument, "edge capacity vector has wrong length");
  PathSystem out;

  if (mode == PathMode::Vertex) {
    FlowNetwork net(2 * n + 2);
    const int source = 2 * n, sink = 2 * n + 1;
    for (Vertex v = 0; v < n; ++v) {
      net.add_arc(2 * v, 2 * v + 1, 1);
      if (in_a[v]) net.add_arc(source, 2 * v, FlowNetwork::kInfinity);
      if (in_b[v]) net.add_arc(2 * v + 1, sink, FlowNetwork::kInfinity);
    }
    for (Edge e : g.edges()) {
      net.add_arc(2 * e.u + 1, 2 * e.v, FlowNetwork::kInfinity);
      net.add_arc(2 * e.v + 1, 2 * e.u, FlowNetwork::kInfinity);
    }
    out.value = static_cast<int>(net.max_flow(source, sink));
    std::vector<char> side = net.source_side(source);
    for (Vertex v = 0; v < n; ++v)
      if (side[2 * v] && !side[2 * v + 1]) out.separator.push_back(v);

    std::vector<int> left(net.arc_count());
    for (int arc = 0; arc < net.arc_count(); arc += 2) left[arc] = net.flow(arc);
    for (int p = 0; p < out.value; ++p) {
      std::vector<Vertex> path;
      int node = source;
      while (node != sink) {
        int next_arc = -1;
        for (int arc : net.out_arcs(node))
          if (arc % 2 == 0 && left[arc] > 0) {
            next_arc = arc;
            break;
          }
        if (next_arc < 0) fail(ErrorCode::Internal, "flow decomposition lost a unit");
        --left[next_arc];
        node = net.head(next_arc);
        if (node < 2 * n && node % 2 == 1) path.push_back(node / 2);
      }
      out.paths.push_back(std::move(path));
    }
    return out;
  }

  for (Vertex v = 0; v < n; ++v)
    if (in_a[v] && in_b[v]) fail(ErrorCode::InvalidArgument, "edge-disjoint paths need disjoint A and B");
  FlowNetwork net(n + 2);
  const int source = n, sink = n + 1;
  std::vector<int> arc_of_edge;
  for (int i = 0; i < g.size(); ++i) {
    const int cap = edge_capacity.empty() ? 1 : edge_capacity[i];
    arc_of_edge.push_back(net.add_arc(g.edges()[i].u, g.edges()[i].v, cap, cap));
  }
  for (Vertex v = 0; v < n; ++v) {
    if (in_a[v]) net.add_arc(source, v, FlowNetwork::kInfinity);
    if (in_b[v]) net.add_arc(v, sink, FlowNetwork::kInfinity);
  }
  out.value = static_cast<int>(net.max_flow(source, sink));
  std::vector<char> side = net.source_side(source);
  for (Edge e : g.edges())
    if (side[e.u] != side[e.v]) out.cut.push_back(e);

  // Net flow per directed (u, v) pair, then peel off unit paths.
  std::vector<std::vector<std::pair<Vertex, int>>> flow_out(n + 2);
  for (int i = 0; i < g.size(); ++i) {
    const int f = net.flow(arc_of_edge[i]);
    const Edge e = g.edges()[i];
    if (f > 0) flow_out[e.u].push_back({e.v, f});
    if (f < 0) flow_out[e.v].push_back({e.u, -f});
  }
  for (int arc = 0; arc < net.arc_count(); arc += 2) {
    const int tail = net.tail(arc), head = net.head(arc);
    if ((tail == source || head == sink) && net.flow(arc) > 0) flow_out[tail].push_back({head, net.flow(arc)});
  }
  for (int p = 0; p < out.value; ++p) {
    std::vector<Vertex> path;
    std::vector<int> position(n + 2, -1);
    int node = source;
    while (node != sink) {
      auto& arcs = flow_out[node];
      auto it = std::find_if(arcs.begin(), arcs.end(), [](const auto& x) { return x.second > 0; });
      if (it == arcs.end()) fail(ErrorCode::Internal, "edge flow decomposition lost a unit");
      --it->second;
      node = it->first;
      if (node == sink) break;
      if (position[node] >= 0) {
        // Drop the cycle just closed.
        for (std::size_t i = position[node] + 1; i < path.size(); ++i) position[path[i]] = -1;
        path.resize(position[node] + 1);
      } else {
        position[node] = static_cast<int>(path.size());
        path.push_back(node);
      }
    }
    out.paths.push_back(std::move(path));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Brute-force oracle

namespace {

bool mask_connected(const std::vector<std::uint32_t>& adj, std::uint32_t alive) {
  if (alive == 0) return true;
  std::uint32_t seen = alive & (~alive + 1);
  std::uint32_t frontier = seen;
  while (frontier) {
    std::uint32_t next = 0;
    for (std::uint32_t f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
    next &= alive & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == alive;
}

}  // namespace

Connectivity brute_force_connectivity(const Graph& g) {
  const int n = g.order();
  if (n > 12) fail(ErrorCode::TooLarge, "brute_force_connectivity is limited to 12 vertices");
  require_order(n, 2, "brute_force_connectivity");
  std::vector<std::uint32_t> adj(n, 0);
  for (Edge e : g.edges()) {
    adj[e.u] |= 1u << e.v;
    adj[e.v] |= 1u << e.u;
  }
  const std::uint32_t all = (1u << n) - 1;

  Connectivity out;
  out.kappa = n - 1;
  bool found = false;
  for (int size = 0; size <= n - 2 && !found; ++size) {
    for (std::uint32_t s = 0; s <= all; ++s) {
      if (std::popcount(s) != size) continue;
      if (!mask_connected(adj, all & ~s)) {
        out.kappa = size;
        found = true;
        break;
      }
    }
  }

  if (!mask_connected(adj, all)) {
    out.lambda = 0;
    return out;
  }
  int best = n * n;
  for (std::uint32_t side = 1; side < all; side += 2) {  // sides containing vertex 0
    int crossing = 0;
    for (Edge e : g.edges()) crossing += ((side >> e.u) & 1u) != ((side >> e.v) & 1u);
    best = std::min(best, crossing);
  }
  out.lambda = best;
  return out;
}

}  // namespace kmin
