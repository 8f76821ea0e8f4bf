#include "kmin/witness.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

#include "kmin/error.hpp"

namespace kmin {

namespace {

using Set = std::vector<Vertex>;

Set minus(const Set& a, const Set& b) {
  Set out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Set meet(const Set& a, const Set& b) {
  Set out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Set join(const Set& a, const Set& b) {
  Set out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool has(const Set& s, Vertex v) { return std::binary_search(s.begin(), s.end(), v); }

bool includes(const Set& big, const Set& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

Set everything(int n) {
  Set out(n);
  std::iota(out.begin(), out.end(), 0);
  return out;
}

Set to_set(std::span<const Vertex> s, int n) {
  for (Vertex v : s)
    if (v < 0 || v >= n) fail(ErrorCode::InvalidArgument, "vertex " + std::to_string(v) + " out of range");
  return sorted_unique({s.begin(), s.end()});
}

std::string show(const Set& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

/// Component of G[within] containing `start`.
Set component_within(const Graph& g, const Set& within, Vertex start) {
  std::vector<char> in = membership(g.order(), within), seen(g.order(), 0);
  Set out;
  std::vector<Vertex> stack{start};
  seen[start] = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    out.push_back(v);
    for (Vertex w : g.neighbors(v))
      if (in[w] && !seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_profound_k_region(const Graph& g, const Set& h, int k) {
  if (h.empty() || !induces_connected(g, h)) return false;
  const std::size_t boundary = vertex_boundary(g, h).size();
  return static_cast<int>(boundary) == k && h.size() > boundary;
}

bool better(const Set& a, const Set& b) {
  return a.size() != b.size() ? a.size() < b.size() : a < b;
}

}  // namespace

// ---------------------------------------------------------------------------
// Separator-intersection procedure

std::optional<std::vector<Vertex>> find_profound_k_region(const Graph& g, int k) {
  if (g.order() < 2) return std::nullopt;
  auto sep = min_vertex_separator(g);
  if (!sep || sep->size() != k) return std::nullopt;
  const Set* smallest = &sep->sides.front();
  for (const auto& side : sep->sides)
    if (side.size() < smallest->size()) smallest = &side;
  return join(*smallest, sep->vertices);
}

namespace {

/// Smallest proper profound k-region inside h, if any.
std::optional<Set> smaller_profound_region(const Graph& g, const Set& h, int k) {
  const int size = static_cast<int>(h.size());
  std::optional<Set> best;
  for (std::uint32_t mask = 1; mask + 1 < (1u << size); ++mask) {
    if (std::popcount(mask) <= k) continue;
    if (best && static_cast<std::size_t>(std::popcount(mask)) > best->size()) continue;
    Set s;
    for (int i = 0; i < size; ++i)
      if ((mask >> i) & 1u) s.push_back(h[i]);
    if (!is_profound_k_region(g, s, k)) continue;
    if (!best || better(s, *best)) best = std::move(s);
  }
  return best;
}

/// Runs the quadrant analysis on the current H. Returns a strictly smaller
/// profound k-region when H turns out not to be inclusion-minimal.
std::optional<Set> analyse(const Graph& g, const Set& h, int k, Lemma5Trace& t) {
  const int n = g.order();
  t.H = h;
  t.T = vertex_boundary(g, h);
  t.C1 = minus(h, t.T);
  t.C2 = minus(everything(n), h);
  t.x = t.C1.front();

  auto sep = min_separator_containing(g, t.x);
  if (!sep || sep->size() != k)
    fail(ErrorCode::NoSeparatorThroughX, "no separator of size " + std::to_string(k) + " contains vertex " +
                                             std::to_string(t.x) + "; graph is not vertex-minimally k-connected");
  t.T_prime = sep->vertices;
  t.D1 = sep->sides.front();
  t.D2.clear();
  for (std::size_t i = 1; i < sep->sides.size(); ++i) t.D2 = join(t.D2, sep->sides[i]);
  t.T_star = meet(t.T, t.T_prime);

  const Set* c[2] = {&t.C1, &t.C2};
  const Set* d[2] = {&t.D1, &t.D2};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      t.quadrant[i][j] = meet(*c[i], *d[j]);
      t.side[i][j] = join(join(meet(t.T_prime, *c[i]), meet(t.T, *d[j])), t.T_star);
      if (!includes(t.side[i][j], neighborhood(g, t.quadrant[i][j])))
        fail(ErrorCode::Internal, "quadrant neighbourhood escapes its side set");
    }
  for (int j = 0; j < 2; ++j)
    if (static_cast<int>(t.side[0][j].size() + t.side[1][1 - j].size()) != 2 * k)
      fail(ErrorCode::Internal, "side sets do not sum to 2k");

  for (int j = 0; j < 2; ++j) {
    const Set& a = t.quadrant[0][j];
    if (a.empty() || static_cast<int>(t.side[0][j].size()) > k) continue;
    Set part = component_within(g, a, a.front());
    return join(part, neighborhood(g, part));
  }
  return std::nullopt;
}

void choose_x(const Graph& g, int k, Lemma5Trace& t) {
  auto ok = [&](int i, int j) {
    return t.quadrant[i][j].empty() && static_cast<int>(t.side[i][j].size()) <= k;
  };
  struct Option {
    const char* name;
    const Set* set;
    bool valid;
  };
  const Option options[] = {
      {"C1", &t.C1, ok(0, 0) && ok(0, 1)},
      {"D1", &t.D1, ok(0, 0) && ok(1, 0)},
      {"D2", &t.D2, ok(1, 1) && ok(0, 1)},
      {"C2", &t.C2, ok(1, 1) && ok(1, 0)},
  };
  const bool want_inside = t.C2.size() > t.C1.size();
  const Option* pick = nullptr;
  for (const auto& o : options) {
    if (!o.valid || (want_inside && o.set == &t.C2)) continue;
    pick = &o;
    break;
  }
  if (!pick && !want_inside)
    for (const auto& o : options)
      if (o.valid) {
        pick = &o;
        break;
      }
  if (!pick) fail(ErrorCode::Internal, "no quadrant pattern satisfies the emptiness condition");

  t.X_name = pick->name;
  t.X = *pick->set;
  if (2 * static_cast<int>(t.X.size()) + static_cast<int>(t.T_star.size()) > k)
    fail(ErrorCode::Internal, "chosen set violates |X| + |T*|/2 <= k/2");

  t.witness = t.X.front();
  for (Vertex v : t.X)
    if (g.degree(v) < g.degree(t.witness)) t.witness = v;
  t.degree = g.degree(t.witness);
  t.bound = 3 * k / 2 - 1;
  t.witness_in_H = has(t.H, t.witness);
  if (t.degree > k + static_cast<int>(t.X.size()) - 1 || t.degree > t.bound)
    fail(ErrorCode::Internal, "witness degree exceeds the bound");
}

}  // namespace

Lemma5Trace lemma5_witness(const Graph& g, std::span<const Vertex> h_in, int k, bool verify_class) {
  if (k < 1) fail(ErrorCode::InvalidArgument, "k must be at least 1");
  Set h = to_set(h_in, g.order());
  if (verify_class && !is_vertex_min_k_connected(g, k).holds)
    fail(ErrorCode::PreconditionViolated, "graph is not vertex-minimally " + std::to_string(k) + "-connected");
  if (h.empty() || !induces_connected(g, h))
    fail(ErrorCode::PreconditionViolated, "H is not a region (empty or disconnected)");
  if (static_cast<int>(vertex_boundary(g, h).size()) != k)
    fail(ErrorCode::PreconditionViolated, "H is not a k-region");
  if (!is_profound_k_region(g, h, k)) fail(ErrorCode::PreconditionViolated, "H is not profound");

  Lemma5Trace t;
  t.k = k;
  t.initial_H = h;
  const bool exact = static_cast<int>(h.size()) <= kRegionEnumerationLimit;
  t.minimality = exact ? "exact" : "descent";
  if (exact) {
    if (auto smaller = smaller_profound_region(g, h, k)) {
      h = std::move(*smaller);
      t.shrink_steps = 1;
    }
  }
  while (auto smaller = analyse(g, h, k, t)) {
    if (exact) fail(ErrorCode::Internal, "enumerated minimal region is not minimal");
    if (smaller->size() >= h.size()) fail(ErrorCode::Internal, "region descent did not shrink");
    h = std::move(*smaller);
    ++t.shrink_steps;
  }
  choose_x(g, k, t);
  return t;
}

// ---------------------------------------------------------------------------
// Counting argument

Lemma7Result lemma7_witness(const Graph& g, const MixedSet& s, std::span<const Vertex> c_in, int k) {
  const int n = g.order();
  Set c = to_set(c_in, n);
  Set sv = to_set(s.vertices, n);
  std::vector<Edge> se;
  for (Edge e : s.edges) {
    if (!g.adjacent(e.u, e.v)) fail(ErrorCode::PreconditionViolated, "S contains a non-edge");
    se.push_back(Edge::of(e.u, e.v));
  }
  std::sort(se.begin(), se.end());
  se.erase(std::unique(se.begin(), se.end()), se.end());
  const int size_s = static_cast<int>(sv.size() + se.size());
  if (size_s > k) fail(ErrorCode::PreconditionViolated, "|S| exceeds k");
  if (c.empty() || c.size() > se.size()) fail(ErrorCode::PreconditionViolated, "|C| must be in [1, |S_E|]");
  auto comps = components_without(g, sv, se);
  if (std::find(comps.begin(), comps.end(), c) == comps.end())
    fail(ErrorCode::PreconditionViolated, "C is not a component of G - S");

  Lemma7Result r;
  r.component = c;
  r.S = {sv, se};
  for (Vertex v : c)
    if (g.degree(v) <= k) {
      r.witness = v;
      r.degree = g.degree(v);
      return r;
    }
  const long long lhs = static_cast<long long>(c.size()) *
                        (k + 1 - static_cast<long long>(sv.size()) - (static_cast<long long>(c.size()) - 1));
  fail(ErrorCode::Internal, "counting argument failed: |C|(k+1-|S_V|-|C|+1) = " + std::to_string(lhs) +
                                " but |S_E| = " + std::to_string(se.size()));
}

// ---------------------------------------------------------------------------
// Inclusion-minimal regions with small edge boundary

namespace {

struct Weighted {
  int n = 0;
  std::vector<std::vector<std::pair<Vertex, int>>> adj;

  explicit Weighted(const Graph& g) : n(g.order()), adj(n) {
    for (Edge e : g.edges()) {
      adj[e.u].push_back({e.v, 1});
      adj[e.v].push_back({e.u, 1});
    }
  }
  explicit Weighted(const MultiGraph& g) : n(g.order()), adj(n) {
    for (const auto& e : g.edges()) {
      adj[e.u].push_back({e.v, e.multiplicity});
      adj[e.v].push_back({e.u, e.multiplicity});
    }
  }

  int boundary(const Set& s) const {
    std::vector<char> in = membership(n, s);
    int total = 0;
    for (Vertex v : s)
      for (auto [w, c] : adj[v])
        if (!in[w]) total += c;
    return total;
  }
};

Set enumerate_minimal(const Weighted& w, const Set& d, int m) {
  const int size = static_cast<int>(d.size());
  Set best;
  for (std::uint32_t mask = 1; mask < (1u << size); ++mask) {
    if (!best.empty() && static_cast<std::size_t>(std::popcount(mask)) > best.size()) continue;
    Set s;
    for (int i = 0; i < size; ++i)
      if ((mask >> i) & 1u) s.push_back(d[i]);
    if (w.boundary(s) >= m) continue;
    if (best.empty() || better(s, best)) best = std::move(s);
  }
  return best;
}

/// Some proper non-empty S of h with boundary < m exists iff for some s, v
/// in h the minimum cut between s and (outside + v) is < m. The residual
/// source side of such a cut is connected, so the descent stays in regions.
Set flow_descent(const Weighted& w, Set h, int m) {
  while (h.size() > 1) {
    const int sink = w.n;
    FlowNetwork net(w.n + 1);
    std::vector<char> in = membership(w.n, h);
    std::vector<int> drain(w.n, -1);
    for (Vertex u : h) {
      for (auto [v, c] : w.adj[u]) {
        if (!in[v]) net.add_arc(u, sink, c);
        else if (u < v) net.add_arc(u, v, c, c);
      }
      drain[u] = net.add_arc(u, sink, 0);
    }
    bool shrunk = false;
    for (std::size_t i = 0; i < h.size() && !shrunk; ++i) {
      for (std::size_t j = 0; j < h.size() && !shrunk; ++j) {
        if (i == j) continue;
        net.set_capacity(drain[h[j]], FlowNetwork::kInfinity);
        net.clear_flow();
        if (net.max_flow(h[i], sink, m) < m) {
          std::vector<char> side = net.source_side(h[i]);
          Set next;
          for (Vertex u : h)
            if (side[u]) next.push_back(u);
          h = std::move(next);
          shrunk = true;
        } else {
          net.set_capacity(drain[h[j]], 0);
        }
      }
    }
    if (!shrunk) break;
  }
  return h;
}

MinimalRegion minimal_region(const Graph& simple, const Weighted& w, std::span<const Vertex> d_in, int m,
                             RegionSearch search) {
  Set d = to_set(d_in, w.n);
  if (d.empty() || !induces_connected(simple, d))
    fail(ErrorCode::PreconditionViolated, "D must be a non-empty connected vertex set");
  if (w.boundary(d) >= m) fail(ErrorCode::PreconditionViolated, "edge boundary of D is not below m");

  if (search == RegionSearch::Auto)
    search = static_cast<int>(d.size()) <= kRegionEnumerationLimit ? RegionSearch::Enumerate : RegionSearch::FlowDescent;
  MinimalRegion out;
  Set h;
  if (search == RegionSearch::Enumerate) {
    if (d.size() > 20) fail(ErrorCode::TooLarge, "enumeration is limited to 20 vertices");
    h = enumerate_minimal(w, d, m);
    out.method = "enumeration";
  } else {
    h = flow_descent(w, d, m);
    out.method = "flow-descent";
  }
  out.region = region_of(simple, h);
  out.boundary_weight = w.boundary(h);
  return out;
}

}  // namespace

MinimalRegion minimal_region_small_edge_boundary(const Graph& g, std::span<const Vertex> d, int m,
                                                 RegionSearch search) {
  return minimal_region(g, Weighted(g), d, m, search);
}

MinimalRegion minimal_region_small_edge_boundary(const MultiGraph& g, std::span<const Vertex> d, int m,
                                                 RegionSearch search) {
  return minimal_region(g.simple(), Weighted(g), d, m, search);
}

bool is_inclusion_minimal_region(const Graph& g, std::span<const Vertex> h_in, int m) {
  Set h = to_set(h_in, g.order());
  if (h.size() > 20) fail(ErrorCode::TooLarge, "exhaustive minimality check is limited to 20 vertices");
  Weighted w(g);
  if (h.empty() || w.boundary(h) >= m) return false;
  const int size = static_cast<int>(h.size());
  for (std::uint32_t mask = 1; mask + 1 < (1u << size); ++mask) {
    Set s;
    for (int i = 0; i < size; ++i)
      if ((mask >> i) & 1u) s.push_back(h[i]);
    if (w.boundary(s) < m) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Two degree-k vertices of an edge-minimally k-edge-connected graph

namespace {

int weighted_degree(const Graph& g, Vertex v) { return g.degree(v); }
int weighted_degree(const MultiGraph& g, Vertex v) { return g.degree(v); }

/// The splitting argument: an edge e inside H lies in a k-cut F = E(A, B)
/// which cuts H into two non-empty parts. Minimality of H makes both parts
/// have boundary > k and then A \ A_H or B \ B_H would be a cut below k.
template <class G>
[[noreturn]] void split_contradiction(const G& g, const Weighted& w, const Set& h, int k) {
  Edge inside{-1, -1};
  for (Vertex u : h)
    for (auto [v, c] : w.adj[u])
      if (has(h, v) && inside.u < 0) inside = Edge::of(u, v);
  Cut f = min_cut_containing_edge(g, inside);
  Set a_h = meet(sorted_unique(f.side_a), h), b_h = meet(sorted_unique(f.side_b), h);
  fail(ErrorCode::Internal, "minimal region " + show(h) + " has more than one vertex; the cut of size " +
                                std::to_string(f.size()) + " through edge " + std::to_string(inside.u) + "-" +
                                std::to_string(inside.v) + " splits it into parts with boundaries " +
                                std::to_string(w.boundary(a_h)) + " and " + std::to_string(w.boundary(b_h)) +
                                " (k = " + std::to_string(k) + ")");
}

template <class G>
Theorem4cResult theorem4c(const G& g, int k, bool verify_class) {
  if (k < 1) fail(ErrorCode::InvalidArgument, "k must be at least 1");
  if (g.order() < 2) fail(ErrorCode::TooSmall, "graph needs at least 2 vertices");
  if (verify_class && !is_edge_min_k_edge_connected(g, k).holds)
    fail(ErrorCode::PreconditionViolated, "graph is not edge-minimally " + std::to_string(k) + "-edge-connected");
  Weighted w(g);
  Theorem4cResult r;
  r.k = k;
  r.cut = min_edge_cut(g);
  if (r.cut.size() != k)
    fail(ErrorCode::PreconditionViolated, "edge connectivity is " + std::to_string(r.cut.size()) + ", not k");
  const Set* sides[2] = {&r.cut.side_a, &r.cut.side_b};
  for (int i = 0; i < 2; ++i) {
    Theorem4cSide& s = r.sides[i];
    s.D = *sides[i];
    s.H = minimal_region_small_edge_boundary(g, s.D, k + 1);
    if (s.H.region.vertices.size() != 1) split_contradiction(g, w, s.H.region.vertices, k);
    s.witness = s.H.region.vertices.front();
    s.degree = weighted_degree(g, s.witness);
    if (s.degree != k) fail(ErrorCode::Internal, "single-vertex region does not have degree k");
  }
  return r;
}

}  // namespace

Theorem4cResult theorem4c_witness(const Graph& g, int k, bool verify_class) {
  return theorem4c(g, k, verify_class);
}

Theorem4cResult theorem4c_witness(const MultiGraph& g, int k, bool verify_class) {
  return theorem4c(g, k, verify_class);
}

// ---------------------------------------------------------------------------
// Vertex-minimally k-edge-connected graphs

namespace {

class Lemma8Runner {
 public:
  Lemma8Runner(const Graph& g, int k) : g_(g), k_(k), kernel_(g), lambda_(g.order(), -1) {}

  int lambda_minus(Vertex x) {
    if (lambda_[x] < 0) {
      kernel_.remove_vertex(x);
      lambda_[x] = kernel_.edge_connectivity();
      kernel_.restore_vertex(x);
    }
    return lambda_[x];
  }

  Cut cut_minus(Vertex x) {
    kernel_.remove_vertex(x);
    Cut c = kernel_.min_cut();
    kernel_.restore_vertex(x);
    return c;
  }

  std::vector<Edge> boundary(const Set& c, Vertex x) const {
    std::vector<Edge> out;
    for (Vertex v : c) {
      if (v == x) continue;
      for (Vertex w : g_.neighbors(v))
        if (!has(c, w)) out.push_back(Edge::of(v, w));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  /// x in C, C - x non-empty, boundary of C - x in G - x equal to
  /// lambda(G - x) < k.
  bool qualifies(const Set& c, Vertex x) {
    if (!has(c, x) || c.size() < 2) return false;
    const int lam = lambda_minus(x);
    return lam < k_ && static_cast<int>(boundary(c, x).size()) == lam;
  }

  std::pair<Set, Vertex> initial_region() {
    std::optional<std::pair<Set, Vertex>> best;
    for (Vertex x = 0; x < g_.order(); ++x) {
      if (lambda_minus(x) >= k_) continue;
      Cut cut = cut_minus(x);
      for (const Set* side : {&cut.side_a, &cut.side_b}) {
        Set c = join(*side, {x});
        if (!qualifies(c, x)) continue;
        if (!best || better(c, best->first) || (c == best->first && x < best->second)) best = {{c, x}};
      }
    }
    if (!best) fail(ErrorCode::NoMinimalRegion, "no vertex x has lambda(G - x) < k");
    return *best;
  }

  Lemma8Trace descend(Set c, Vertex x, const char* start_action) {
    Lemma8Trace t;
    t.k = k_;
    if (!qualifies(c, x)) fail(ErrorCode::Internal, "starting region does not have the required property");
    t.steps.push_back({start_action, c, x, -1, {}});
    const Set all = everything(g_.order());
    for (;;) {
      Set inner = minus(c, {x});
      Set part = component_within(g_, inner, inner.front());
      if (part.size() != inner.size()) {
        Set next = join(part, {x});
        if (!qualifies(next, x)) fail(ErrorCode::Internal, "component split lost the boundary property");
        c = std::move(next);
        t.steps.push_back({"split", c, x, -1, {}});
        continue;
      }
      Set d = minus(all, c);
      Vertex y = -1;
      for (Vertex v : inner) {
        bool reaches_d = false;
        for (Vertex w : g_.neighbors(v)) reaches_d = reaches_d || !has(c, w);
        if (!reaches_d) {
          y = v;
          break;
        }
      }
      if (y < 0) {
        t.C = c;
        t.x = x;
        t.lambda_minus_x = lambda_minus(x);
        t.boundary = boundary(c, x);
        MixedSet s{{x}, t.boundary};
        t.lemma7 = lemma7_witness(g_, s, inner, k_);
        t.witness = t.lemma7.witness;
        t.degree = t.lemma7.degree;
        if (t.degree != k_) fail(ErrorCode::Internal, "witness degree differs from k");
        return t;
      }

      Cut f = cut_minus(y);
      Set a = sorted_unique(f.side_a), b = sorted_unique(f.side_b);
      if (!has(a, x)) std::swap(a, b);
      Set b_c = meet(b, c);
      if (b_c.empty()) fail(ErrorCode::Internal, "cut of G - y does not meet C on the far side");
      Set via_b = join(b_c, {y});
      if (qualifies(via_b, y)) {
        c = std::move(via_b);
        x = y;
        t.steps.push_back({"descend-B", c, x, y, f.edges});
        continue;
      }
      if (!meet(a, d).empty()) fail(ErrorCode::Internal, "A meets D although B cap C has a large boundary");
      Set via_a = join(a, {y});
      if (!qualifies(via_a, y) || via_a.size() >= c.size())
        fail(ErrorCode::Internal, "A + y is not a smaller region with the property");
      c = std::move(via_a);
      x = y;
      t.steps.push_back({"descend-A", c, x, y, f.edges});
    }
  }

 private:
  const Graph& g_;
  int k_;
  ConnectivityKernel kernel_;
  std::vector<int> lambda_;
};

void check_lemma8_input(const Graph& g, int k, bool verify_class) {
  if (k < 1) fail(ErrorCode::InvalidArgument, "k must be at least 1");
  if (g.order() < 3) fail(ErrorCode::PreconditionViolated, "the region argument needs at least 3 vertices");
  if (verify_class) {
    if (!is_vertex_min_k_edge_connected(g, k).holds)
      fail(ErrorCode::PreconditionViolated, "graph is not vertex-minimally " + std::to_string(k) + "-edge-connected");
  } else if (!is_k_edge_connected(g, k)) {
    fail(ErrorCode::PreconditionViolated, "graph is not " + std::to_string(k) + "-edge-connected");
  }
}

}  // namespace

Lemma8Trace lemma8_witness(const Graph& g, int k, bool verify_class) {
  check_lemma8_input(g, k, verify_class);
  Lemma8Runner run(g, k);
  auto [c, x] = run.initial_region();
  return run.descend(c, x, "start");
}

std::array<Lemma8Trace, 2> lemma8_two_witnesses(const Graph& g, int k, bool verify_class) {
  check_lemma8_input(g, k, verify_class);
  Lemma8Runner run(g, k);
  auto [c, x] = run.initial_region();
  Lemma8Trace first = run.descend(c, x, "start");
  Set rest = join(minus(everything(g.order()), first.C), {first.x});
  Lemma8Trace second = run.descend(rest, first.x, "complement");
  if (second.witness == first.witness) fail(ErrorCode::Internal, "complement run returned the same vertex");
  return {std::move(first), std::move(second)};
}

// ---------------------------------------------------------------------------

int witness_bound(MinimalityClass c, int k) {
  return c == MinimalityClass::VertexMinKConn ? 3 * k / 2 - 1 : k;
}

int witness_requirement(MinimalityClass c, int k, int order, int max_degree) {
  switch (c) {
    case MinimalityClass::EdgeMinKConn: {
      if (k == 1) return 2;
      const int share = ((k - 1) * order + (2 * k - 1) - 1) / (2 * k - 1);
      return std::max({share, k + 1, max_degree});
    }
    case MinimalityClass::VertexMinKConn: return 2;
    case MinimalityClass::EdgeMinKEdgeConn: return std::min(k == 3 ? 4 : 2, order);
    case MinimalityClass::VertexMinKEdgeConn: return std::min(k == 2 ? 4 : 2, order);
  }
  return 0;
}

bool in_theorem_scope(MinimalityClass c, int k) { return !(c == MinimalityClass::VertexMinKConn && k == 1); }

WitnessReport theorem2_witness_report(const Graph& g, MinimalityClass c, int k, bool verify_class) {
  if (k < 1) fail(ErrorCode::InvalidArgument, "k must be at least 1");
  if (verify_class && !check_class(g, c, k).holds)
    fail(ErrorCode::ClassMismatch, std::string("graph is not in class ") + class_letter(c) + " for k = " +
                                       std::to_string(k));
  WitnessReport r;
  r.cls = c;
  r.k = k;
  r.order = g.order();
  r.bound = witness_bound(c, k);
  r.required = witness_requirement(c, k, g.order(), g.max_degree());
  r.in_scope = in_theorem_scope(c, k);
  for (Vertex v : small_degree_set(g, r.bound)) r.witnesses.push_back({v, g.degree(v)});
  r.satisfied = static_cast<int>(r.witnesses.size()) >= r.required;
  if (c == MinimalityClass::EdgeMinKConn) r.min_degree_is_k = g.min_degree() == k;
  r.ratio = g.order() ? static_cast<double>(r.witnesses.size()) / g.order() : 0.0;
  return r;
}

}  // namespace kmin
