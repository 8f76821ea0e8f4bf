#include "kmin/families.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <set>
#include <string>

#include "kmin/catalog.hpp"
#include "kmin/connectivity.hpp"
#include "kmin/error.hpp"

namespace kmin {

const char* to_string(EndMode mode) { return mode == EndMode::Vertex ? "vertex" : "edge"; }

EndMode parse_end_mode(std::string_view text) {
  if (text == "vertex" || text == "v") return EndMode::Vertex;
  if (text == "edge" || text == "e") return EndMode::Edge;
  fail(ErrorCode::InvalidParams, "unknown end mode '" + std::string(text) + "'");
}

// ---------------------------------------------------------------------------
// Ball

std::optional<Vertex> Ball::find(const Key& key) const {
  auto it = index.find(key);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

MultiGraph Ball::multigraph() const {
  std::vector<MultiEdge> edges;
  for (int i = 0; i < graph.size(); ++i)
    edges.push_back({graph.edges()[i].u, graph.edges()[i].v, multiplicity[i]});
  return MultiGraph(graph.order(), edges);
}

std::vector<Vertex> Ball::within(int r) const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < graph.order(); ++v)
    if (distance[v] <= r) out.push_back(v);
  return out;
}

namespace {

constexpr std::size_t kMaxBallVertices = 2'000'000;

/// Induced piece on `keys` with BFS distances from `center` inside it.
Ball build_piece(const Family& f, std::vector<Key> keys, const Key& center) {
  Ball b;
  b.keys = std::move(keys);
  const int n = static_cast<int>(b.keys.size());
  for (int i = 0; i < n; ++i) b.index.emplace(b.keys[i], i);
  std::vector<std::vector<Key>> nbrs(n);
  std::vector<Edge> edges;
  b.frontier.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    nbrs[i] = f.neighbors(b.keys[i]);
    for (const Key& w : nbrs[i]) {
      auto it = b.index.find(w);
      if (it == b.index.end())
        b.frontier[i] = 1;
      else if (it->second > i)
        edges.push_back({i, it->second});
    }
  }
  b.graph = Graph(n, edges);
  for (const Edge& e : b.graph.edges()) b.multiplicity.push_back(f.multiplicity(b.keys[e.u], b.keys[e.v]));
  for (const Key& k : b.keys) b.labels.push_back(f.label(k));

  b.distance.assign(n, 1 << 29);
  auto c = b.index.find(center);
  if (c != b.index.end()) {
    std::deque<Vertex> queue{c->second};
    b.distance[c->second] = 0;
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : b.graph.neighbors(u))
        if (b.distance[w] > b.distance[u] + 1) {
          b.distance[w] = b.distance[u] + 1;
          queue.push_back(w);
        }
    }
  }
  return b;
}

}  // namespace

Ball Family::ball(int radius) const { return ball(root(), radius); }

Ball Family::ball(const Key& center, int radius) const {
  if (radius < 0) fail(ErrorCode::InvalidParams, "ball radius must be non-negative");
  std::map<Key, int> dist{{center, 0}};
  std::vector<Key> order{center};
  for (std::size_t head = 0; head < order.size(); ++head) {
    const Key u = order[head];
    const int d = dist[u];
    if (d == radius) continue;
    for (Key& w : neighbors(u))
      if (dist.emplace(w, d + 1).second) {
        order.push_back(std::move(w));
        if (order.size() > kMaxBallVertices) fail(ErrorCode::TooLarge, "ball exceeds the vertex budget");
      }
  }
  Ball b = build_piece(*this, std::move(order), center);
  for (Vertex v = 0; v < b.graph.order(); ++v) b.frontier[v] = b.distance[v] == radius;
  return b;
}

// ---------------------------------------------------------------------------
// Families

namespace {

std::string word_label(const std::vector<int>& w) {
  if (w.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += '.';
    out += std::to_string(w[i]);
  }
  return out;
}

class DoubleRay final : public Family {
 public:
  std::string name() const override { return "double-ray"; }
  Key root() const override { return {0}; }
  std::vector<Key> neighbors(const Key& v) const override { return {{v[0] - 1}, {v[0] + 1}}; }
  std::string label(const Key& v) const override { return std::to_string(v[0]); }
  std::vector<DeclaredClass> declared_classes() const override {
    return {{MinimalityClass::EdgeMinKConn, 1},
            {MinimalityClass::VertexMinKConn, 1},
            {MinimalityClass::EdgeMinKEdgeConn, 1},
            {MinimalityClass::VertexMinKEdgeConn, 1}};
  }
  std::optional<int> declared_end_degree(EndMode) const override { return 1; }
};

class DoubleRaySquare final : public Family {
 public:
  std::string name() const override { return "dr-square"; }
  Key root() const override { return {0}; }
  std::vector<Key> neighbors(const Key& v) const override {
    return {{v[0] - 2}, {v[0] - 1}, {v[0] + 1}, {v[0] + 2}};
  }
  std::string label(const Key& v) const override { return std::to_string(v[0]); }
  std::vector<DeclaredClass> declared_classes() const override { return {{MinimalityClass::EdgeMinKEdgeConn, 3}}; }
  std::optional<int> declared_end_degree(EndMode m) const override {
    if (m == EndMode::Edge) return 3;
    return std::nullopt;
  }
};

class MultiPathInfinite final : public Family {
 public:
  explicit MultiPathInfinite(int k) : k_(k) {}
  std::string name() const override { return "multipath-inf:k=" + std::to_string(k_); }
  Key root() const override { return {0}; }
  std::vector<Key> neighbors(const Key& v) const override { return {{v[0] - 1}, {v[0] + 1}}; }
  std::string label(const Key& v) const override { return std::to_string(v[0]); }
  int multiplicity(const Key&, const Key&) const override { return k_; }
  bool multigraph() const override { return true; }
  std::vector<DeclaredClass> declared_classes() const override { return {{MinimalityClass::EdgeMinKEdgeConn, k_}}; }
  std::optional<int> declared_end_degree(EndMode m) const override { return m == EndMode::Edge ? k_ : 1; }

 private:
  int k_;
};

/// Double ray times K^k, strong or Cartesian. Key (i, c).
class ProductDoubleRay final : public Family {
 public:
  ProductDoubleRay(int k, bool strong) : k_(k), strong_(strong) {}
  std::string name() const override {
    return std::string(strong_ ? "strong-dr" : "cartesian-dr") + ":k=" + std::to_string(k_);
  }
  Key root() const override { return {0, 0}; }
  std::vector<Key> neighbors(const Key& v) const override {
    std::vector<Key> out;
    for (int di = -1; di <= 1; ++di)
      for (int c = 0; c < k_; ++c) {
        if (di == 0 && c == v[1]) continue;
        if (!strong_ && di != 0 && c != v[1]) continue;
        out.push_back({v[0] + di, c});
      }
    return out;
  }
  std::string label(const Key& v) const override {
    return "(" + std::to_string(v[0]) + "," + std::to_string(v[1]) + ")";
  }
  std::vector<DeclaredClass> declared_classes() const override {
    return {{strong_ ? MinimalityClass::VertexMinKConn : MinimalityClass::VertexMinKEdgeConn, k_}};
  }
  std::optional<int> declared_end_degree(EndMode m) const override {
    if (m == EndMode::Vertex) return k_;
    return std::nullopt;
  }
  std::vector<Key> cross_section() const override {
    std::vector<Key> out;
    for (int c = 0; c < k_; ++c) out.push_back({0, c});
    return out;
  }

 private:
  int k_;
  bool strong_;
};

/// Shared tree bookkeeping: key = (copy, w_1, ..., w_d).
class TreeFamily : public Family {
 public:
  bool tree_based() const override { return true; }
  Key root() const override { return {0}; }
  std::vector<int> word(const Key& v) const override { return {v.begin() + 1, v.end()}; }

 protected:
  std::vector<Key> tree_neighbors(const Key& v) const {
    std::vector<Key> out;
    if (v.size() > 1) out.emplace_back(v.begin(), v.end() - 1);
    const int b = branching(static_cast<int>(v.size()) - 1);
    for (int j = 0; j < b; ++j) {
      Key child = v;
      child.push_back(j);
      out.push_back(std::move(child));
    }
    return out;
  }
};

/// T_r times K^k. T_r is r-regular: the root has r children, others r-1.
class ProductTree final : public TreeFamily {
 public:
  ProductTree(int r, int k, bool strong) : r_(r), k_(k), strong_(strong) {}
  std::string name() const override {
    return std::string(strong_ ? "strong-tree" : "cartesian-tree") + ":r=" + std::to_string(r_) +
           ",k=" + std::to_string(k_);
  }
  int branching(int depth) const override { return depth == 0 ? r_ : r_ - 1; }
  std::vector<Key> neighbors(const Key& v) const override {
    std::vector<Key> out;
    for (int c = 0; c < k_; ++c)
      if (c != v[0]) {
        Key w = v;
        w[0] = c;
        out.push_back(std::move(w));
      }
    for (Key t : tree_neighbors(v)) {
      if (strong_) {
        for (int c = 0; c < k_; ++c) {
          t[0] = c;
          out.push_back(t);
        }
      } else {
        out.push_back(std::move(t));
      }
    }
    return out;
  }
  std::string label(const Key& v) const override {
    return "(" + std::to_string(v[0]) + "," + word_label(word(v)) + ")";
  }
  std::vector<Key> copies(const std::vector<int>& w) const override {
    std::vector<Key> out;
    for (int c = 0; c < k_; ++c) {
      Key key{c};
      key.insert(key.end(), w.begin(), w.end());
      out.push_back(std::move(key));
    }
    return out;
  }
  std::vector<DeclaredClass> declared_classes() const override {
    return {{strong_ ? MinimalityClass::VertexMinKConn : MinimalityClass::VertexMinKEdgeConn, k_}};
  }
  std::vector<Key> cross_section() const override { return copies({}); }
  bool edge_mode_supported() const override { return false; }

 private:
  int r_, k_;
  bool strong_;
};

/// Every vertex has rk children, split into r cliques K^k.
class CliqueTree final : public TreeFamily {
 public:
  CliqueTree(int r, int k) : r_(r), k_(k) {}
  std::string name() const override {
    return "clique-tree:r=" + std::to_string(r_) + ",k=" + std::to_string(k_);
  }
  int branching(int) const override { return r_ * k_; }
  std::vector<Key> neighbors(const Key& v) const override {
    std::vector<Key> out = tree_neighbors(v);
    if (v.size() > 1) {
      const int last = v.back(), group = last / k_;
      for (int j = group * k_; j < (group + 1) * k_; ++j)
        if (j != last) {
          Key w = v;
          w.back() = j;
          out.push_back(std::move(w));
        }
    }
    return out;
  }
  std::string label(const Key& v) const override { return word_label(word(v)); }
  std::vector<Key> copies(const std::vector<int>& w) const override {
    Key key{0};
    key.insert(key.end(), w.begin(), w.end());
    return {key};
  }
  std::vector<DeclaredClass> declared_classes() const override { return {{MinimalityClass::EdgeMinKEdgeConn, k_}}; }

 private:
  int r_, k_;
};

/// l double rays; at every level i, l/k gadgets C_4 x K^{k/2} whose
/// positions 0 and 3 are ray vertices. Level i starts its gadget blocks at
/// ray i*k/2 mod l. Keys: (i, 0, j) ray vertex, (i, 1, g, pos, c) gadget
/// vertex at pos 1 or 2.
class Figure5 final : public Family {
 public:
  Figure5(int k, int l) : k_(k), l_(l), h_(k / 2) {}
  std::string name() const override { return "figure5:k=" + std::to_string(k_) + ",l=" + std::to_string(l_); }
  Key root() const override { return {0, 0, 0}; }

  std::vector<Key> neighbors(const Key& v) const override {
    const int i = v[0];
    int g, pos, c;
    if (v[1] == 0) {
      const int p = mod(v[2] - shift(i), l_);
      g = p / k_;
      pos = (p % k_) < h_ ? 0 : 3;
      c = (p % k_) % h_;
    } else {
      g = v[2];
      pos = v[3];
      c = v[4];
    }
    std::vector<Key> out;
    for (int dp = -1; dp <= 1; ++dp)
      for (int c2 = 0; c2 < h_; ++c2) {
        if (dp == 0 && c2 == c) continue;
        out.push_back(slot(i, g, mod(pos + dp, 4), c2));
      }
    if (v[1] == 0) {
      out.push_back({i - 1, 0, v[2]});
      out.push_back({i + 1, 0, v[2]});
    }
    return out;
  }

  std::string label(const Key& v) const override {
    if (v[1] == 0) return "R" + std::to_string(v[2]) + ":" + std::to_string(v[0]);
    return "Q" + std::to_string(v[0]) + ":" + std::to_string(v[2]) + ":" + std::to_string(v[3]) + ":" +
           std::to_string(v[4]);
  }
  std::vector<DeclaredClass> declared_classes() const override { return {{MinimalityClass::VertexMinKConn, k_}}; }
  std::optional<int> declared_end_degree(EndMode m) const override {
    if (m == EndMode::Vertex) return l_;
    return std::nullopt;
  }
  std::vector<Key> cross_section() const override {
    std::vector<Key> out;
    for (int j = 0; j < l_; ++j) out.push_back({0, 0, j});
    return out;
  }

 private:
  static int mod(int a, int m) { return ((a % m) + m) % m; }
  int shift(int i) const { return mod(i * h_, l_); }
  Key slot(int i, int g, int pos, int c) const {
    if (pos == 1 || pos == 2) return {i, 1, g, pos, c};
    return {i, 0, mod(shift(i) + g * k_ + (pos == 0 ? 0 : h_) + c, l_)};
  }

  int k_, l_, h_;
};

const std::set<std::string>& family_names() {
  static const std::set<std::string> names{"double-ray",   "dr-square",      "strong-dr",
                                           "cartesian-dr", "strong-tree",    "cartesian-tree",
                                           "clique-tree",  "figure5",        "multipath-inf"};
  return names;
}

}  // namespace

bool is_family_spec(std::string_view spec) {
  return family_names().count(std::string(spec.substr(0, spec.find(':')))) > 0;
}

FamilyPtr make_family(std::string_view text) {
  const ParamSpec s = parse_param_spec(text);
  auto need_k = [&] {
    const int k = s.get("k");
    if (k < 1) fail(ErrorCode::InvalidParams, "k must be at least 1");
    return k;
  };
  auto need_r = [&] {
    const int r = s.get("r");
    if (r < 2) fail(ErrorCode::InvalidParams, "r must be at least 2");
    return r;
  };
  if (s.name == "double-ray") {
    s.only({});
    return std::make_shared<DoubleRay>();
  }
  if (s.name == "dr-square") {
    s.only({});
    return std::make_shared<DoubleRaySquare>();
  }
  if (s.name == "multipath-inf") {
    s.only({"k"});
    return std::make_shared<MultiPathInfinite>(need_k());
  }
  if (s.name == "strong-dr" || s.name == "cartesian-dr") {
    s.only({"k"});
    return std::make_shared<ProductDoubleRay>(need_k(), s.name == "strong-dr");
  }
  if (s.name == "strong-tree" || s.name == "cartesian-tree") {
    s.only({"r", "k"});
    const int r = need_r();
    return std::make_shared<ProductTree>(r, need_k(), s.name == "strong-tree");
  }
  if (s.name == "clique-tree") {
    s.only({"r", "k"});
    const int r = need_r();
    return std::make_shared<CliqueTree>(r, need_k());
  }
  if (s.name == "figure5") {
    s.only({"k", "l"});
    const int k = need_k(), l = s.get("l");
    if (k % 2 != 0) fail(ErrorCode::InvalidParams, "figure5 needs even k");
    if (l < k || l % k != 0) fail(ErrorCode::InvalidParams, "figure5 needs l >= k with k dividing l");
    return std::make_shared<Figure5>(k, l);
  }
  fail(ErrorCode::InvalidParams, "unknown family '" + s.name + "'");
}

// ---------------------------------------------------------------------------
// Ends

std::vector<EndDescriptor> ends(const Family& f, int prefix_depth) {
  if (!f.tree_based()) return {{"left", {}, -1}, {"right", {}, +1}};
  if (prefix_depth < 1) fail(ErrorCode::InvalidParams, "prefix depth must be at least 1");
  std::vector<std::vector<int>> words{{}};
  for (int d = 0; d < prefix_depth; ++d) {
    std::vector<std::vector<int>> next;
    for (const auto& w : words)
      for (int j = 0; j < f.branching(d); ++j) {
        next.push_back(w);
        next.back().push_back(j);
      }
    words = std::move(next);
  }
  std::vector<EndDescriptor> out;
  for (auto& w : words) out.push_back({word_label(w), std::move(w), 0});
  return out;
}

EndDescriptor parse_end(const Family& f, std::string_view tag) {
  if (!f.tree_based()) {
    if (tag == "left") return {"left", {}, -1};
    if (tag == "right") return {"right", {}, +1};
    fail(ErrorCode::InvalidParams, "ray families have ends 'left' and 'right'");
  }
  EndDescriptor end;
  std::string_view rest = tag;
  while (!rest.empty()) {
    const auto dot = rest.find('.');
    std::string_view part = rest.substr(0, dot);
    int j = -1;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), j);
    if (ec != std::errc{} || ptr != part.data() + part.size() || j < 0 ||
        j >= f.branching(static_cast<int>(end.branch.size())))
      fail(ErrorCode::InvalidParams, "bad branch prefix '" + std::string(tag) + "'");
    end.branch.push_back(j);
    rest = dot == std::string_view::npos ? std::string_view{} : rest.substr(dot + 1);
  }
  if (end.branch.empty()) fail(ErrorCode::InvalidParams, "tree ends need a branch prefix such as 0.1");
  end.tag = word_label(end.branch);
  return end;
}

int estimator_base_radius(const Family& f) {
  const std::vector<Key> section = f.cross_section();
  for (int r = 1; r <= 16; ++r) {
    const Ball b = f.ball(r);
    if (std::all_of(section.begin(), section.end(), [&](const Key& k) { return b.find(k).has_value(); }))
      return r;
  }
  fail(ErrorCode::Internal, "cross-section not reached within radius 16");
}

namespace {

std::vector<int> branch_word(const EndDescriptor& end, int depth) {
  std::vector<int> w(end.branch.begin(), end.branch.begin() + std::min<int>(depth, end.branch.size()));
  w.resize(depth, 0);
  return w;
}

int sphere_prefix(int r) { return std::max(0, r - 2); }

bool starts_with(const std::vector<int>& w, const std::vector<int>& prefix) {
  return w.size() >= prefix.size() && std::equal(prefix.begin(), prefix.end(), w.begin());
}

}  // namespace

Ball estimator_view(const Family& f, const EndDescriptor& end, int r, int base_radius) {
  if (!f.tree_based()) return f.ball(r);

  std::set<std::vector<int>> words;
  for (const Key& k : f.ball(base_radius).keys) words.insert(f.word(k));
  const std::vector<int> beta = branch_word(end, r);
  for (int d = 0; d <= r; ++d) {
    std::vector<int> w(beta.begin(), beta.begin() + d);
    words.insert(w);
    if (d < r)
      for (int j = 0; j < f.branching(d); ++j) {
        w.push_back(j);
        words.insert(w);
        w.pop_back();
      }
  }
  const int p = sphere_prefix(r);
  std::vector<std::vector<int>> layer{std::vector<int>(beta.begin(), beta.begin() + p)};
  for (int d = p; d < r; ++d) {
    std::vector<std::vector<int>> next;
    for (const auto& w : layer)
      for (int j = 0; j < f.branching(d); ++j) {
        next.push_back(w);
        next.back().push_back(j);
      }
    words.insert(next.begin(), next.end());
    layer = std::move(next);
  }
  std::vector<Key> keys;
  for (const auto& w : words)
    for (Key& k : f.copies(w)) keys.push_back(std::move(k));
  return build_piece(f, std::move(keys), f.root());
}

std::vector<Vertex> direction_sphere(const Family& f, const EndDescriptor& end, const Ball& view, int r) {
  std::vector<Vertex> out;
  if (f.tree_based()) {
    const std::vector<int> prefix = branch_word(end, sphere_prefix(r));
    for (Vertex v = 0; v < view.graph.order(); ++v) {
      const std::vector<int> w = f.word(view.keys[v]);
      if (static_cast<int>(w.size()) == r && starts_with(w, prefix)) out.push_back(v);
    }
    return out;
  }
  for (Vertex v = 0; v < view.graph.order(); ++v) {
    if (!view.frontier[v]) continue;
    const int lv = f.level(view.keys[v]);
    if ((end.sign > 0 && lv > 0) || (end.sign < 0 && lv < 0)) out.push_back(v);
  }
  return out;
}

EndDegreeEstimate end_degree_estimate(const Family& f, const EndDescriptor& end, EndMode mode, int r_max,
                                      int window) {
  if (window < 2 || r_max < window) fail(ErrorCode::InvalidParams, "need r_max >= window >= 2");
  if (mode == EndMode::Edge && !f.edge_mode_supported())
    fail(ErrorCode::InvalidParams, f.name() + ": edge-degree estimation is not supported on this family");

  EndDegreeEstimate est;
  est.mode = mode;
  est.end = end.tag;
  est.declared = f.declared_end_degree(mode);
  const int r0 = estimator_base_radius(f);
  est.base_radius = r0;
  const PathMode pm = mode == EndMode::Vertex ? PathMode::Vertex : PathMode::Edge;
  const int r_start = std::max(2 * r0, r0 + 1);
  if (r_start > r_max) fail(ErrorCode::InvalidParams, "r_max too small for this family's base radius");

  for (int r = r_start; r <= r_max; ++r) {
    const Ball view = estimator_view(f, end, r, r0);
    const std::vector<Vertex> sphere = direction_sphere(f, end, view, r);
    if (sphere.empty()) fail(ErrorCode::Internal, "empty direction sphere at radius " + std::to_string(r));
    std::span<const int> caps;
    if (f.multigraph()) caps = view.multiplicity;

    const PathSystem low = max_disjoint_paths(view.graph, view.within(r0), sphere, pm, caps);
    const PathSystem up = max_disjoint_paths(view.graph, view.within(r / 2), sphere, pm, caps);
    if (!est.history.empty() && low.value > est.history.back().first) est.lower_monotone = false;
    est.history.emplace_back(low.value, up.value);
    est.lower = low.value;
    est.upper = up.value;
    est.radius_used = r;

    est.rays.clear();
    for (const auto& path : low.paths) {
      est.rays.emplace_back();
      for (Vertex v : path) est.rays.back().push_back(view.labels[v]);
    }
    est.separator.clear();
    est.cut.clear();
    for (Vertex v : up.separator) est.separator.push_back(view.labels[v]);
    for (Edge e : up.cut) est.cut.emplace_back(view.labels[e.u], view.labels[e.v]);

    const int h = static_cast<int>(est.history.size());
    if (h >= window) {
      bool stable = true;
      for (int i = h - window; i < h; ++i)
        stable = stable && est.history[i].first == est.history[i].second &&
                 est.history[i].first == est.history[h - 1].first;
      if (stable) {
        est.converged = true;
        break;
      }
    }
  }
  return est;
}

bool separator_still_separates(const Family& f, const EndDescriptor& end, const EndDegreeEstimate& est,
                               int extra) {
  const int r = est.radius_used + extra;
  const Ball view = estimator_view(f, end, r, est.base_radius);
  const std::vector<Vertex> sphere = direction_sphere(f, end, view, r);
  std::vector<Vertex> removed;
  std::vector<Edge> removed_edges;
  auto locate = [&](const std::string& label) {
    for (Vertex v = 0; v < view.graph.order(); ++v)
      if (view.labels[v] == label) return v;
    fail(ErrorCode::Internal, "certificate vertex " + label + " missing from the larger view");
  };
  for (const std::string& s : est.separator) removed.push_back(locate(s));
  for (const auto& [a, b] : est.cut) removed_edges.push_back(Edge::of(locate(a), locate(b)));

  std::vector<char> in_sphere = membership(view.graph.order(), sphere);
  std::vector<char> gone = membership(view.graph.order(), removed);
  for (const auto& comp : components_without(view.graph, removed, removed_edges)) {
    bool base = false, far = false;
    for (Vertex v : comp) {
      base = base || (view.distance[v] <= est.radius_used / 2 && !gone[v]);
      far = far || in_sphere[v];
    }
    if (base && far) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

EdgeCertificationReport certify_essential_edges(const Family& f, int r, int pad, int k) {
  if (pad < 1) fail(ErrorCode::InvalidParams, "pad must be at least 1");
  if (r < 0 || k < 1) fail(ErrorCode::InvalidParams, "need r >= 0 and k >= 1");
  EdgeCertificationReport report;
  report.radius = r;
  report.pad = pad;
  report.k = k;

  const Ball big = f.ball(r + 2 * pad);
  ConnectivityKernel kernel = f.multigraph() ? ConnectivityKernel(big.multigraph()) : ConnectivityKernel(big.graph);
  for (const Edge& e : big.graph.edges()) {
    if (big.distance[e.u] > r || big.distance[e.v] > r) continue;
    EdgeCertificate cert;
    cert.u = big.labels[e.u];
    cert.v = big.labels[e.v];
    const Cut cut = kernel.min_cut_between(e.u, e.v);
    cert.cut_size = cut.weight;
    bool inside = true;
    for (const Edge& c : cut.edges) {
      inside = inside && big.distance[c.u] <= r + pad && big.distance[c.v] <= r + pad;
      cert.cut.emplace_back(big.labels[c.u], big.labels[c.v]);
    }
    cert.certified = cut.weight == k && inside;
    report.certified += cert.certified;
    report.edges.push_back(std::move(cert));
  }
  return report;
}

// ---------------------------------------------------------------------------

Theorem3Report validate_theorem3(const Family& f, int k, MinimalityClass cls, int search_radius) {
  const auto declared = f.declared_classes();
  if (std::none_of(declared.begin(), declared.end(),
                   [&](const DeclaredClass& d) { return d.cls == cls && d.k == k; }))
    fail(ErrorCode::ValidationFailed,
         f.name() + " is not declared to be " + class_name(cls) + " for k=" + std::to_string(k));

  Theorem3Report rep;
  rep.cls = cls;
  rep.k = k;
  rep.vertex_bound = cls == MinimalityClass::VertexMinKConn ? 3 * k / 2 - 1 : k;
  rep.search_radius = search_radius;

  const Ball b = f.ball(search_radius);
  const MultiGraph mg = b.multigraph();
  for (Vertex v = 0; v < b.graph.order(); ++v) {
    if (b.frontier[v]) continue;
    const int deg = f.multigraph() ? mg.degree(v) : b.graph.degree(v);
    if (deg <= rep.vertex_bound) rep.points.push_back({"vertex", b.labels[v], deg});
  }

  const EndMode mode = cls == MinimalityClass::EdgeMinKEdgeConn ? EndMode::Edge : EndMode::Vertex;
  std::vector<EndDescriptor> candidates = ends(f, 1);
  if (candidates.size() > 2) candidates.resize(2);
  for (const EndDescriptor& end : candidates) {
    const EndDegreeEstimate est = end_degree_estimate(f, end, mode);
    if (est.converged && est.upper <= k) rep.points.push_back({"end", end.tag, est.upper});
  }
  rep.disjunction = !rep.points.empty();
  rep.count_two = rep.points.size() >= 2;
  if (!rep.count_two)
    fail(ErrorCode::ValidationFailed, f.name() + ": fewer than two small vertices or ends were exhibited");
  return rep;
}

}  // namespace kmin
