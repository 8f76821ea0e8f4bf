// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any FAIL.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "kmin/connectivity.hpp"
#include "kmin/constructions.hpp"
#include "kmin/enumerate.hpp"
#include "kmin/error.hpp"
#include "kmin/families.hpp"
#include "kmin/io.hpp"
#include "kmin/minimality.hpp"
#include "kmin/witness.hpp"
#include "oracle.hpp"

using namespace kmin;
using MC = MinimalityClass;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& why) {
    if (!ok && pass) detail << "first failure: " << why << "; ";
    pass = pass && ok;
  }
};

// Enumerated corpus with its profile, computed once.
struct Entry {
  Graph g;
  MinimalityProfile profile;
};

const std::vector<Entry>& enumerated(int max_n) {
  static std::vector<Entry> cache;
  static int built = 1;
  if (cache.empty()) {
    for (Graph& g : nonisomorphic_graphs(1)) cache.push_back({std::move(g), {}});
  }
  for (; built < max_n; ++built)
    for (Graph& g : nonisomorphic_graphs(built + 1)) {
      MinimalityProfile p = minimality_profile(g);
      cache.push_back({std::move(g), p});
    }
  return cache;
}

int count_at_most(const Graph& g, int bound) { return oracle::count_degree_at_most(g, bound); }

int ceil_div(long long a, long long b) { return static_cast<int>((a + b - 1) / b); }

Outcome criterion1() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  int graphs = 0, mismatches = 0;
  auto compare = [&](const Graph& g) {
    ++graphs;
    const int k = g.order() >= 2 ? vertex_connectivity(g) : 0;
    const int l = g.order() >= 2 ? edge_connectivity(g) : 0;
    if (k != oracle::kappa(g) || l != oracle::lambda(g)) {
      ++mismatches;
      o.require(false, "mismatch on " + to_graph6(g));
    }
  };
  for (int n = 1; n <= 7; ++n)
    for (const Graph& g : nonisomorphic_graphs(n)) compare(g);
  std::mt19937_64 rng(20240601);
  for (int i = 0; i < 1000; ++i) {
    const int n = 2 + static_cast<int>(rng() % 7);
    std::uniform_real_distribution<double> p(0.2, 0.9);
    compare(random_graph(n, p(rng), rng()));
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(secs <= 600.0, "runtime above 10 minutes");
  o.detail << graphs << " graphs, " << mismatches << " mismatches, " << secs << " s";
  return o;
}

Outcome criterion2() {
  Outcome o;
  int members = 0, violations = 0;
  for (const Entry& e : enumerated(8)) {
    if (e.g.order() < 2) continue;
    for (int k = 2; k <= 4; ++k) {
      if (!e.profile.in_class(MC::EdgeMinKConn, k)) continue;
      ++members;
      const int n = e.g.order();
      const int need = std::max({ceil_div(static_cast<long long>(k - 1) * n, 2 * k - 1), k + 1, e.g.max_degree()});
      const bool ok = e.g.min_degree() == k && count_at_most(e.g, k) >= need;
      violations += ok ? 0 : 1;
      o.require(ok, to_graph6(e.g) + " k=" + std::to_string(k));
    }
  }
  o.require(members > 0, "no members");
  o.detail << members << " edge-minimally k-connected graphs (n<=8, k=2..4), " << violations << " violations";
  return o;
}

Outcome criterion3() {
  Outcome o;
  int members = 0, violations = 0;
  for (const Entry& e : enumerated(8)) {
    if (e.g.order() < 2) continue;
    for (int k = 2; k <= 4; ++k) {
      if (!e.profile.in_class(MC::VertexMinKConn, k)) continue;
      ++members;
      const bool ok = count_at_most(e.g, 3 * k / 2 - 1) >= 2;
      violations += ok ? 0 : 1;
      o.require(ok, to_graph6(e.g) + " k=" + std::to_string(k));
    }
  }
  int tight = 0;
  for (int k : {4, 6})
    for (int l : {4, 5, 6}) {
      const Graph g = strong_cycle(k, l).graph;
      const bool ok = is_vertex_min_k_connected(g, k).holds && g.min_degree() == 3 * k / 2 - 1 &&
                      g.max_degree() == 3 * k / 2 - 1;
      tight += ok ? 1 : 0;
      o.require(ok, "strong cycle k=" + std::to_string(k) + " l=" + std::to_string(l));
    }
  o.detail << members << " vertex-minimally k-connected graphs, " << violations << " violations; " << tight
           << "/6 strong cycles tight";
  return o;
}

Outcome criterion4() {
  Outcome o;
  int members = 0, violations = 0;
  for (const Entry& e : enumerated(8)) {
    if (e.g.order() < 2 || !e.profile.in_class(MC::EdgeMinKEdgeConn, 3)) continue;
    ++members;
    const bool ok = count_at_most(e.g, 3) >= 4;
    violations += ok ? 0 : 1;
    o.require(ok, to_graph6(e.g));
  }
  std::ostringstream six;
  for (int l : {12, 20}) {
    const Graph g = path_square_example(l).graph;
    const bool in = is_edge_min_k_edge_connected(g, 3).holds;
    const int v3 = count_at_most(g, 3);
    o.require(in && v3 == 6, "path square l=" + std::to_string(l));
    six << " l=" << l << ":|V_3|=" << v3;
  }
  o.detail << members << " edge-minimally 3-edge-connected graphs, " << violations << " violations;" << six.str();
  return o;
}

Outcome criterion5() {
  Outcome o;
  int members = 0, violations = 0, capped = 0;
  for (const Entry& e : enumerated(8)) {
    if (e.g.order() < 2) continue;
    for (int k = 2; k <= 4; ++k) {
      if (!e.profile.in_class(MC::VertexMinKEdgeConn, k)) continue;
      ++members;
      const int vk = count_at_most(e.g, k);
      int need = 2;
      if (k == 2) {
        need = 4;
        if (e.g.order() < 4) {
          need = e.g.order();
          ++capped;
          o.detail << "exception " << to_graph6(e.g) << " (n=" << e.g.order() << ", |V_2|=" << vk << "); ";
        }
      }
      const bool ok = vk >= need;
      violations += ok ? 0 : 1;
      o.require(ok, to_graph6(e.g) + " k=" + std::to_string(k));
    }
  }
  int bands = 0;
  for (int k = 3; k <= 5; ++k)
    for (int l : {2, 4}) {
      const LabeledGraph b = band_graph(k, l);
      std::set<std::string> low;
      for (Vertex v = 0; v < b.graph.order(); ++v)
        if (b.graph.degree(v) <= k) low.insert(b.labels[v]);
      const bool ok = is_vertex_min_k_edge_connected(b.graph, k).holds && low == std::set<std::string>{"a", "b"} &&
                      b.graph.degree(b.vertex("a")) == k && b.graph.degree(b.vertex("b")) == k;
      bands += ok ? 1 : 0;
      o.require(ok, "band k=" + std::to_string(k) + " l=" + std::to_string(l));
    }
  o.detail << members << " vertex-minimally k-edge-connected graphs, " << violations << " violations, " << capped
           << " below-4 exception(s); " << bands << "/6 band graphs with witness set {a,b}";
  return o;
}

Outcome criterion6() {
  Outcome o;
  std::vector<Graph> corpus;
  for (const Entry& e : enumerated(8))
    if (e.g.order() >= 2) corpus.push_back(e.g);
  for (int k : {4, 6})
    for (int l : {4, 5, 6}) corpus.push_back(strong_cycle(k, l).graph);
  for (int k = 3; k <= 5; ++k)
    for (int l : {2, 3}) corpus.push_back(band_graph(k, l).graph);
  for (int m : {3, 5, 8}) corpus.push_back(ladder(m).graph);
  for (int l : {12, 16}) corpus.push_back(path_square_example(l).graph);
  corpus.push_back(petersen_graph());

  int lemma5_runs = 0, complete_skipped = 0, c_runs = 0, d_runs = 0, failures = 0;
  auto guard = [&](const std::string& what, const std::function<bool()>& body) {
    bool ok = false;
    try {
      ok = body();
    } catch (const Error&) {
      ok = false;
    }
    failures += ok ? 0 : 1;
    o.require(ok, what);
  };
  for (const Graph& g : corpus)
    for (int k = 1; k <= 5; ++k) {
      const std::string id = to_graph6(g) + " k=" + std::to_string(k);
      if (k >= 2 && is_vertex_min_k_connected(g, k).holds) {
        auto h = find_profound_k_region(g, k);
        if (!h) {
          ++complete_skipped;
        } else {
          ++lemma5_runs;
          guard("lemma5 " + id, [&] {
            const Lemma5Trace t = lemma5_witness(g, *h, k, false);
            bool ok = t.degree <= 3 * k / 2 - 1 && g.degree(t.witness) == t.degree;
            for (int j = 0; j < 2; ++j)
              ok = ok && static_cast<int>(t.side[0][j].size() + t.side[1][1 - j].size()) == 2 * k;
            for (int i = 0; i < 2; ++i)
              for (int j = 0; j < 2; ++j) {
                std::set<Vertex> side(t.side[i][j].begin(), t.side[i][j].end());
                std::set<Vertex> quad(t.quadrant[i][j].begin(), t.quadrant[i][j].end());
                for (Vertex v : quad)
                  for (Vertex w : g.neighbors(v)) ok = ok && (quad.count(w) || side.count(w));
              }
            return ok && 2 * static_cast<int>(t.X.size()) + static_cast<int>(t.T_star.size()) <= k;
          });
        }
      }
      if (is_edge_min_k_edge_connected(g, k).holds) {
        ++c_runs;
        guard("theorem4c " + id, [&] {
          const Theorem4cResult r = theorem4c_witness(g, k, false);
          return r.sides[0].witness != r.sides[1].witness && g.degree(r.sides[0].witness) == k &&
                 g.degree(r.sides[1].witness) == k;
        });
      }
      if (g.order() >= 3 && is_vertex_min_k_edge_connected(g, k).holds) {
        ++d_runs;
        guard("lemma8 " + id, [&] {
          const auto pair = lemma8_two_witnesses(g, k, false);
          return pair[0].witness != pair[1].witness && g.degree(pair[0].witness) == k &&
                 g.degree(pair[1].witness) == k;
        });
      }
    }
  o.detail << "lemma5 " << lemma5_runs << " runs (" << complete_skipped << " complete graphs skipped), theorem4c "
           << c_runs << ", lemma8 " << d_runs << "; " << failures << " failures";
  return o;
}

Outcome criterion7() {
  Outcome o;
  auto est = [](const char* spec, const char* end, EndMode mode) {
    FamilyPtr f = make_family(spec);
    return end_degree_estimate(*f, parse_end(*f, end), mode, kDefaultRMax, kDefaultWindow);
  };
  auto expect = [&](const char* spec, const char* end, EndMode mode, const std::function<bool(int)>& pred,
                    const char* shown) {
    const EndDegreeEstimate e = est(spec, end, mode);
    const bool ok = e.converged && pred(e.upper);
    o.require(ok, std::string(spec) + " " + end);
    o.detail << spec << " " << end << " " << to_string(mode) << "=" << e.upper << (e.converged ? "" : "?") << shown
             << "; ";
  };
  auto eq = [](int want) { return [want](int v) { return v == want; }; };
  for (const char* end : {"left", "right"}) {
    expect("double-ray", end, EndMode::Vertex, eq(1), "");
    expect("double-ray", end, EndMode::Edge, eq(1), "");
  }
  expect("dr-square", "right", EndMode::Vertex, eq(2), "");
  expect("dr-square", "right", EndMode::Edge, eq(3), "");
  for (int k : {2, 3}) {
    const std::string s = "strong-dr:k=" + std::to_string(k);
    expect(s.c_str(), "right", EndMode::Vertex, eq(k), "");
    expect(s.c_str(), "right", EndMode::Edge, [k](int v) { return v > k; }, " (>k)");
    const std::string c = "cartesian-dr:k=" + std::to_string(k);
    expect(c.c_str(), "right", EndMode::Vertex, eq(k), "");
  }
  expect("figure5:k=4,l=4", "left", EndMode::Vertex, eq(4), "");
  expect("figure5:k=4,l=8", "left", EndMode::Vertex, eq(8), "");

  FamilyPtr tree = make_family("clique-tree:r=2,k=4");
  int best = -1;
  std::string best_end;
  for (const EndDescriptor& d : ends(*tree, 1)) {
    const EndDegreeEstimate e = end_degree_estimate(*tree, d, EndMode::Edge, kDefaultRMax, kDefaultWindow);
    if (e.converged && (best < 0 || e.upper < best)) {
      best = e.upper;
      best_end = d.tag;
    }
  }
  const Ball ball = tree->ball(4);
  int internal_min = -1;
  bool degree4 = false;
  for (Vertex v = 0; v < ball.graph.order(); ++v) {
    const int deg = static_cast<int>(tree->neighbors(ball.keys[v]).size());
    if (deg <= 4) degree4 = true;
    if (!ball.frontier[v] && (internal_min < 0 || ball.graph.degree(v) < internal_min))
      internal_min = ball.graph.degree(v);
  }
  o.require(best >= 0 && best <= 4, "clique tree end edge-degree");
  o.require(!degree4 && internal_min == 8, "clique tree degrees in ball(4)");
  o.detail << "clique-tree(2,4) end " << best_end << " edge=" << best << ", ball(4) min internal degree "
           << internal_min;
  return o;
}

Outcome criterion8() {
  Outcome o;
  for (auto [spec, r, k] : {std::tuple{"clique-tree:r=2,k=4", 2, 4}, std::tuple{"dr-square", 4, 3}}) {
    const EdgeCertificationReport rep = certify_essential_edges(*make_family(spec), r, 2, k);
    const bool ok = !rep.edges.empty() && rep.certified == static_cast<int>(rep.edges.size());
    o.require(ok, spec);
    o.detail << spec << " r=" << r << " pad=2 k=" << k << ": " << rep.certified << "/" << rep.edges.size() << "; ";
  }
  return o;
}

Outcome criterion9() {
  Outcome o;
  for (int k = 2; k <= 4; ++k)
    for (int m : {5, 10}) {
      const MultiGraph g = multipath(k, m);
      int low = 0;
      for (Vertex v = 0; v < g.order(); ++v) low += g.degree(v) == k ? 1 : 0;
      const bool ok = is_edge_min_k_edge_connected(g, k).holds && low == 2;
      o.require(ok, "multipath k=" + std::to_string(k) + " m=" + std::to_string(m));
      o.detail << "(" << k << "," << m << "):" << low << " ";
    }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::function<Outcome()>> criteria{criterion1, criterion2, criterion3, criterion4, criterion5,
                                                       criterion6, criterion7, criterion8, criterion9};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    std::printf("CRITERION %zu: %s  %s\n", i + 1, o.pass ? "PASS" : "FAIL", o.detail.str().c_str());
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
