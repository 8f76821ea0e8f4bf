#include "kmin/connectivity.hpp"

#include <gtest/gtest.h>

#include <random>

#include "kmin/constructions.hpp"
#include "kmin/error.hpp"
#include "support.hpp"

namespace kmin {
namespace {

using testing::random_graph;

TEST(Connectivity, SmallFixedGraphs) {
  EXPECT_EQ(vertex_connectivity(complete_graph(5)), 4);
  EXPECT_EQ(edge_connectivity(complete_graph(5)), 4);
  EXPECT_EQ(vertex_connectivity(cycle_graph(7)), 2);
  EXPECT_EQ(vertex_connectivity(path_graph(4)), 1);
  EXPECT_EQ(vertex_connectivity(petersen_graph()), 3);
  EXPECT_EQ(edge_connectivity(petersen_graph()), 3);
  EXPECT_EQ(vertex_connectivity(Graph(3)), 0);
  EXPECT_THROW(vertex_connectivity(Graph(1)), Error);
}

TEST(Connectivity, MatchesBruteForceOnRandomGraphs) {
  std::mt19937 rng(7);
  for (int round = 0; round < 400; ++round) {
    const int n = 2 + round % 9;
    const double p = 0.2 + 0.7 * ((round * 37) % 100) / 100.0;
    Graph g = random_graph(n, p, rng);
    Connectivity expected = brute_force_connectivity(g);
    ASSERT_EQ(vertex_connectivity(g), expected.kappa) << "round " << round;
    ASSERT_EQ(edge_connectivity(g), expected.lambda) << "round " << round;
    for (int k = 0; k <= n; ++k) {
      ASSERT_EQ(is_k_connected(g, k), expected.kappa >= k && (k == 0 || n > k));
      ASSERT_EQ(is_k_edge_connected(g, k), expected.lambda >= k);
    }
  }
}

TEST(Connectivity, KappaAtMostLambdaAtMostMinDegree) {
  std::mt19937 rng(11);
  for (int round = 0; round < 200; ++round) {
    Graph g = random_graph(3 + round % 12, 0.5, rng);
    const int kappa = vertex_connectivity(g), lambda = edge_connectivity(g);
    EXPECT_LE(kappa, lambda);
    EXPECT_LE(lambda, g.min_degree());
  }
}

TEST(Connectivity, SeparatorsAndCutsAreValid) {
  std::mt19937 rng(3);
  for (int round = 0; round < 200; ++round) {
    Graph g = random_graph(4 + round % 10, 0.45, rng);
    if (!g.is_connected()) continue;
    auto sep = min_vertex_separator(g);
    if (g.is_complete()) {
      EXPECT_FALSE(sep.has_value());
    } else {
      ASSERT_TRUE(sep.has_value());
      EXPECT_EQ(sep->size(), vertex_connectivity(g));
      EXPECT_GE(sep->sides.size(), 2u);
    }
    Cut cut = min_edge_cut(g);
    EXPECT_EQ(cut.size(), edge_connectivity(g));
    EXPECT_EQ(components_without(g, {}, cut.edges).size(), 2u);
  }
}

TEST(Connectivity, SeparatorContainingVertex) {
  Graph c = cycle_graph(6);
  auto t = min_separator_containing(c, 0);
  ASSERT_TRUE(t.has_value());
  EXPECT_EQ(t->size(), 2);
  EXPECT_EQ(t->vertices.front(), 0);
  EXPECT_FALSE(min_separator_containing(complete_graph(4), 1).has_value());

  // Oracle: smallest set S containing x with G - S disconnected.
  std::mt19937 rng(5);
  for (int round = 0; round < 60; ++round) {
    Graph g = random_graph(5 + round % 4, 0.6, rng);
    const int n = g.order();
    for (Vertex x = 0; x < n; ++x) {
      int best = -1;
      for (unsigned s = 0; s < (1u << n); ++s) {
        if (!((s >> x) & 1u)) continue;
        std::vector<Vertex> set;
        for (int v = 0; v < n; ++v)
          if ((s >> v) & 1u) set.push_back(v);
        if (components_without(g, set).size() >= 2 && (best < 0 || static_cast<int>(set.size()) < best))
          best = static_cast<int>(set.size());
      }
      auto found = min_separator_containing(g, x);
      if (best < 0) {
        EXPECT_FALSE(found.has_value());
      } else {
        ASSERT_TRUE(found.has_value());
        EXPECT_EQ(found->size(), best);
        EXPECT_TRUE(std::binary_search(found->vertices.begin(), found->vertices.end(), x));
        EXPECT_GE(found->sides.size(), 2u);
      }
    }
  }
}

TEST(Connectivity, MultigraphRoutesAgree) {
  for (int k = 1; k <= 4; ++k)
    for (int m = 2; m <= 6; ++m) {
      MultiGraph g = multipath(k, m);
      EXPECT_EQ(edge_connectivity(g), k);
      EXPECT_EQ(edge_connectivity_by_subdivision(g), k);
    }
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> mult(1, 3);
  for (int round = 0; round < 80; ++round) {
    Graph simple = random_graph(3 + round % 6, 0.5, rng);
    std::vector<MultiEdge> edges;
    for (Edge e : simple.edges()) edges.push_back({e.u, e.v, mult(rng)});
    MultiGraph g(simple.order(), edges);
    EXPECT_EQ(edge_connectivity(g), edge_connectivity_by_subdivision(g));
  }
}

TEST(Connectivity, KernelMasksMatchRebuiltGraphs) {
  std::mt19937 rng(21);
  for (int round = 0; round < 60; ++round) {
    Graph g = random_graph(4 + round % 7, 0.55, rng);
    ConnectivityKernel kernel(g);
    for (Vertex v = 0; v < g.order(); ++v) {
      kernel.remove_vertex(v);
      Graph h = delete_vertex(g, v).graph;
      EXPECT_EQ(kernel.vertex_connectivity(), vertex_connectivity(h));
      EXPECT_EQ(kernel.edge_connectivity(), edge_connectivity(h));
      kernel.restore_vertex(v);
    }
    for (int i = 0; i < g.size(); ++i) {
      kernel.remove_edge(i);
      Graph h = delete_edge(g, g.edges()[i]);
      EXPECT_EQ(kernel.vertex_connectivity(), vertex_connectivity(h));
      EXPECT_EQ(kernel.edge_connectivity(), edge_connectivity(h));
      kernel.restore_edge(i);
    }
  }
}

TEST(Menger, PathCountEqualsDualSetSize) {
  std::mt19937 rng(13);
  for (int round = 0; round < 150; ++round) {
    Graph g = random_graph(6 + round % 8, 0.35, rng);
    const int n = g.order();
    std::vector<Vertex> a{0, 1}, b{n - 1, n - 2};
    PathSystem vp = max_disjoint_paths(g, a, b, PathMode::Vertex);
    EXPECT_EQ(static_cast<int>(vp.paths.size()), vp.value);
    EXPECT_EQ(static_cast<int>(vp.separator.size()), vp.value);
    std::vector<char> used(n, 0);
    for (const auto& path : vp.paths) {
      ASSERT_FALSE(path.empty());
      EXPECT_TRUE(path.front() <= 1);
      EXPECT_TRUE(path.back() >= n - 2);
      for (std::size_t i = 0; i + 1 < path.size(); ++i) EXPECT_TRUE(g.adjacent(path[i], path[i + 1]));
      for (Vertex v : path) {
        EXPECT_FALSE(used[v]);
        used[v] = 1;
      }
    }
    PathSystem ep = max_disjoint_paths(g, a, b, PathMode::Edge);
    EXPECT_EQ(static_cast<int>(ep.paths.size()), ep.value);
    EXPECT_EQ(static_cast<int>(ep.cut.size()), ep.value);
    std::vector<int> edge_use(g.size(), 0);
    for (const auto& path : ep.paths)
      for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        auto idx = g.edge_index(path[i], path[i + 1]);
        ASSERT_TRUE(idx.has_value());
        EXPECT_EQ(++edge_use[*idx], 1);
      }
  }
}

TEST(Menger, EdgeModeRejectsOverlappingTerminals) {
  Graph g = cycle_graph(5);
  std::vector<Vertex> a{0, 1}, b{1, 3};
  EXPECT_THROW(max_disjoint_paths(g, a, b, PathMode::Edge), Error);
}

}  // namespace
}  // namespace kmin
