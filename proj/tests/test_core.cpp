#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "kmin/catalog.hpp"
#include "kmin/connectivity.hpp"
#include "kmin/constructions.hpp"
#include "kmin/enumerate.hpp"
#include "kmin/error.hpp"
#include "kmin/io.hpp"
#include "support.hpp"

namespace kmin {
namespace {

TEST(Graph, RejectsLoopsParallelsAndRange) {
  EXPECT_THROW(Graph(3, {{0, 0}}), Error);
  EXPECT_THROW(Graph(3, {{0, 1}, {0, 1}}), Error);
  EXPECT_THROW(Graph(3, {{0, 3}}), Error);
  Graph g(4, {{2, 3}, {0, 1}});
  EXPECT_EQ(g.edges().front(), (Edge{0, 1}));
  EXPECT_EQ(g.edge_index(3, 2), 1);
  EXPECT_FALSE(g.edge_index(0, 2).has_value());
}

TEST(Graph, DegreeProfileAndSmallSets) {
  DegreeProfile k5 = degree_profile(complete_graph(5));
  EXPECT_EQ(k5.max_degree, 4);
  EXPECT_EQ(k5.multiset, std::vector<int>(5, 4));
  EXPECT_EQ(small_degree_set(cycle_graph(6), 2).size(), 6u);
  EXPECT_TRUE(small_degree_set(cycle_graph(6), 1).empty());
}

TEST(Graph, DeletionKeepsTranslation) {
  Graph g = petersen_graph();
  Subgraph s = delete_vertex(g, 4);
  EXPECT_EQ(s.graph.order(), 9);
  EXPECT_EQ(s.graph.size(), 12);
  EXPECT_EQ(s.local[4], -1);
  for (Vertex v = 0; v < s.graph.order(); ++v) {
    EXPECT_EQ(s.local[s.original[v]], v);
    EXPECT_EQ(s.graph.degree(v), g.degree(s.original[v]) - (g.adjacent(4, s.original[v]) ? 1 : 0));
  }
  Graph h = delete_edge(g, {0, 1});
  EXPECT_EQ(h.order(), 10);
  EXPECT_FALSE(h.adjacent(0, 1));
}

TEST(Graph, Regions) {
  Graph c6 = cycle_graph(6);
  Region r = region_of(c6, std::vector<Vertex>{1, 2, 3});
  EXPECT_EQ(r.vertex_boundary, (std::vector<Vertex>{1, 3}));
  EXPECT_EQ(r.edge_boundary.size(), 2u);
  EXPECT_TRUE(r.profound());
  EXPECT_EQ(r.interior(), std::vector<Vertex>{2});

  Graph k4 = complete_graph(4);
  Region all = region_of(k4, testing::all_vertices(k4));
  EXPECT_TRUE(all.vertex_boundary.empty());
  EXPECT_TRUE(all.edge_boundary.empty());
  EXPECT_THROW(region_of(c6, std::vector<Vertex>{0, 3}), Error);
  EXPECT_THROW(region_of(c6, std::vector<Vertex>{}), Error);

  // H_1 plus a: boundary is the rightward-matched half of H_1 plus a (via ab).
  LabeledGraph band = band_graph(3, 2);
  std::vector<Vertex> h1{band.vertex("a")};
  for (int j = 0; j < 4; ++j) h1.push_back(band.vertex("H1:" + std::to_string(j)));
  Region rb = region_of(band.graph, h1);
  std::vector<Vertex> expected{band.vertex("H1:2"), band.vertex("H1:3"), band.vertex("a")};
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(rb.vertex_boundary, expected);
  EXPECT_EQ(rb.edge_boundary.size(), 3u);
}

TEST(Graph, MultigraphMergesPairs) {
  MultiGraph m(3, std::vector<MultiEdge>{{0, 1, 2}, {1, 0, 3}, {1, 2, 1}});
  EXPECT_EQ(m.multiplicity(0, 1), 5);
  EXPECT_EQ(m.degree(1), 6);
  EXPECT_EQ(m.total_multiplicity(), 6);
  Subdivision s = m.subdivide();
  EXPECT_EQ(s.graph.order(), 3 + 6);
  EXPECT_EQ(s.graph.size(), 12);
}

TEST(Constructions, ProductDegreeIdentities) {
  std::mt19937 rng(3);
  for (int round = 0; round < 30; ++round) {
    Graph a = testing::random_graph(2 + round % 4, 0.5, rng), b = testing::random_graph(2 + round % 3, 0.6, rng);
    Graph s = strong_product(a, b), c = cartesian_product(a, b);
    for (Vertex u = 0; u < a.order(); ++u)
      for (Vertex v = 0; v < b.order(); ++v) {
        const int du = a.degree(u), dv = b.degree(v);
        EXPECT_EQ(s.degree(u * b.order() + v), du + dv + du * dv);
        EXPECT_EQ(c.degree(u * b.order() + v), du + dv);
      }
  }
  EXPECT_EQ(strong_product(path_graph(2), path_graph(2)), complete_graph(4));
  EXPECT_TRUE(cartesian_product(path_graph(2), path_graph(2)).size() == 4 &&
              cartesian_product(path_graph(2), path_graph(2)).min_degree() == 2);
  Graph c4k2 = strong_product(cycle_graph(4), complete_graph(2));
  EXPECT_EQ(c4k2.order(), 8);
  EXPECT_EQ(c4k2.min_degree(), 5);
  EXPECT_EQ(c4k2.max_degree(), 5);
}

TEST(Constructions, Squares) {
  EXPECT_EQ(square(path_graph(3)), complete_graph(3));
  EXPECT_EQ(square(cycle_graph(5)), complete_graph(5));
}

TEST(Constructions, Ladder) {
  LabeledGraph l = ladder(10);
  EXPECT_EQ(l.graph.order(), 20);
  EXPECT_EQ(l.graph.size(), 10 + 2 * 9);
  EXPECT_EQ(small_degree_set(l.graph, 2).size(), 4u);
}

TEST(Constructions, StrongCycle) {
  for (int k : {2, 4, 6})
    for (int l : {4, 5, 6}) {
      LabeledGraph g = strong_cycle(k, l);
      EXPECT_EQ(g.graph.order(), l * k / 2);
      EXPECT_EQ(g.graph.min_degree(), 3 * k / 2 - 1);
      EXPECT_EQ(g.graph.max_degree(), 3 * k / 2 - 1);
    }
  EXPECT_EQ(vertex_connectivity(strong_cycle(4, 6).graph), 4);
  EXPECT_THROW(strong_cycle(3, 5), Error);
  EXPECT_THROW(strong_cycle(4, 3), Error);
}

TEST(Constructions, BandGraph) {
  for (int k = 3; k <= 5; ++k)
    for (int l : {2, 3, 4}) {
      LabeledGraph g = band_graph(k, l);
      EXPECT_EQ(g.graph.order(), 2 * (k - 1) * l + 2);
      int low = 0;
      for (Vertex v = 0; v < g.graph.order(); ++v) {
        const int d = g.graph.degree(v);
        if (d == k) {
          ++low;
          EXPECT_TRUE(g.labels[v] == "a" || g.labels[v] == "b");
        } else {
          EXPECT_EQ(d, 2 * (k - 1));
        }
      }
      EXPECT_EQ(low, 2);
      EXPECT_GT(2 * (k - 1), std::max(k, 3 * k / 2 - 1));
      EXPECT_TRUE(g.graph.adjacent(g.vertex("a"), g.vertex("b")));
    }
  EXPECT_EQ(vertex_connectivity(band_graph(3, 2).graph), 3);
  EXPECT_THROW(band_graph(3, 2).vertex("z"), Error);
}

TEST(Constructions, PathSquareExample) {
  for (int l : {10, 12, 16, 20, 31}) {
    LabeledGraph g = path_square_example(l);
    EXPECT_EQ(g.graph.order(), l);
    std::vector<Vertex> low = small_degree_set(g.graph, 3);
    ASSERT_EQ(low.size(), 6u) << l;
    std::set<std::string> names;
    for (Vertex v : low) names.insert(g.labels[v]);
    const std::string L = std::to_string(l);
    EXPECT_EQ(names, (std::set<std::string>{"v1", "v2", "v3", "v" + std::to_string(l - 2),
                                            "v" + std::to_string(l - 1), "v" + L}));
  }
  EXPECT_EQ(edge_connectivity(path_square_example(12).graph), 3);
  EXPECT_THROW(path_square_example(9), Error);
}

TEST(Constructions, Multipath) {
  MultiGraph m = multipath(3, 5);
  EXPECT_EQ(m.degree(0), 3);
  EXPECT_EQ(m.degree(4), 3);
  for (Vertex v = 1; v < 4; ++v) EXPECT_EQ(m.degree(v), 6);
  MultiGraph pair = multipath(4, 2);
  EXPECT_EQ(pair.multiplicity(0, 1), 4);
  EXPECT_EQ(edge_connectivity(multipath(4, 6)), 4);
}

TEST(Catalog, BuildsNamedConstructions) {
  EXPECT_EQ(build_construction("band:k=3,l=2").graph->graph.order(), 10);
  EXPECT_EQ(build_construction("complete:n=5").graph->graph.size(), 10);
  EXPECT_TRUE(build_construction("multipath:k=3,m=5").multigraph.has_value());
  EXPECT_EQ(build_construction("petersen").declared.size(), 4u);
  EXPECT_TRUE(is_construction_spec("ladder:m=4"));
  EXPECT_FALSE(is_construction_spec("clique-tree:r=2,k=4"));
  for (const char* bad : {"band:k=3", "band:k=3,l=2,x=1", "nothing", "cycle:n=abc", "cycle:n"}) {
    try {
      build_construction(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::InvalidParams) << bad;
    }
  }
}

TEST(Io, Graph6RoundTrip) {
  std::mt19937 rng(11);
  for (int n : {1, 2, 5, 8, 13, 62, 63, 64, 100}) {
    Graph g = testing::random_graph(n, 0.4, rng);
    EXPECT_EQ(from_graph6(to_graph6(g)), g) << n;
  }
  EXPECT_EQ(to_graph6(complete_graph(4)), "C~");
  EXPECT_EQ(to_graph6(petersen_graph()).size(), 1u + 8u);
  EXPECT_EQ(from_graph6(">>graph6<<C~"), complete_graph(4));
  EXPECT_THROW(from_graph6("C"), Error);
  EXPECT_THROW(from_graph6("C\x7f"), Error);
}

TEST(Io, EdgeListAndJson) {
  Graph g = petersen_graph();
  EXPECT_EQ(parse_edge_list(to_edge_list(g)), g);
  EXPECT_EQ(parse_edge_list("# comment\n3 2\n0 1\n\n1 2 # tail\n"), path_graph(3));
  EXPECT_THROW(parse_edge_list("3 2\n0 1\n"), Error);
  EXPECT_THROW(parse_edge_list("3 1\n0 5\n"), Error);

  MultiGraph m = multipath(3, 4);
  MultiGraph back = parse_multi_edge_list(to_multi_edge_list(m));
  EXPECT_EQ(back.edges(), m.edges());

  LabeledGraph band = band_graph(3, 2);
  LabeledGraph parsed = parse_json_graph(to_json(band));
  EXPECT_EQ(parsed.graph, band.graph);
  EXPECT_EQ(parsed.labels, band.labels);
  EXPECT_THROW(parse_json_graph("{\"n\": 2, \"edges\": [[0, 2]]}"), Error);
}

TEST(Io, FormatDetection) {
  Graph g = cycle_graph(5);
  EXPECT_EQ(parse_graph(to_graph6(g)).graph, g);
  EXPECT_EQ(parse_graph(to_edge_list(g)).graph, g);
  EXPECT_EQ(parse_graph(to_json({g, {}})).graph, g);
  EXPECT_EQ(parse_format("g6"), GraphFormat::Graph6);
  EXPECT_THROW(parse_format("xml"), Error);
  std::istringstream stream(">>graph6<<C~\n\n# note\nDQc\n");
  EXPECT_EQ(graph6_lines(stream), (std::vector<std::string>{"C~", "DQc"}));
}

TEST(Enumerate, CountsMatchKnownSequence) {
  // Graphs on n unlabelled vertices: 1, 2, 4, 11, 34, 156, 1044, 12346.
  const std::vector<std::size_t> known{1, 2, 4, 11, 34, 156, 1044, 12346};
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(nonisomorphic_graphs(n).size(), known[n - 1]) << n;
}

TEST(Enumerate, CanonicalFormIsAnInvariant) {
  std::mt19937 rng(5);
  for (int round = 0; round < 200; ++round) {
    const int n = 2 + round % 8;
    Graph g = testing::random_graph(n, 0.45, rng);
    std::vector<Vertex> perm = testing::all_vertices(g);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> moved;
    for (Edge e : g.edges()) moved.push_back(Edge::of(perm[e.u], perm[e.v]));
    Graph h(n, moved);
    EXPECT_EQ(canonical_code(g), canonical_code(h));
    EXPECT_EQ(canonical_form(g), canonical_form(h));
  }
  // Non-isomorphic graphs with equal degree sequences stay apart.
  Graph c6 = cycle_graph(6);
  Graph two_triangles(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  EXPECT_NE(canonical_code(c6), canonical_code(two_triangles));
}

TEST(Enumerate, ClassesAreDistinctAndSeededSamplesRepeat) {
  std::set<std::uint64_t> codes;
  for (const Graph& g : nonisomorphic_graphs(6)) EXPECT_TRUE(codes.insert(canonical_code(g)).second);
  EXPECT_EQ(random_graph(9, 0.3, 42), random_graph(9, 0.3, 42));
  EXPECT_THROW(nonisomorphic_graphs(kMaxEnumerationOrder + 1), Error);
}

}  // namespace
}  // namespace kmin
