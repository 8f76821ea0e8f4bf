#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "kmin/connectivity.hpp"
#include "kmin/error.hpp"
#include "kmin/families.hpp"

using namespace kmin;

namespace {

const std::vector<std::string> kSpecs{
    "double-ray",         "dr-square",           "strong-dr:k=2",         "strong-dr:k=3",
    "cartesian-dr:k=2",   "cartesian-dr:k=3",    "strong-tree:r=3,k=2",   "cartesian-tree:r=3,k=2",
    "clique-tree:r=2,k=4", "clique-tree:r=2,k=2", "figure5:k=4,l=4",       "figure5:k=4,l=8",
    "figure5:k=2,l=6",    "multipath-inf:k=3"};

int small_radius(const Family& f) { return f.tree_based() ? 3 : 6; }

std::multiset<int> interior_degrees(const Ball& b) {
  std::multiset<int> out;
  for (Vertex v = 0; v < b.graph.order(); ++v)
    if (!b.frontier[v]) out.insert(b.graph.degree(v));
  return out;
}

}  // namespace

TEST(Families, ParsesSpecsAndRejectsBadParameters) {
  for (const auto& s : kSpecs) EXPECT_EQ(make_family(s)->name(), s);
  for (const char* bad : {"nope", "strong-dr", "strong-dr:k=0", "clique-tree:r=1,k=2", "figure5:k=3,l=6",
                          "figure5:k=4,l=6", "figure5:k=4,l=2", "double-ray:k=2", "strong-dr:k=x"}) {
    try {
      make_family(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::InvalidParams) << bad;
    }
  }
}

TEST(Families, NeighbourRelationIsSymmetricAndSimple) {
  for (const auto& s : kSpecs) {
    FamilyPtr f = make_family(s);
    const Ball b = f->ball(small_radius(*f));
    for (const Key& key : b.keys) {
      std::vector<Key> nb = f->neighbors(key);
      std::set<Key> unique(nb.begin(), nb.end());
      EXPECT_EQ(unique.size(), nb.size()) << s << " " << f->label(key);
      EXPECT_FALSE(unique.count(key)) << s;
      for (const Key& w : nb) {
        auto back = f->neighbors(w);
        EXPECT_NE(std::find(back.begin(), back.end(), key), back.end()) << s << " " << f->label(key);
      }
    }
  }
}

TEST(Families, BallsAreNestedInducedSubgraphs) {
  for (const auto& s : kSpecs) {
    FamilyPtr f = make_family(s);
    const int top = f->tree_based() ? 3 : 8;
    for (int r = 0; r < top; ++r) {
      const Ball a = f->ball(r), b = f->ball(r + 1);
      ASSERT_LE(a.graph.order(), b.graph.order());
      for (Vertex u = 0; u < a.graph.order(); ++u) {
        auto bu = b.find(a.keys[u]);
        ASSERT_TRUE(bu.has_value()) << s;
        EXPECT_EQ(a.labels[u], b.labels[*bu]);
        EXPECT_EQ(a.distance[u], b.distance[*bu]);
        for (Vertex w = u + 1; w < a.graph.order(); ++w)
          EXPECT_EQ(a.graph.adjacent(u, w), b.graph.adjacent(*bu, *b.find(a.keys[w]))) << s;
      }
      // Interior vertices keep their full degree.
      for (Vertex v = 0; v < a.graph.order(); ++v) {
        EXPECT_EQ(a.frontier[v] != 0, a.distance[v] == r) << s << " r=" << r;
        if (a.distance[v] < r) {
          for (const Key& w : f->neighbors(a.keys[v])) EXPECT_TRUE(a.find(w).has_value()) << s;
        }
        if (!a.frontier[v]) EXPECT_EQ(a.graph.degree(v), static_cast<int>(f->neighbors(a.keys[v]).size()));
      }
    }
  }
}

TEST(Families, DegreeFormulas) {
  EXPECT_EQ(interior_degrees(make_family("double-ray")->ball(5)), std::multiset<int>({2, 2, 2, 2, 2, 2, 2, 2, 2}));
  for (int d : interior_degrees(make_family("dr-square")->ball(5))) EXPECT_EQ(d, 4);
  for (int k = 1; k <= 4; ++k) {
    for (int d : interior_degrees(make_family("strong-dr:k=" + std::to_string(k))->ball(4))) EXPECT_EQ(d, 3 * k - 1);
    for (int d : interior_degrees(make_family("cartesian-dr:k=" + std::to_string(k))->ball(4))) EXPECT_EQ(d, k + 1);
  }
  for (auto [r, k] : {std::pair{2, 4}, {2, 2}, {3, 2}}) {
    FamilyPtr f = make_family("clique-tree:r=" + std::to_string(r) + ",k=" + std::to_string(k));
    const Ball b = f->ball(3);
    for (Vertex v = 0; v < b.graph.order(); ++v) {
      if (b.frontier[v]) continue;
      const int expected = b.distance[v] == 0 ? r * k : r * k + (k - 1) + 1;
      EXPECT_EQ(b.graph.degree(v), expected);
    }
  }
  for (auto [k, l] : {std::pair{4, 4}, {4, 8}, {2, 6}, {6, 12}}) {
    FamilyPtr f = make_family("figure5:k=" + std::to_string(k) + ",l=" + std::to_string(l));
    for (int d : interior_degrees(f->ball(6))) EXPECT_TRUE(d == 3 * k / 2 - 1 || d == 3 * k / 2 + 1) << d;
  }
}

TEST(Families, SmallBalls) {
  const Ball path = make_family("double-ray")->ball(3);
  EXPECT_EQ(path.graph.order(), 7);
  EXPECT_EQ(path.graph.size(), 6);
  EXPECT_EQ(std::count(path.frontier.begin(), path.frontier.end(), 1), 2);
  EXPECT_TRUE(path.frontier[*path.find({3})] && path.frontier[*path.find({-3})]);

  // Ladder: vertices (i,c) with |i| + [c != 0] <= 2.
  const Ball ladder = make_family("cartesian-dr:k=2")->ball(2);
  EXPECT_EQ(ladder.graph.order(), 5 + 3);

  const Ball star = make_family("clique-tree:r=2,k=4")->ball(1);
  EXPECT_EQ(star.graph.order(), 9);
  EXPECT_EQ(star.graph.degree(*star.find({0})), 8);
  std::vector<Vertex> children;
  for (Vertex v = 0; v < star.graph.order(); ++v)
    if (star.distance[v] == 1) children.push_back(v);
  const Subgraph nbhd = induced_subgraph(star.graph, children);
  auto comps = nbhd.graph.components();
  ASSERT_EQ(comps.size(), 2u);
  for (const auto& c : comps) {
    ASSERT_EQ(c.size(), 4u);
    for (Vertex v : c) EXPECT_EQ(nbhd.graph.degree(v), 3);
  }
}

TEST(Families, EndEnumeration) {
  EXPECT_EQ(ends(*make_family("double-ray")).size(), 2u);
  EXPECT_EQ(ends(*make_family("figure5:k=4,l=8")).size(), 2u);
  EXPECT_EQ(ends(*make_family("clique-tree:r=2,k=4"), 3).size(), 8u * 8u * 8u);
  EXPECT_EQ(ends(*make_family("cartesian-tree:r=3,k=2"), 3).size(), 3u * 2u * 2u);
  FamilyPtr t = make_family("clique-tree:r=2,k=4");
  EXPECT_EQ(parse_end(*t, "3.7").branch, (std::vector<int>{3, 7}));
  EXPECT_THROW(parse_end(*t, "8"), Error);
  EXPECT_THROW(parse_end(*make_family("dr-square"), "up"), Error);
}

struct EndCase {
  std::string spec;
  std::string end;
  EndMode mode;
  int value;
};

class EndDegrees : public ::testing::TestWithParam<EndCase> {};

TEST_P(EndDegrees, ConvergesToExpectedValue) {
  const EndCase& c = GetParam();
  FamilyPtr f = make_family(c.spec);
  const EndDescriptor end = parse_end(*f, c.end);
  const EndDegreeEstimate est = end_degree_estimate(*f, end, c.mode);
  EXPECT_TRUE(est.converged) << c.spec;
  EXPECT_EQ(est.lower, c.value) << c.spec;
  EXPECT_EQ(est.upper, c.value) << c.spec;
  EXPECT_LE(est.radius_used, kDefaultRMax);
  EXPECT_TRUE(est.lower_monotone);
  for (auto [lo, up] : est.history) EXPECT_LE(lo, up);
  if (est.declared) EXPECT_EQ(*est.declared, est.upper);

  // Certificates: disjoint paths of the right count, separator of the right size.
  EXPECT_EQ(static_cast<int>(est.rays.size()), est.lower);
  if (c.mode == EndMode::Vertex) {
    EXPECT_EQ(static_cast<int>(est.separator.size()), est.upper);
    std::set<std::string> used;
    for (const auto& ray : est.rays)
      for (const auto& v : ray) EXPECT_TRUE(used.insert(v).second) << "rays share " << v;
  }
  EXPECT_TRUE(separator_still_separates(*f, end, est));
}

INSTANTIATE_TEST_SUITE_P(
    Families, EndDegrees,
    ::testing::Values(EndCase{"double-ray", "left", EndMode::Vertex, 1},
                      EndCase{"double-ray", "right", EndMode::Edge, 1},
                      EndCase{"dr-square", "left", EndMode::Vertex, 2},
                      EndCase{"dr-square", "right", EndMode::Edge, 3},
                      EndCase{"strong-dr:k=2", "left", EndMode::Vertex, 2},
                      EndCase{"strong-dr:k=3", "right", EndMode::Vertex, 3},
                      // Consecutive columns of the strong product are joined by k^2 edges.
                      EndCase{"strong-dr:k=2", "right", EndMode::Edge, 4},
                      EndCase{"strong-dr:k=3", "left", EndMode::Edge, 9},
                      EndCase{"cartesian-dr:k=2", "right", EndMode::Vertex, 2},
                      EndCase{"cartesian-dr:k=3", "left", EndMode::Vertex, 3},
                      EndCase{"figure5:k=4,l=4", "left", EndMode::Vertex, 4},
                      EndCase{"figure5:k=4,l=8", "right", EndMode::Vertex, 8},
                      EndCase{"strong-tree:r=3,k=2", "1.0", EndMode::Vertex, 2},
                      EndCase{"cartesian-tree:r=3,k=2", "2", EndMode::Vertex, 2},
                      // A clique group meets its parent in k edges and its subtree hangs off one vertex.
                      EndCase{"clique-tree:r=2,k=4", "5", EndMode::Edge, 4},
                      EndCase{"clique-tree:r=2,k=4", "0.3", EndMode::Vertex, 1},
                      EndCase{"multipath-inf:k=3", "right", EndMode::Edge, 3}));

TEST(Families, EdgeModeRefusedOnProductTrees) {
  FamilyPtr f = make_family("strong-tree:r=3,k=2");
  try {
    end_degree_estimate(*f, parse_end(*f, "0"), EndMode::Edge);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidParams);
  }
}

TEST(Families, UnconvergedEstimateIsReported) {
  FamilyPtr f = make_family("figure5:k=4,l=8");
  const EndDegreeEstimate est = end_degree_estimate(*f, parse_end(*f, "left"), EndMode::Vertex, 8, 3);
  EXPECT_LE(est.radius_used, 8);
  if (!est.converged) EXPECT_LE(est.lower, est.upper);
}

TEST(Families, ColumnRegionsBoundTheEndDegree) {
  // Nested regions D_i = columns >= i have k boundary vertices, so d_v <= k.
  for (const char* s : {"strong-dr:k=3", "cartesian-dr:k=3"}) {
    FamilyPtr f = make_family(s);
    const Ball b = f->ball(10);
    for (int i = 1; i <= 5; ++i) {
      std::vector<Vertex> region;
      for (Vertex v = 0; v < b.graph.order(); ++v)
        if (b.keys[v][0] >= i) region.push_back(v);
      int boundary = 0;
      for (Vertex v : vertex_boundary(b.graph, region)) boundary += !b.frontier[v];
      EXPECT_EQ(boundary, 3);
    }
    EXPECT_LE(end_degree_estimate(*f, parse_end(*f, "right"), EndMode::Vertex).upper, 3);
  }
}

TEST(Families, EssentialEdgeCertification) {
  auto all = [](const EdgeCertificationReport& rep) {
    return !rep.edges.empty() && rep.certified == static_cast<int>(rep.edges.size());
  };
  EXPECT_TRUE(all(certify_essential_edges(*make_family("double-ray"), 3, 2, 1)));
  EXPECT_TRUE(all(certify_essential_edges(*make_family("dr-square"), 3, 2, 3)));
  EXPECT_TRUE(all(certify_essential_edges(*make_family("dr-square"), 4, 2, 3)));
  EXPECT_TRUE(all(certify_essential_edges(*make_family("multipath-inf:k=3"), 3, 1, 3)));
  const auto clique = certify_essential_edges(*make_family("clique-tree:r=2,k=2"), 2, 2, 2);
  EXPECT_TRUE(all(clique));
  // 4 edges of the ball of radius 2 in DR^2 are not contained in 3-cuts: it
  // is not edge-minimal for k = 4.
  const auto wrong_k = certify_essential_edges(*make_family("dr-square"), 2, 2, 4);
  EXPECT_EQ(wrong_k.certified, 0);
  // Strong products have edges that lie in no minimum cut.
  const auto strong = certify_essential_edges(*make_family("strong-dr:k=2"), 2, 2, 2);
  EXPECT_LT(strong.certified, static_cast<int>(strong.edges.size()));
}

TEST(Families, SmallVertexOrEndValidation) {
  for (int k = 2; k <= 3; ++k) {
    const auto rep = validate_theorem3(*make_family("strong-dr:k=" + std::to_string(k)), k,
                                       MinimalityClass::VertexMinKConn);
    EXPECT_TRUE(rep.count_two);
    for (const auto& p : rep.points) EXPECT_EQ(p.kind, "end");
    const auto cart = validate_theorem3(*make_family("cartesian-dr:k=" + std::to_string(k)), k,
                                        MinimalityClass::VertexMinKEdgeConn);
    EXPECT_EQ(cart.points.size(), 2u);
  }
  const auto clique = validate_theorem3(*make_family("clique-tree:r=2,k=4"), 4, MinimalityClass::EdgeMinKEdgeConn);
  for (const auto& p : clique.points) EXPECT_EQ(p.kind, "end");
  EXPECT_TRUE(clique.count_two);

  const auto f5 = validate_theorem3(*make_family("figure5:k=4,l=4"), 4, MinimalityClass::VertexMinKConn);
  // Gadget vertices have degree 5 = 3k/2 - 1 and both ends have degree 4.
  EXPECT_TRUE(std::any_of(f5.points.begin(), f5.points.end(), [](auto& p) { return p.kind == "vertex" && p.value == 5; }));
  EXPECT_EQ(std::count_if(f5.points.begin(), f5.points.end(), [](auto& p) { return p.kind == "end"; }), 2);

  try {
    validate_theorem3(*make_family("dr-square"), 3, MinimalityClass::VertexMinKConn);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ValidationFailed);
  }
}
