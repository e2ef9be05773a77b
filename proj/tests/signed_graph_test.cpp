#include <gtest/gtest.h>

#include <random>
#include <set>

#include "signull/enumeration.hpp"
#include "signull/error.hpp"
#include "signull/signed_graph.hpp"
#include "signull/verification.hpp"
#include "support.hpp"

namespace signull {
namespace {

using testing::make;

TEST(SignedGraph, BuildsBalancedC4) {
  const auto g = make(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {0, 3, 1}});
  EXPECT_EQ(g.order(), 4);
  EXPECT_EQ(g.edge_count(), 4);
  EXPECT_TRUE(g.is_unicyclic());
  EXPECT_TRUE(g.is_all_positive());
  EXPECT_EQ(g, cycle_graph(4, true));
}

TEST(SignedGraph, RejectsLoop) { EXPECT_THROW(make(3, {{0, 0, 1}}), InvalidArgument); }

TEST(SignedGraph, RejectsDuplicateWithAnySigns) {
  EXPECT_THROW(make(4, {{0, 1, 1}, {0, 1, -1}}), InvalidArgument);
  EXPECT_THROW(make(4, {{0, 1, 1}, {1, 0, 1}}), InvalidArgument);
}

TEST(SignedGraph, RejectsEndpointOutOfRange) {
  EXPECT_THROW(make(3, {{0, 3, 1}}), InvalidArgument);
  EXPECT_THROW(make(3, {{-1, 2, 1}}), InvalidArgument);
  EXPECT_THROW(SignedGraph(-1, {}), InvalidArgument);
}

TEST(SignedGraph, NormalizesEndpoints) {
  const auto g = make(3, {{2, 0, -1}});
  EXPECT_EQ(g.edges()[0].u, 0);
  EXPECT_EQ(g.edges()[0].v, 2);
  EXPECT_EQ(g.edge_sign(2, 0), Sign::kNegative);
  EXPECT_FALSE(g.has_edge(0, 1));
}

TEST(SignedGraph, SignFromIntRejectsZero) { EXPECT_THROW(sign_from_int(0), InvalidArgument); }

TEST(SignedGraph, HandshakeHoldsOnRandomGraphs) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const auto g = random_graph(1 + i % 12, 0.4, rng);
    int total = 0;
    for (Vertex v = 0; v < g.order(); ++v) total += g.degree(v);
    EXPECT_EQ(total, 2 * g.edge_count());
  }
}

TEST(SignedGraph, EdgeCountCharacterizesAcyclicAndUnicyclic) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 300; ++i) {
    const auto g = random_graph(1 + i % 10, 0.25, rng);
    EXPECT_EQ(g.is_acyclic(), g.edge_count() == g.order() - g.component_count());
    if (g.is_connected() && g.cycle_rank() == 1) EXPECT_TRUE(find_cycle(g));
    if (g.is_connected() && g.cycle_rank() == 0) EXPECT_FALSE(find_cycle(g));
  }
}

TEST(DeleteVertices, CycleMinusVertexIsPath) {
  const Vertex gone[] = {3};
  const auto sub = delete_vertices(cycle_graph(4, true), gone);
  EXPECT_EQ(sub.graph, path_graph(3));
  EXPECT_EQ(sub.original_ids, (std::vector<Vertex>{0, 1, 2}));
}

TEST(DeleteVertices, EmptySetIsIdentity) {
  const auto g = make(5, {{0, 1, -1}, {1, 2, 1}, {3, 4, -1}});
  EXPECT_EQ(delete_vertices(g, {}).graph, g);
}

TEST(DeleteVertices, StarMinusCentre) {
  const Vertex gone[] = {0};
  const auto sub = delete_vertices(star_graph(3), gone);
  EXPECT_EQ(sub.graph.order(), 3);
  EXPECT_EQ(sub.graph.edge_count(), 0);
}

TEST(DeleteVertices, RejectsOutOfRange) {
  const Vertex gone[] = {4};
  EXPECT_THROW(delete_vertices(path_graph(3), gone), InvalidArgument);
}

TEST(DeleteVertices, CompositionMatchesSingleDeletion) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 100; ++i) {
    const auto g = random_graph(8, 0.4, rng);
    const Vertex first[] = {2};
    const Vertex second[] = {4};  // id 5 in g after removing 2
    const Vertex both[] = {2, 5};
    EXPECT_EQ(delete_vertices(delete_vertices(g, first).graph, second).graph, delete_vertices(g, both).graph);
  }
}

TEST(DisjointUnion, TwoEdges) {
  const auto k2 = path_graph(2);
  const auto g = disjoint_union(k2, k2);
  EXPECT_EQ(g.order(), 4);
  EXPECT_EQ(g.edge_count(), 2);
  EXPECT_TRUE(g.has_edge(2, 3));
  EXPECT_EQ(g.component_count(), 2);
}

TEST(DisjointUnion, EmptyIsIdentity) {
  const auto g = cycle_graph(5, false);
  EXPECT_EQ(disjoint_union(g, SignedGraph(0, {})), g);
}

TEST(KJoining, SmallestJoin) {
  const Vertex targets[] = {0};
  const Sign signs[] = {Sign::kNegative};
  const auto g = k_joining(SignedGraph(1, {}), 0, SignedGraph(1, {}), targets, signs);
  EXPECT_EQ(g, make(2, {{0, 1, -1}}));
}

TEST(KJoining, StarIntoTriangleHasCycleRankTwo) {
  const Vertex targets[] = {0, 1};
  const Sign signs[] = {Sign::kPositive, Sign::kPositive};
  const auto g = k_joining(star_graph(2), 0, cycle_graph(3), targets, signs);
  EXPECT_EQ(g.order(), 6);
  EXPECT_EQ(g.edge_count(), 2 + 3 + 2);
  EXPECT_EQ(g.cycle_rank(), 2);
}

TEST(KJoining, LeafIntoPathEndsGivesFourCycleWithPendant) {
  // Partner is the path on three vertices; u joins both ends.
  const Vertex targets[] = {0, 2};
  const Sign signs[] = {Sign::kPositive, Sign::kNegative};
  const auto g = k_joining(path_graph(2), 0, path_graph(3), targets, signs);
  ASSERT_TRUE(g.is_unicyclic());
  EXPECT_EQ(find_cycle(g)->length(), 4);
  EXPECT_EQ(pendant_vertices(g), (std::vector<Vertex>{1}));
}

TEST(KJoining, RejectsBadInput) {
  const Vertex one[] = {0};
  const Vertex dup[] = {0, 0};
  const Vertex outside[] = {3};
  const Sign s1[] = {Sign::kPositive};
  const Sign s2[] = {Sign::kPositive, Sign::kPositive};
  EXPECT_THROW(k_joining(cycle_graph(3), 0, path_graph(2), one, s1), ShapeError);
  EXPECT_THROW(k_joining(path_graph(2), 0, path_graph(2), dup, s2), InvalidArgument);
  EXPECT_THROW(k_joining(path_graph(2), 0, path_graph(2), outside, s1), InvalidArgument);
  EXPECT_THROW(k_joining(path_graph(2), 0, path_graph(2), {}, {}), InvalidArgument);
  EXPECT_THROW(k_joining(path_graph(2), 0, path_graph(2), one, s2), InvalidArgument);
  EXPECT_THROW(k_joining(path_graph(2), 5, path_graph(2), one, s1), InvalidArgument);
}

TEST(FindCycle, BalancedC4) {
  const auto c = find_cycle(cycle_graph(4, true));
  ASSERT_TRUE(c);
  EXPECT_EQ(c->vertices, (std::vector<Vertex>{0, 1, 2, 3}));
  EXPECT_EQ(c->sign, Sign::kPositive);
  EXPECT_EQ(c->length(), 4);
}

TEST(FindCycle, TreeHasNone) {
  std::mt19937_64 rng(14);
  for (int n = 1; n <= 10; ++n) EXPECT_FALSE(find_cycle(random_tree(n, rng)));
}

TEST(FindCycle, TriangleWithHangingPath) {
  // a=0 b=1 c=2, path c-x-z with x=3 z=4.
  const auto g = make(5, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {2, 3, 1}, {3, 4, 1}});
  const auto c = find_cycle(g);
  ASSERT_TRUE(c);
  EXPECT_EQ(std::set<Vertex>(c->vertices.begin(), c->vertices.end()), (std::set<Vertex>{0, 1, 2}));
}

TEST(FindCycle, SignMatchesEdgeProduct) {
  std::mt19937_64 rng(15);
  for (int i = 0; i < 200; ++i) {
    const auto g = random_unicyclic(3 + i % 8, rng);
    const auto c = *find_cycle(g);
    Sign product = Sign::kPositive;
    for (int k = 0; k < c.length(); ++k) {
      const auto s = g.edge_sign(c.vertices[k], c.vertices[(k + 1) % c.length()]);
      ASSERT_TRUE(s);
      product = product * *s;
    }
    EXPECT_EQ(product, c.sign);
  }
}

TEST(FindCycle, RejectsHigherRankAndDisconnected) {
  EXPECT_THROW(find_cycle(make(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {0, 3, 1}, {0, 2, 1}})), ShapeError);
  EXPECT_THROW(find_cycle(disjoint_union(cycle_graph(3), path_graph(2))), ShapeError);
}

TEST(PendantVertices, Examples) {
  EXPECT_EQ(pendant_vertices(path_graph(3)), (std::vector<Vertex>{0, 2}));
  EXPECT_TRUE(pendant_vertices(cycle_graph(4)).empty());
  // Triangle with two leaves on 0 and one on 1.
  const auto u1 = make(6, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {0, 3, 1}, {0, 4, 1}, {1, 5, 1}});
  EXPECT_EQ(pendant_vertices(u1), (std::vector<Vertex>{3, 4, 5}));
}

TEST(PendantTree, BareCycleVertexIsTrivial) {
  const auto g = cycle_graph(4);
  for (Vertex v = 0; v < 4; ++v) {
    const auto t = pendant_tree_at(g, v);
    EXPECT_EQ(t.vertices, (std::vector<Vertex>{v}));
    EXPECT_EQ(t.tree.order(), 1);
  }
}

TEST(PendantTree, StarAtLoadedVertex) {
  const auto u1 = make(6, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {0, 3, 1}, {0, 4, -1}, {1, 5, 1}});
  const auto t = pendant_tree_at(u1, 0);
  EXPECT_EQ(t.vertices, (std::vector<Vertex>{0, 3, 4}));
  EXPECT_EQ(t.root_index, 0);
  EXPECT_EQ(t.tree.degree(t.root_index), 2);
  EXPECT_TRUE(t.tree.is_tree());
}

TEST(PendantTree, SquareWithHungStar) {
  // Square 0..3, star centre 4 with leaves 0 and 5.
  const auto g = make(6, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {0, 3, 1}, {0, 4, 1}, {4, 5, 1}});
  const auto t = pendant_tree_at(g, 0);
  EXPECT_EQ(t.vertices, (std::vector<Vertex>{0, 4, 5}));
  EXPECT_EQ(t.tree.edge_count(), 2);
  EXPECT_EQ(t.tree.degree(1), 2);
}

TEST(PendantTree, RejectsOffCycleRootAndNonUnicyclic) {
  const auto g = make(5, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {2, 3, 1}, {3, 4, 1}});
  EXPECT_THROW(pendant_tree_at(g, 3), InvalidArgument);
  EXPECT_THROW(pendant_tree_at(path_graph(4), 0), ShapeError);
}

TEST(PendantTree, PartitionsVertexSet) {
  std::mt19937_64 rng(16);
  for (int i = 0; i < 300; ++i) {
    const auto g = random_unicyclic(3 + i % 9, rng);
    const auto cycle = *find_cycle(g);
    std::vector<int> seen(g.order(), 0);
    for (Vertex v : cycle.vertices) {
      const auto t = pendant_tree_at(g, cycle, v);
      EXPECT_TRUE(t.tree.is_tree());
      int on_cycle = 0;
      for (Vertex x : t.vertices) {
        ++seen[x];
        on_cycle += cycle.contains(x) ? 1 : 0;
      }
      EXPECT_EQ(on_cycle, 1);
    }
    for (int c : seen) EXPECT_EQ(c, 1);
  }
}

TEST(Builders, ShapesAndErrors) {
  EXPECT_TRUE(path_graph(5).is_tree());
  EXPECT_EQ(star_graph(3).degree(0), 3);
  EXPECT_EQ(find_cycle(cycle_graph(5, false))->sign, Sign::kNegative);
  EXPECT_EQ(cycle_graph(5, false).edge_sign(0, 1), Sign::kNegative);
  EXPECT_THROW(cycle_graph(2), InvalidArgument);
}

}  // namespace
}  // namespace signull
