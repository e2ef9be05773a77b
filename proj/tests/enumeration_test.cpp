#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "signull/enumeration.hpp"
#include "signull/error.hpp"
#include "signull/switching.hpp"
#include "signull/verification.hpp"
#include "support.hpp"

namespace signull {
namespace {

// Counts of connected graphs on n labeled vertices with exactly n edges,
// by filtering every n-edge subset of K_n.
std::uint64_t count_by_edge_subsets(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  const int total = static_cast<int>(pairs.size());
  std::uint64_t count = 0;
  std::vector<int> pick(n);
  for (int i = 0; i < n; ++i) pick[i] = i;
  while (true) {
    std::vector<SignedEdge> edges;
    for (int i : pick) edges.push_back({pairs[i].first, pairs[i].second, Sign::kPositive});
    if (SignedGraph(n, std::move(edges)).is_connected()) ++count;
    int k = n - 1;
    while (k >= 0 && pick[k] == total - n + k) --k;
    if (k < 0) break;
    ++pick[k];
    for (int j = k + 1; j < n; ++j) pick[j] = pick[j - 1] + 1;
  }
  return count;
}

TEST(Trees, Counts) {
  int count = 0;
  enumerate_trees(1, [&](const SignedGraph& g) {
    ++count;
    EXPECT_EQ(g.edge_count(), 0);
  });
  EXPECT_EQ(count, 1);
  for (int n = 2; n <= 7; ++n) {
    std::set<std::vector<SignedEdge>> seen;
    enumerate_trees(n, [&](const SignedGraph& g) {
      EXPECT_TRUE(g.is_tree());
      seen.emplace(g.edges().begin(), g.edges().end());
    });
    EXPECT_EQ(seen.size(), labeled_tree_count(n));
  }
  EXPECT_EQ(labeled_tree_count(3), 3u);
  EXPECT_EQ(labeled_tree_count(4), 16u);
  EXPECT_THROW(enumerate_trees(0, [](const SignedGraph&) {}), InvalidArgument);
  EXPECT_THROW(enumerate_trees(13, [](const SignedGraph&) {}), InvalidArgument);
}

TEST(Prufer, DecodeAndErrors) {
  const int seq[] = {3, 3, 3};
  EXPECT_EQ(prufer_decode(5, seq), (SignedGraph(5, {{0, 3}, {1, 3}, {2, 3}, {3, 4}})));
  const int short_seq[] = {0};
  EXPECT_THROW(prufer_decode(5, short_seq), InvalidArgument);
  const int bad[] = {5, 0, 0};
  EXPECT_THROW(prufer_decode(5, bad), InvalidArgument);
}

TEST(LabeledUnicyclic, MatchesEdgeSubsetFilter) {
  for (int n = 3; n <= 7; ++n) {
    std::set<std::vector<SignedEdge>> seen;
    std::uint64_t visits = 0;
    enumerate_unicyclic(n, false, [&](const SignedGraph& g) {
      EXPECT_TRUE(g.is_unicyclic());
      EXPECT_TRUE(g.is_all_positive());
      seen.emplace(g.edges().begin(), g.edges().end());
      ++visits;
    });
    EXPECT_EQ(visits, seen.size()) << "duplicates at n=" << n;
    EXPECT_EQ(visits, count_by_edge_subsets(n)) << n;
  }
}

// Produced by the two enumerators above and frozen here.
TEST(LabeledUnicyclic, FrozenCounts) {
  const std::map<int, std::uint64_t> expected{{3, 1}, {4, 15}, {5, 222}, {6, 3660}, {7, 68295}, {8, 1436568}};
  for (auto [n, want] : expected) {
    std::uint64_t count = 0;
    enumerate_unicyclic(n, false, [&](const SignedGraph&) { ++count; });
    EXPECT_EQ(count, want) << n;
  }
}

TEST(LabeledUnicyclic, RangesPartitionTheSweep) {
  std::uint64_t whole = 0;
  enumerate_unicyclic(6, false, [&](const SignedGraph&) { ++whole; });
  std::uint64_t parts = 0;
  const auto trees = labeled_tree_count(6);
  for (std::uint64_t b = 0; b < trees; b += 97) {
    enumerate_labeled_unicyclic_range(6, b, b + 97, [&](const SignedGraph&) { ++parts; });
  }
  EXPECT_EQ(parts, whole);
  EXPECT_THROW(enumerate_unicyclic(10, false, [](const SignedGraph&) {}), InvalidArgument);
  EXPECT_THROW(enumerate_unicyclic(2, true, [](const SignedGraph&) {}), InvalidArgument);
  EXPECT_THROW(enumerate_unicyclic(11, true, [](const SignedGraph&) {}), InvalidArgument);
}

TEST(IsoClasses, SmallOrders) {
  EXPECT_EQ(unicyclic_classes(3).size(), 1u);
  EXPECT_EQ(unicyclic_classes(4).size(), 2u);
}

// Classes at n <= 7 equal the number of distinct labeled graphs up to
// explicit isomorphism search.
TEST(IsoClasses, AgreeWithBruteForceGrouping) {
  for (int n = 3; n <= 6; ++n) {
    std::vector<SignedGraph> reps;
    enumerate_unicyclic(n, false, [&](const SignedGraph& g) {
      for (const auto& r : reps) {
        if (testing::isomorphic_bruteforce(g, r, true)) return;
      }
      reps.push_back(g);
    });
    EXPECT_EQ(unicyclic_classes(n).size(), reps.size()) << n;
  }
}

TEST(IsoClasses, FrozenCounts) {
  const std::map<int, std::size_t> expected{{5, 5}, {6, 13}, {7, 33}, {8, 89}, {9, 240}, {10, 657}};
  for (auto [n, want] : expected) EXPECT_EQ(unicyclic_classes(n).size(), want) << n;
}

TEST(CanonicalForm, RelabelingsAgree) {
  std::mt19937_64 rng(81);
  for (int i = 0; i < 300; ++i) {
    const auto g = random_graph(1 + i % 10, 0.35, rng);
    const auto p = permute(g, testing::random_permutation(g.order(), rng));
    EXPECT_EQ(canonical_form(g, false), canonical_form(p, false));
    EXPECT_EQ(canonical_form(g, true), canonical_form(p, true));
  }
  EXPECT_NE(canonical_form(cycle_graph(4), true), canonical_form(path_graph(4), true));
  EXPECT_NE(canonical_form(cycle_graph(4, true), false), canonical_form(cycle_graph(4, false), false));
  EXPECT_EQ(canonical_form(cycle_graph(4, true), true), canonical_form(cycle_graph(4, false), true));
  EXPECT_THROW(canonical_form(SignedGraph(11, {}), true), BoundError);
}

TEST(CanonicalForm, AgreesWithIsomorphismSearchOnRandomPairs) {
  std::mt19937_64 rng(82);
  int equal = 0;
  for (int i = 0; i < 1000; ++i) {
    const int n = 4 + i % 4;
    const auto a = random_graph(n, 0.4, rng);
    const auto b = i % 2 ? permute(a, testing::random_permutation(n, rng)) : random_graph(n, 0.4, rng);
    for (bool ignore : {true, false}) {
      const bool same = canonical_form(a, ignore) == canonical_form(b, ignore);
      EXPECT_EQ(same, testing::isomorphic_bruteforce(a, b, ignore));
      equal += same;
    }
  }
  EXPECT_GT(equal, 1000);
}

// All pairs within each bucket of labeled graphs on up to 5 vertices.
TEST(CanonicalForm, EquivalenceMatchesSearchOnAllSmallUnicyclic) {
  for (int n = 4; n <= 5; ++n) {
    std::vector<SignedGraph> all;
    enumerate_unicyclic(n, false, [&](const SignedGraph& g) { all.push_back(g); });
    std::vector<std::string> keys;
    for (const auto& g : all) keys.push_back(canonical_form(g, true));
    for (std::size_t i = 0; i < all.size(); ++i) {
      for (std::size_t j = i + 1; j < all.size(); ++j) {
        ASSERT_EQ(keys[i] == keys[j], testing::isomorphic_bruteforce(all[i], all[j], true));
      }
    }
  }
}

TEST(SignedVariants, TwoInequivalentClasses) {
  const auto v = signed_variants(cycle_graph(4));
  EXPECT_EQ(v.balanced, cycle_graph(4, true));
  EXPECT_EQ(v.unbalanced, cycle_graph(4, false));
  EXPECT_FALSE(switching_equivalent(v.balanced, v.unbalanced));
  std::mt19937_64 rng(83);
  for (int i = 0; i < 100; ++i) {
    const auto g = random_unicyclic(3 + i % 8, rng);
    const auto w = signed_variants(g);
    EXPECT_TRUE(is_balanced(w.balanced).balanced);
    EXPECT_FALSE(is_balanced(w.unbalanced).balanced);
    EXPECT_TRUE(switching_equivalent(g, is_balanced(g).balanced ? w.balanced : w.unbalanced));
    int differ = 0;
    for (std::size_t k = 0; k < w.balanced.edges().size(); ++k) differ += w.balanced.edges()[k] != w.unbalanced.edges()[k];
    EXPECT_EQ(differ, 1);
  }
  EXPECT_THROW(signed_variants(path_graph(4)), ShapeError);
}

}  // namespace
}  // namespace signull
