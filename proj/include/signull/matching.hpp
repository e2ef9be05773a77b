#pragma once

#include <vector>

#include "signull/signed_graph.hpp"

namespace signull {

struct Matching {
  std::vector<SignedEdge> edges;
  std::vector<bool> covered;  // per vertex

  int size() const { return static_cast<int>(edges.size()); }
};

// Maximum matching of a forest by leaf pruning: a leaf is always matched to
// its parent when both are free. Throws ShapeError if `forest` has a cycle.
Matching max_matching_forest(const SignedGraph& forest);

// mu(F) for a forest.
int matching_number_forest(const SignedGraph& forest);

inline constexpr int kBruteForceMatchingBound = 16;

// mu(G) for an arbitrary graph by exhaustive search over vertex subsets.
// Throws BoundError above kBruteForceMatchingBound vertices.
int matching_number_bruteforce(const SignedGraph& g);

// True iff every maximum matching of the tree covers v, decided by
// mu(T - v) = mu(T) - 1. A one-vertex tree is mismatched.
bool is_matched_in_tree(const SignedGraph& tree, Vertex v);

// n - 2 mu(T) for an acyclic signed graph.
int tree_nullity(const SignedGraph& forest);

}  // namespace signull
