#include "signull/matching.hpp"

#include <algorithm>
#include <string>

#include "signull/error.hpp"

namespace signull {
namespace {

void require_forest(const SignedGraph& g, const char* what) {
  if (!g.is_acyclic()) throw ShapeError(std::string(what) + " requires an acyclic graph");
}

// Leaf-pruning greedy over a DFS post-order; same result as repeatedly
// matching a leaf with its neighbour and deleting both.
Matching greedy_forest_matching(const SignedGraph& g, Vertex skipped) {
  const int n = g.order();
  Matching m;
  m.covered.assign(n, false);
  std::vector<Vertex> parent(n, -1);
  std::vector<Sign> parent_sign(n, Sign::kPositive);
  std::vector<bool> seen(n, false);
  std::vector<Vertex> order;
  order.reserve(n);
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root] || root == skipped) continue;
    seen[root] = true;
    stack.push_back(root);
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      order.push_back(x);
      for (const auto& nb : g.neighbors(x)) {
        if (!seen[nb.vertex] && nb.vertex != skipped) {
          seen[nb.vertex] = true;
          parent[nb.vertex] = x;
          parent_sign[nb.vertex] = nb.sign;
          stack.push_back(nb.vertex);
        }
      }
    }
  }
  // Reverse preorder visits children before parents.
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Vertex x = *it;
    Vertex p = parent[x];
    if (p >= 0 && !m.covered[x] && !m.covered[p]) {
      m.covered[x] = m.covered[p] = true;
      m.edges.push_back({std::min(x, p), std::max(x, p), parent_sign[x]});
    }
  }
  std::sort(m.edges.begin(), m.edges.end());
  return m;
}

}  // namespace

Matching max_matching_forest(const SignedGraph& forest) {
  require_forest(forest, "max_matching_forest");
  return greedy_forest_matching(forest, -1);
}

int matching_number_forest(const SignedGraph& forest) { return max_matching_forest(forest).size(); }

int matching_number_bruteforce(const SignedGraph& g) {
  const int n = g.order();
  if (n > kBruteForceMatchingBound) {
    throw BoundError("brute-force matching limited to " + std::to_string(kBruteForceMatchingBound) +
                     " vertices, got " + std::to_string(n));
  }
  if (n == 0) return 0;
  std::vector<unsigned> nbr_mask(n, 0);
  for (const auto& e : g.edges()) {
    nbr_mask[e.u] |= 1u << e.v;
    nbr_mask[e.v] |= 1u << e.u;
  }
  // best[S] = mu of the subgraph induced by S, built over increasing masks:
  // the lowest vertex of S is either left free or matched to a neighbour in S.
  const unsigned full = (1u << n) - 1;
  std::vector<signed char> best(static_cast<std::size_t>(full) + 1, 0);
  for (unsigned s = 1; s <= full; ++s) {
    const int low = __builtin_ctz(s);
    const unsigned rest = s & (s - 1);
    int value = best[rest];
    unsigned candidates = nbr_mask[low] & rest;
    while (candidates) {
      const int w = __builtin_ctz(candidates);
      candidates &= candidates - 1;
      value = std::max(value, 1 + best[rest & ~(1u << w)]);
    }
    best[s] = static_cast<signed char>(value);
  }
  return best[full];
}

bool is_matched_in_tree(const SignedGraph& tree, Vertex v) {
  if (!tree.is_tree()) throw ShapeError("is_matched_in_tree requires a tree");
  if (v < 0 || v >= tree.order()) throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
  if (tree.order() == 1) return false;
  const int with_v = greedy_forest_matching(tree, -1).size();
  const int without_v = greedy_forest_matching(tree, v).size();
  return without_v == with_v - 1;
}

int tree_nullity(const SignedGraph& forest) {
  return forest.order() - 2 * matching_number_forest(forest);
}

}  // namespace signull
