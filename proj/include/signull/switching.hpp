#pragma once

#include <optional>
#include <vector>

#include "signull/signed_graph.hpp"

namespace signull {

// theta: V -> {+,-}. Switching multiplies each edge sign by the signs of its
// endpoints.
struct SwitchingFunction {
  std::vector<Sign> theta;

  static SwitchingFunction identity(int order) { return {std::vector<Sign>(order, Sign::kPositive)}; }
  bool is_identity() const;
  friend bool operator==(const SwitchingFunction&, const SwitchingFunction&) = default;
};

// Throws InvalidArgument unless theta covers exactly the vertices of g.
SignedGraph apply_switching(const SignedGraph& g, const SwitchingFunction& theta);

struct BalanceResult {
  bool balanced = false;
  // Present iff balanced; switching by it makes every edge positive.
  std::optional<SwitchingFunction> witness;
};

// Spanning-forest sign propagation plus a consistency check of the
// remaining edges.
BalanceResult is_balanced(const SignedGraph& g);

// Product of the signs of the cycle's edges as they appear in g. Throws
// InvalidArgument if the descriptor is not a cycle of g.
Sign cycle_sign(const SignedGraph& g, const CycleDescriptor& cycle);

struct NormalizedUnicyclic {
  SignedGraph graph;
  SwitchingFunction switching;
  bool balanced = false;
};

// Balanced: the all-positive representative. Unbalanced: the representative
// whose only negative edge is the smallest cycle edge. `switching` maps the
// input onto the result.
NormalizedUnicyclic normalize_unicyclic(const SignedGraph& g);

// Labeled switching equivalence. Throws InvalidArgument if the underlying
// graphs differ.
bool switching_equivalent(const SignedGraph& a, const SignedGraph& b);

}  // namespace signull
