#include "signull/switching.hpp"

#include <algorithm>
#include <string>

#include "signull/error.hpp"

namespace signull {
namespace {

// Roots each component at its smallest vertex with theta = +, so that tree
// edges become positive. Returns false if some non-tree edge disagrees.
// Edges matching `skip` are treated as absent.
bool propagate(const SignedGraph& g, std::vector<Sign>& theta, const SignedEdge* skip) {
  const int n = g.order();
  theta.assign(n, Sign::kPositive);
  std::vector<bool> seen(n, false);
  std::vector<Vertex> stack;
  auto skipped = [&](Vertex a, Vertex b) {
    return skip && std::min(a, b) == skip->u && std::max(a, b) == skip->v;
  };
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    stack.push_back(root);
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (const auto& nb : g.neighbors(x)) {
        if (seen[nb.vertex] || skipped(x, nb.vertex)) continue;
        seen[nb.vertex] = true;
        theta[nb.vertex] = theta[x] * nb.sign;
        stack.push_back(nb.vertex);
      }
    }
  }
  for (const auto& e : g.edges()) {
    if (skip && e.u == skip->u && e.v == skip->v) continue;
    if (theta[e.u] * e.sign * theta[e.v] != Sign::kPositive) return false;
  }
  return true;
}

}  // namespace

bool SwitchingFunction::is_identity() const {
  return std::all_of(theta.begin(), theta.end(), [](Sign s) { return s == Sign::kPositive; });
}

SignedGraph apply_switching(const SignedGraph& g, const SwitchingFunction& theta) {
  if (static_cast<int>(theta.theta.size()) != g.order()) {
    throw InvalidArgument("switching function has " + std::to_string(theta.theta.size()) +
                          " values for " + std::to_string(g.order()) + " vertices");
  }
  std::vector<SignedEdge> edges(g.edges().begin(), g.edges().end());
  for (auto& e : edges) e.sign = theta.theta[e.u] * e.sign * theta.theta[e.v];
  return SignedGraph(g.order(), std::move(edges));
}

BalanceResult is_balanced(const SignedGraph& g) {
  std::vector<Sign> theta;
  if (!propagate(g, theta, nullptr)) return {false, std::nullopt};
  return {true, SwitchingFunction{std::move(theta)}};
}

Sign cycle_sign(const SignedGraph& g, const CycleDescriptor& cycle) {
  const int l = cycle.length();
  if (l < 3) throw InvalidArgument("a cycle has at least 3 vertices");
  std::vector<Vertex> sorted = cycle.vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidArgument("cycle repeats a vertex");
  }
  Sign product = Sign::kPositive;
  for (int i = 0; i < l; ++i) {
    auto s = g.edge_sign(cycle.vertices[i], cycle.vertices[(i + 1) % l]);
    if (!s) throw InvalidArgument("consecutive cycle vertices are not adjacent");
    product = product * *s;
  }
  return product;
}

NormalizedUnicyclic normalize_unicyclic(const SignedGraph& g) {
  if (!g.is_unicyclic()) throw ShapeError("normalize_unicyclic requires a connected unicyclic graph");
  auto cycle = *find_cycle(g);
  const bool balanced = cycle.sign == Sign::kPositive;
  std::vector<Sign> theta;
  if (balanced) {
    propagate(g, theta, nullptr);
  } else {
    // G minus one cycle edge is a tree; making it positive leaves the removed
    // edge carrying the (negative) cycle sign.
    const SignedEdge smallest = *std::min_element(cycle.edges.begin(), cycle.edges.end());
    propagate(g, theta, &smallest);
  }
  SwitchingFunction sw{std::move(theta)};
  return {apply_switching(g, sw), std::move(sw), balanced};
}

bool switching_equivalent(const SignedGraph& a, const SignedGraph& b) {
  if (!a.same_underlying(b)) throw InvalidArgument("switching equivalence needs identical underlying graphs");
  std::vector<SignedEdge> ratio(a.edges().begin(), a.edges().end());
  for (std::size_t i = 0; i < ratio.size(); ++i) ratio[i].sign = ratio[i].sign * b.edges()[i].sign;
  return is_balanced(SignedGraph(a.order(), std::move(ratio))).balanced;
}

}  // namespace signull
