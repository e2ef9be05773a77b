#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace signull {

using Vertex = int;

enum class Sign : std::int8_t { kNegative = -1, kPositive = 1 };

constexpr Sign operator*(Sign a, Sign b) {
  return static_cast<std::int8_t>(a) == static_cast<std::int8_t>(b) ? Sign::kPositive
                                                                      : Sign::kNegative;
}
constexpr Sign operator-(Sign s) { return s == Sign::kPositive ? Sign::kNegative : Sign::kPositive; }
constexpr int to_int(Sign s) { return static_cast<int>(s); }

// Accepts exactly +1 and -1.
Sign sign_from_int(int value);

struct SignedEdge {
  Vertex u = 0;
  Vertex v = 0;
  Sign sign = Sign::kPositive;

  friend bool operator==(const SignedEdge&, const SignedEdge&) = default;
  // Orders by endpoints first; the sign only breaks ties.
  friend auto operator<=>(const SignedEdge& a, const SignedEdge& b) {
    if (auto c = a.u <=> b.u; c != 0) return c;
    if (auto c = a.v <=> b.v; c != 0) return c;
    return to_int(a.sign) <=> to_int(b.sign);
  }
};

struct Neighbor {
  Vertex vertex;
  Sign sign;
};

// A simple graph on vertices 0..n-1 with a sign on every edge. Immutable once
// built; edges are stored sorted with u < v.
class SignedGraph {
 public:
  SignedGraph() = default;

  // Validates and normalizes. Throws InvalidArgument on loops, duplicate
  // pairs (regardless of sign) and out-of-range endpoints.
  SignedGraph(int order, std::vector<SignedEdge> edges);

  int order() const { return order_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  std::span<const SignedEdge> edges() const { return edges_; }

  std::span<const Neighbor> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  int degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  std::optional<Sign> edge_sign(Vertex a, Vertex b) const;
  bool has_edge(Vertex a, Vertex b) const { return edge_sign(a, b).has_value(); }

  // Component id per vertex, numbered in order of smallest member.
  std::vector<int> component_labels() const;
  int component_count() const;
  bool is_connected() const { return component_count() <= 1; }
  // m - n + c
  int cycle_rank() const { return edge_count() - order_ + component_count(); }
  bool is_acyclic() const { return cycle_rank() == 0; }
  bool is_tree() const { return order_ >= 1 && is_connected() && edge_count() == order_ - 1; }
  bool is_unicyclic() const { return order_ >= 3 && is_connected() && edge_count() == order_; }

  bool is_all_positive() const;

  // Same order and the same edge pairs, signs ignored.
  bool same_underlying(const SignedGraph& other) const;

  friend bool operator==(const SignedGraph& a, const SignedGraph& b) {
    return a.order_ == b.order_ && a.edges_ == b.edges_;
  }

 private:
  int order_ = 0;
  std::vector<SignedEdge> edges_;
  std::vector<int> offsets_{0};
  std::vector<Neighbor> adjacency_;
};

// Checked constructor; edges may be given in either orientation.
SignedGraph new_graph(int order, std::vector<SignedEdge> edges);

// Induced subgraph plus the map from new ids back to ids of the source graph.
struct InducedSubgraph {
  SignedGraph graph;
  std::vector<Vertex> original_ids;
};

InducedSubgraph induced_subgraph(const SignedGraph& g, std::span<const Vertex> kept);
InducedSubgraph delete_vertices(const SignedGraph& g, std::span<const Vertex> removed);

// Vertices of `second` are shifted by first.order().
SignedGraph disjoint_union(const SignedGraph& first, const SignedGraph& second);

// T(u) joined to `partner` by one signed edge from u to each target. Tree
// vertices keep their ids; partner vertices are shifted by tree.order().
SignedGraph k_joining(const SignedGraph& tree, Vertex u, const SignedGraph& partner,
                      std::span<const Vertex> targets, std::span<const Sign> signs);

struct CycleDescriptor {
  // Cyclic order starting at the smallest vertex, heading to its smaller
  // cycle neighbour. edges[i] joins vertices[i] and vertices[(i+1) % l].
  std::vector<Vertex> vertices;
  std::vector<SignedEdge> edges;
  Sign sign = Sign::kPositive;

  int length() const { return static_cast<int>(vertices.size()); }
  bool contains(Vertex v) const;
};

// Requires a connected graph. Empty for trees; throws ShapeError if the graph
// is disconnected or has cycle rank >= 2.
std::optional<CycleDescriptor> find_cycle(const SignedGraph& g);

// Degree-one vertices in ascending order.
std::vector<Vertex> pendant_vertices(const SignedGraph& g);

// The maximal connected induced subtree containing cycle vertex `root` and
// no other cycle vertex.
struct PendantTree {
  Vertex root = 0;
  std::vector<Vertex> vertices;  // ascending ids in the unicyclic graph
  SignedGraph tree;              // relabeled by position in `vertices`
  Vertex root_index = 0;         // position of root in `vertices`
};

PendantTree pendant_tree_at(const SignedGraph& g, Vertex root);
// Same, with the cycle already known.
PendantTree pendant_tree_at(const SignedGraph& g, const CycleDescriptor& cycle, Vertex root);

// Small constructions used throughout tests and the harness.
SignedGraph path_graph(int order, Sign sign = Sign::kPositive);
SignedGraph star_graph(int leaves, Sign sign = Sign::kPositive);
// C_l on 0..l-1; when unbalanced, edge (0,1) is the single negative edge.
SignedGraph cycle_graph(int length, bool balanced = true);

}  // namespace signull
