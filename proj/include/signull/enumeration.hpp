#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "signull/signed_graph.hpp"

namespace signull {

inline constexpr int kMaxTreeOrder = 12;
inline constexpr int kMaxLabeledUnicyclicOrder = 9;
inline constexpr int kMaxUnicyclicClassOrder = 10;
inline constexpr int kMaxCanonicalOrder = 10;

using GraphVisitor = std::function<void(const SignedGraph&)>;

// n^(n-2) for n >= 2, 1 for n = 1.
std::uint64_t labeled_tree_count(int n);

// Tree on n vertices from a Pruefer sequence of length n - 2.
SignedGraph prufer_decode(int n, std::span<const int> sequence);

// The index-th labeled tree, reading the index as n - 2 base-n digits.
SignedGraph tree_from_index(int n, std::uint64_t index);

// Every labeled tree on n vertices exactly once, all edges positive.
// Throws InvalidArgument unless 1 <= n <= kMaxTreeOrder.
void enumerate_trees(int n, const GraphVisitor& visit);

// Labeled connected unicyclic graphs generated from trees with tree index
// in [tree_begin, tree_end): a tree plus a non-tree edge is emitted only
// when that edge is the largest edge of the cycle it closes, so each
// labeled graph appears exactly once over the full index range.
void enumerate_labeled_unicyclic_range(int n, std::uint64_t tree_begin, std::uint64_t tree_end,
                                       const GraphVisitor& visit);

// All connected unicyclic graphs on n vertices, all edges positive. With
// up_to_iso one representative per isomorphism class (3 <= n <= 10),
// otherwise every labeled graph (3 <= n <= 9).
void enumerate_unicyclic(int n, bool up_to_iso, const GraphVisitor& visit);

// One representative per isomorphism class, sorted by canonical form.
// Built by hanging a pendant vertex on every class of order n - 1, adding
// C_n, and deduplicating.
std::vector<SignedGraph> unicyclic_classes(int n);

// Lexicographically least adjacency encoding over the leaves of an
// individualization-refinement search. Equal strings iff isomorphic (as
// signed graphs, or as underlying graphs when ignore_signs). Throws
// BoundError above kMaxCanonicalOrder vertices.
std::string canonical_form(const SignedGraph& g, bool ignore_signs);

// Relabel: vertex v of g becomes permutation[v].
SignedGraph permute(const SignedGraph& g, std::span<const Vertex> permutation);

struct SignedVariants {
  SignedGraph balanced;    // all positive
  SignedGraph unbalanced;  // only the smallest cycle edge negative
};

SignedVariants signed_variants(const SignedGraph& g);

}  // namespace signull
