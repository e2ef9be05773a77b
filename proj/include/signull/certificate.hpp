#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "signull/signed_graph.hpp"

namespace signull {

// Steps of a nullity derivation. Each step acts on the part on top of a
// stack of vertex sets (original ids), which starts as {V(G)}.
namespace step {

// Replace the top part by its connected components, smallest vertex first.
struct Components {
  int count = 0;
  friend bool operator==(const Components&, const Components&) = default;
};

// Remove a degree-one vertex and its neighbour; nullity is unchanged.
struct PendantDelete {
  Vertex pendant = 0;
  Vertex neighbor = 0;
  friend bool operator==(const PendantDelete&, const PendantDelete&) = default;
};

// Top part is unicyclic and `witness` is a cycle vertex matched in its
// pendant tree: split into the pendant tree (expected `tree_nullity`) and
// the remainder (expected `rest_nullity`), the tree on top.
struct TypeISplit {
  Vertex witness = 0;
  int tree_nullity = 0;
  int rest_nullity = 0;
  friend bool operator==(const TypeISplit&, const TypeISplit&) = default;
};

// Top part is unicyclic and no cycle vertex is matched in its pendant
// tree: split into the cycle and G - C, the forest on top with expected
// nullity sum(branch_nullity). branch_nullity[i] is the nullity of the
// pendant tree at cycle[i] with cycle[i] removed.
struct TypeIIDecompose {
  std::vector<Vertex> cycle;
  std::vector<int> branch_nullity;
  friend bool operator==(const TypeIIDecompose&, const TypeIIDecompose&) = default;
};

// Top part is a bare cycle; closes it.
struct CycleBase {
  int length = 0;
  bool balanced = true;
  int contribution = 0;
  friend bool operator==(const CycleBase&, const CycleBase&) = default;
};

// Top part is acyclic; closes it with order - 2 mu.
struct ForestBase {
  int order = 0;
  int matching_number = 0;
  int contribution = 0;
  friend bool operator==(const ForestBase&, const ForestBase&) = default;
};

}  // namespace step

using CertificateStep = std::variant<step::Components, step::PendantDelete, step::TypeISplit,
                                     step::TypeIIDecompose, step::CycleBase, step::ForestBase>;

struct NullityCertificate {
  // Binding to the input graph.
  int order = 0;
  int edge_count = 0;
  std::uint64_t digest = 0;

  std::vector<CertificateStep> steps;
  int claimed_nullity = 0;

  friend bool operator==(const NullityCertificate&, const NullityCertificate&) = default;
};

// FNV-1a over the order and the sorted signed edge list.
std::uint64_t graph_digest(const SignedGraph& g);

// One step per line:
//   certificate v1
//   graph <n> <m> <digest hex>
//   components <k>
//   pendant <u> <w>
//   type1 <v> <tree nullity> <rest nullity>
//   type2 <l> <c_0> ... <c_{l-1}> branches <e_0> ... <e_{l-1}>
//   cycle <l> balanced|unbalanced <contribution>
//   forest <order> <mu> <contribution>
//   claim <nullity>
std::string to_text(const NullityCertificate& cert);
std::vector<std::string> to_lines(const NullityCertificate& cert);

// Inverse of to_text. Throws InvalidArgument with a line number on
// malformed input.
NullityCertificate parse_certificate(std::string_view text);

}  // namespace signull
