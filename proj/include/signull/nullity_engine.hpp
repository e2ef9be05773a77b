#pragma once

#include <optional>
#include <string>
#include <vector>

#include "signull/certificate.hpp"
#include "signull/signed_graph.hpp"

namespace signull {

// Nullity of a signed cycle: 2 when l = 0 (mod 4) balanced or l = 2 (mod 4)
// unbalanced, else 0. Throws InvalidArgument for l < 3.
int cycle_nullity(int length, bool balanced);

using CycleNullityTable = int (*)(int length, bool balanced);

enum class ReductionStrategy {
  // Per component: tree formula for forests, Type I/II split for unicyclic.
  kDecomposition,
  // Strip pendant pairs from the whole graph first, then decompose.
  kPendantFirst,
};

struct EngineOptions {
  ReductionStrategy strategy = ReductionStrategy::kDecomposition;
  // Replaceable so the harness can run mutation tests against a wrong table.
  CycleNullityTable cycle_table = &cycle_nullity;
};

struct PendantReduction {
  SignedGraph reduced;
  std::vector<Vertex> original_ids;  // reduced id -> input id
  std::vector<step::PendantDelete> steps;  // input ids
};

// Repeatedly deletes the smallest-id pendant vertex together with its
// neighbour until no pendant vertex remains.
PendantReduction pendant_reduce(const SignedGraph& g);

enum class UnicyclicType { kTypeI, kTypeII };

struct TypeClassification {
  UnicyclicType type = UnicyclicType::kTypeII;
  std::optional<Vertex> witness;  // smallest cycle vertex matched in its pendant tree
  CycleDescriptor cycle;
};

// Throws ShapeError unless g is connected unicyclic.
TypeClassification classify_type(const SignedGraph& g);

struct NullityResult {
  int nullity = 0;
  NullityCertificate certificate;
};

// Type I: nullity of the witness's pendant tree plus that of the rest.
// Type II: nullity of G - C plus the cycle table value.
NullityResult nullity_unicyclic(const SignedGraph& g, const EngineOptions& options = {});

// Every component must be acyclic or unicyclic; throws ShapeError otherwise.
NullityResult nullity_structural(const SignedGraph& g, const EngineOptions& options = {});

struct CertificateVerdict {
  bool valid = false;
  std::string reason;  // first failed condition when invalid
  explicit operator bool() const { return valid; }
};

// Replays the certificate against g, re-deriving every side condition
// (degrees, matched witnesses, cycle membership and sign, matching numbers)
// and all arithmetic. Never throws on a bad certificate.
CertificateVerdict verify_certificate(const SignedGraph& g, const NullityCertificate& cert);

}  // namespace signull
