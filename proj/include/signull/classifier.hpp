#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "signull/signed_graph.hpp"

namespace signull {

// The extremal unicyclic shapes. U1(r,s): triangle with r and s pendant
// edges at two of its vertices. U2(r,s): square with r and s pendant edges
// at two opposite vertices. U3(r) / U4(r): square / triangle with one vertex
// identified with a pendant vertex of the star K_{1,r+1}.
enum class FamilyTag {
  kBalancedC4,
  kC3AnySign,
  kUnbalancedC4,
  kUnbalancedC6,
  kU1,
  kU2,
  kBalancedU3,
  kC5AnySign,
  kU4,
  kOther,
};

struct Family {
  FamilyTag tag = FamilyTag::kOther;
  // U1/U2: r >= s >= 0, r + s >= 1. U3/U4: r >= 1, s unused.
  std::optional<int> r;
  std::optional<int> s;

  friend bool operator==(const Family&, const Family&) = default;
};

std::string_view family_name(FamilyTag tag);
std::optional<FamilyTag> family_from_name(std::string_view name);

enum class NullityClass { kNMinus2, kNMinus3, kNMinus4, kNMinus5, kOther };

std::string_view class_label(NullityClass c);

// n - eta mapped onto the labels n-2 .. n-5, else kOther.
NullityClass nullity_class(int order, int nullity);

// The nullity class every member of a family must have; kOther for kOther.
NullityClass expected_class(FamilyTag tag);

// Structural recognition: cycle length, pendant tree shapes and, where a
// family depends on it, the balance of the cycle. Throws ShapeError unless
// g is connected unicyclic.
Family recognize_family(const SignedGraph& g);

struct ClassificationResult {
  int order = 0;
  int cycle_length = 0;
  bool balanced = true;
  int nullity = 0;
  NullityClass label = NullityClass::kOther;
  Family family;
};

// Nullity via the structural engine, class label, and a consistency check
// between label and family in both directions; throws
// InternalInconsistency if they disagree.
ClassificationResult classify_extremal(const SignedGraph& g);

// Canonical member of a family: the cycle on 0..l-1 first, attachments
// after. `balanced` selects the switching class; ignored by the tags that
// fix it. Throws InvalidArgument for kOther or bad parameters.
SignedGraph build_family(const Family& family, bool balanced = true);

}  // namespace signull
