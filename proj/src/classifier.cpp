#include "signull/classifier.hpp"

#include <algorithm>
#include <array>
#include <vector>

#include "signull/error.hpp"
#include "signull/nullity_engine.hpp"

namespace signull {
namespace {

constexpr std::array<std::pair<FamilyTag, std::string_view>, 10> kFamilyNames{{
    {FamilyTag::kBalancedC4, "BalancedC4"},
    {FamilyTag::kC3AnySign, "C3AnySign"},
    {FamilyTag::kUnbalancedC4, "UnbalancedC4"},
    {FamilyTag::kUnbalancedC6, "UnbalancedC6"},
    {FamilyTag::kU1, "U1"},
    {FamilyTag::kU2, "U2"},
    {FamilyTag::kBalancedU3, "BalancedU3"},
    {FamilyTag::kC5AnySign, "C5AnySign"},
    {FamilyTag::kU4, "U4"},
    {FamilyTag::kOther, "Other"},
}};

// Pendant tree is a star centred at its root (K2 included).
bool centred_star(const PendantTree& t) { return t.tree.degree(t.root_index) == t.tree.order() - 1; }

// Pendant tree is a star K_{1,r+1}, r >= 1, with the root as one of its leaves.
bool star_hanging_by_leaf(const PendantTree& t) {
  const int k = t.tree.order();
  if (k < 3 || t.tree.degree(t.root_index) != 1) return false;
  const Vertex centre = t.tree.neighbors(t.root_index)[0].vertex;
  return t.tree.degree(centre) == k - 1;
}

void add_leaves(std::vector<SignedEdge>& edges, int& next, Vertex at, int count) {
  for (int i = 0; i < count; ++i) edges.push_back({at, next++, Sign::kPositive});
}

}  // namespace

std::string_view family_name(FamilyTag tag) {
  for (const auto& [t, name] : kFamilyNames) {
    if (t == tag) return name;
  }
  return "Other";
}

std::optional<FamilyTag> family_from_name(std::string_view name) {
  for (const auto& [t, n] : kFamilyNames) {
    if (n == name) return t;
  }
  return std::nullopt;
}

std::string_view class_label(NullityClass c) {
  switch (c) {
    case NullityClass::kNMinus2: return "n-2";
    case NullityClass::kNMinus3: return "n-3";
    case NullityClass::kNMinus4: return "n-4";
    case NullityClass::kNMinus5: return "n-5";
    case NullityClass::kOther: break;
  }
  return "other";
}

NullityClass nullity_class(int order, int nullity) {
  switch (order - nullity) {
    case 2: return NullityClass::kNMinus2;
    case 3: return NullityClass::kNMinus3;
    case 4: return NullityClass::kNMinus4;
    case 5: return NullityClass::kNMinus5;
    default: return NullityClass::kOther;
  }
}

NullityClass expected_class(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::kBalancedC4: return NullityClass::kNMinus2;
    case FamilyTag::kC3AnySign: return NullityClass::kNMinus3;
    case FamilyTag::kUnbalancedC4:
    case FamilyTag::kUnbalancedC6:
    case FamilyTag::kU1:
    case FamilyTag::kU2:
    case FamilyTag::kBalancedU3: return NullityClass::kNMinus4;
    case FamilyTag::kC5AnySign:
    case FamilyTag::kU4: return NullityClass::kNMinus5;
    case FamilyTag::kOther: break;
  }
  return NullityClass::kOther;
}

Family recognize_family(const SignedGraph& g) {
  if (!g.is_unicyclic()) throw ShapeError("recognize_family requires a connected unicyclic graph");
  const auto cycle = *find_cycle(g);
  const int l = cycle.length();
  const bool balanced = cycle.sign == Sign::kPositive;

  std::vector<PendantTree> branches;
  std::vector<int> positions;  // index on the cycle of each nontrivial branch
  for (int i = 0; i < l; ++i) {
    auto t = pendant_tree_at(g, cycle, cycle.vertices[i]);
    if (t.tree.order() > 1) {
      branches.push_back(std::move(t));
      positions.push_back(i);
    }
  }

  if (branches.empty()) {
    if (l == 3) return Family{FamilyTag::kC3AnySign, {}, {}};
    if (l == 4) return Family{balanced ? FamilyTag::kBalancedC4 : FamilyTag::kUnbalancedC4, {}, {}};
    if (l == 5) return Family{FamilyTag::kC5AnySign, {}, {}};
    if (l == 6 && !balanced) return Family{FamilyTag::kUnbalancedC6, {}, {}};
    return {};
  }

  if ((l == 3 || l == 4) && branches.size() <= 2 &&
      std::all_of(branches.begin(), branches.end(), centred_star)) {
    // On the square the two loaded vertices must be opposite.
    const bool opposite = branches.size() == 1 || (positions[1] - positions[0]) % 4 == 2;
    if (l == 3 || opposite) {
      int r = branches[0].tree.order() - 1;
      int s = branches.size() == 2 ? branches[1].tree.order() - 1 : 0;
      if (r < s) std::swap(r, s);
      return {l == 3 ? FamilyTag::kU1 : FamilyTag::kU2, r, s};
    }
  }

  if (branches.size() == 1 && star_hanging_by_leaf(branches[0])) {
    const int r = branches[0].tree.order() - 2;
    if (l == 3) return {FamilyTag::kU4, r, std::nullopt};
    if (l == 4 && balanced) return {FamilyTag::kBalancedU3, r, std::nullopt};
  }
  return {};
}

ClassificationResult classify_extremal(const SignedGraph& g) {
  if (!g.is_unicyclic()) throw ShapeError("classify_extremal requires a connected unicyclic graph");
  ClassificationResult out;
  const auto cycle = *find_cycle(g);
  out.order = g.order();
  out.cycle_length = cycle.length();
  out.balanced = cycle.sign == Sign::kPositive;
  out.nullity = nullity_structural(g).nullity;
  out.label = nullity_class(out.order, out.nullity);
  out.family = recognize_family(g);
  if (expected_class(out.family.tag) != out.label) {
    throw InternalInconsistency("nullity class " + std::string(class_label(out.label)) +
                                " disagrees with recognized family " +
                                std::string(family_name(out.family.tag)));
  }
  return out;
}

SignedGraph build_family(const Family& family, bool balanced) {
  const int r = family.r.value_or(0);
  const int s = family.s.value_or(0);
  std::vector<SignedEdge> edges;
  auto ring = [&](int l) {
    for (int i = 0; i + 1 < l; ++i) edges.push_back({i, i + 1, Sign::kPositive});
    edges.push_back({0, l - 1, Sign::kPositive});
    return l;
  };
  int next = 0;
  switch (family.tag) {
    case FamilyTag::kBalancedC4: next = ring(4); balanced = true; break;
    case FamilyTag::kUnbalancedC4: next = ring(4); balanced = false; break;
    case FamilyTag::kUnbalancedC6: next = ring(6); balanced = false; break;
    case FamilyTag::kC3AnySign: next = ring(3); break;
    case FamilyTag::kC5AnySign: next = ring(5); break;
    case FamilyTag::kU1:
    case FamilyTag::kU2: {
      if (r < s || s < 0 || r + s < 1) throw InvalidArgument("U1/U2 need r >= s >= 0 and r + s >= 1");
      const bool triangle = family.tag == FamilyTag::kU1;
      next = ring(triangle ? 3 : 4);
      add_leaves(edges, next, 0, r);
      add_leaves(edges, next, triangle ? 1 : 2, s);
      break;
    }
    case FamilyTag::kBalancedU3:
    case FamilyTag::kU4: {
      if (r < 1) throw InvalidArgument("U3/U4 need r >= 1");
      next = ring(family.tag == FamilyTag::kBalancedU3 ? 4 : 3);
      if (family.tag == FamilyTag::kBalancedU3) balanced = true;
      const Vertex centre = next++;
      edges.push_back({0, centre, Sign::kPositive});
      add_leaves(edges, next, centre, r);
      break;
    }
    case FamilyTag::kOther: throw InvalidArgument("no canonical member for Other");
  }
  if (!balanced) edges[0].sign = Sign::kNegative;  // edges[0] is (0,1)
  return SignedGraph(next, std::move(edges));
}

}  // namespace signull
