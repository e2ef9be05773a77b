#include "signull/enumeration.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "signull/error.hpp"

namespace signull {
namespace {

void check_order(int n, int lo, int hi, const char* what) {
  if (n < lo || n > hi) {
    throw InvalidArgument(std::string(what) + ": order " + std::to_string(n) + " outside [" + std::to_string(lo) +
                          "," + std::to_string(hi) + "]");
  }
}

// Tree edges as (child, parent) pairs are rebuilt into parent/depth arrays
// rooted at 0 for cheap path queries.
struct RootedTree {
  std::vector<Vertex> parent;
  std::vector<int> depth;
};

RootedTree root_at_zero(const SignedGraph& tree) {
  const int n = tree.order();
  RootedTree rt{std::vector<Vertex>(n, -1), std::vector<int>(n, 0)};
  std::vector<Vertex> queue{0};
  std::vector<bool> seen(n, false);
  seen[0] = true;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    Vertex x = queue[i];
    for (const auto& nb : tree.neighbors(x)) {
      if (!seen[nb.vertex]) {
        seen[nb.vertex] = true;
        rt.parent[nb.vertex] = x;
        rt.depth[nb.vertex] = rt.depth[x] + 1;
        queue.push_back(nb.vertex);
      }
    }
  }
  return rt;
}

// Largest edge key (min*n + max) on the tree path between a and b.
int max_path_edge(const RootedTree& rt, Vertex a, Vertex b, int n) {
  int best = -1;
  auto step = [&](Vertex& x) {
    const Vertex p = rt.parent[x];
    best = std::max(best, std::min(x, p) * n + std::max(x, p));
    x = p;
  };
  while (rt.depth[a] > rt.depth[b]) step(a);
  while (rt.depth[b] > rt.depth[a]) step(b);
  while (a != b) {
    step(a);
    step(b);
  }
  return best;
}

// Colour refinement: a vertex's new colour is its old colour plus the
// multiset of (neighbour colour, edge code). Old cell order is preserved.
void refine(const std::vector<std::vector<int>>& code, std::vector<int>& colour) {
  const int n = static_cast<int>(colour.size());
  int cells = *std::max_element(colour.begin(), colour.end()) + 1;
  std::vector<std::vector<int>> sig(n);
  while (true) {
    for (int v = 0; v < n; ++v) {
      sig[v].clear();
      sig[v].push_back(colour[v]);
      for (int u = 0; u < n; ++u) {
        if (code[v][u]) sig[v].push_back(colour[u] * 4 + code[v][u]);
      }
      std::sort(sig[v].begin() + 1, sig[v].end());
    }
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return sig[a] < sig[b]; });
    int next = 0;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++next;
      colour[order[i]] = next;
    }
    if (next + 1 == cells) return;
    cells = next + 1;
  }
}

void search(const std::vector<std::vector<int>>& code, std::vector<int> colour, std::string& best) {
  refine(code, colour);
  const int n = static_cast<int>(colour.size());
  std::vector<int> cell_size(n, 0);
  for (int c : colour) ++cell_size[c];
  int target = -1;
  for (int c = 0; c < n; ++c) {
    if (cell_size[c] > 1) {
      target = c;
      break;
    }
  }
  if (target < 0) {
    std::vector<int> at(n);
    for (int v = 0; v < n; ++v) at[colour[v]] = v;
    std::string enc;
    enc.reserve(1 + n * (n - 1) / 2);
    enc.push_back(static_cast<char>(n));
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) enc.push_back(static_cast<char>('0' + code[at[i]][at[j]]));
    }
    if (best.empty() || enc < best) best = std::move(enc);
    return;
  }
  for (int v = 0; v < n; ++v) {
    if (colour[v] != target) continue;
    std::vector<int> next(n);
    for (int x = 0; x < n; ++x) next[x] = 2 * colour[x] + (colour[x] == target && x != v ? 1 : 0);
    // Re-densify.
    std::vector<int> values = next;
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    for (int& c : next) c = static_cast<int>(std::lower_bound(values.begin(), values.end(), c) - values.begin());
    search(code, std::move(next), best);
  }
}

}  // namespace

std::uint64_t labeled_tree_count(int n) {
  if (n < 1) return 0;
  if (n <= 2) return 1;
  std::uint64_t c = 1;
  for (int i = 0; i < n - 2; ++i) c *= static_cast<std::uint64_t>(n);
  return c;
}

SignedGraph prufer_decode(int n, std::span<const int> sequence) {
  if (n < 1) throw InvalidArgument("tree order must be positive");
  if (n == 1) return SignedGraph(1, {});
  if (static_cast<int>(sequence.size()) != n - 2) throw InvalidArgument("Pruefer sequence must have length n - 2");
  std::vector<int> degree(n, 1);
  for (int a : sequence) {
    if (a < 0 || a >= n) throw InvalidArgument("Pruefer entry out of range");
    ++degree[a];
  }
  std::vector<SignedEdge> edges;
  edges.reserve(n - 1);
  for (int a : sequence) {
    int leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.push_back({leaf, a, Sign::kPositive});
    --degree[leaf];
    --degree[a];
  }
  int u = -1;
  for (int v = 0; v < n; ++v) {
    if (degree[v] == 1) {
      if (u < 0) {
        u = v;
      } else {
        edges.push_back({u, v, Sign::kPositive});
        break;
      }
    }
  }
  return SignedGraph(n, std::move(edges));
}

SignedGraph tree_from_index(int n, std::uint64_t index) {
  if (n <= 2) return prufer_decode(n, {});
  std::vector<int> seq(n - 2);
  for (int i = n - 3; i >= 0; --i) {
    seq[i] = static_cast<int>(index % static_cast<std::uint64_t>(n));
    index /= static_cast<std::uint64_t>(n);
  }
  return prufer_decode(n, seq);
}

void enumerate_trees(int n, const GraphVisitor& visit) {
  check_order(n, 1, kMaxTreeOrder, "enumerate_trees");
  const std::uint64_t total = labeled_tree_count(n);
  for (std::uint64_t i = 0; i < total; ++i) visit(tree_from_index(n, i));
}

void enumerate_labeled_unicyclic_range(int n, std::uint64_t tree_begin, std::uint64_t tree_end,
                                       const GraphVisitor& visit) {
  check_order(n, 3, kMaxLabeledUnicyclicOrder, "enumerate_unicyclic");
  tree_end = std::min(tree_end, labeled_tree_count(n));
  for (std::uint64_t index = tree_begin; index < tree_end; ++index) {
    const auto tree = tree_from_index(n, index);
    const auto rooted = root_at_zero(tree);
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = a + 1; b < n; ++b) {
        if (tree.has_edge(a, b)) continue;
        if (a * n + b < max_path_edge(rooted, a, b, n)) continue;
        std::vector<SignedEdge> edges(tree.edges().begin(), tree.edges().end());
        edges.push_back({a, b, Sign::kPositive});
        visit(SignedGraph(n, std::move(edges)));
      }
    }
  }
}

void enumerate_unicyclic(int n, bool up_to_iso, const GraphVisitor& visit) {
  if (up_to_iso) {
    for (const auto& g : unicyclic_classes(n)) visit(g);
  } else {
    enumerate_labeled_unicyclic_range(n, 0, labeled_tree_count(n), visit);
  }
}

std::vector<SignedGraph> unicyclic_classes(int n) {
  check_order(n, 3, kMaxUnicyclicClassOrder, "unicyclic_classes");
  std::map<std::string, SignedGraph> classes;
  const auto ring = cycle_graph(n, true);
  classes.emplace(canonical_form(ring, true), ring);
  if (n > 3) {
    for (const auto& smaller : unicyclic_classes(n - 1)) {
      for (Vertex v = 0; v < smaller.order(); ++v) {
        std::vector<SignedEdge> edges(smaller.edges().begin(), smaller.edges().end());
        edges.push_back({v, n - 1, Sign::kPositive});
        SignedGraph g(n, std::move(edges));
        classes.emplace(canonical_form(g, true), std::move(g));
      }
    }
  }
  std::vector<SignedGraph> out;
  out.reserve(classes.size());
  for (auto& [key, g] : classes) out.push_back(std::move(g));
  return out;
}

std::string canonical_form(const SignedGraph& g, bool ignore_signs) {
  const int n = g.order();
  if (n > kMaxCanonicalOrder) {
    throw BoundError("canonical_form limited to " + std::to_string(kMaxCanonicalOrder) + " vertices");
  }
  if (n == 0) return std::string(1, '\0');
  std::vector<std::vector<int>> code(n, std::vector<int>(n, 0));
  for (const auto& e : g.edges()) {
    const int c = ignore_signs || e.sign == Sign::kPositive ? 1 : 2;
    code[e.u][e.v] = code[e.v][e.u] = c;
  }
  std::string best;
  search(code, std::vector<int>(n, 0), best);
  return best;
}

SignedGraph permute(const SignedGraph& g, std::span<const Vertex> permutation) {
  if (static_cast<int>(permutation.size()) != g.order()) throw InvalidArgument("permutation size mismatch");
  std::vector<SignedEdge> edges;
  edges.reserve(g.edge_count());
  for (const auto& e : g.edges()) edges.push_back({permutation[e.u], permutation[e.v], e.sign});
  return SignedGraph(g.order(), std::move(edges));
}

SignedVariants signed_variants(const SignedGraph& g) {
  if (!g.is_unicyclic()) throw ShapeError("signed_variants requires a connected unicyclic graph");
  std::vector<SignedEdge> edges(g.edges().begin(), g.edges().end());
  for (auto& e : edges) e.sign = Sign::kPositive;
  SignedGraph balanced(g.order(), edges);
  const auto cycle = *find_cycle(balanced);
  const SignedEdge smallest = *std::min_element(cycle.edges.begin(), cycle.edges.end());
  for (auto& e : edges) {
    if (e.u == smallest.u && e.v == smallest.v) e.sign = Sign::kNegative;
  }
  return {std::move(balanced), SignedGraph(g.order(), std::move(edges))};
}

}  // namespace signull
