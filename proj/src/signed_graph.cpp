#include "signull/signed_graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "signull/error.hpp"

namespace signull {

Sign sign_from_int(int value) {
  if (value == 1) return Sign::kPositive;
  if (value == -1) return Sign::kNegative;
  throw InvalidArgument("sign must be +1 or -1, got " + std::to_string(value));
}

SignedGraph::SignedGraph(int order, std::vector<SignedEdge> edges) : order_(order) {
  if (order < 0) throw InvalidArgument("negative order");
  for (auto& e : edges) {
    if (e.u < 0 || e.u >= order || e.v < 0 || e.v >= order) {
      throw InvalidArgument("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                            ") has an endpoint outside [0," + std::to_string(order) + ")");
    }
    if (e.u == e.v) throw InvalidArgument("loop at vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (edges[i].u == edges[i - 1].u && edges[i].v == edges[i - 1].v) {
      throw InvalidArgument("duplicate edge (" + std::to_string(edges[i].u) + "," +
                            std::to_string(edges[i].v) + ")");
    }
  }
  edges_ = std::move(edges);

  offsets_.assign(order_ + 1, 0);
  for (const auto& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  adjacency_.resize(2 * edges_.size());
  std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
  // Edges are sorted, so each neighbour list comes out ascending.
  for (const auto& e : edges_) adjacency_[fill[e.u]++] = {e.v, e.sign};
  for (const auto& e : edges_) adjacency_[fill[e.v]++] = {e.u, e.sign};
  for (Vertex v = 0; v < order_; ++v) {
    std::sort(adjacency_.begin() + offsets_[v], adjacency_.begin() + offsets_[v + 1],
              [](const Neighbor& a, const Neighbor& b) { return a.vertex < b.vertex; });
  }
}

std::optional<Sign> SignedGraph::edge_sign(Vertex a, Vertex b) const {
  if (a < 0 || a >= order_ || b < 0 || b >= order_) return std::nullopt;
  auto nbrs = neighbors(a);
  auto it = std::lower_bound(nbrs.begin(), nbrs.end(), b,
                             [](const Neighbor& nb, Vertex x) { return nb.vertex < x; });
  if (it == nbrs.end() || it->vertex != b) return std::nullopt;
  return it->sign;
}

std::vector<int> SignedGraph::component_labels() const {
  std::vector<int> label(order_, -1);
  std::vector<Vertex> stack;
  int next = 0;
  for (Vertex s = 0; s < order_; ++s) {
    if (label[s] != -1) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (const auto& nb : neighbors(x)) {
        if (label[nb.vertex] == -1) {
          label[nb.vertex] = next;
          stack.push_back(nb.vertex);
        }
      }
    }
    ++next;
  }
  return label;
}

int SignedGraph::component_count() const {
  auto labels = component_labels();
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

bool SignedGraph::is_all_positive() const {
  return std::all_of(edges_.begin(), edges_.end(),
                     [](const SignedEdge& e) { return e.sign == Sign::kPositive; });
}

bool SignedGraph::same_underlying(const SignedGraph& other) const {
  if (order_ != other.order_ || edges_.size() != other.edges_.size()) return false;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].u != other.edges_[i].u || edges_[i].v != other.edges_[i].v) return false;
  }
  return true;
}

SignedGraph new_graph(int order, std::vector<SignedEdge> edges) {
  return SignedGraph(order, std::move(edges));
}

InducedSubgraph induced_subgraph(const SignedGraph& g, std::span<const Vertex> kept) {
  std::vector<Vertex> new_id(g.order(), -1);
  std::vector<Vertex> sorted(kept.begin(), kept.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] < 0 || sorted[i] >= g.order()) {
      throw InvalidArgument("vertex " + std::to_string(sorted[i]) + " out of range");
    }
    new_id[sorted[i]] = static_cast<Vertex>(i);
  }
  std::vector<SignedEdge> edges;
  for (const auto& e : g.edges()) {
    if (new_id[e.u] >= 0 && new_id[e.v] >= 0) edges.push_back({new_id[e.u], new_id[e.v], e.sign});
  }
  return {SignedGraph(static_cast<int>(sorted.size()), std::move(edges)), std::move(sorted)};
}

InducedSubgraph delete_vertices(const SignedGraph& g, std::span<const Vertex> removed) {
  std::vector<bool> gone(g.order(), false);
  for (Vertex v : removed) {
    if (v < 0 || v >= g.order()) throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
    gone[v] = true;
  }
  std::vector<Vertex> kept;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!gone[v]) kept.push_back(v);
  }
  return induced_subgraph(g, kept);
}

SignedGraph disjoint_union(const SignedGraph& first, const SignedGraph& second) {
  std::vector<SignedEdge> edges(first.edges().begin(), first.edges().end());
  const int shift = first.order();
  for (const auto& e : second.edges()) edges.push_back({e.u + shift, e.v + shift, e.sign});
  return SignedGraph(first.order() + second.order(), std::move(edges));
}

SignedGraph k_joining(const SignedGraph& tree, Vertex u, const SignedGraph& partner,
                      std::span<const Vertex> targets, std::span<const Sign> signs) {
  if (!tree.is_tree()) throw ShapeError("k-joining requires a tree on the pendant side");
  if (u < 0 || u >= tree.order()) throw InvalidArgument("join vertex out of range");
  const int k = static_cast<int>(targets.size());
  if (k < 1 || k > partner.order()) {
    throw InvalidArgument("k = " + std::to_string(k) + " outside [1," +
                          std::to_string(partner.order()) + "]");
  }
  if (signs.size() != targets.size()) throw InvalidArgument("one sign per join edge required");
  std::vector<bool> seen(partner.order(), false);
  for (Vertex t : targets) {
    if (t < 0 || t >= partner.order()) throw InvalidArgument("join target out of range");
    if (seen[t]) throw InvalidArgument("duplicate join target " + std::to_string(t));
    seen[t] = true;
  }
  std::vector<SignedEdge> edges(tree.edges().begin(), tree.edges().end());
  const int shift = tree.order();
  for (const auto& e : partner.edges()) edges.push_back({e.u + shift, e.v + shift, e.sign});
  for (int i = 0; i < k; ++i) edges.push_back({u, targets[i] + shift, signs[i]});
  return SignedGraph(tree.order() + partner.order(), std::move(edges));
}

bool CycleDescriptor::contains(Vertex v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

std::optional<CycleDescriptor> find_cycle(const SignedGraph& g) {
  if (!g.is_connected()) throw ShapeError("find_cycle requires a connected graph");
  const int rank = g.cycle_rank();
  if (rank == 0) return std::nullopt;
  if (rank > 1) throw ShapeError("graph has cycle rank " + std::to_string(rank));

  // Peel leaves; the unique cycle is what survives.
  std::vector<int> degree(g.order());
  std::vector<Vertex> queue;
  for (Vertex v = 0; v < g.order(); ++v) {
    degree[v] = g.degree(v);
    if (degree[v] == 1) queue.push_back(v);
  }
  std::vector<bool> peeled(g.order(), false);
  while (!queue.empty()) {
    Vertex x = queue.back();
    queue.pop_back();
    peeled[x] = true;
    for (const auto& nb : g.neighbors(x)) {
      if (!peeled[nb.vertex] && --degree[nb.vertex] == 1) queue.push_back(nb.vertex);
    }
  }

  Vertex start = 0;
  while (peeled[start]) ++start;
  CycleDescriptor cycle;
  Vertex prev = -1;
  Vertex cur = start;
  do {
    cycle.vertices.push_back(cur);
    Vertex next = -1;
    for (const auto& nb : g.neighbors(cur)) {
      if (!peeled[nb.vertex] && nb.vertex != prev) {
        next = nb.vertex;
        break;  // ascending neighbour order picks the smaller one from start
      }
    }
    prev = cur;
    cur = next;
  } while (cur != start);

  const int l = cycle.length();
  for (int i = 0; i < l; ++i) {
    Vertex a = cycle.vertices[i];
    Vertex b = cycle.vertices[(i + 1) % l];
    Sign s = *g.edge_sign(a, b);
    cycle.edges.push_back({std::min(a, b), std::max(a, b), s});
    cycle.sign = cycle.sign * s;
  }
  return cycle;
}

std::vector<Vertex> pendant_vertices(const SignedGraph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 1) out.push_back(v);
  }
  return out;
}

PendantTree pendant_tree_at(const SignedGraph& g, const CycleDescriptor& cycle, Vertex root) {
  if (!cycle.contains(root)) throw InvalidArgument("vertex " + std::to_string(root) + " is not on the cycle");
  std::vector<bool> blocked(g.order(), false);
  for (Vertex c : cycle.vertices) blocked[c] = true;
  std::vector<bool> seen(g.order(), false);
  std::vector<Vertex> members{root};
  seen[root] = true;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (const auto& nb : g.neighbors(members[i])) {
      if (!seen[nb.vertex] && !blocked[nb.vertex]) {
        seen[nb.vertex] = true;
        members.push_back(nb.vertex);
      }
    }
  }
  auto sub = induced_subgraph(g, members);
  PendantTree out;
  out.root = root;
  out.vertices = std::move(sub.original_ids);
  out.tree = std::move(sub.graph);
  out.root_index = static_cast<Vertex>(
      std::lower_bound(out.vertices.begin(), out.vertices.end(), root) - out.vertices.begin());
  return out;
}

PendantTree pendant_tree_at(const SignedGraph& g, Vertex root) {
  if (!g.is_unicyclic()) throw ShapeError("pendant trees are defined on connected unicyclic graphs");
  return pendant_tree_at(g, *find_cycle(g), root);
}

SignedGraph path_graph(int order, Sign sign) {
  std::vector<SignedEdge> edges;
  for (int i = 0; i + 1 < order; ++i) edges.push_back({i, i + 1, sign});
  return SignedGraph(order, std::move(edges));
}

SignedGraph star_graph(int leaves, Sign sign) {
  std::vector<SignedEdge> edges;
  for (int i = 1; i <= leaves; ++i) edges.push_back({0, i, sign});
  return SignedGraph(leaves + 1, std::move(edges));
}

SignedGraph cycle_graph(int length, bool balanced) {
  if (length < 3) throw InvalidArgument("cycle length must be at least 3");
  std::vector<SignedEdge> edges;
  for (int i = 0; i + 1 < length; ++i) edges.push_back({i, i + 1, Sign::kPositive});
  edges.push_back({0, length - 1, Sign::kPositive});
  if (!balanced) edges.front().sign = Sign::kNegative;
  return SignedGraph(length, std::move(edges));
}

}  // namespace signull
