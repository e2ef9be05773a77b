#include "signull/nullity_engine.hpp"

#include <algorithm>
#include <set>
#include <variant>

#include "signull/error.hpp"
#include "signull/matching.hpp"
#include "signull/switching.hpp"

namespace signull {
namespace {

using Steps = std::vector<CertificateStep>;

step::ForestBase forest_base(const SignedGraph& forest) {
  const int mu = matching_number_forest(forest);
  return {forest.order(), mu, forest.order() - 2 * mu};
}

int emit_unicyclic(const SignedGraph& g, std::span<const Vertex> ids, const EngineOptions& options,
                   Steps& steps) {
  auto info = classify_type(g);
  if (info.type == UnicyclicType::kTypeI) {
    const Vertex v = *info.witness;
    auto branch = pendant_tree_at(g, info.cycle, v);
    auto rest = delete_vertices(g, branch.vertices);
    auto tree_part = forest_base(branch.tree);
    auto rest_part = forest_base(rest.graph);
    steps.emplace_back(step::TypeISplit{ids[v], tree_part.contribution, rest_part.contribution});
    steps.emplace_back(tree_part);
    steps.emplace_back(rest_part);
    return tree_part.contribution + rest_part.contribution;
  }

  step::TypeIIDecompose decompose;
  for (Vertex c : info.cycle.vertices) {
    auto branch = pendant_tree_at(g, info.cycle, c);
    const Vertex root[] = {branch.root_index};
    decompose.cycle.push_back(ids[c]);
    decompose.branch_nullity.push_back(tree_nullity(delete_vertices(branch.tree, root).graph));
  }
  auto forest = forest_base(delete_vertices(g, info.cycle.vertices).graph);
  const bool balanced = info.cycle.sign == Sign::kPositive;
  const int l = info.cycle.length();
  step::CycleBase cycle{l, balanced, options.cycle_table(l, balanced)};
  steps.emplace_back(std::move(decompose));
  steps.emplace_back(forest);
  steps.emplace_back(cycle);
  return forest.contribution + cycle.contribution;
}

int emit_component(const SignedGraph& component, std::span<const Vertex> ids, const EngineOptions& options,
                   Steps& steps) {
  if (component.is_acyclic()) {
    auto base = forest_base(component);
    steps.emplace_back(base);
    return base.contribution;
  }
  return emit_unicyclic(component, ids, options, steps);
}

void require_low_cycle_rank(const SignedGraph& g) {
  auto labels = g.component_labels();
  const int c = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
  std::vector<int> vertices(c, 0), edges(c, 0);
  for (int label : labels) ++vertices[label];
  for (const auto& e : g.edges()) ++edges[labels[e.u]];
  for (int i = 0; i < c; ++i) {
    if (edges[i] - vertices[i] + 1 > 1) {
      throw ShapeError("component " + std::to_string(i) + " has cycle rank " +
                       std::to_string(edges[i] - vertices[i] + 1) + "; structural nullity needs rank <= 1");
    }
  }
}

// Decomposes `g` (whose vertex i is ids[i] in the certificate) component by
// component, appending a Components step first.
int emit_components(const SignedGraph& g, std::span<const Vertex> ids, const EngineOptions& options,
                    Steps& steps) {
  auto labels = g.component_labels();
  const int c = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
  std::vector<std::vector<Vertex>> members(c);
  for (Vertex v = 0; v < g.order(); ++v) members[labels[v]].push_back(v);
  steps.emplace_back(step::Components{c});
  int total = 0;
  for (const auto& m : members) {
    auto sub = induced_subgraph(g, m);
    std::vector<Vertex> mapped(sub.original_ids.size());
    for (std::size_t i = 0; i < mapped.size(); ++i) mapped[i] = ids[sub.original_ids[i]];
    total += emit_component(sub.graph, mapped, options, steps);
  }
  return total;
}

NullityCertificate bound_certificate(const SignedGraph& g) {
  NullityCertificate cert;
  cert.order = g.order();
  cert.edge_count = g.edge_count();
  cert.digest = graph_digest(g);
  return cert;
}

std::vector<Vertex> iota_ids(int n) {
  std::vector<Vertex> ids(n);
  for (int i = 0; i < n; ++i) ids[i] = i;
  return ids;
}

}  // namespace

int cycle_nullity(int length, bool balanced) {
  if (length < 3) throw InvalidArgument("cycle length must be at least 3");
  return length % 4 == (balanced ? 0 : 2) ? 2 : 0;
}

PendantReduction pendant_reduce(const SignedGraph& g) {
  const int n = g.order();
  std::vector<int> degree(n);
  std::vector<bool> alive(n, true);
  std::set<Vertex> pendants;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = g.degree(v);
    if (degree[v] == 1) pendants.insert(v);
  }
  PendantReduction out;
  auto remove = [&](Vertex x) {
    alive[x] = false;
    pendants.erase(x);
    for (const auto& nb : g.neighbors(x)) {
      if (!alive[nb.vertex]) continue;
      if (--degree[nb.vertex] == 1) {
        pendants.insert(nb.vertex);
      } else {
        pendants.erase(nb.vertex);
      }
    }
  };
  while (!pendants.empty()) {
    const Vertex u = *pendants.begin();
    Vertex w = -1;
    for (const auto& nb : g.neighbors(u)) {
      if (alive[nb.vertex]) {
        w = nb.vertex;
        break;
      }
    }
    out.steps.push_back({u, w});
    remove(u);
    remove(w);
  }
  std::vector<Vertex> kept;
  for (Vertex v = 0; v < n; ++v) {
    if (alive[v]) kept.push_back(v);
  }
  auto sub = induced_subgraph(g, kept);
  out.reduced = std::move(sub.graph);
  out.original_ids = std::move(sub.original_ids);
  return out;
}

TypeClassification classify_type(const SignedGraph& g) {
  if (!g.is_unicyclic()) throw ShapeError("classify_type requires a connected unicyclic graph");
  TypeClassification out;
  out.cycle = *find_cycle(g);
  std::vector<Vertex> by_id = out.cycle.vertices;
  std::sort(by_id.begin(), by_id.end());
  for (Vertex v : by_id) {
    auto branch = pendant_tree_at(g, out.cycle, v);
    if (is_matched_in_tree(branch.tree, branch.root_index)) {
      out.type = UnicyclicType::kTypeI;
      out.witness = v;
      return out;
    }
  }
  out.type = UnicyclicType::kTypeII;
  return out;
}

NullityResult nullity_unicyclic(const SignedGraph& g, const EngineOptions& options) {
  if (!g.is_unicyclic()) throw ShapeError("nullity_unicyclic requires a connected unicyclic graph");
  NullityResult result;
  result.certificate = bound_certificate(g);
  auto ids = iota_ids(g.order());
  result.certificate.steps.emplace_back(step::Components{1});
  result.nullity = emit_unicyclic(g, ids, options, result.certificate.steps);
  result.certificate.claimed_nullity = result.nullity;
  return result;
}

NullityResult nullity_structural(const SignedGraph& g, const EngineOptions& options) {
  require_low_cycle_rank(g);
  NullityResult result;
  result.certificate = bound_certificate(g);
  auto& steps = result.certificate.steps;
  if (options.strategy == ReductionStrategy::kPendantFirst) {
    auto reduction = pendant_reduce(g);
    for (const auto& s : reduction.steps) steps.emplace_back(s);
    result.nullity = emit_components(reduction.reduced, reduction.original_ids, options, steps);
  } else {
    result.nullity = emit_components(g, iota_ids(g.order()), options, steps);
  }
  result.certificate.claimed_nullity = result.nullity;
  return result;
}

// ---------------------------------------------------------------------------
// Certificate replay

namespace {

struct Part {
  std::vector<Vertex> vertices;  // ascending ids of the input graph
  std::optional<int> expected;
};

struct Rejected {
  std::string reason;
};

// Matching number computed independently of the engine's greedy where the
// exhaustive search is affordable.
int independent_mu(const SignedGraph& forest) {
  return forest.order() <= kBruteForceMatchingBound ? matching_number_bruteforce(forest)
                                                    : matching_number_forest(forest);
}

std::vector<Vertex> minus(const std::vector<Vertex>& all, const std::vector<Vertex>& removed) {
  std::vector<Vertex> sorted = removed;
  std::sort(sorted.begin(), sorted.end());
  std::vector<Vertex> out;
  std::set_difference(all.begin(), all.end(), sorted.begin(), sorted.end(), std::back_inserter(out));
  return out;
}

class Replay {
 public:
  Replay(const SignedGraph& g) : g_(g) {
    std::vector<Vertex> all(g.order());
    for (int i = 0; i < g.order(); ++i) all[i] = i;
    stack_.push_back({std::move(all), std::nullopt});
  }

  void apply(const CertificateStep& s) {
    if (stack_.empty()) reject("step after every part was closed");
    std::visit([this](const auto& st) { on(st); }, s);
  }

  void finish(int claimed) {
    if (!stack_.empty()) reject(std::to_string(stack_.size()) + " part(s) left unaccounted");
    if (total_ != claimed) {
      reject("steps derive " + std::to_string(total_) + " but certificate claims " + std::to_string(claimed));
    }
  }

 private:
  [[noreturn]] static void reject(std::string why) { throw Rejected{std::move(why)}; }

  Part pop() {
    Part p = std::move(stack_.back());
    stack_.pop_back();
    return p;
  }

  Vertex local_index(const Part& p, Vertex v) const {
    auto it = std::lower_bound(p.vertices.begin(), p.vertices.end(), v);
    if (it == p.vertices.end() || *it != v) reject("vertex " + std::to_string(v) + " is not in the current part");
    return static_cast<Vertex>(it - p.vertices.begin());
  }

  std::vector<Vertex> to_global(const Part& p, std::span<const Vertex> local) const {
    std::vector<Vertex> out;
    out.reserve(local.size());
    for (Vertex v : local) out.push_back(p.vertices[v]);
    std::sort(out.begin(), out.end());
    return out;
  }

  void close(const Part& p, int contribution) {
    if (p.expected && *p.expected != contribution) {
      reject("part closes with " + std::to_string(contribution) + " but was promised " +
             std::to_string(*p.expected));
    }
    total_ += contribution;
  }

  void on(const step::Components& s) {
    Part p = pop();
    if (p.expected) reject("components step on a part with a promised nullity");
    auto h = induced_subgraph(g_, p.vertices).graph;
    auto labels = h.component_labels();
    const int c = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
    if (c != s.count) reject("part has " + std::to_string(c) + " components, certificate says " + std::to_string(s.count));
    std::vector<std::vector<Vertex>> members(c);
    for (Vertex v = 0; v < h.order(); ++v) members[labels[v]].push_back(p.vertices[v]);
    for (auto it = members.rbegin(); it != members.rend(); ++it) stack_.push_back({std::move(*it), std::nullopt});
  }

  void on(const step::PendantDelete& s) {
    Part& p = stack_.back();
    auto h = induced_subgraph(g_, p.vertices).graph;
    const Vertex u = local_index(p, s.pendant);
    const Vertex w = local_index(p, s.neighbor);
    if (h.degree(u) != 1) reject("vertex " + std::to_string(s.pendant) + " is not pendant");
    if (h.neighbors(u)[0].vertex != w) reject("vertex " + std::to_string(s.neighbor) + " is not the pendant's neighbour");
    p.vertices = minus(p.vertices, {s.pendant, s.neighbor});
  }

  SignedGraph unicyclic_top(const Part& p, CycleDescriptor& cycle) const {
    auto h = induced_subgraph(g_, p.vertices).graph;
    if (!h.is_unicyclic()) reject("part is not connected unicyclic");
    cycle = *find_cycle(h);
    return h;
  }

  void on(const step::TypeISplit& s) {
    Part p = pop();
    CycleDescriptor cycle;
    auto h = unicyclic_top(p, cycle);
    const Vertex v = local_index(p, s.witness);
    if (!cycle.contains(v)) reject("witness " + std::to_string(s.witness) + " is not on the cycle");
    auto branch = pendant_tree_at(h, cycle, v);
    if (branch.tree.order() < 2) reject("witness has a trivial pendant tree");
    const Vertex root[] = {branch.root_index};
    const int mu = independent_mu(branch.tree);
    const int mu_without = independent_mu(delete_vertices(branch.tree, root).graph);
    if (mu_without != mu - 1) reject("witness " + std::to_string(s.witness) + " is mismatched in its pendant tree");
    auto tree_vertices = to_global(p, branch.vertices);
    stack_.push_back({minus(p.vertices, tree_vertices), s.rest_nullity});
    stack_.push_back({std::move(tree_vertices), s.tree_nullity});
  }

  void on(const step::TypeIIDecompose& s) {
    Part p = pop();
    CycleDescriptor cycle;
    auto h = unicyclic_top(p, cycle);
    const int l = cycle.length();
    if (static_cast<int>(s.cycle.size()) != l || static_cast<int>(s.branch_nullity.size()) != l) {
      reject("type2 step lists the wrong number of cycle vertices");
    }
    CycleDescriptor listed;
    for (Vertex v : s.cycle) listed.vertices.push_back(local_index(p, v));
    for (int i = 0; i < l; ++i) {
      if (!cycle.contains(listed.vertices[i])) reject("vertex " + std::to_string(s.cycle[i]) + " is not on the cycle");
      if (!h.has_edge(listed.vertices[i], listed.vertices[(i + 1) % l])) reject("listed cycle is not a closed walk");
    }
    auto sorted = listed.vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) reject("listed cycle repeats a vertex");

    int branch_total = 0;
    for (int i = 0; i < l; ++i) {
      auto branch = pendant_tree_at(h, cycle, listed.vertices[i]);
      const Vertex root[] = {branch.root_index};
      auto without = delete_vertices(branch.tree, root).graph;
      const int mu_without = independent_mu(without);
      if (branch.tree.order() > 1 && independent_mu(branch.tree) != mu_without) {
        reject("cycle vertex " + std::to_string(s.cycle[i]) + " is matched in its pendant tree");
      }
      if (s.branch_nullity[i] != without.order() - 2 * mu_without) {
        reject("wrong branch nullity at cycle vertex " + std::to_string(s.cycle[i]));
      }
      branch_total += s.branch_nullity[i];
    }
    auto cycle_vertices = to_global(p, cycle.vertices);
    stack_.push_back({cycle_vertices, std::nullopt});
    stack_.push_back({minus(p.vertices, cycle_vertices), branch_total});
  }

  void on(const step::CycleBase& s) {
    Part p = pop();
    auto h = induced_subgraph(g_, p.vertices).graph;
    const int n = h.order();
    if (n < 3 || n != s.length || !h.is_connected() || h.edge_count() != n) reject("part is not a cycle of the stated length");
    for (Vertex v = 0; v < n; ++v) {
      if (h.degree(v) != 2) reject("part is not a bare cycle");
    }
    const bool balanced = find_cycle(h)->sign == Sign::kPositive;
    if (balanced != s.balanced) reject("cycle balance flag is wrong");
    if (s.contribution != cycle_nullity(s.length, s.balanced)) reject("cycle contribution disagrees with the cycle table");
    close(p, s.contribution);
  }

  void on(const step::ForestBase& s) {
    Part p = pop();
    auto h = induced_subgraph(g_, p.vertices).graph;
    if (!h.is_acyclic()) reject("forest step on a part with a cycle");
    if (h.order() != s.order) reject("forest order " + std::to_string(s.order) + " but part has " + std::to_string(h.order()));
    if (independent_mu(h) != s.matching_number) reject("wrong matching number");
    if (s.contribution != s.order - 2 * s.matching_number) reject("forest contribution is not order - 2 mu");
    close(p, s.contribution);
  }

  const SignedGraph& g_;
  std::vector<Part> stack_;
  int total_ = 0;
};

}  // namespace

CertificateVerdict verify_certificate(const SignedGraph& g, const NullityCertificate& cert) {
  if (cert.order != g.order() || cert.edge_count != g.edge_count() || cert.digest != graph_digest(g)) {
    return {false, "certificate is bound to a different graph"};
  }
  try {
    Replay replay(g);
    for (const auto& s : cert.steps) replay.apply(s);
    replay.finish(cert.claimed_nullity);
  } catch (const Rejected& r) {
    return {false, r.reason};
  } catch (const std::exception& e) {
    return {false, std::string("malformed certificate: ") + e.what()};
  }
  return {true, {}};
}

}  // namespace signull
