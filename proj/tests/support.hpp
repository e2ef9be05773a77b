#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <tuple>
#include <vector>

#include <gmpxx.h>

#include "signull/signed_graph.hpp"

namespace signull::testing {

// make(4, {{0,1,1},{1,2,-1}}).
inline SignedGraph make(int n, std::initializer_list<std::tuple<int, int, int>> edges) {
  std::vector<SignedEdge> out;
  for (auto [u, v, s] : edges) out.push_back({u, v, sign_from_int(s)});
  return SignedGraph(n, std::move(out));
}

// Rank over Q by plain Gaussian elimination on rationals.
inline int rational_rank(const SignedGraph& g) {
  const int n = g.order();
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n, 0));
  for (const auto& e : g.edges()) a[e.u][e.v] = a[e.v][e.u] = to_int(e.sign);
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int pivot = rank;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) continue;
    std::swap(a[pivot], a[rank]);
    for (int r = 0; r < n; ++r) {
      if (r == rank || a[r][col] == 0) continue;
      const mpq_class f = a[r][col] / a[rank][col];
      for (int c = col; c < n; ++c) a[r][c] -= f * a[rank][c];
    }
    ++rank;
  }
  return rank;
}

inline int rational_nullity(const SignedGraph& g) { return g.order() - rational_rank(g); }

// Explicit search over all vertex permutations.
inline bool isomorphic_bruteforce(const SignedGraph& a, const SignedGraph& b, bool ignore_signs) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  std::vector<Vertex> p(a.order());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (const auto& e : a.edges()) {
      const auto s = b.edge_sign(p[e.u], p[e.v]);
      if (!s || (!ignore_signs && *s != e.sign)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

inline std::vector<Vertex> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace signull::testing
