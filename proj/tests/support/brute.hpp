#pragma once

// Slow reference solvers used only by the tests. Each one enumerates the whole
// solution space in the most direct way possible, so they share no code with
// the DP and search routines they are compared against.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "gapred/model.hpp"
#include "gapred/rational.hpp"

namespace gapred::brute {

inline std::vector<std::vector<bool>> adjacency_matrix(const MultiGraph& g) {
  std::vector<std::vector<bool>> adj(g.n(), std::vector<bool>(g.n(), false));
  for (const Edge& e : g.edges())
    if (e.u != e.v) adj[e.u][e.v] = adj[e.v][e.u] = true;
  return adj;
}

inline std::int64_t ola(const MultiGraph& g) {
  std::vector<int> perm(g.n());
  std::iota(perm.begin(), perm.end(), 0);
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  do {
    best = std::min(best, cost_of_ordering(g, Ordering(perm)));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return g.n() == 0 ? 0 : best;
}

inline std::int64_t fas(const Digraph& d) {
  std::vector<int> perm(d.n());
  std::iota(perm.begin(), perm.end(), 0);
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  do {
    best = std::min(best, backward_arc_weight(d, Ordering(perm)));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline std::int64_t fvs(const Digraph& d) {
  const int n = d.n();
  int best = n;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const int size = __builtin_popcount(mask);
    if (size >= best) continue;
    std::vector<bool> removed(n);
    for (int v = 0; v < n; ++v) removed[v] = (mask >> v) & 1u;
    if (is_acyclic(d, removed)) best = size;
  }
  return best;
}

inline VertexPartition partition_of(std::uint32_t mask, int n) {
  VertexPartition p(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) p.set(v, (mask >> v) & 1u);
  return p;
}

inline std::int64_t max_cut(const MultiGraph& g) {
  std::int64_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << g.n()); ++mask)
    best = std::max(best, cut_size(g, partition_of(mask, g.n())));
  return best;
}

inline std::int64_t min_bisection(const MultiGraph& g) {
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (std::uint32_t mask = 0; mask < (1u << g.n()); ++mask)
    if (2 * __builtin_popcount(mask) == g.n()) best = std::min(best, cut_size(g, partition_of(mask, g.n())));
  return best;
}

inline Assignment assignment_of(std::uint32_t mask, int n) {
  Assignment a(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) a.set(v, (mask >> v) & 1u);
  return a;
}

inline std::int64_t max_sat(const CnfFormula& f) {
  std::int64_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << f.var_count()); ++mask)
    best = std::max(best, count_satisfied(f, assignment_of(mask, f.var_count())));
  return best;
}

// Uses the NAE symmetry: only assignments with the last variable false.
inline std::int64_t max_nae_half(const CnfFormula& f) {
  const int n = f.var_count();
  if (n == 0) return 0;
  std::int64_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask)
    best = std::max(best, count_nae_satisfied(f, assignment_of(mask, n)));
  return best;
}

inline std::int64_t max_nae(const CnfFormula& f) {
  std::int64_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << f.var_count()); ++mask)
    best = std::max(best, count_nae_satisfied(f, assignment_of(mask, f.var_count())));
  return best;
}

// Chordality by repeated removal of simplicial vertices.
inline bool chordal(const MultiGraph& g) {
  auto adj = adjacency_matrix(g);
  const int n = g.n();
  std::vector<bool> gone(n, false);
  for (int round = 0; round < n; ++round) {
    int found = -1;
    for (int v = 0; v < n && found < 0; ++v) {
      if (gone[v]) continue;
      std::vector<int> nb;
      for (int u = 0; u < n; ++u)
        if (!gone[u] && adj[v][u]) nb.push_back(u);
      bool clique = true;
      for (std::size_t i = 0; i < nb.size() && clique; ++i)
        for (std::size_t j = i + 1; j < nb.size() && clique; ++j) clique = adj[nb[i]][nb[j]];
      if (clique) found = v;
    }
    if (found < 0) return false;
    gone[found] = true;
  }
  return true;
}

// Counts induced 4-vertex subgraphs isomorphic to 2K2, C4 and P4.
struct FourVertexCensus {
  int two_k2 = 0;
  int c4 = 0;
  int p4 = 0;
};

inline FourVertexCensus four_vertex_census(const MultiGraph& g) {
  const auto adj = adjacency_matrix(g);
  const int n = g.n();
  FourVertexCensus census;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          const int q[4] = {a, b, c, d};
          int edges = 0;
          int deg[4] = {0, 0, 0, 0};
          for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
              if (adj[q[i]][q[j]]) {
                ++edges;
                ++deg[i];
                ++deg[j];
              }
          std::sort(deg, deg + 4);
          if (edges == 2 && deg[0] == 1 && deg[3] == 1) ++census.two_k2;
          if (edges == 4 && deg[0] == 2 && deg[3] == 2) ++census.c4;
          if (edges == 3 && deg[0] == 1 && deg[1] == 1 && deg[2] == 2 && deg[3] == 2) ++census.p4;
        }
  return census;
}

inline bool threshold(const MultiGraph& g) {
  const auto c = four_vertex_census(g);
  return c.two_k2 == 0 && c.c4 == 0 && c.p4 == 0;
}

inline bool trivially_perfect(const MultiGraph& g) {
  const auto c = four_vertex_census(g);
  return c.c4 == 0 && c.p4 == 0;
}

// Chain graph: neighborhoods of A pairwise comparable under inclusion.
inline bool chain(const BipartiteGraph& h) {
  std::vector<std::vector<bool>> nb(h.a_size(), std::vector<bool>(h.b_size(), false));
  for (const auto& [a, b] : h.edges()) nb[a][b] = true;
  for (int x = 0; x < h.a_size(); ++x)
    for (int y = x + 1; y < h.a_size(); ++y) {
      bool x_in_y = true, y_in_x = true;
      for (int b = 0; b < h.b_size(); ++b) {
        if (nb[x][b] && !nb[y][b]) x_in_y = false;
        if (nb[y][b] && !nb[x][b]) y_in_x = false;
      }
      if (!x_in_y && !y_in_x) return false;
    }
  return true;
}

// Smallest number of added A-B edges turning h into a chain graph, by
// enumerating subsets of the missing edges.
inline std::int64_t min_chain_completion(const BipartiteGraph& h) {
  std::vector<std::pair<int, int>> missing;
  for (int a = 0; a < h.a_size(); ++a)
    for (int b = 0; b < h.b_size(); ++b)
      if (!h.has_edge(a, b)) missing.emplace_back(a, b);
  const int k = static_cast<int>(missing.size());
  std::int64_t best = k;
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    const int size = __builtin_popcount(mask);
    if (size >= best) continue;
    std::vector<std::pair<int, int>> edges(h.edges().begin(), h.edges().end());
    for (int i = 0; i < k; ++i)
      if ((mask >> i) & 1u) edges.push_back(missing[i]);
    if (chain(BipartiteGraph(h.a_size(), h.b_size(), edges))) best = size;
  }
  return best;
}

inline std::vector<std::pair<int, int>> missing_edges(const MultiGraph& g) {
  const auto adj = adjacency_matrix(g);
  std::vector<std::pair<int, int>> missing;
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (!adj[u][v]) missing.emplace_back(u, v);
  return missing;
}

// Smallest edge addition accepted by `accept`, enumerating subsets of missing
// edges by increasing size up to `max_added`. Returns nullopt past the limit.
template <class Accept>
std::optional<std::int64_t> min_completion(const MultiGraph& g, int max_added, Accept accept) {
  const auto missing = missing_edges(g);
  const int k = static_cast<int>(missing.size());
  for (int size = 0; size <= std::min(max_added, k); ++size) {
    std::vector<bool> pick(k, false);
    std::fill(pick.begin(), pick.begin() + size, true);
    do {
      EdgeList added;
      for (int i = 0; i < k; ++i)
        if (pick[i]) added.push_back(missing[i]);
      if (accept(with_added_edges(g, added))) return size;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return std::nullopt;
}

inline Rational cheeger(const MultiGraph& g) {
  const int n = g.n();
  std::optional<Rational> best;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const int size = __builtin_popcount(mask);
    if (2 * size > n) continue;
    std::int64_t boundary = 0;
    for (const Edge& e : g.edges())
      if ((((mask >> e.u) ^ (mask >> e.v)) & 1u) != 0) boundary += e.mult;
    const Rational ratio(boundary, size);
    if (!best || ratio < *best) best = ratio;
  }
  return best.value_or(Rational(0));
}

}  // namespace gapred::brute
