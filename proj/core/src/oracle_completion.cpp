#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <vector>

#include "gapred/error.hpp"
#include "gapred/oracle.hpp"

namespace gapred {

SolveResult<EdgeList> min_chain_completion_exact(const BipartiteGraph& h, std::size_t cap) {
  const int a = h.a_size();
  if (static_cast<std::size_t>(a) > cap) throw ResourceError("min_chain_completion_exact", a, cap);

  std::vector<int> perm(a);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> pos(a);

  // For a fixed left order the cheapest completion turns N(b) into the suffix
  // that starts at b's earliest neighbor.
  auto cost_of = [&](const std::vector<int>& order) {
    for (int i = 0; i < a; ++i) pos[order[i]] = i;
    std::int64_t total = 0;
    for (int b = 0; b < h.b_size(); ++b) {
      const auto nb = h.neighbors_of_b(b);
      if (nb.empty()) continue;
      int earliest = a;
      for (int x : nb) earliest = std::min(earliest, pos[x]);
      total += (a - earliest) - static_cast<std::int64_t>(nb.size());
    }
    return total;
  };

  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  std::vector<int> best_order = perm;
  do {
    const std::int64_t c = cost_of(perm);
    if (c < best) {
      best = c;
      best_order = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (a == 0) best = 0;

  EdgeList added;
  for (int i = 0; i < a; ++i) pos[best_order[i]] = i;
  for (int b = 0; b < h.b_size(); ++b) {
    const auto nb = h.neighbors_of_b(b);
    if (nb.empty()) continue;
    int earliest = a;
    for (int x : nb) earliest = std::min(earliest, pos[x]);
    for (int p = earliest; p < a; ++p)
      if (!h.has_edge(best_order[p], b)) added.emplace_back(best_order[p], b);
  }
  std::sort(added.begin(), added.end());
  return {best, std::move(added)};
}

SolveResult<EdgeList> min_fill_in_exact(const MultiGraph& g, std::size_t cap) {
  if (!g.is_simple()) throw DomainError("min_fill_in_exact: graph must be simple");
  const int n = g.n();
  if (static_cast<std::size_t>(n) > std::min<std::size_t>(cap, 30)) throw ResourceError("min_fill_in_exact", n, cap);
  if (n == 0) return {0, {}};

  std::vector<std::uint32_t> adj(n, 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= 1u << e.v;
    adj[e.v] |= 1u << e.u;
  }

  // Vertices outside S + v reachable from v by paths whose interior lies in S:
  // exactly v's neighbors at the moment it is eliminated after S.
  auto reach = [&](std::uint32_t s, int v) {
    const std::uint32_t self = 1u << v;
    std::uint32_t out = adj[v] & ~s & ~self;
    std::uint32_t pending = adj[v] & s;
    std::uint32_t seen = 0;
    while (pending) {
      const int u = __builtin_ctz(pending);
      pending &= pending - 1;
      if (seen & (1u << u)) continue;
      seen |= 1u << u;
      out |= adj[u] & ~s & ~self;
      pending |= adj[u] & s & ~seen;
    }
    return static_cast<std::int64_t>(__builtin_popcount(out));
  };

  const std::uint32_t full = (1u << n) - 1;
  std::vector<std::int64_t> best(std::size_t{1} << n, std::numeric_limits<std::int64_t>::max());
  best[full] = 0;
  for (std::uint32_t s = full; s-- > 0;) {
    std::int64_t b = std::numeric_limits<std::int64_t>::max();
    for (int v = 0; v < n; ++v)
      if (!(s & (1u << v))) b = std::min(b, reach(s, v) + best[s | (1u << v)]);
    best[s] = b;
  }

  // Replay the lex-smallest optimal elimination order and collect its fill.
  std::vector<std::uint32_t> cur = adj;
  EdgeList fill;
  std::uint32_t done = 0;
  for (int step = 0; step < n; ++step) {
    int v = 0;
    for (; v < n; ++v)
      if (!(done & (1u << v)) && reach(done, v) + best[done | (1u << v)] == best[done]) break;
    const std::uint32_t live = cur[v] & ~done & ~(1u << v);
    for (int x = 0; x < n; ++x) {
      if (!(live & (1u << x))) continue;
      for (int y = x + 1; y < n; ++y) {
        if (!(live & (1u << y)) || (cur[x] & (1u << y))) continue;
        cur[x] |= 1u << y;
        cur[y] |= 1u << x;
        fill.emplace_back(x, y);
      }
    }
    done |= 1u << v;
  }
  std::sort(fill.begin(), fill.end());
  const std::int64_t value = best[0] - g.edge_count();
  if (value != static_cast<std::int64_t>(fill.size()))
    throw Error("min_fill_in_exact: replayed fill disagrees with the DP value");
  return {value, std::move(fill)};
}

}  // namespace gapred
