#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include "gapred/error.hpp"
#include "gapred/oracle.hpp"

namespace gapred {

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

// Rebuilds the lexicographically smallest order from a suffix table, where
// best[S] is the optimal cost of placing the complement of S after S and
// step(S, v) is the cost paid when v is placed right after S.
template <class StepCost>
Ordering greedy_order(int n, const std::vector<std::int64_t>& best, StepCost step) {
  std::vector<int> perm;
  perm.reserve(static_cast<std::size_t>(n));
  std::uint32_t placed = 0;
  for (int i = 0; i < n; ++i) {
    for (int v = 0; v < n; ++v) {
      const std::uint32_t bit = 1u << v;
      if (placed & bit) continue;
      if (step(placed, v) + best[placed | bit] == best[placed]) {
        perm.push_back(v);
        placed |= bit;
        break;
      }
    }
  }
  return Ordering(std::move(perm));
}

}  // namespace

SolveResult<Ordering> ola_exact(const MultiGraph& g, std::size_t cap) {
  const int n = g.n();
  if (static_cast<std::size_t>(n) > std::min<std::size_t>(cap, 30)) throw ResourceError("ola_exact", n, cap);
  if (n == 0) return {0, Ordering()};

  const std::uint32_t full = (1u << n) - 1;
  const std::size_t states = std::size_t{1} << n;

  // cut[S] by peeling the lowest vertex: adding v to T changes the cut by
  // (non-loop degree of v) - 2 * w(v, T).
  std::vector<std::int64_t> outside_degree(n, 0);
  for (int v = 0; v < n; ++v)
    for (const Neighbor& nb : g.neighbors(v)) outside_degree[v] += nb.mult;
  std::vector<std::int64_t> cut(states, 0);
  for (std::uint32_t s = 1; s <= full; ++s) {
    const int v = __builtin_ctz(s);
    const std::uint32_t rest = s & (s - 1);
    std::int64_t inside = 0;
    for (const Neighbor& nb : g.neighbors(v))
      if (rest & (1u << nb.vertex)) inside += nb.mult;
    cut[s] = cut[rest] + outside_degree[v] - 2 * inside;
  }

  std::vector<std::int64_t> best(states, kInf);
  best[full] = 0;
  for (std::uint32_t s = full; s-- > 0;) {
    std::int64_t tail = kInf;
    for (int v = 0; v < n; ++v)
      if (!(s & (1u << v))) tail = std::min(tail, best[s | (1u << v)]);
    best[s] = cut[s] + tail;
  }

  // Placing v after S costs cut[S]; the greedy check uses that form.
  Ordering order = greedy_order(n, best, [&](std::uint32_t s, int) { return cut[s]; });
  return {best[0], std::move(order)};
}

SolveResult<Ordering> min_fas_exact(const Digraph& d, std::size_t cap) {
  const int n = d.n();
  if (static_cast<std::size_t>(n) > std::min<std::size_t>(cap, 30)) throw ResourceError("min_fas_exact", n, cap);

  std::int64_t loops = 0;
  std::vector<std::vector<Neighbor>> out(n);
  for (const Arc& a : d.arcs()) {
    if (a.from == a.to)
      loops += a.mult;
    else
      out[a.from].push_back({a.to, a.mult});
  }
  if (n == 0) return {loops, Ordering()};

  // Placing v right after S makes every arc v -> S backward.
  auto backward = [&](std::uint32_t s, int v) {
    std::int64_t w = 0;
    for (const Neighbor& nb : out[v])
      if (s & (1u << nb.vertex)) w += nb.mult;
    return w;
  };

  const std::uint32_t full = (1u << n) - 1;
  std::vector<std::int64_t> best(std::size_t{1} << n, kInf);
  best[full] = 0;
  for (std::uint32_t s = full; s-- > 0;) {
    std::int64_t b = kInf;
    for (int v = 0; v < n; ++v)
      if (!(s & (1u << v))) b = std::min(b, backward(s, v) + best[s | (1u << v)]);
    best[s] = b;
  }
  Ordering order = greedy_order(n, best, backward);
  return {best[0] + loops, std::move(order)};
}

SolveResult<std::vector<int>> min_fvs_exact(const Digraph& d, std::size_t cap) {
  const int n = d.n();
  if (static_cast<std::size_t>(n) > cap) throw ResourceError("min_fvs_exact", n, cap);

  // Sizes in increasing order, subsets of each size in lex order, so the first
  // hit is the lex-smallest minimum set.
  for (int size = 0; size <= n; ++size) {
    std::vector<int> pick(size);
    for (int i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      std::vector<bool> removed(n, false);
      for (int v : pick) removed[v] = true;
      if (is_acyclic(d, removed)) return {size, pick};
      int i = size - 1;
      while (i >= 0 && pick[i] == n - size + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return {n, {}};  // unreachable: removing every vertex is acyclic
}

}  // namespace gapred
