#include "gapred/completion.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <set>
#include <string>
#include <vector>

#include "gapred/error.hpp"

namespace gapred {

namespace {
constexpr std::size_t kThresholdCompletionCap = 20;
constexpr std::size_t kTriviallyPerfectCompletionCap = 16;
}  // namespace

std::int64_t ChainInstance::offset() const {
  const std::int64_t n = source_n;
  return source_delta * n * (n - 1) / 2 - 2 * source_edges;
}

ChainInstance ola_to_chain(const MultiGraph& g, std::int64_t k) {
  if (g.has_loops()) throw DomainError("ola_to_chain: source graph has self-loops");
  const int n = g.n();
  const std::int64_t delta = g.max_degree();
  if (delta * n > 1'000'000) throw DomainError("ola_to_chain: instance too large");
  const int d = static_cast<int>(delta);

  ChainInstance ci;
  ci.source_delta = delta;
  ci.source_edges = g.edge_count();
  ci.source_n = n;
  ci.edge_origin.resize(static_cast<std::size_t>(n) * d);

  std::vector<int> used(static_cast<std::size_t>(n), 0);
  std::vector<std::pair<int, int>> edges;
  auto take = [&](int owner, int other) {
    const int slot = used[owner]++;
    const int b = owner * d + slot;
    ci.edge_origin[b] = {owner, other, slot};
    edges.push_back({owner, b});
    edges.push_back({other, b});
  };
  for (const Edge& e : g.edges())
    for (std::int64_t copy = 0; copy < e.mult; ++copy) {
      take(e.u, e.v);
      take(e.v, e.u);
    }
  for (int v = 0; v < n; ++v)
    for (int slot = used[v]; slot < d; ++slot) {
      const int b = v * d + slot;
      ci.edge_origin[b] = {v, -1, slot};
      edges.push_back({v, b});
    }
  std::sort(edges.begin(), edges.end());
  ci.graph = BipartiteGraph(n, n * d, std::move(edges));
  ci.budget = k + ci.offset();
  return ci;
}

std::int64_t chain_cost_for_order(const ChainInstance& ci, const Ordering& pi) {
  const BipartiteGraph& h = ci.graph;
  if (pi.size() != static_cast<std::size_t>(h.a_size()))
    throw DimensionError("chain_cost_for_order: ordering size does not match A");
  const auto pos = pi.positions();
  std::int64_t added = 0;
  for (int b = 0; b < h.b_size(); ++b) {
    const auto nb = h.neighbors_of_b(b);
    if (nb.empty()) continue;
    int earliest = h.a_size();
    for (int a : nb) earliest = std::min(earliest, pos[a]);
    added += (h.a_size() - earliest) - static_cast<std::int64_t>(nb.size());
  }
  return added;
}

std::int64_t chain_claim_value(const ChainInstance& ci, const MultiGraph& source, const Ordering& pi) {
  return cost_of_ordering(source, pi) + ci.offset();
}

// ---------------------------------------------------------------------------

std::string to_string(GraphClass cls) {
  switch (cls) {
    case GraphClass::chordal:
      return "chordal";
    case GraphClass::interval:
      return "interval";
    case GraphClass::proper_interval:
      return "proper_interval";
    case GraphClass::threshold:
      return "threshold";
    case GraphClass::trivially_perfect:
      return "trivially_perfect";
  }
  return "unknown";
}

GraphClass parse_graph_class(std::string_view name) {
  for (GraphClass c : {GraphClass::chordal, GraphClass::interval, GraphClass::proper_interval, GraphClass::threshold,
                       GraphClass::trivially_perfect})
    if (to_string(c) == name) return c;
  throw DomainError("unknown graph class '" + std::string(name) + "'");
}

namespace {

MultiGraph with_cliques(const BipartiteGraph& h, bool clique_b) {
  const int a = h.a_size();
  const int b = h.b_size();
  std::vector<Edge> edges;
  for (const auto& [u, v] : h.edges()) edges.push_back({u, a + v, 1});
  for (int u = 0; u < a; ++u)
    for (int v = u + 1; v < a; ++v) edges.push_back({u, v, 1});
  if (clique_b)
    for (int u = 0; u < b; ++u)
      for (int v = u + 1; v < b; ++v) edges.push_back({a + u, a + v, 1});
  return MultiGraph(a + b, std::move(edges));
}

}  // namespace

MultiGraph cliques_on_both_sides(const BipartiteGraph& h) { return with_cliques(h, true); }
MultiGraph clique_on_a(const BipartiteGraph& h) { return with_cliques(h, false); }

CompletionInstance chain_to_fillin(const ChainInstance& ci) {
  return {cliques_on_both_sides(ci.graph), ci.budget, GraphClass::chordal};
}
CompletionInstance chain_to_interval(const ChainInstance& ci) {
  return {cliques_on_both_sides(ci.graph), ci.budget, GraphClass::interval};
}
CompletionInstance chain_to_proper_interval(const ChainInstance& ci) {
  return {cliques_on_both_sides(ci.graph), ci.budget, GraphClass::proper_interval};
}
CompletionInstance chain_to_threshold(const ChainInstance& ci) {
  return {clique_on_a(ci.graph), ci.budget, GraphClass::threshold};
}
CompletionInstance chain_to_trivially_perfect(const ChainInstance& ci) {
  return {clique_on_a(ci.graph), ci.budget, GraphClass::trivially_perfect};
}

// ---------------------------------------------------------------------------

bool is_in_class(const MultiGraph& g, GraphClass cls) {
  switch (cls) {
    case GraphClass::chordal:
      return is_chordal(g);
    case GraphClass::interval:
      return is_interval(g);
    case GraphClass::proper_interval:
      return is_proper_interval(g);
    case GraphClass::threshold:
      return is_threshold(g);
    case GraphClass::trivially_perfect:
      return is_trivially_perfect(g);
  }
  return false;
}

bool verify_completion(const MultiGraph& g, const EdgeList& added, GraphClass cls) {
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : added) {
    if (u == v) throw DomainError("verify_completion: added pair is a loop");
    if (u < 0 || v < 0 || u >= g.n() || v >= g.n()) throw DomainError("verify_completion: vertex out of range");
    if (u > v) std::swap(u, v);
    if (g.multiplicity(u, v) > 0 || !seen.insert({u, v}).second)
      throw DomainError("verify_completion: pair " + std::to_string(u) + "-" + std::to_string(v) +
                        " is already an edge");
  }
  return is_in_class(with_added_edges(g, added), cls);
}

std::optional<SolveResult<EdgeList>> min_completion_search(const MultiGraph& g, GraphClass cls,
                                                           std::size_t max_candidates, std::size_t max_added) {
  EdgeList missing;
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (g.multiplicity(u, v) == 0) missing.push_back({u, v});
  if (missing.size() > max_candidates) throw ResourceError("min_completion_search", missing.size(), max_candidates);

  EdgeList chosen;
  // Depth-first over index-increasing choices, which visits each size class
  // in lexicographic order.
  std::function<bool(std::size_t, std::size_t)> search = [&](std::size_t start, std::size_t remaining) {
    if (remaining == 0) return is_in_class(with_added_edges(g, chosen), cls);
    for (std::size_t i = start; i + remaining <= missing.size(); ++i) {
      chosen.push_back(missing[i]);
      if (search(i + 1, remaining - 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  for (std::size_t size = 0; size <= std::min(max_added, missing.size()); ++size) {
    chosen.clear();
    if (search(0, size)) return SolveResult<EdgeList>{static_cast<std::int64_t>(size), chosen};
  }
  return std::nullopt;
}

namespace {

std::vector<std::uint32_t> adjacency_masks(const MultiGraph& g) {
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(g.n()), 0);
  for (const Edge& e : g.edges())
    if (e.u != e.v) {
      adj[e.u] |= 1u << e.v;
      adj[e.v] |= 1u << e.u;
    }
  return adj;
}

void add_missing_to(int v, std::uint32_t others, const std::vector<std::uint32_t>& adj, EdgeList& added) {
  for (int w = 0; others >> w; ++w)
    if ((others >> w & 1u) && !(adj[v] >> w & 1u)) added.push_back(std::minmax(v, w));
}

SolveResult<EdgeList> threshold_completion(const MultiGraph& g) {
  const int n = g.n();
  const auto adj = adjacency_masks(g);
  const std::uint32_t full = n == 0 ? 0 : (n == 32 ? ~0u : (1u << n) - 1);
  std::vector<std::int32_t> best(std::size_t{1} << n, 0);
  std::vector<std::int8_t> pick(std::size_t{1} << n, -1);
  for (std::uint32_t S = 1; S <= full && S != 0; ++S) {
    const int size = __builtin_popcount(S);
    std::int32_t value = std::numeric_limits<std::int32_t>::max();
    for (int v = 0; v < n; ++v) {
      if (!(S >> v & 1u)) continue;
      const int deg = __builtin_popcount(adj[v] & S & ~(1u << v));
      // An isolated last vertex costs nothing; otherwise it must dominate.
      const std::int32_t cost = (deg == 0 ? 0 : size - 1 - deg) + best[S & ~(1u << v)];
      if (cost < value) {
        value = cost;
        pick[S] = static_cast<std::int8_t>(v);
      }
    }
    best[S] = value;
  }
  EdgeList added;
  for (std::uint32_t S = full; S != 0;) {
    const int v = pick[S];
    const std::uint32_t rest = S & ~(1u << v);
    if (adj[v] & rest) add_missing_to(v, rest, adj, added);
    S = rest;
  }
  std::sort(added.begin(), added.end());
  return {best[full], added};
}

SolveResult<EdgeList> trivially_perfect_completion(const MultiGraph& g) {
  const int n = g.n();
  const auto adj = adjacency_masks(g);
  const std::uint32_t full = n == 0 ? 0 : (1u << n) - 1;
  const std::size_t states = std::size_t{1} << n;
  constexpr std::int32_t kInf = std::numeric_limits<std::int32_t>::max() / 2;
  // connected[S]: S spans one component of the completion, rooted at the
  // universal vertex root[S]. forest[S]: any completion of S, whose first
  // component is block[S].
  std::vector<std::int32_t> connected(states, kInf), forest(states, kInf);
  std::vector<std::int8_t> root(states, -1);
  std::vector<std::uint32_t> block(states, 0);
  forest[0] = 0;

  std::vector<std::uint32_t> comps;
  for (std::uint32_t S = 1; S <= full && S != 0; ++S) {
    const int size = __builtin_popcount(S);
    for (int v = 0; v < n; ++v) {
      if (!(S >> v & 1u)) continue;
      const int deg = __builtin_popcount(adj[v] & S & ~(1u << v));
      const std::int32_t cost = size - 1 - deg + forest[S & ~(1u << v)];
      if (cost < connected[S]) {
        connected[S] = cost;
        root[S] = static_cast<std::int8_t>(v);
      }
    }
    // Components of the completion are unions of components of g[S].
    comps.clear();
    for (std::uint32_t left = S; left;) {
      std::uint32_t comp = left & (~left + 1);
      for (std::uint32_t grow = comp; grow;) {
        std::uint32_t next = 0;
        for (int v = 0; v < n; ++v)
          if (grow >> v & 1u) next |= adj[v] & S;
        grow = next & ~comp;
        comp |= next;
      }
      comps.push_back(comp);
      left &= ~comp;
    }
    const std::size_t others = comps.size() - 1;
    for (std::uint32_t choice = 0; choice < (1u << others); ++choice) {
      std::uint32_t B = comps[0];
      for (std::size_t i = 0; i < others; ++i)
        if (choice >> i & 1u) B |= comps[i + 1];
      const std::int32_t cost = connected[B] + forest[S & ~B];
      if (cost < forest[S]) {
        forest[S] = cost;
        block[S] = B;
      }
    }
  }

  EdgeList added;
  std::vector<std::uint32_t> pending{full};
  while (!pending.empty()) {
    std::uint32_t S = pending.back();
    pending.pop_back();
    while (S) {
      const std::uint32_t B = block[S];
      const int v = root[B];
      add_missing_to(v, B & ~(1u << v), adj, added);
      pending.push_back(B & ~(1u << v));
      S &= ~B;
    }
  }
  std::sort(added.begin(), added.end());
  return {forest[full], added};
}

}  // namespace

SolveResult<EdgeList> min_completion_exact(const MultiGraph& g, GraphClass cls) {
  switch (cls) {
    case GraphClass::threshold:
      if (static_cast<std::size_t>(g.n()) > kThresholdCompletionCap)
        throw ResourceError("min_completion_exact", static_cast<std::size_t>(g.n()), kThresholdCompletionCap);
      return threshold_completion(g);
    case GraphClass::trivially_perfect:
      if (static_cast<std::size_t>(g.n()) > kTriviallyPerfectCompletionCap)
        throw ResourceError("min_completion_exact", static_cast<std::size_t>(g.n()), kTriviallyPerfectCompletionCap);
      return trivially_perfect_completion(g);
    default:
      throw DomainError("min_completion_exact: only threshold and trivially perfect completion are supported");
  }
}

}  // namespace gapred
