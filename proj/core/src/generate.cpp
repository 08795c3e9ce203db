#include "gapred/generate.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "gapred/error.hpp"

namespace gapred {

namespace {

template <class T>
std::vector<T> sample(std::vector<T> pool, int m, Rng& rng, const char* what) {
  if (m < 0 || static_cast<std::size_t>(m) > pool.size())
    throw DomainError(std::string(what) + ": cannot choose " + std::to_string(m) + " of " +
                      std::to_string(pool.size()) + " candidates");
  rng.shuffle(pool);
  pool.resize(static_cast<std::size_t>(m));
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace

CnfFormula random_e3cnf(int n, int m, Rng& rng) {
  if (n < 3) throw DomainError("random_e3cnf: need at least 3 variables");
  if (m < 0) throw DomainError("random_e3cnf: negative clause count");
  std::vector<Clause> clauses;
  for (int j = 0; j < m; ++j) {
    std::vector<int> vars;
    while (vars.size() < 3) {
      const int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
      if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
    }
    Clause c;
    for (int v : vars) c.push_back({v, rng.coin()});
    clauses.push_back(std::move(c));
  }
  return CnfFormula(n, std::move(clauses));
}

MultiGraph random_regular_graph(int n, int d, Rng& rng) {
  if (n < 1 || d < 0 || d >= n) throw DomainError("random_regular_graph: need 0 <= d < n");
  if ((static_cast<std::int64_t>(n) * d) % 2 != 0) throw DomainError("random_regular_graph: n*d must be even");
  std::vector<int> stubs;
  for (int v = 0; v < n; ++v)
    for (int i = 0; i < d; ++i) stubs.push_back(v);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    rng.shuffle(stubs);
    std::vector<std::pair<int, int>> pairs;
    bool simple = true;
    for (std::size_t i = 0; i + 1 < stubs.size() && simple; i += 2) {
      const auto p = std::minmax(stubs[i], stubs[i + 1]);
      if (p.first == p.second) simple = false;
      pairs.push_back(p);
    }
    if (!simple) continue;
    std::sort(pairs.begin(), pairs.end());
    if (std::adjacent_find(pairs.begin(), pairs.end()) != pairs.end()) continue;
    std::vector<Edge> edges;
    for (const auto& [u, v] : pairs) edges.push_back({u, v, 1});
    return MultiGraph(n, std::move(edges));
  }
  throw ConstructionError("random_regular_graph: no simple matching found");
}

MultiGraph random_graph(int n, int m, Rng& rng) {
  if (n < 0) throw DomainError("random_graph: negative vertex count");
  std::vector<std::pair<int, int>> pool;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pool.push_back({u, v});
  std::vector<Edge> edges;
  for (const auto& [u, v] : sample(std::move(pool), m, rng, "random_graph")) edges.push_back({u, v, 1});
  return MultiGraph(n, std::move(edges));
}

Digraph random_digraph(int n, int m, bool oriented, Rng& rng) {
  if (n < 0) throw DomainError("random_digraph: negative vertex count");
  std::vector<std::pair<int, int>> pool;
  for (int u = 0; u < n; ++u)
    for (int v = oriented ? u + 1 : 0; v < n; ++v)
      if (u != v) pool.push_back({u, v});
  std::vector<Arc> arcs;
  for (auto [u, v] : sample(std::move(pool), m, rng, "random_digraph")) {
    if (oriented && rng.coin()) std::swap(u, v);
    arcs.push_back({u, v, 1});
  }
  return Digraph(n, std::move(arcs));
}

BipartiteGraph random_bipartite(int a, int b, int m, Rng& rng) {
  if (a < 0 || b < 0) throw DomainError("random_bipartite: negative side size");
  std::vector<std::pair<int, int>> pool;
  for (int x = 0; x < a; ++x)
    for (int y = 0; y < b; ++y) pool.push_back({x, y});
  return BipartiteGraph(a, b, sample(std::move(pool), m, rng, "random_bipartite"));
}

}  // namespace gapred
