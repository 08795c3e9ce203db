#include "gapred/model.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <map>
#include <string>

#include "gapred/error.hpp"
#include "gapred/rational.hpp"

namespace gapred {

namespace {

void check_vertex(int v, int n, const char* what) {
  if (v < 0 || v >= n)
    throw DomainError(std::string(what) + ": vertex " + std::to_string(v) + " out of range [0, " +
                      std::to_string(n) + ")");
}

}  // namespace

// ---------------------------------------------------------------------------
// MultiGraph

MultiGraph::MultiGraph(int n) : MultiGraph(n, {}) {}

MultiGraph::MultiGraph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 0) throw DomainError("MultiGraph: negative vertex count");
  std::map<std::pair<int, int>, std::int64_t> merged;
  for (const Edge& e : edges) {
    check_vertex(e.u, n, "MultiGraph");
    check_vertex(e.v, n, "MultiGraph");
    if (e.mult < 1) throw DomainError("MultiGraph: multiplicity must be >= 1");
    merged[{std::min(e.u, e.v), std::max(e.u, e.v)}] += e.mult;
  }
  edges_.reserve(merged.size());
  degree_.assign(static_cast<std::size_t>(n), 0);
  loops_.assign(static_cast<std::size_t>(n), 0);
  adjacency_.assign(static_cast<std::size_t>(n), {});
  for (const auto& [key, mult] : merged) {
    const auto [u, v] = key;
    edges_.push_back({u, v, mult});
    m_ += mult;
    if (u == v) {
      degree_[u] += mult;
      loops_[u] += mult;
    } else {
      degree_[u] += mult;
      degree_[v] += mult;
      adjacency_[u].push_back({v, mult});
      adjacency_[v].push_back({u, mult});
    }
  }
  for (auto& list : adjacency_)
    std::sort(list.begin(), list.end(), [](const Neighbor& a, const Neighbor& b) { return a.vertex < b.vertex; });
}

std::int64_t MultiGraph::degree(int v) const { return degree_.at(static_cast<std::size_t>(v)); }

std::int64_t MultiGraph::max_degree() const noexcept {
  return degree_.empty() ? 0 : *std::max_element(degree_.begin(), degree_.end());
}

std::int64_t MultiGraph::loop_count(int v) const { return loops_.at(static_cast<std::size_t>(v)); }

std::int64_t MultiGraph::multiplicity(int u, int v) const {
  const Edge key{std::min(u, v), std::max(u, v), 0};
  const auto it = std::lower_bound(edges_.begin(), edges_.end(), key, [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  return (it != edges_.end() && it->u == key.u && it->v == key.v) ? it->mult : 0;
}

std::span<const Neighbor> MultiGraph::neighbors(int v) const { return adjacency_.at(static_cast<std::size_t>(v)); }

bool MultiGraph::has_loops() const noexcept {
  return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.u == e.v; });
}

bool MultiGraph::is_simple() const noexcept {
  return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.u != e.v && e.mult == 1; });
}

bool MultiGraph::is_regular(std::int64_t d) const noexcept {
  return std::all_of(degree_.begin(), degree_.end(), [d](std::int64_t x) { return x == d; });
}

// ---------------------------------------------------------------------------
// Digraph

Digraph::Digraph(int n) : Digraph(n, {}) {}

Digraph::Digraph(int n, std::vector<Arc> arcs) : n_(n) {
  if (n < 0) throw DomainError("Digraph: negative vertex count");
  std::map<std::pair<int, int>, std::int64_t> merged;
  for (const Arc& a : arcs) {
    check_vertex(a.from, n, "Digraph");
    check_vertex(a.to, n, "Digraph");
    if (a.mult < 1) throw DomainError("Digraph: multiplicity must be >= 1");
    merged[{a.from, a.to}] += a.mult;
  }
  out_.assign(static_cast<std::size_t>(n), 0);
  in_.assign(static_cast<std::size_t>(n), 0);
  out_adjacency_.assign(static_cast<std::size_t>(n), {});
  for (const auto& [key, mult] : merged) {
    arcs_.push_back({key.first, key.second, mult});
    m_ += mult;
    out_[key.first] += mult;
    in_[key.second] += mult;
    out_adjacency_[key.first].push_back({key.second, mult});
  }
}

std::int64_t Digraph::out_degree(int v) const { return out_.at(static_cast<std::size_t>(v)); }
std::int64_t Digraph::in_degree(int v) const { return in_.at(static_cast<std::size_t>(v)); }

std::int64_t Digraph::multiplicity(int from, int to) const {
  const auto& list = out_adjacency_.at(static_cast<std::size_t>(from));
  const auto it = std::lower_bound(list.begin(), list.end(), to,
                                   [](const Neighbor& a, int key) { return a.vertex < key; });
  return (it != list.end() && it->vertex == to) ? it->mult : 0;
}

std::span<const Neighbor> Digraph::out_neighbors(int v) const {
  return out_adjacency_.at(static_cast<std::size_t>(v));
}

bool Digraph::has_loops() const noexcept {
  return std::any_of(arcs_.begin(), arcs_.end(), [](const Arc& a) { return a.from == a.to; });
}

bool Digraph::is_simple() const noexcept {
  return std::all_of(arcs_.begin(), arcs_.end(), [](const Arc& a) { return a.from != a.to && a.mult == 1; });
}

bool Digraph::has_antiparallel_pair() const noexcept {
  return std::any_of(arcs_.begin(), arcs_.end(),
                     [this](const Arc& a) { return a.from != a.to && multiplicity(a.to, a.from) > 0; });
}

bool Digraph::is_balanced() const noexcept { return out_ == in_; }

bool Digraph::is_balanced_regular(std::int64_t r) const noexcept {
  for (int v = 0; v < n_; ++v)
    if (out_[v] != r || in_[v] != r) return false;
  return true;
}

// ---------------------------------------------------------------------------
// BipartiteGraph

BipartiteGraph::BipartiteGraph(int a_size, int b_size, std::vector<std::pair<int, int>> edges)
    : a_size_(a_size), b_size_(b_size), edges_(std::move(edges)) {
  if (a_size < 0 || b_size < 0) throw DomainError("BipartiteGraph: negative side size");
  for (const auto& [a, b] : edges_) {
    check_vertex(a, a_size, "BipartiteGraph (A side)");
    check_vertex(b, b_size, "BipartiteGraph (B side)");
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw DomainError("BipartiteGraph: duplicate edge");
  a_adj_.assign(static_cast<std::size_t>(a_size), {});
  b_adj_.assign(static_cast<std::size_t>(b_size), {});
  for (const auto& [a, b] : edges_) {
    a_adj_[a].push_back(b);
    b_adj_[b].push_back(a);
  }
  for (auto& list : b_adj_) std::sort(list.begin(), list.end());
}

std::span<const int> BipartiteGraph::neighbors_of_a(int a) const { return a_adj_.at(static_cast<std::size_t>(a)); }
std::span<const int> BipartiteGraph::neighbors_of_b(int b) const { return b_adj_.at(static_cast<std::size_t>(b)); }

bool BipartiteGraph::has_edge(int a, int b) const {
  return std::binary_search(edges_.begin(), edges_.end(), std::pair<int, int>{a, b});
}

// ---------------------------------------------------------------------------
// CnfFormula

CnfFormula::CnfFormula(int var_count, std::vector<Clause> clauses)
    : var_count_(var_count), clauses_(std::move(clauses)) {
  if (var_count < 0) throw DomainError("CnfFormula: negative variable count");
  for (std::size_t i = 0; i < clauses_.size(); ++i) {
    if (clauses_[i].empty()) throw DomainError("CnfFormula: clause " + std::to_string(i) + " is empty");
    for (const Literal& l : clauses_[i]) check_vertex(l.var, var_count, "CnfFormula");
  }
}

bool CnfFormula::is_exact_width(std::size_t width) const noexcept {
  return std::all_of(clauses_.begin(), clauses_.end(), [width](const Clause& c) { return c.size() == width; });
}

bool CnfFormula::has_repeated_variable() const noexcept {
  for (const Clause& c : clauses_)
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j)
        if (c[i].var == c[j].var) return true;
  return false;
}

std::vector<Occurrences> CnfFormula::occurrence_counts(std::size_t width) const {
  std::vector<Occurrences> counts(static_cast<std::size_t>(var_count_));
  for (const Clause& c : clauses_) {
    if (width != 0 && c.size() != width) continue;
    for (const Literal& l : c) (l.positive ? counts[l.var].positive : counts[l.var].negative) += 1;
  }
  return counts;
}

// ---------------------------------------------------------------------------
// Solutions

Ordering::Ordering(std::vector<int> perm) : perm_(std::move(perm)) {
  std::vector<bool> seen(perm_.size(), false);
  for (const int v : perm_) {
    if (v < 0 || static_cast<std::size_t>(v) >= perm_.size() || seen[v])
      throw DomainError("Ordering: not a permutation of 0.." + std::to_string(perm_.size()) + "-1");
    seen[v] = true;
  }
}

Ordering Ordering::identity(int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[i] = i;
  return Ordering(std::move(perm));
}

std::vector<int> Ordering::positions() const {
  std::vector<int> pos(perm_.size());
  for (std::size_t i = 0; i < perm_.size(); ++i) pos[perm_[i]] = static_cast<int>(i);
  return pos;
}

Assignment Assignment::negated() const {
  std::vector<bool> flipped(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) flipped[i] = !values_[i];
  return Assignment(std::move(flipped));
}

std::size_t VertexPartition::count_b() const noexcept {
  return static_cast<std::size_t>(std::count(side_.begin(), side_.end(), true));
}

VertexPartition VertexPartition::flipped() const {
  std::vector<bool> flipped(side_.size());
  for (std::size_t i = 0; i < side_.size(); ++i) flipped[i] = !side_[i];
  return VertexPartition(std::move(flipped));
}

// ---------------------------------------------------------------------------
// Evaluators

std::int64_t cost_of_ordering(const MultiGraph& g, const Ordering& pi) {
  if (pi.size() != static_cast<std::size_t>(g.n()))
    throw DimensionError("cost_of_ordering: ordering has " + std::to_string(pi.size()) + " positions, graph has " +
                         std::to_string(g.n()) + " vertices");
  const auto pos = pi.positions();
  std::int64_t cost = 0;
  for (const Edge& e : g.edges()) cost += e.mult * std::abs(pos[e.u] - pos[e.v]);
  return cost;
}

std::int64_t cut_size(const MultiGraph& g, const VertexPartition& p) {
  if (p.size() != static_cast<std::size_t>(g.n()))
    throw DimensionError("cut_size: partition has " + std::to_string(p.size()) + " entries, graph has " +
                         std::to_string(g.n()) + " vertices");
  std::int64_t cut = 0;
  for (const Edge& e : g.edges())
    if (p[e.u] != p[e.v]) cut += e.mult;
  return cut;
}

namespace {

void check_assignment(const CnfFormula& f, const Assignment& a, const char* what) {
  if (a.size() != static_cast<std::size_t>(f.var_count()))
    throw DimensionError(std::string(what) + ": assignment has " + std::to_string(a.size()) +
                         " values, formula has " + std::to_string(f.var_count()) + " variables");
}

}  // namespace

std::int64_t count_nae_satisfied(const CnfFormula& f, const Assignment& a) {
  check_assignment(f, a, "count_nae_satisfied");
  std::int64_t count = 0;
  for (const Clause& c : f.clauses()) {
    bool has_true = false;
    bool has_false = false;
    for (const Literal& l : c) (a[l.var] == l.positive ? has_true : has_false) = true;
    if (has_true && has_false) ++count;
  }
  return count;
}

std::int64_t count_satisfied(const CnfFormula& f, const Assignment& a) {
  check_assignment(f, a, "count_satisfied");
  std::int64_t count = 0;
  for (const Clause& c : f.clauses())
    if (std::any_of(c.begin(), c.end(), [&a](const Literal& l) { return a[l.var] == l.positive; })) ++count;
  return count;
}

MultiGraph complement(const MultiGraph& g) {
  if (!g.is_simple()) throw DomainError("complement: input graph must be simple");
  std::vector<Edge> edges;
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (g.multiplicity(u, v) == 0) edges.push_back({u, v, 1});
  return MultiGraph(g.n(), std::move(edges));
}

std::int64_t backward_arc_weight(const Digraph& d, const Ordering& pi) {
  if (pi.size() != static_cast<std::size_t>(d.n()))
    throw DimensionError("backward_arc_weight: ordering size does not match digraph");
  const auto pos = pi.positions();
  std::int64_t weight = 0;
  for (const Arc& a : d.arcs())
    if (pos[a.from] >= pos[a.to]) weight += a.mult;
  return weight;
}

bool is_acyclic(const Digraph& d, const std::vector<bool>& removed) {
  if (removed.size() != static_cast<std::size_t>(d.n()))
    throw DimensionError("is_acyclic: removal mask size does not match digraph");
  std::vector<std::int64_t> indeg(static_cast<std::size_t>(d.n()), 0);
  for (const Arc& a : d.arcs())
    if (!removed[a.from] && !removed[a.to]) indeg[a.to] += a.mult;
  std::vector<int> queue;
  int alive = 0;
  for (int v = 0; v < d.n(); ++v) {
    if (removed[v]) continue;
    ++alive;
    if (indeg[v] == 0) queue.push_back(v);
  }
  int processed = 0;
  while (!queue.empty()) {
    const int v = queue.back();
    queue.pop_back();
    ++processed;
    for (const Neighbor& w : d.out_neighbors(v)) {
      if (removed[w.vertex]) continue;
      indeg[w.vertex] -= w.mult;
      if (indeg[w.vertex] == 0) queue.push_back(w.vertex);
    }
  }
  return processed == alive;
}

bool is_acyclic(const Digraph& d) { return is_acyclic(d, std::vector<bool>(static_cast<std::size_t>(d.n()), false)); }

MultiGraph induced_subgraph(const MultiGraph& g, std::span<const int> vertices) {
  std::vector<int> index(static_cast<std::size_t>(g.n()), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    check_vertex(vertices[i], g.n(), "induced_subgraph");
    if (index[vertices[i]] != -1) throw DomainError("induced_subgraph: repeated vertex");
    index[vertices[i]] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (index[e.u] >= 0 && index[e.v] >= 0) edges.push_back({index[e.u], index[e.v], e.mult});
  return MultiGraph(static_cast<int>(vertices.size()), std::move(edges));
}

MultiGraph with_added_edges(const MultiGraph& g, const EdgeList& added) {
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (const auto& [u, v] : added) edges.push_back({u, v, 1});
  return MultiGraph(g.n(), std::move(edges));
}

Ordering swap_adjacent_blocks(const Ordering& pi, std::size_t begin, std::size_t first_len, std::size_t second_len) {
  if (begin + first_len + second_len > pi.size()) throw DomainError("swap_adjacent_blocks: blocks out of range");
  std::vector<int> perm(pi.perm().begin(), pi.perm().end());
  std::rotate(perm.begin() + static_cast<std::ptrdiff_t>(begin),
              perm.begin() + static_cast<std::ptrdiff_t>(begin + first_len),
              perm.begin() + static_cast<std::ptrdiff_t>(begin + first_len + second_len));
  return Ordering(std::move(perm));
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
    if (result > std::numeric_limits<std::int64_t>::max()) throw DomainError("binomial: overflow");
  }
  return static_cast<std::int64_t>(result);
}

}  // namespace gapred
