#pragma once

// Instance and solution types shared by every reduction, plus the cost and
// satisfaction evaluators. All types are immutable once constructed.

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace gapred {

/// Undirected edge with multiplicity; normalized so that u <= v.
struct Edge {
  int u = 0;
  int v = 0;
  std::int64_t mult = 1;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Directed arc with multiplicity.
struct Arc {
  int from = 0;
  int to = 0;
  std::int64_t mult = 1;

  friend bool operator==(const Arc&, const Arc&) = default;
};

/// Pairs of vertices (u < v) used for edge-set witnesses.
using EdgeList = std::vector<std::pair<int, int>>;

/// A (u, v) neighbor entry with multiplicity.
struct Neighbor {
  int vertex = 0;
  std::int64_t mult = 0;
};

/// Undirected multigraph with self-loops. A self-loop contributes 1 to the
/// degree of its vertex, costs 0 in every ordering and never crosses a cut.
class MultiGraph {
 public:
  MultiGraph() = default;
  explicit MultiGraph(int n);
  /// Duplicate (u, v) keys are merged by adding multiplicities.
  MultiGraph(int n, std::vector<Edge> edges);

  int n() const noexcept { return n_; }
  std::span<const Edge> edges() const noexcept { return edges_; }
  /// Total number of edges counted with multiplicity.
  std::int64_t edge_count() const noexcept { return m_; }

  std::int64_t degree(int v) const;
  std::int64_t max_degree() const noexcept;
  std::int64_t loop_count(int v) const;
  std::int64_t multiplicity(int u, int v) const;
  /// Neighbors other than v itself.
  std::span<const Neighbor> neighbors(int v) const;

  bool has_loops() const noexcept;
  /// No loops and every multiplicity equal to 1.
  bool is_simple() const noexcept;
  bool is_regular(std::int64_t d) const noexcept;

  friend bool operator==(const MultiGraph& a, const MultiGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::int64_t m_ = 0;
  std::vector<std::int64_t> degree_;
  std::vector<std::int64_t> loops_;
  std::vector<std::vector<Neighbor>> adjacency_;
};

/// Directed multigraph with loops.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int n);
  Digraph(int n, std::vector<Arc> arcs);

  int n() const noexcept { return n_; }
  std::span<const Arc> arcs() const noexcept { return arcs_; }
  std::int64_t arc_count() const noexcept { return m_; }

  std::int64_t out_degree(int v) const;
  std::int64_t in_degree(int v) const;
  std::int64_t multiplicity(int from, int to) const;
  std::span<const Neighbor> out_neighbors(int v) const;

  bool has_loops() const noexcept;
  /// No loops and no parallel arcs. Antiparallel pairs are allowed.
  bool is_simple() const noexcept;
  bool has_antiparallel_pair() const noexcept;
  /// indeg(v) = outdeg(v) for every vertex.
  bool is_balanced() const noexcept;
  /// indeg(v) = outdeg(v) = r for every vertex.
  bool is_balanced_regular(std::int64_t r) const noexcept;

  friend bool operator==(const Digraph& a, const Digraph& b) { return a.n_ == b.n_ && a.arcs_ == b.arcs_; }

 private:
  int n_ = 0;
  std::vector<Arc> arcs_;
  std::int64_t m_ = 0;
  std::vector<std::int64_t> out_;
  std::vector<std::int64_t> in_;
  std::vector<std::vector<Neighbor>> out_adjacency_;
};

/// Simple bipartite graph (A, B, F). Left vertices are 0..a_size-1 and right
/// vertices 0..b_size-1, each side indexed independently.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  BipartiteGraph(int a_size, int b_size, std::vector<std::pair<int, int>> edges);

  int a_size() const noexcept { return a_size_; }
  int b_size() const noexcept { return b_size_; }
  std::span<const std::pair<int, int>> edges() const noexcept { return edges_; }
  std::span<const int> neighbors_of_a(int a) const;
  std::span<const int> neighbors_of_b(int b) const;
  bool has_edge(int a, int b) const;

  friend bool operator==(const BipartiteGraph& x, const BipartiteGraph& y) {
    return x.a_size_ == y.a_size_ && x.b_size_ == y.b_size_ && x.edges_ == y.edges_;
  }

 private:
  int a_size_ = 0;
  int b_size_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> a_adj_;
  std::vector<std::vector<int>> b_adj_;
};

struct Literal {
  int var = 0;
  bool positive = true;

  Literal negated() const noexcept { return {var, !positive}; }
  friend bool operator==(const Literal&, const Literal&) = default;
};

using Clause = std::vector<Literal>;

struct Occurrences {
  std::int64_t positive = 0;
  std::int64_t negative = 0;

  std::int64_t total() const noexcept { return positive + negative; }
  friend bool operator==(const Occurrences&, const Occurrences&) = default;
};

/// CNF over variables 0..var_count-1. Clauses are never empty; repeated
/// variables inside a clause are accepted and can be detected.
class CnfFormula {
 public:
  CnfFormula() = default;
  CnfFormula(int var_count, std::vector<Clause> clauses);

  int var_count() const noexcept { return var_count_; }
  std::size_t clause_count() const noexcept { return clauses_.size(); }
  std::span<const Clause> clauses() const noexcept { return clauses_; }
  const Clause& clause(std::size_t i) const { return clauses_.at(i); }

  bool is_exact_width(std::size_t width) const noexcept;
  /// True when some clause mentions a variable twice (in any polarity).
  bool has_repeated_variable() const noexcept;
  /// Occurrence counts per variable, restricted to clauses of the given width
  /// (0 = all widths).
  std::vector<Occurrences> occurrence_counts(std::size_t width = 0) const;

  friend bool operator==(const CnfFormula& a, const CnfFormula& b) {
    return a.var_count_ == b.var_count_ && a.clauses_ == b.clauses_;
  }

 private:
  int var_count_ = 0;
  std::vector<Clause> clauses_;
};

/// Bijection V -> positions; perm[i] is the vertex placed at position i
/// (position i + 1 in 1-based notation).
class Ordering {
 public:
  Ordering() = default;
  explicit Ordering(std::vector<int> perm);

  static Ordering identity(int n);

  std::size_t size() const noexcept { return perm_.size(); }
  int operator[](std::size_t i) const { return perm_[i]; }
  std::span<const int> perm() const noexcept { return perm_; }
  /// positions()[v] is the 0-based position of v.
  std::vector<int> positions() const;

  friend bool operator==(const Ordering&, const Ordering&) = default;

 private:
  std::vector<int> perm_;
};

class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(std::vector<bool> values) : values_(std::move(values)) {}
  explicit Assignment(std::size_t n) : values_(n, false) {}

  std::size_t size() const noexcept { return values_.size(); }
  bool operator[](std::size_t i) const { return values_[i]; }
  void set(std::size_t i, bool value) { values_.at(i) = value; }
  const std::vector<bool>& values() const noexcept { return values_; }
  Assignment negated() const;

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::vector<bool> values_;
};

/// side[v] == false puts v in part A, true in part B.
class VertexPartition {
 public:
  VertexPartition() = default;
  explicit VertexPartition(std::vector<bool> side) : side_(std::move(side)) {}
  explicit VertexPartition(std::size_t n) : side_(n, false) {}

  std::size_t size() const noexcept { return side_.size(); }
  bool operator[](std::size_t v) const { return side_[v]; }
  void set(std::size_t v, bool side) { side_.at(v) = side; }
  const std::vector<bool>& sides() const noexcept { return side_; }
  std::size_t count_b() const noexcept;
  std::size_t count_a() const noexcept { return size() - count_b(); }
  VertexPartition flipped() const;

  friend bool operator==(const VertexPartition&, const VertexPartition&) = default;

 private:
  std::vector<bool> side_;
};

// ---------------------------------------------------------------------------
// Evaluators

/// Sum over edges (with multiplicity) of |pi(u) - pi(v)|.
std::int64_t cost_of_ordering(const MultiGraph& g, const Ordering& pi);

/// Multiplicity-weighted number of edges whose endpoints lie on opposite sides.
std::int64_t cut_size(const MultiGraph& g, const VertexPartition& p);

/// Clauses containing both a true and a false literal.
std::int64_t count_nae_satisfied(const CnfFormula& f, const Assignment& a);

/// Clauses containing at least one true literal.
std::int64_t count_satisfied(const CnfFormula& f, const Assignment& a);

/// Complement of a simple graph.
MultiGraph complement(const MultiGraph& g);

/// Weight of arcs going from a later vertex to an earlier one (loops always
/// count, they are feedback arcs in every ordering).
std::int64_t backward_arc_weight(const Digraph& d, const Ordering& pi);

/// Whether d minus the removed vertices has no directed cycle. Loops are cycles.
bool is_acyclic(const Digraph& d, const std::vector<bool>& removed);
bool is_acyclic(const Digraph& d);

/// Subgraph induced by `vertices`, renumbered in the given order.
MultiGraph induced_subgraph(const MultiGraph& g, std::span<const int> vertices);

/// g plus the given edges (each added with multiplicity 1).
MultiGraph with_added_edges(const MultiGraph& g, const EdgeList& added);

/// Exchanges two adjacent blocks of positions: [begin, begin+first_len) and
/// the block of `second_len` right after it. Internal orders are preserved.
Ordering swap_adjacent_blocks(const Ordering& pi, std::size_t begin, std::size_t first_len, std::size_t second_len);

/// C(n, k) in 64-bit arithmetic; throws DomainError on overflow.
std::int64_t binomial(std::int64_t n, std::int64_t k);

}  // namespace gapred
