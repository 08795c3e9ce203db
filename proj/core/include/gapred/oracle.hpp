#pragma once

// Exact exponential-time solvers and graph-class recognizers. Every solver
// refuses instances above its size cap with a ResourceError instead of
// running for hours. Among optimal witnesses the lexicographically smallest
// one is returned unless a function says otherwise.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gapred/model.hpp"

namespace gapred {

template <class Witness>
struct SolveResult {
  std::int64_t value = 0;
  Witness witness;
};

namespace caps {
inline constexpr std::size_t kOla = 20;
inline constexpr std::size_t kMaxCut = 24;
inline constexpr std::size_t kSat = 24;
inline constexpr std::size_t kBisection = 24;
inline constexpr std::size_t kChainLeft = 9;
inline constexpr std::size_t kFillIn = 16;
inline constexpr std::size_t kFas = 18;
inline constexpr std::size_t kFvs = 20;
inline constexpr std::size_t kEliminationWidth = 22;
inline constexpr std::size_t kCliquePath = 64;
inline constexpr std::size_t kExhaustive = 32;
}  // namespace caps

/// Minimum linear arrangement by a subset DP: placing the vertices of S first
/// costs the sum of cut(P) over the prefixes P, so the optimum is
/// min over orders of sum_{i<n} cut(prefix_i). O(2^n * n * deg).
SolveResult<Ordering> ola_exact(const MultiGraph& g, std::size_t cap = caps::kOla);

/// Maximum cut by Gray-code enumeration of the 2^(n-1) partitions with vertex 0
/// on side A.
SolveResult<VertexPartition> max_cut_exact(const MultiGraph& g, std::size_t cap = caps::kMaxCut);

/// Maximum cut by max-sum variable elimination along a greedy min-degree
/// order. Exponential only in the induced width of that order, which keeps
/// long sparse graphs (subdivided paths, triangle gadgets) tractable. The
/// witness puts vertex 0 on side A but is not necessarily lex-smallest.
SolveResult<VertexPartition> max_cut_exact_sparse(const MultiGraph& g,
                                                  std::size_t width_cap = caps::kEliminationWidth);

SolveResult<Assignment> max_nae_exact(const CnfFormula& f, std::size_t cap = caps::kSat);
SolveResult<Assignment> max_sat_exact(const CnfFormula& f, std::size_t cap = caps::kSat);

/// Minimum cut over partitions with |A| = |B|. Odd n is a DomainError.
SolveResult<VertexPartition> min_bisection_exact(const MultiGraph& g, std::size_t cap = caps::kBisection);

/// Minimum chain completion: enumerates left orders of A; for a fixed order
/// the cheapest completion extends N(b) to the suffix starting at b's
/// earliest neighbor. Witness lists the added (a, b) pairs.
SolveResult<EdgeList> min_chain_completion_exact(const BipartiteGraph& h, std::size_t cap = caps::kChainLeft);

/// Minimum fill-in of a simple graph by a DP over eliminated sets. With Q(S, v)
/// the vertices outside S + v reachable from v through S, the filled graph of
/// an elimination order has sum |Q| edges. The witness is the fill of the
/// lexicographically smallest optimal elimination order.
SolveResult<EdgeList> min_fill_in_exact(const MultiGraph& g, std::size_t cap = caps::kFillIn);

/// Minimum feedback arc set, weighted by multiplicity. Loops are always
/// feedback arcs. The witness ordering has minimum backward weight.
SolveResult<Ordering> min_fas_exact(const Digraph& d, std::size_t cap = caps::kFas);

/// Smallest vertex set whose removal leaves d acyclic (enumerated by size).
SolveResult<std::vector<int>> min_fvs_exact(const Digraph& d, std::size_t cap = caps::kFvs);

// ---------------------------------------------------------------------------
// Recognizers (simple graphs only; loops or multiplicities are DomainErrors)

/// Maximum cardinality search followed by a perfect-elimination check.
bool is_chordal(const MultiGraph& g);

/// Chordal, and the maximal cliques admit a consecutive arrangement
/// (every vertex lies in a contiguous run of cliques).
bool is_interval(const MultiGraph& g, std::size_t cap = caps::kCliquePath);

/// Interval and claw-free.
bool is_proper_interval(const MultiGraph& g, std::size_t cap = caps::kCliquePath);

/// Repeatedly strips an isolated or a dominating vertex.
bool is_threshold(const MultiGraph& g);

/// No induced P4 and no induced C4, by exhaustive search over 4-sets.
bool is_trivially_perfect(const MultiGraph& g, std::size_t cap = caps::kExhaustive);

/// Neighborhoods of A pairwise nested.
bool is_chain(const BipartiteGraph& h);

/// Maximal cliques of a chordal graph, each sorted, in perfect-elimination
/// order of their lowest vertex. Throws DomainError on non-chordal input.
std::vector<std::vector<int>> maximal_cliques_chordal(const MultiGraph& g);

}  // namespace gapred
