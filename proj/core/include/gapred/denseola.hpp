#pragma once

// Gap MaxCut -> OLA through a clique separator of linear size. The output is
// the complement of the source plus a clique C of M*n vertices joined to
// every source vertex; a cut (A, B) corresponds to the arrangement A, C, B.

#include <cstdint>

#include "gapred/model.hpp"
#include "gapred/rational.hpp"
#include "gapred/satchain.hpp"

namespace gapred {

struct DenseOlaOutput {
  MultiGraph graph;
  MultiGraph source;
  GapParams gap;
  std::int64_t M = 0;
  /// Clique vertices are [clique_begin, clique_end); source vertices keep ids 0..n-1.
  int clique_begin = 0;
  int clique_end = 0;
  int source_n = 0;
  std::int64_t source_m = 0;
  /// ceil(beta * m): integer cut sizes reach beta*m exactly when they reach this.
  std::int64_t yes_threshold = 0;
  /// True when beta*m was not an integer and had to be rounded up.
  bool threshold_rounded = false;
  /// C((M+1)n + 1, 3) - yes_threshold * M * n.
  std::int64_t budget = 0;

  /// Cost of every ordering of the complete graph on all (M+1)n vertices.
  std::int64_t complete_cost() const;
};

/// Requires a simple source graph.
DenseOlaOutput maxcut_to_ola(const GapInstance<MultiGraph>& in);

/// A (ascending ids), then the clique, then B.
Ordering ordering_from_cut(const DenseOlaOutput& out, const VertexPartition& cut);

/// Sum of |pi(u) - pi(v)| over the source edges, evaluated with positions in
/// an ordering of the output graph. Together with the output cost this is
/// always complete_cost().
std::int64_t source_cost_under(const DenseOlaOutput& out, const Ordering& pi);

struct CliqueNormalization {
  Ordering ordering;  // clique consecutive, cost not larger than the input's
  int moves = 0;
};

/// Makes the clique consecutive with the two exchange moves: with X the
/// inner block after the left-most clique block, move X left past that block
/// when X has at most as many source edges to its left as to its right,
/// otherwise move X right past the next clique block.
CliqueNormalization make_clique_consecutive(const DenseOlaOutput& out, const Ordering& pi);

/// A = source vertices left of the clique, B = those right of it, after
/// make_clique_consecutive.
VertexPartition cut_from_ordering(const DenseOlaOutput& out, const Ordering& pi);

}  // namespace gapred
