#pragma once

// E3-SAT -> NAE4-SAT -> NAE3-SAT -> multigraph MaxCut -> simple MaxCut, each
// step with exact gap bookkeeping and a lifter that maps any output witness
// back to an input witness at least as good as the step's translation.

#include <cstdint>

#include "gapred/model.hpp"
#include "gapred/rational.hpp"

namespace gapred {

/// An instance together with its gap; `unit` is the clause or edge count the
/// gap fractions refer to and must equal the instance's own m.
template <class T>
struct GapInstance {
  T instance;
  GapParams gap;
  std::int64_t unit = 0;
};

GapInstance<CnfFormula> make_gap_instance(CnfFormula f, GapParams gap);
GapInstance<MultiGraph> make_gap_instance(MultiGraph g, GapParams gap);

/// Appends one fresh variable z (index var_count) to every clause.
struct Nae4Reduction {
  GapInstance<CnfFormula> output;
  int z = 0;

  /// Negates globally when z is true, then drops z.
  Assignment lift(const Assignment& out) const;
};
Nae4Reduction e3sat_to_nae4sat(const GapInstance<CnfFormula>& in);

/// l1 v l2 v l3 v l4 becomes (l1 v l2 v z_i) and (l3 v l4 v -z_i), with z_i
/// allocated densely after the input variables.
struct Nae3Reduction {
  GapInstance<CnfFormula> output;
  int source_vars = 0;

  /// Restriction to the input variables.
  Assignment lift(const Assignment& out) const;
};
Nae3Reduction nae4sat_to_nae3sat(const GapInstance<CnfFormula>& in);

/// Vertex 2i stands for x_i and 2i+1 for -x_i; n_i parallel edges join the
/// pair and every clause contributes a triangle on its literal vertices.
struct MultiCutReduction {
  GapInstance<MultiGraph> output;
  CnfFormula source;

  /// Splits every unsplit literal pair by moving whichever of its two
  /// vertices yields the larger cut (ties move -x_i), then sets x_i true iff
  /// vertex 2i is on side B.
  Assignment lift(const VertexPartition& out) const;
  /// The normalization step on its own; never decreases the cut.
  VertexPartition normalize(const VertexPartition& out) const;
};
MultiCutReduction nae3sat_to_multicut(const GapInstance<CnfFormula>& in);

/// Every edge copy uv (in edge order, copies consecutive) becomes the path
/// u - w - z - v with w = n + 2e and z = n + 2e + 1.
struct SimpleCutReduction {
  GapInstance<MultiGraph> output;
  int source_n = 0;

  /// Restriction to the input vertices.
  VertexPartition lift(const VertexPartition& out) const;
};
SimpleCutReduction multicut_to_simplecut(const GapInstance<MultiGraph>& in);

/// All four steps applied in sequence.
struct SatChain {
  GapInstance<CnfFormula> source;
  Nae4Reduction nae4;
  Nae3Reduction nae3;
  MultiCutReduction multicut;
  SimpleCutReduction simplecut;

  Assignment lift(const VertexPartition& simple_cut) const;
};
SatChain run_satchain(const GapInstance<CnfFormula>& in);

/// Closed form of the composed gap: [(16 + alpha)/18, (16 + beta)/18].
GapParams satchain_closed_form(const GapParams& gap);

}  // namespace gapred
