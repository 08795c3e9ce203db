#pragma once

// Gap Min Bisection on d_G-regular graphs -> OLA on bounded-degree graphs.
// T(G) keeps G and adds a vertex set H split into Z blocks H_1..H_Z of
// ceil(phi*n) vertices each: one expander spans all of H, one expander spans
// each H_i, and every G-vertex has exactly one edge into every H_i. The
// expanders keep H (and each H_i) consecutive in optimal arrangements, so H
// plays the role a large clique plays in the dense reduction.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "gapred/expander.hpp"
#include "gapred/model.hpp"
#include "gapred/rational.hpp"

namespace gapred {

enum class ParamMode { paper, desk };

std::string to_string(ParamMode mode);

/// One named inequality from the parameter derivation and whether it holds.
struct ParamCheck {
  std::string name;
  bool holds = false;
  std::string detail;
};

/// Desk-mode replacements. Zero (or an unset rational) keeps the formula value.
struct SparseOverrides {
  int Z = 0;
  Rational phi = 0;
  std::int64_t p_H = 0;
  /// Used for every block when positive.
  std::int64_t p_Hi = 0;
};

struct SparseParams {
  ParamMode mode = ParamMode::paper;
  Rational alpha;
  Rational beta;
  int d_G = 0;
  Rational gamma;
  Rational phi;
  int Z = 0;
  /// ceil(1/phi), the bound on the H_i side of each bipartite attachment.
  std::int64_t delta_HG = 0;
  BigInt p_H;
  BigInt d_H;
  /// Index i-1 holds the value for block H_i.
  std::vector<BigInt> p_Hi;
  std::vector<BigInt> d_Hi;
  /// True until build_T replaces the degrees with the ones actually achieved.
  bool degrees_provisional = true;
  std::vector<ParamCheck> checks;

  bool all_checks_hold() const;
  /// d_G + Z + d_H + max d_Hi + delta_HG.
  BigInt degree_bound() const;
};

/// Paper mode requires d_G >= 2 and d_G > 4/(beta - alpha). Desk mode applies
/// the overrides and reports every violated inequality in `checks`.
SparseParams derive_params(const GapParams& gap, int d_G, ParamMode mode, const SparseOverrides& overrides = {});

/// Recomputes the inequality list from the current field values.
std::vector<ParamCheck> check_params(const SparseParams& params);

struct SparseLayout {
  MultiGraph graph;
  SparseParams params;
  int n = 0;
  std::int64_t m = 0;
  /// ceil(phi * n), the size of each H_i.
  int block_size = 0;
  /// H occupies [n, n + Z*block_size); H_i is [n + (i-1)*block_size, n + i*block_size).
  int h_begin() const { return n; }
  int h_end() const { return n + params.Z * block_size; }
  int block_begin(int i) const { return n + (i - 1) * block_size; }
  ExpanderSpec h_expander;
  std::vector<ExpanderSpec> block_expanders;  // index i-1
  /// Largest bipartite degree actually achieved on the H side.
  std::int64_t achieved_delta_HG = 0;

  bool is_h(int v) const { return v >= h_begin() && v < h_end(); }
  /// G' restricted to H, with H vertex n + j renumbered to j.
  MultiGraph h_subgraph() const;
};

/// g must be simple, d_G-regular and have an even number of vertices. The H
/// expander and the H_i expanders come from independent seed streams; p_Hi is
/// recomputed from achieved degrees in the order i = Z..1 unless overridden.
SparseLayout build_T(const MultiGraph& g, const SparseParams& params, std::uint64_t seed,
                     const SparseOverrides& overrides = {});

enum class AlphaRounding { exact, floor };

/// The constant part of the budget, everything except OLA(H).
struct BudgetTerms {
  BigInt alpha_m;   // alpha*m, or floor(alpha*m) under AlphaRounding::floor
  BigInt crossing;  // alpha_m * (Z*c + n)
  BigInt internal;  // m * n / 2
  BigInt attach;    // (n/2 + 1)(n/2) Z + n * c * Z(Z+1)/2

  BigInt constant() const { return crossing + internal + attach; }
};

/// Evaluated from sizes alone, so a recorded (n, m, Z, c, alpha) suffices to
/// re-derive a budget. Throws DomainError for odd n, or for non-integral
/// alpha*m under AlphaRounding::exact.
BudgetTerms budget_terms(int n, std::int64_t m, int Z, int block_size, const Rational& alpha,
                         AlphaRounding rounding = AlphaRounding::exact);

/// k = ola_of_H + budget_terms(...).constant().
std::int64_t compute_budget(const SparseLayout& layout, std::int64_t ola_of_H,
                            AlphaRounding rounding = AlphaRounding::exact);

/// k as OLA(H) * coefficient + constant, for when OLA(H) is not computed.
struct SymbolicBudget {
  int ola_coefficient = 1;
  BigInt constant;
};
SymbolicBudget compute_budget_symbolic(const SparseLayout& layout, AlphaRounding rounding = AlphaRounding::exact);

/// A (ascending ids), then H in pi_H order, then B. pi_H orders the local
/// indices of h_subgraph(). Throws DomainError for an unbalanced partition.
Ordering ordering_from_bisection(const SparseLayout& layout, const VertexPartition& p, const Ordering& pi_H);

struct StructureReport {
  bool h_consecutive = false;
  std::vector<bool> block_consecutive;  // index i-1
  /// ||L(H) cap V(G)| - |R(H) cap V(G)||, meaningful when h_consecutive.
  int imbalance = 0;
  Rational gamma_n;
  bool imbalance_within_gamma_n = false;
};
StructureReport structure_report(const SparseLayout& layout, const Ordering& pi);

/// Makes H consecutive by block swaps: the left-most H block moves right past
/// the next non-H block, or when that block holds more than half of H, the
/// right-most H block moves left past the non-H block before it.
Ordering make_h_consecutive(const SparseLayout& layout, const Ordering& pi);

/// Splits V(G) at H (after make_h_consecutive) and then moves the
/// lowest-id vertices of the larger side until the sides are equal.
VertexPartition bisection_from_ordering(const SparseLayout& layout, const Ordering& pi);

/// Two adjacent position blocks: X = [x_begin, x_begin + x_len), Y right after it.
struct BlockPair {
  std::size_t x_begin = 0;
  std::size_t x_len = 0;
  std::size_t y_len = 0;
};

struct SwapBounds {
  std::int64_t P_X = 0;  // max over x in X of edges into L(X)
  std::int64_t P_C = 0;  // max degree of the bipartite graph between X and Y
  std::int64_t P_Y = 0;  // max over y in Y of edges into R(Y)
  Rational p;            // average over x in X of edges into R(Y)

  /// p > P_X + 2 P_C + P_Y, under which the swap strictly lowers the cost.
  bool condition() const { return p > Rational(P_X + 2 * P_C + P_Y); }
};

/// Throws DomainError for empty or out-of-range blocks.
SwapBounds swap_bounds(const MultiGraph& g, const Ordering& pi, const BlockPair& blocks);

/// Exchanges the positions of X and Y, keeping their internal orders.
Ordering apply_swap(const Ordering& pi, const BlockPair& blocks);

}  // namespace gapred
