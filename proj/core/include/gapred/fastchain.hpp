#pragma once

// NAE3-SAT -> occurrence-bounded 2/3-SAT -> FVS -> FAS -> simple FAS ->
// blow-up -> FAS in tournaments. Each step records its gap; the optimum
// correspondences are exact except for the final random completion, which
// is sandwiched between fas(G_t) and fas(G_t) + |E(R_t)|.

#include <cstdint>
#include <string>
#include <vector>

#include "gapred/expander.hpp"
#include "gapred/model.hpp"
#include "gapred/rational.hpp"
#include "gapred/satchain.hpp"

namespace gapred {

/// Counts of one variable's occurrences by clause width.
struct VariableProfile {
  Occurrences three;
  Occurrences two;
};

struct ProfileAudit {
  bool ok = false;
  /// The common d, or -1 when the 2-clause counts disagree.
  int d = -1;
  std::int64_t two_clauses = 0;
  std::int64_t three_clauses = 0;
  std::vector<VariableProfile> per_variable;
  std::vector<std::string> violations;
};

/// Every variable exactly once positive and once negative among 3-clauses,
/// exactly d positive and d negative among 2-clauses, no clause of another
/// width.
ProfileAudit audit_profile(const CnfFormula& f);

struct SsatReduction {
  GapInstance<CnfFormula> output;
  CnfFormula source;
  int d = 0;
  /// Output variable 3j + t is occurrence t of clause j.
  std::vector<MultiGraph> gadgets;  // per source variable, on its n(x) occurrences
  std::vector<std::vector<int>> copies;  // per source variable, output variables in order
  ProfileAudit profile;

  /// Majority vote over each variable's copies; ties give false. Variables
  /// without occurrences get false.
  Assignment lift(const Assignment& out) const;
  /// Every copy takes the value of its source variable.
  Assignment expand(const Assignment& in) const;
};

/// Exact-3-CNF with gap [alpha, 1]. Each variable's copies are wired by an
/// expander with h >= 2, all sharing one degree d. Clause order: C'_j, C''_j
/// for every clause j, then the gadget clauses variable by variable.
SsatReduction nae3_to_ssat(const GapInstance<CnfFormula>& in, std::uint64_t seed);

struct FvsReduction {
  GapInstance<Digraph> output;
  int d = 0;  // in/out-degree is d + 2

  /// x is true when u_top (vertex 2x) is in the set and u_bot is not.
  Assignment lift(const std::vector<int>& fvs) const;
};

/// Vertex 2x is u_top, 2x+1 is u_bot. Gap becomes [1/2, (4 - alpha)/6].
FvsReduction ssat_to_fvs(const GapInstance<CnfFormula>& in);

struct FasReduction {
  GapInstance<Digraph> output;
  int source_n = 0;
  std::int64_t r = 0;

  /// Backward arcs of pi, with every split arc (u+, v-) replaced by the
  /// vertex arc (v-, v+); the vertices of those arcs form the set.
  std::vector<int> lift(const Ordering& pi) const;
};

/// u- = 2u, u+ = 2u+1; arc (u-, u+) per vertex and (u+, v-) per arc (u, v).
/// Input must be loop-free with indeg = outdeg = r everywhere.
FasReduction fvs_to_fas(const GapInstance<Digraph>& in);

/// Each arc copy (u, v) becomes u -> w -> v with w = n + copy index. A loop
/// becomes a 2-cycle, so the output is simple only for loop-free input.
Digraph subdivide_arcs(const Digraph& d);
GapInstance<Digraph> subdivide_arcs(const GapInstance<Digraph>& in);

/// Vertex u becomes u*t .. u*t + t-1; (u_i, v_j) for every arc (u, v).
Digraph blowup(const Digraph& d, int t);

struct TournamentCompletion {
  Digraph tournament;
  /// |E(R_t)|, the number of randomly oriented pairs.
  std::int64_t random_arcs = 0;
};

/// Orients every non-adjacent pair, in lexicographic order, by a fair coin.
/// Input must be simple without antiparallel pairs.
TournamentCompletion complete_to_tournament(const Digraph& d, std::uint64_t seed);

struct FastParams {
  int d = 0;
  int blow_factor = 1;
  GapParams gap;
  Rational low;
  Rational high;
};

/// low = (2 alpha + beta)/3 t^2 m + |E(R)|/2, high = (alpha + 2 beta)/3 t^2 m + |E(R)|/2,
/// with m the arc count before blowing up.
FastParams tournament_thresholds(const GapParams& gap, int d, int t, std::int64_t m, std::int64_t random_arcs);

struct MonteCarloReport {
  std::int64_t fas_blown = 0;  // fas(G_t)
  int trials = 0;
  int sandwich_violations = 0;
  double mean_shifted = 0;    // mean of fas(T_t) - |E(R_t)|/2
  double standard_error = 0;  // of that mean
  bool within_three_se = false;
  std::vector<std::int64_t> fas_values;
  std::vector<std::int64_t> random_arcs;
};

/// Completes blowup(g, t) with `trials` seeds derived from `seed` and solves
/// each tournament exactly.
MonteCarloReport tournament_monte_carlo(const Digraph& g, int t, int trials, std::uint64_t seed);

}  // namespace gapred
