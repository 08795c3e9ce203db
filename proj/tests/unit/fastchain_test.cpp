#include <gtest/gtest.h>

#include "brute.hpp"
#include "gapred/error.hpp"
#include "gapred/fastchain.hpp"
#include "gapred/generate.hpp"
#include "gapred/oracle.hpp"
#include "instances.hpp"

namespace gapred {
namespace {

const GapParams kFull(Rational(0), Rational(1));

GapInstance<Digraph> digraph_instance(Digraph d, GapParams gap) {
  const std::int64_t n = d.n();
  return {std::move(d), std::move(gap), n};
}

TEST(Nae3ToSsat, ProfileAndClauseCounts) {
  Rng rng(1);
  for (int i = 0; i < 10; ++i) {
    const CnfFormula f = random_e3cnf(4, 3, rng);
    const SsatReduction r = nae3_to_ssat(make_gap_instance(f, kFull), 10 + i);
    EXPECT_TRUE(r.profile.ok);
    EXPECT_EQ(r.profile.d, r.d);
    EXPECT_EQ(r.output.instance.var_count(), 9);
    EXPECT_EQ(r.profile.three_clauses, 6);
    EXPECT_EQ(r.profile.two_clauses, 3 * 3 * r.d);
    EXPECT_EQ(r.output.gap.alpha(), Rational(1 + 3 * r.d, 2 + 3 * r.d));
  }
}

TEST(Nae3ToSsat, OptimumShiftAndMajorityLift) {
  Rng rng(2);
  for (int i = 0; i < 8; ++i) {
    const CnfFormula f = random_e3cnf(4, 2, rng);
    const SsatReduction r = nae3_to_ssat(make_gap_instance(f, kFull), i);
    const auto sat = max_sat_exact(r.output.instance);
    const std::int64_t nae = max_nae_exact(f).value;
    EXPECT_EQ(sat.value, (1 + 3 * r.d) * 2 + nae);
    EXPECT_EQ(count_nae_satisfied(f, r.lift(sat.witness)), nae);
    const Assignment expanded = r.expand(r.lift(sat.witness));
    EXPECT_EQ(count_satisfied(r.output.instance, expanded), sat.value);
  }
}

TEST(Nae3ToSsat, RequiresExactWidthAndPerfectCompleteness) {
  EXPECT_THROW(nae3_to_ssat(make_gap_instance(CnfFormula(2, {{{0, true}, {1, true}}}), kFull), 1), DomainError);
  const CnfFormula f(3, {{{0, true}, {1, true}, {2, true}}});
  EXPECT_THROW(nae3_to_ssat(make_gap_instance(f, GapParams(Rational(0), Rational(1, 2))), 1), DomainError);
}

TEST(AuditProfile, FlagsIrregularFormulas) {
  const CnfFormula f(2, {{{0, true}, {1, true}}, {{0, false}, {1, true}}});
  EXPECT_FALSE(audit_profile(f).ok);
  EXPECT_FALSE(audit_profile(f).violations.empty());
}

TEST(SsatToFvs, StructureAndLift) {
  Rng rng(3);
  const CnfFormula f = random_e3cnf(4, 2, rng);
  const SsatReduction s = nae3_to_ssat(make_gap_instance(f, kFull), 4);
  const FvsReduction r = ssat_to_fvs(s.output);
  EXPECT_EQ(r.output.instance.n(), 2 * s.output.instance.var_count());
  EXPECT_TRUE(r.output.instance.is_balanced_regular(r.d + 2));
  EXPECT_EQ(r.output.gap, GapParams(Rational(1, 2), (4 - s.output.gap.alpha()) / 6));
  const auto fvs = min_fvs_exact(r.output.instance);
  EXPECT_EQ(fvs.value, s.output.instance.var_count());
  EXPECT_EQ(count_satisfied(s.output.instance, r.lift(fvs.witness)),
            static_cast<std::int64_t>(s.output.instance.clause_count()));
}

TEST(SsatToFvs, RejectsBadProfile) {
  const CnfFormula f(2, {{{0, true}, {1, true}}});
  EXPECT_THROW(ssat_to_fvs(make_gap_instance(f, kFull)), DomainError);
}

TEST(FvsToFas, EqualityAndLiftOnRegularDigraphs) {
  Rng rng(4);
  for (int i = 0; i < 20; ++i) {
    const int n = 2 + static_cast<int>(rng.below(5));
    const Digraph d = testing::random_balanced_regular(n, 1 + static_cast<int>(rng.below(2)), rng);
    const FasReduction r = fvs_to_fas(digraph_instance(d, GapParams(Rational(1, 4), Rational(1, 2))));
    EXPECT_EQ(r.output.instance.n(), 2 * n);
    const auto fas = min_fas_exact(r.output.instance);
    EXPECT_EQ(fas.value, brute::fvs(d));
    const std::vector<int> lifted = r.lift(fas.witness);
    std::vector<bool> removed(static_cast<std::size_t>(n), false);
    for (int v : lifted) removed[static_cast<std::size_t>(v)] = true;
    EXPECT_TRUE(is_acyclic(d, removed));
    EXPECT_LE(static_cast<std::int64_t>(lifted.size()), fas.value);
    EXPECT_EQ(r.output.unit, (r.r + 1) * n);
  }
}

TEST(FvsToFas, RejectsUnbalancedInput) {
  EXPECT_THROW(fvs_to_fas(digraph_instance(Digraph(2, {{0, 1, 1}}), kFull)), DomainError);
}

TEST(SubdivideArcs, PreservesFas) {
  Rng rng(5);
  for (int i = 0; i < 15; ++i) {
    const Digraph d = random_digraph(5, 8, false, rng);
    const Digraph s = subdivide_arcs(d);
    EXPECT_EQ(s.n(), d.n() + d.arc_count());
    EXPECT_EQ(s.arc_count(), 2 * d.arc_count());
    EXPECT_EQ(min_fas_exact(s).value, min_fas_exact(d).value);
  }
  const GapInstance<Digraph> g = subdivide_arcs(GapInstance<Digraph>{testing::directed_cycle(3), kFull, 3});
  EXPECT_EQ(g.unit, 6);
  EXPECT_EQ(g.gap, GapParams(Rational(0), Rational(1, 2)));
}

TEST(Blowup, SquaresFas) {
  for (int t : {2, 3}) {
    EXPECT_EQ(min_fas_exact(blowup(testing::directed_cycle(3), t)).value, t * t);
    EXPECT_EQ(min_fas_exact(blowup(testing::directed_cycle(4), t)).value, t * t);
  }
  const Digraph b = blowup(testing::directed_cycle(3), 2);
  EXPECT_EQ(b.n(), 6);
  EXPECT_EQ(b.arc_count(), 12);
  EXPECT_THROW(blowup(testing::directed_cycle(3), 0), DomainError);
}

TEST(CompleteToTournament, IsTournamentAndDeterministic) {
  const Digraph g = blowup(testing::directed_cycle(3), 2);
  const TournamentCompletion a = complete_to_tournament(g, 9);
  const TournamentCompletion b = complete_to_tournament(g, 9);
  EXPECT_EQ(a.tournament, b.tournament);
  const int n = g.n();
  EXPECT_EQ(a.tournament.arc_count(), n * (n - 1) / 2);
  EXPECT_EQ(a.random_arcs, n * (n - 1) / 2 - g.arc_count());
  EXPECT_FALSE(a.tournament.has_antiparallel_pair());
  EXPECT_THROW(complete_to_tournament(Digraph(2, {{0, 1, 1}, {1, 0, 1}}), 1), DomainError);
}

TEST(TournamentMonteCarlo, SandwichHolds) {
  const MonteCarloReport r = tournament_monte_carlo(testing::directed_cycle(3), 2, 10, 3);
  EXPECT_EQ(r.trials, 10);
  EXPECT_EQ(r.sandwich_violations, 0);
  EXPECT_EQ(r.fas_blown, 4);
}

TEST(TournamentThresholds, ScaleWithBlowFactor) {
  const FastParams p = tournament_thresholds(GapParams(Rational(1, 4), Rational(1, 2)), 2, 2, 10, 6);
  EXPECT_LT(p.low, p.high);
  EXPECT_EQ(p.blow_factor, 2);
}

}  // namespace
}  // namespace gapred
