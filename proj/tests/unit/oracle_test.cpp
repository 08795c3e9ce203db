#include <gtest/gtest.h>

#include "brute.hpp"
#include "gapred/error.hpp"
#include "gapred/generate.hpp"
#include "gapred/oracle.hpp"
#include "instances.hpp"

namespace gapred {
namespace {

TEST(OlaExact, MatchesPermutationEnumeration) {
  Rng rng(1);
  for (int n = 1; n <= 7; ++n)
    for (int i = 0; i < 6; ++i) {
      const MultiGraph g = testing::bernoulli_graph(n, 1, 2, rng);
      const auto r = ola_exact(g);
      EXPECT_EQ(r.value, brute::ola(g));
      EXPECT_EQ(cost_of_ordering(g, r.witness), r.value);
    }
}

TEST(OlaExact, KnownValues) {
  EXPECT_EQ(ola_exact(MultiGraph(0)).value, 0);
  EXPECT_EQ(ola_exact(testing::complete_graph(5)).value, binomial(6, 3));
  // a-b, b-c, b-d, c-d
  EXPECT_EQ(ola_exact(MultiGraph(4, {{0, 1, 1}, {1, 2, 1}, {1, 3, 1}, {2, 3, 1}})).value, 5);
  EXPECT_THROW(ola_exact(MultiGraph(21)), ResourceError);
}

TEST(MaxCut, DenseAndSparseAgreeWithEnumeration) {
  Rng rng(2);
  for (int i = 0; i < 30; ++i) {
    const MultiGraph g = testing::bernoulli_graph(2 + static_cast<int>(rng.below(8)), 1, 2, rng);
    const auto dense = max_cut_exact(g);
    const auto sparse = max_cut_exact_sparse(g);
    const auto want = brute::max_cut(g);
    EXPECT_EQ(dense.value, want);
    EXPECT_EQ(sparse.value, want);
    EXPECT_EQ(cut_size(g, dense.witness), want);
    EXPECT_EQ(cut_size(g, sparse.witness), want);
  }
}

TEST(MaxCut, SparseHandlesLongPaths) {
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < 200; ++v) edges.push_back({v, v + 1, 2});
  const MultiGraph path(200, edges);
  const auto r = max_cut_exact_sparse(path);
  EXPECT_EQ(r.value, 2 * 199);
  EXPECT_THROW(max_cut_exact(path), ResourceError);
}

TEST(MinBisection, MatchesEnumeration) {
  Rng rng(3);
  for (int i = 0; i < 20; ++i) {
    const MultiGraph g = testing::bernoulli_graph(2 * (1 + static_cast<int>(rng.below(4))), 1, 2, rng);
    const auto r = min_bisection_exact(g);
    EXPECT_EQ(r.value, brute::min_bisection(g));
    EXPECT_EQ(r.witness.count_a(), r.witness.count_b());
    EXPECT_EQ(cut_size(g, r.witness), r.value);
  }
  EXPECT_THROW(min_bisection_exact(MultiGraph(3)), DomainError);
}

TEST(SatOracles, MatchEnumeration) {
  Rng rng(4);
  for (int i = 0; i < 30; ++i) {
    const CnfFormula f = random_e3cnf(3 + static_cast<int>(rng.below(4)), 1 + static_cast<int>(rng.below(8)), rng);
    const auto sat = max_sat_exact(f);
    const auto nae = max_nae_exact(f);
    EXPECT_EQ(sat.value, brute::max_sat(f));
    EXPECT_EQ(nae.value, brute::max_nae(f));
    EXPECT_EQ(count_satisfied(f, sat.witness), sat.value);
    EXPECT_EQ(count_nae_satisfied(f, nae.witness), nae.value);
  }
}

TEST(ChainCompletion, MatchesEnumeration) {
  Rng rng(5);
  for (int i = 0; i < 25; ++i) {
    const int a = 1 + static_cast<int>(rng.below(4));
    const int b = 1 + static_cast<int>(rng.below(4));
    const BipartiteGraph h = random_bipartite(a, b, static_cast<int>(rng.below(static_cast<std::uint64_t>(a * b + 1))), rng);
    const auto r = min_chain_completion_exact(h);
    EXPECT_EQ(r.value, brute::min_chain_completion(h));
    std::vector<std::pair<int, int>> edges(h.edges().begin(), h.edges().end());
    edges.insert(edges.end(), r.witness.begin(), r.witness.end());
    EXPECT_TRUE(brute::chain(BipartiteGraph(a, b, edges)));
    EXPECT_EQ(static_cast<std::int64_t>(r.witness.size()), r.value);
  }
}

TEST(FillIn, MatchesEnumerationAndWitnessIsChordal) {
  Rng rng(6);
  for (int i = 0; i < 25; ++i) {
    const MultiGraph g = testing::bernoulli_graph(4 + static_cast<int>(rng.below(3)), 1, 2, rng);
    const auto r = min_fill_in_exact(g);
    const auto want = brute::min_completion(g, 6, [](const MultiGraph& h) { return brute::chordal(h); });
    ASSERT_TRUE(want.has_value());
    EXPECT_EQ(r.value, *want);
    EXPECT_TRUE(brute::chordal(with_added_edges(g, r.witness)));
  }
  EXPECT_EQ(min_fill_in_exact(testing::cycle_graph(6)).value, 3);
}

TEST(FasFvs, MatchEnumeration) {
  Rng rng(7);
  for (int i = 0; i < 25; ++i) {
    const int n = 2 + static_cast<int>(rng.below(5));
    const Digraph d = random_digraph(n, static_cast<int>(rng.below(static_cast<std::uint64_t>(n * (n - 1) + 1))), false, rng);
    const auto fas = min_fas_exact(d);
    const auto fvs = min_fvs_exact(d);
    EXPECT_EQ(fas.value, brute::fas(d));
    EXPECT_EQ(backward_arc_weight(d, fas.witness), fas.value);
    EXPECT_EQ(fvs.value, brute::fvs(d));
    std::vector<bool> removed(static_cast<std::size_t>(n), false);
    for (int v : fvs.witness) removed[static_cast<std::size_t>(v)] = true;
    EXPECT_TRUE(is_acyclic(d, removed));
  }
}

TEST(FasFvs, AcyclicIsZeroAndLoopsCount) {
  const Digraph dag(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
  EXPECT_EQ(min_fas_exact(dag).value, 0);
  EXPECT_EQ(min_fvs_exact(dag).value, 0);
  EXPECT_EQ(min_fas_exact(Digraph(2, {{0, 1, 3}, {1, 0, 2}})).value, 2);
  EXPECT_THROW(min_fas_exact(Digraph(19)), ResourceError);
}

}  // namespace
}  // namespace gapred
