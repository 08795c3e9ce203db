// Acceptance suite: one PASS/FAIL line per headline property, each backed by
// exact solvers on seeded instance families. Exit status is nonzero when any
// line fails.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "brute.hpp"
#include "gapred/completion.hpp"
#include "gapred/denseola.hpp"
#include "gapred/expander.hpp"
#include "gapred/fastchain.hpp"
#include "gapred/generate.hpp"
#include "gapred/oracle.hpp"
#include "gapred/satchain.hpp"
#include "gapred/sparseola.hpp"
#include "instances.hpp"

namespace gapred {
namespace {

// Collects failures with enough context to reproduce them.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  bool ok() const { return failed_ == 0; }
  std::int64_t checks() const { return checks_; }
  std::int64_t failed() const { return failed_; }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::int64_t checks_ = 0;
  std::int64_t failed_ = 0;
  std::vector<std::string> failures_;
};

struct Outcome {
  bool pass;
  std::string summary;
};

template <class T>
std::string show(const T& v) {
  std::ostringstream out;
  out << v;
  return out.str();
}

Outcome finish(const Tally& t, std::string summary) {
  if (!t.ok()) {
    summary += "; " + show(t.failed()) + " of " + show(t.checks()) + " checks failed, first:";
    for (const std::string& f : t.failures()) summary += "\n    " + f;
  }
  return {t.ok(), std::move(summary)};
}

// ---------------------------------------------------------------------------

Outcome satchain_identities() {
  Tally t;
  Rng root(1001);
  for (int i = 0; i < 100; ++i) {
    Rng rng = root.split(static_cast<std::uint64_t>(i));
    const int n = 3 + static_cast<int>(rng.below(4));
    const int m = 1 + static_cast<int>(rng.below(8));
    const CnfFormula f = random_e3cnf(n, m, rng);
    const GapParams gap(Rational(static_cast<std::int64_t>(rng.below(8)), 8), Rational(1));
    const SatChain chain = run_satchain(make_gap_instance(f, gap));
    const std::string tag = "formula " + show(i) + " (n=" + show(n) + ", m=" + show(m) + ")";

    const std::int64_t sat = max_sat_exact(f).value;
    const std::int64_t nae4 = max_nae_exact(chain.nae4.output.instance).value;
    const std::int64_t nae3 = max_nae_exact(chain.nae3.output.instance).value;
    const std::int64_t m3 = static_cast<std::int64_t>(chain.nae3.output.instance.clause_count());
    const std::int64_t multi = max_cut_exact_sparse(chain.multicut.output.instance).value;
    const std::int64_t m_multi = chain.multicut.output.instance.edge_count();
    const std::int64_t simple = max_cut_exact_sparse(chain.simplecut.output.instance).value;

    t.expect(nae4 == sat, tag + ": max_nae(NAE4) " + show(nae4) + " vs max_sat " + show(sat));
    t.expect(nae3 == m + nae4, tag + ": max_nae(NAE3) " + show(nae3) + " vs m + " + show(nae4));
    t.expect(multi == 3 * m3 + 2 * nae3, tag + ": multicut " + show(multi));
    t.expect(simple == 2 * m_multi + multi, tag + ": simple cut " + show(simple));
    t.expect(chain.simplecut.output.gap.alpha() == (16 + gap.alpha()) / 18 &&
                 chain.simplecut.output.gap.beta() == (16 + gap.beta()) / 18,
             tag + ": composed gap " + to_string(chain.simplecut.output.gap));
  }
  return finish(t, "100 formulas, " + show(t.checks()) + " exact equalities incl. (16+alpha)/18 gap");
}

// ---------------------------------------------------------------------------

// All clique vertices have the same closed neighbourhood (everything), and the
// source cost ignores them, so permuting clique vertices among clique
// positions leaves both sides of the identity unchanged. Enumerating where the
// source vertices sit (and in which order) therefore covers every ordering.
void for_each_source_placement(int total, int sources, const std::function<void(const Ordering&)>& visit) {
  std::vector<int> slot(static_cast<std::size_t>(sources), -1);
  std::vector<bool> used(static_cast<std::size_t>(total), false);
  std::function<void(int)> place = [&](int v) {
    if (v == sources) {
      std::vector<int> perm(static_cast<std::size_t>(total), -1);
      for (int s = 0; s < sources; ++s) perm[static_cast<std::size_t>(slot[s])] = s;
      int next = sources;
      for (int& p : perm)
        if (p < 0) p = next++;
      visit(Ordering(perm));
      return;
    }
    for (int pos = 0; pos < total; ++pos) {
      if (used[pos]) continue;
      used[pos] = true;
      slot[v] = pos;
      place(v + 1);
      used[pos] = false;
    }
  };
  place(0);
}

Outcome denseola_bounds() {
  Tally t;
  const GapParams full(Rational(0), Rational(1));
  std::int64_t placements = 0;
  for (int n = 1; n <= 4; ++n)
    for (const MultiGraph& g : testing::all_simple_graphs(n)) {
      const DenseOlaOutput d = maxcut_to_ola(make_gap_instance(g, full));
      for_each_source_placement(d.graph.n(), n, [&](const Ordering& pi) {
        ++placements;
        const std::int64_t lhs = cost_of_ordering(d.graph, pi) + source_cost_under(d, pi);
        t.expect(lhs == d.complete_cost(), "identity off on n=" + show(n) + ": " + show(lhs));
      });
    }

  Rng root(2002);
  int graphs = 0;
  int yes = 0;
  for (int i = 0; graphs < 50; ++i) {
    Rng rng = root.split(static_cast<std::uint64_t>(i));
    const MultiGraph g = testing::bernoulli_graph(2 + static_cast<int>(rng.below(4)), 1, 2, rng);
    if (g.edge_count() == 0) continue;
    ++graphs;
    const DenseOlaOutput d = maxcut_to_ola(make_gap_instance(g, full));
    const auto cut = max_cut_exact(g);
    const auto ola = ola_exact(d.graph);
    const std::string tag = "graph " + show(i) + " (n=" + show(g.n()) + ", m=" + show(g.edge_count()) + ")";
    if (cut.value >= d.yes_threshold) {
      ++yes;
      t.expect(ola.value <= d.budget, tag + ": forward, OLA " + show(ola.value) + " > " + show(d.budget));
      t.expect(cost_of_ordering(d.graph, ordering_from_cut(d, cut.witness)) <= d.budget, tag + ": forward witness");
    }
    if (ola.value <= d.budget) {
      t.expect(Rational(cut.value) > full.alpha() * g.edge_count(), tag + ": backward");
      const std::int64_t lifted = cut_size(g, cut_from_ordering(d, ola.witness));
      t.expect(Rational(lifted) > full.alpha() * g.edge_count(), tag + ": backward witness " + show(lifted));
    }
  }
  return finish(t, "identity on " + show(placements) + " source placements (all orderings up to clique symmetry, n<=4); " +
                      "bounds on 50 graphs (" + show(yes) + " yes-instances)");
}

// ---------------------------------------------------------------------------

// The minimal chain supergraph of G' in which A is nested along pi: each B
// vertex gets every A vertex from its earliest neighbour's position on.
std::int64_t explicit_chain_completion(const ChainInstance& ci, const Ordering& pi, Tally& t) {
  const BipartiteGraph& h = ci.graph;
  const auto pos = pi.positions();
  std::vector<std::pair<int, int>> edges;
  for (int b = 0; b < h.b_size(); ++b) {
    int earliest = h.a_size();
    for (int a : h.neighbors_of_b(b)) earliest = std::min(earliest, pos[a]);
    for (int p = earliest; p < h.a_size(); ++p) edges.emplace_back(pi[static_cast<std::size_t>(p)], b);
  }
  const BipartiteGraph completed(h.a_size(), h.b_size(), edges);
  bool contains = true;
  for (const auto& [a, b] : h.edges()) contains = contains && completed.has_edge(a, b);
  t.expect(contains && brute::chain(completed), "suffix completion is not a chain supergraph");
  return static_cast<std::int64_t>(completed.edges().size() - h.edges().size());
}

Outcome completion_transfer() {
  Tally t;
  std::int64_t pairs = 0;
  auto claim = [&](const MultiGraph& g) {
    const ChainInstance ci = ola_to_chain(g, 0);
    const std::int64_t offset =
        g.max_degree() * g.n() * (g.n() - 1) / 2 - 2 * g.edge_count();
    for (const auto& perm : testing::all_permutations(g.n())) {
      const Ordering pi(perm);
      ++pairs;
      const std::int64_t e = explicit_chain_completion(ci, pi, t);
      t.expect(e == cost_of_ordering(g, pi) + offset, "per-ordering identity off: E=" + show(e));
      t.expect(chain_cost_for_order(ci, pi) == e, "chain_cost_for_order disagrees");
    }
  };
  for (int n = 1; n <= 5; ++n)
    for (const MultiGraph& g : testing::all_simple_graphs(n)) claim(g);
  for (int n = 2; n <= 4; ++n)
    for (const MultiGraph& g : testing::all_multigraphs(n, 2)) claim(g);

  Rng root(3003);
  for (int i = 0; i < 30; ++i) {
    Rng rng = root.split(static_cast<std::uint64_t>(i));
    const MultiGraph g = testing::bernoulli_graph(2 + static_cast<int>(rng.below(5)), 1, 2, rng);
    const ChainInstance ci = ola_to_chain(g, 0);
    const std::int64_t chain = min_chain_completion_exact(ci.graph).value;
    t.expect(chain == ola_exact(g).value + ci.offset(), "optimum transfer on graph " + show(i));
  }

  int bipartite = 0;
  for (int i = 0; bipartite < 50; ++i) {
    Rng rng = root.split("bipartite").split(static_cast<std::uint64_t>(i));
    const int a = 1 + static_cast<int>(rng.below(6));
    const int b = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(9 - a)));
    if (a + b > 9) continue;
    ++bipartite;
    const BipartiteGraph h = random_bipartite(a, b, static_cast<int>(rng.below(static_cast<std::uint64_t>(a * b + 1))), rng);
    const MultiGraph ch = cliques_on_both_sides(h);
    const auto fill = min_fill_in_exact(ch);
    const std::int64_t chain = min_chain_completion_exact(h).value;
    t.expect(fill.value == chain, "fill-in " + show(fill.value) + " vs chain " + show(chain));
    const MultiGraph filled = with_added_edges(ch, fill.witness);
    t.expect(is_interval(filled) && is_proper_interval(filled), "fill-in witness outside interval/proper interval");
  }

  const MultiGraph fig(4, {{0, 1, 1}, {1, 2, 1}, {1, 3, 1}, {2, 3, 1}});
  const ChainInstance ci = ola_to_chain(fig, 5);
  t.expect(ci.budget == 5 + 10, "four-vertex example budget " + show(ci.budget));
  t.expect(min_chain_completion_exact(ci.graph).value == 15, "four-vertex example optimum");

  return finish(t, show(pairs) + " (graph, ordering) pairs for the per-ordering identity; 30 optimum transfers; " +
                      "50 Ch(H) fill-in instances; four-vertex example gives k' = 15");
}

// ---------------------------------------------------------------------------

SparseOverrides desk_overrides() {
  SparseOverrides o;
  o.Z = 2;
  o.phi = Rational(1, 2);
  o.p_H = 1;
  o.p_Hi = 1;
  return o;
}

// Planted configuration: X sits right before Y, and X is wired densely to R(Y)
// and sparsely elsewhere, which is where the swap condition tends to hold.
std::pair<MultiGraph, BlockPair> planted_swap(const Ordering& pi, Rng& rng) {
  const int n = static_cast<int>(pi.size());
  BlockPair blocks;
  blocks.x_len = 1 + rng.below(3);
  blocks.y_len = 1 + rng.below(3);
  blocks.x_begin = rng.below(static_cast<std::uint64_t>(n) - blocks.x_len - blocks.y_len);
  const std::size_t right = blocks.x_begin + blocks.x_len + blocks.y_len;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < pi.size(); ++i)
    for (std::size_t j = i + 1; j < pi.size(); ++j) {
      const bool x_i = i >= blocks.x_begin && i < blocks.x_begin + blocks.x_len;
      const bool dense = x_i && j >= right;
      if (rng.below(10) < (dense ? 9u : 1u))
        edges.push_back({std::min(pi[i], pi[j]), std::max(pi[i], pi[j]), 1});
    }
  return {MultiGraph(n, std::move(edges)), blocks};
}

Outcome sparseola_desk() {
  Tally t;
  const GapParams gap(Rational(1, 2), Rational(1));
  Rng root(4004);
  int forward_cases = 0;
  int max_vertices = 0;
  for (int i = 0; i < 20; ++i) {
    Rng rng = root.split(static_cast<std::uint64_t>(i));
    const int n = i % 2 == 0 ? 4 : 6;
    const int d = (i / 2) % 2 == 0 ? 2 : 3;
    const MultiGraph g = random_regular_graph(n, d, rng);
    const SparseParams params = derive_params(gap, d, ParamMode::desk, desk_overrides());
    const SparseLayout layout = build_T(g, params, rng(), desk_overrides());
    const std::string tag = "graph " + show(i) + " (n=" + show(n) + ", d=" + show(d) + ")";
    const int c = static_cast<int>(ceil(params.phi * n));
    max_vertices = std::max(max_vertices, layout.graph.n());
    t.expect(layout.graph.n() == n + params.Z * c, tag + ": vertex count " + show(layout.graph.n()));
    t.expect(layout.graph.n() <= 18, tag + ": more than 18 vertices");
    t.expect(BigInt(layout.graph.max_degree()) <= layout.params.degree_bound(),
             tag + ": degree " + show(layout.graph.max_degree()) + " above " + layout.params.degree_bound().str());

    const auto ola_h = ola_exact(layout.h_subgraph());
    const std::int64_t budget = compute_budget(layout, ola_h.value, AlphaRounding::floor);
    const Rational alpha_m = gap.alpha() * g.edge_count();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      if (2 * __builtin_popcount(mask) != n) continue;
      const VertexPartition p = brute::partition_of(mask, n);
      if (Rational(cut_size(g, p)) > alpha_m) continue;
      ++forward_cases;
      const std::int64_t cost = cost_of_ordering(layout.graph, ordering_from_bisection(layout, p, ola_h.witness));
      t.expect(cost <= budget, tag + ": forward bound " + show(cost) + " > " + show(budget));
    }
  }

  int held = 0;
  int counterexamples = 0;
  for (int i = 0; i < 500; ++i) {
    Rng rng = root.split("swap").split(static_cast<std::uint64_t>(i));
    std::vector<int> perm(10);
    std::iota(perm.begin(), perm.end(), 0);
    rng.shuffle(perm);
    const Ordering pi(perm);
    MultiGraph g;
    BlockPair blocks;
    if (i % 2 == 0) {
      std::tie(g, blocks) = planted_swap(pi, rng);
    } else {
      g = testing::bernoulli_graph(10, 1, 2, rng);
      blocks.x_len = 1 + rng.below(4);
      blocks.y_len = 1 + rng.below(4);
      blocks.x_begin = rng.below(10 - blocks.x_len - blocks.y_len + 1);
    }
    const SwapBounds b = swap_bounds(g, pi, blocks);
    if (!b.condition()) continue;
    ++held;
    const bool decreased = cost_of_ordering(g, apply_swap(pi, blocks)) < cost_of_ordering(g, pi);
    if (!decreased) ++counterexamples;
    t.expect(decreased, "swap " + show(i) + " did not lower the cost");
  }
  t.expect(held > 0, "swap condition never held; the sample is vacuous");

  const SparseParams paper = derive_params(GapParams(Rational(0), Rational(1)), 5, ParamMode::paper);
  t.expect(paper.gamma == Rational(1, 4) && paper.phi == Rational(1, 60) && paper.Z == 120,
           "paper parameters gamma=" + to_string(paper.gamma) + " phi=" + to_string(paper.phi) + " Z=" + show(paper.Z));
  for (const ParamCheck& c : paper.checks) t.expect(c.holds, "paper inequality " + c.name + " fails: " + c.detail);

  return finish(t, "20 regular graphs (|V(T)| <= " + show(max_vertices) + "), " + show(forward_cases) +
                      " bisections within alpha*m; swap condition held on " + show(held) + "/500 samples with " +
                      show(counterexamples) + " counterexamples; paper mode d_G=5 gives 1/4, 1/60, 120 with " +
                      show(paper.checks.size()) + " inequalities");
}

// ---------------------------------------------------------------------------

Outcome fastchain_laws() {
  Tally t;
  const GapParams full(Rational(0), Rational(1));
  Rng root(5005);
  for (int i = 0; i < 20; ++i) {
    Rng rng = root.split("profile").split(static_cast<std::uint64_t>(i));
    const CnfFormula f = random_e3cnf(3 + static_cast<int>(rng.below(2)), 1 + static_cast<int>(rng.below(4)), rng);
    const SsatReduction r = nae3_to_ssat(make_gap_instance(f, full), rng());
    const ProfileAudit audit = audit_profile(r.output.instance);
    t.expect(audit.ok && audit.d == r.d, "profile audit failed on formula " + show(i));
  }

  int fvs_cases = 0;
  auto fvs_fas = [&](const Digraph& d, const std::string& tag) {
    ++fvs_cases;
    const FasReduction r = fvs_to_fas(GapInstance<Digraph>{d, GapParams(Rational(1, 4), Rational(1, 2)), d.n()});
    const std::int64_t fas = min_fas_exact(r.output.instance).value;
    const std::int64_t fvs = brute::fvs(d);
    t.expect(fas == fvs, tag + ": fas " + show(fas) + " vs fvs " + show(fvs));
  };
  for (int n = 2; n <= 8; ++n)
    for (int r = 1; r <= std::min(3, n - 1); ++r)
      for (int s = 0; s < 3; ++s) {
        Rng rng = root.split("fvs").split(static_cast<std::uint64_t>(n * 100 + r * 10 + s));
        fvs_fas(testing::random_balanced_regular(n, r, rng), "regular n=" + show(n) + " r=" + show(r));
      }
  for (int i = 0; i < 5; ++i) {
    Rng rng = root.split("ssat").split(static_cast<std::uint64_t>(i));
    const CnfFormula f = random_e3cnf(3, 1, rng);
    const SsatReduction s = nae3_to_ssat(make_gap_instance(f, full), rng());
    const Digraph d = ssat_to_fvs(s.output).output.instance;
    if (d.n() <= 8) fvs_fas(d, "ssat output " + show(i));
  }

  for (int i = 0; i < 20; ++i) {
    Rng rng = root.split("subdivide").split(static_cast<std::uint64_t>(i));
    const int n = 2 + static_cast<int>(rng.below(5));
    const int max_m = std::min(n * (n - 1), 18 - n);
    const Digraph d = random_digraph(n, static_cast<int>(rng.below(static_cast<std::uint64_t>(max_m + 1))), false, rng);
    t.expect(min_fas_exact(subdivide_arcs(d)).value == min_fas_exact(d).value, "subdivision changed fas " + show(i));
  }

  for (int len : {3, 4})
    for (int t_factor : {2, 3}) {
      const Digraph g = testing::directed_cycle(len);
      const std::int64_t base = min_fas_exact(g).value;
      const std::int64_t blown = min_fas_exact(blowup(g, t_factor)).value;
      t.expect(blown == t_factor * t_factor * base, "blow-up of C" + show(len) + " by " + show(t_factor));
    }

  int violations = 0;
  std::ostringstream means;
  for (int len : {3, 4}) {
    const MonteCarloReport mc = tournament_monte_carlo(testing::directed_cycle(len), 3, 30, root.split("mc")());
    violations += mc.sandwich_violations;
    t.expect(mc.sandwich_violations == 0, "sandwich violated on C" + show(len));
    means << " C" << len << ": mean fas(T)-|R|/2 = " << mc.mean_shifted << " +- " << mc.standard_error << " vs "
          << mc.fas_blown << ";";
  }

  return finish(t, "20 profile audits; fvs = fas on " + show(fvs_cases) +
                      " inputs; 20 subdivisions; blow-up law for C3, C4 at t = 2, 3; " +
                      "tournament sandwich over 30 seeds each with " + show(violations) + " violations." + means.str());
}

// ---------------------------------------------------------------------------

Outcome expander_certificates() {
  Tally t;
  int built = 0;
  for (int n : {8, 12, 16})
    for (int p : {1, 2})
      for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Expander e = build_expander(n, Rational(p), seed);
        ++built;
        const std::string tag = "n=" + show(n) + " p=" + show(p) + " seed=" + show(seed);
        const auto h = cheeger_exact(e.graph);
        t.expect(e.spec.kind == CertificateKind::exact, tag + ": not exact-certified");
        t.expect(h && *h >= Rational(p), tag + ": h below p");
        t.expect(h && *h == e.spec.certified_h, tag + ": certificate differs from recomputation");
        t.expect(e.graph.is_regular(e.spec.d), tag + ": not " + show(e.spec.d) + "-regular");
        t.expect(h && spectral_bound(e.graph) <= *h, tag + ": spectral bound above exact");
      }
  return finish(t, show(built) + " expanders (n in 8, 12, 16; p in 1, 2; 10 seeds) exact-certified and regular");
}

// ---------------------------------------------------------------------------

Outcome oracle_consistency() {
  Tally t;
  Rng root(7007);
  for (int n = 1; n <= 8; ++n)
    for (int i = 0; i < 5; ++i) {
      Rng rng = root.split("ola").split(static_cast<std::uint64_t>(n * 10 + i));
      const MultiGraph g = testing::bernoulli_graph(n, 1, 2, rng);
      const auto r = ola_exact(g);
      t.expect(r.value == brute::ola(g), "ola n=" + show(n));
      t.expect(cost_of_ordering(g, r.witness) == r.value, "ola witness n=" + show(n));
    }
  for (int n = 1; n <= 7; ++n)
    for (int i = 0; i < 5; ++i) {
      Rng rng = root.split("fas").split(static_cast<std::uint64_t>(n * 10 + i));
      const Digraph d = random_digraph(n, static_cast<int>(rng.below(static_cast<std::uint64_t>(n * (n - 1) + 1))), false, rng);
      const auto r = min_fas_exact(d);
      t.expect(r.value == brute::fas(d), "fas n=" + show(n));
      t.expect(backward_arc_weight(d, r.witness) == r.value, "fas witness n=" + show(n));
      const auto v = min_fvs_exact(d);
      std::vector<bool> removed(static_cast<std::size_t>(n), false);
      for (int x : v.witness) removed[static_cast<std::size_t>(x)] = true;
      t.expect(static_cast<std::int64_t>(v.witness.size()) == v.value && is_acyclic(d, removed), "fvs witness");
    }
  for (int i = 0; i < 10; ++i) {
    Rng rng = root.split("cut").split(static_cast<std::uint64_t>(i));
    const MultiGraph g = testing::bernoulli_graph(6, 1, 2, rng);
    const auto cut = max_cut_exact(g);
    t.expect(cut_size(g, cut.witness) == cut.value && cut.value == brute::max_cut(g), "max cut " + show(i));
    const auto fill = min_fill_in_exact(g);
    t.expect(static_cast<std::int64_t>(fill.witness.size()) == fill.value &&
                 is_chordal(with_added_edges(g, fill.witness)),
             "fill-in witness " + show(i));
    const CnfFormula f = random_e3cnf(5, 6, rng);
    const auto sat = max_sat_exact(f);
    const auto nae = max_nae_exact(f);
    t.expect(count_satisfied(f, sat.witness) == sat.value && count_nae_satisfied(f, nae.witness) == nae.value,
             "sat witnesses " + show(i));
  }

  struct Row {
    const char* name;
    MultiGraph g;
    bool chordal, interval, proper, threshold, tp;
  };
  const std::vector<Row> table = {
      {"C4", testing::cycle_graph(4), false, false, false, false, false},
      {"2K2", MultiGraph(4, {{0, 1, 1}, {2, 3, 1}}), true, true, true, false, true},
      {"P4", MultiGraph(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}}), true, true, true, false, false},
      {"claw", MultiGraph(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}}), true, true, false, true, true},
      {"3-tent",
       MultiGraph(6, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {0, 3, 1}, {1, 3, 1}, {1, 4, 1}, {2, 4, 1}, {0, 5, 1}, {2, 5, 1}}),
       true, false, false, false, false},
  };
  for (const Row& r : table) {
    t.expect(is_chordal(r.g) == r.chordal, std::string(r.name) + ": chordal");
    t.expect(is_interval(r.g) == r.interval, std::string(r.name) + ": interval");
    t.expect(is_proper_interval(r.g) == r.proper, std::string(r.name) + ": proper interval");
    t.expect(is_threshold(r.g) == r.threshold, std::string(r.name) + ": threshold");
    t.expect(is_trivially_perfect(r.g) == r.tp, std::string(r.name) + ": trivially perfect");
  }
  return finish(t, "ola (n<=8) and fas (n<=7) match permutation enumeration; witnesses re-evaluate; " +
                      show(table.size() * 5) + " recognizer verdicts on C4, 2K2, P4, claw, 3-tent");
}

}  // namespace
}  // namespace gapred

int main() {
  using gapred::Outcome;
  struct Criterion {
    const char* label;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"1 satchain identities", gapred::satchain_identities},
      {"2 denseola identity and bounds", gapred::denseola_bounds},
      {"3 completion transfer", gapred::completion_transfer},
      {"4 sparseola desk mode", gapred::sparseola_desk},
      {"5 fastchain laws", gapred::fastchain_laws},
      {"6 expander certificates", gapred::expander_certificates},
      {"7 oracle self-consistency", gapred::oracle_consistency},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o{false, ""};
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (o.pass ? "PASS " : "FAIL ") << "[PRIMARY] " << c.label << ": " << o.summary << " (" << secs
              << " s)\n";
    std::cout.flush();
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
