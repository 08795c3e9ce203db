#include "gapred/satchain.hpp"

#include <string>
#include <vector>

#include "gapred/error.hpp"

namespace gapred {

namespace {

void check_unit(std::int64_t unit, std::int64_t actual, const char* step) {
  if (unit != actual)
    throw DomainError(std::string(step) + ": unit " + std::to_string(unit) + " does not match instance size " +
                      std::to_string(actual));
}

void check_width(const CnfFormula& f, std::size_t width, const char* step) {
  if (!f.is_exact_width(width))
    throw DomainError(std::string(step) + ": input is not exact-" + std::to_string(width) + "-CNF");
}

void check_length(std::size_t got, std::size_t want, const char* what) {
  if (got != want)
    throw DimensionError(std::string(what) + ": witness has length " + std::to_string(got) + ", expected " +
                         std::to_string(want));
}

}  // namespace

GapInstance<CnfFormula> make_gap_instance(CnfFormula f, GapParams gap) {
  const auto m = static_cast<std::int64_t>(f.clause_count());
  return {std::move(f), std::move(gap), m};
}

GapInstance<MultiGraph> make_gap_instance(MultiGraph g, GapParams gap) {
  const std::int64_t m = g.edge_count();
  return {std::move(g), std::move(gap), m};
}

// ---------------------------------------------------------------------------

Nae4Reduction e3sat_to_nae4sat(const GapInstance<CnfFormula>& in) {
  const CnfFormula& f = in.instance;
  check_unit(in.unit, static_cast<std::int64_t>(f.clause_count()), "e3sat_to_nae4sat");
  check_width(f, 3, "e3sat_to_nae4sat");
  const int z = f.var_count();
  std::vector<Clause> clauses;
  clauses.reserve(f.clause_count());
  for (const Clause& c : f.clauses()) {
    Clause out = c;
    out.push_back({z, true});
    clauses.push_back(std::move(out));
  }
  Nae4Reduction r{make_gap_instance(CnfFormula(z + 1, std::move(clauses)), in.gap), z};
  return r;
}

Assignment Nae4Reduction::lift(const Assignment& out) const {
  check_length(out.size(), static_cast<std::size_t>(z) + 1, "Nae4Reduction::lift");
  const bool flip = out[static_cast<std::size_t>(z)];
  Assignment a(static_cast<std::size_t>(z));
  for (int v = 0; v < z; ++v) a.set(v, out[v] != flip);
  return a;
}

// ---------------------------------------------------------------------------

Nae3Reduction nae4sat_to_nae3sat(const GapInstance<CnfFormula>& in) {
  const CnfFormula& f = in.instance;
  check_unit(in.unit, static_cast<std::int64_t>(f.clause_count()), "nae4sat_to_nae3sat");
  check_width(f, 4, "nae4sat_to_nae3sat");
  const int n = f.var_count();
  std::vector<Clause> clauses;
  clauses.reserve(2 * f.clause_count());
  int fresh = n;
  for (const Clause& c : f.clauses()) {
    clauses.push_back({c[0], c[1], {fresh, true}});
    clauses.push_back({c[2], c[3], {fresh, false}});
    ++fresh;
  }
  const GapParams gap = in.gap.affine(Rational(1, 2), Rational(1, 2));
  return {make_gap_instance(CnfFormula(fresh, std::move(clauses)), gap), n};
}

Assignment Nae3Reduction::lift(const Assignment& out) const {
  check_length(out.size(), static_cast<std::size_t>(output.instance.var_count()), "Nae3Reduction::lift");
  Assignment a(static_cast<std::size_t>(source_vars));
  for (int v = 0; v < source_vars; ++v) a.set(v, out[v]);
  return a;
}

// ---------------------------------------------------------------------------

MultiCutReduction nae3sat_to_multicut(const GapInstance<CnfFormula>& in) {
  const CnfFormula& f = in.instance;
  check_unit(in.unit, static_cast<std::int64_t>(f.clause_count()), "nae3sat_to_multicut");
  check_width(f, 3, "nae3sat_to_multicut");
  if (f.has_repeated_variable())
    throw DomainError("nae3sat_to_multicut: a clause repeats a variable, its triangle would degenerate");

  const int n = f.var_count();
  auto vertex = [](const Literal& l) { return 2 * l.var + (l.positive ? 0 : 1); };
  std::vector<Edge> edges;
  const auto occ = f.occurrence_counts();
  for (int i = 0; i < n; ++i)
    if (occ[i].total() > 0) edges.push_back({2 * i, 2 * i + 1, occ[i].total()});
  for (const Clause& c : f.clauses())
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        const int a = vertex(c[i]);
        const int b = vertex(c[j]);
        edges.push_back({std::min(a, b), std::max(a, b), 1});
      }
  const GapParams gap = in.gap.affine(Rational(1, 2), Rational(1, 3));
  return {make_gap_instance(MultiGraph(2 * n, std::move(edges)), gap), f};
}

VertexPartition MultiCutReduction::normalize(const VertexPartition& out) const {
  const MultiGraph& g = output.instance;
  check_length(out.size(), static_cast<std::size_t>(g.n()), "MultiCutReduction::normalize");
  VertexPartition p = out;
  auto move_gain = [&](int v) {
    std::int64_t gain = 0;
    for (const Neighbor& nb : g.neighbors(v)) gain += (p[nb.vertex] == p[v] ? nb.mult : -nb.mult);
    return gain;
  };
  for (int i = 0; i < source.var_count(); ++i) {
    const int pos = 2 * i;
    const int neg = 2 * i + 1;
    if (p[pos] != p[neg]) continue;
    const int mover = move_gain(pos) > move_gain(neg) ? pos : neg;
    p.set(mover, !p[mover]);
  }
  return p;
}

Assignment MultiCutReduction::lift(const VertexPartition& out) const {
  const VertexPartition p = normalize(out);
  Assignment a(static_cast<std::size_t>(source.var_count()));
  for (int i = 0; i < source.var_count(); ++i) a.set(i, p[2 * i]);
  return a;
}

// ---------------------------------------------------------------------------

SimpleCutReduction multicut_to_simplecut(const GapInstance<MultiGraph>& in) {
  const MultiGraph& g = in.instance;
  check_unit(in.unit, g.edge_count(), "multicut_to_simplecut");
  if (g.has_loops()) throw DomainError("multicut_to_simplecut: input has self-loops");
  const int n = g.n();
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(3 * g.edge_count()));
  int next = n;
  for (const Edge& e : g.edges())
    for (std::int64_t copy = 0; copy < e.mult; ++copy) {
      const int w = next++;
      const int z = next++;
      edges.push_back({e.u, w, 1});
      edges.push_back({w, z, 1});
      edges.push_back({e.v, z, 1});
    }
  const GapParams gap = in.gap.affine(Rational(2, 3), Rational(1, 3));
  return {make_gap_instance(MultiGraph(next, std::move(edges)), gap), n};
}

VertexPartition SimpleCutReduction::lift(const VertexPartition& out) const {
  check_length(out.size(), static_cast<std::size_t>(output.instance.n()), "SimpleCutReduction::lift");
  VertexPartition p(static_cast<std::size_t>(source_n));
  for (int v = 0; v < source_n; ++v) p.set(v, out[v]);
  return p;
}

// ---------------------------------------------------------------------------

SatChain run_satchain(const GapInstance<CnfFormula>& in) {
  SatChain chain{in, e3sat_to_nae4sat(in), {}, {}, {}};
  chain.nae3 = nae4sat_to_nae3sat(chain.nae4.output);
  chain.multicut = nae3sat_to_multicut(chain.nae3.output);
  chain.simplecut = multicut_to_simplecut(chain.multicut.output);
  return chain;
}

Assignment SatChain::lift(const VertexPartition& simple_cut) const {
  return nae4.lift(nae3.lift(multicut.lift(simplecut.lift(simple_cut))));
}

GapParams satchain_closed_form(const GapParams& gap) { return gap.affine(Rational(16, 18), Rational(1, 18)); }

}  // namespace gapred
