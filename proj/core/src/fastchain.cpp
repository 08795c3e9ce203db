#include "gapred/fastchain.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "gapred/error.hpp"
#include "gapred/oracle.hpp"
#include "gapred/rng.hpp"

namespace gapred {

namespace {

int literal_vertex(const Literal& l) { return 2 * l.var + (l.positive ? 0 : 1); }

}  // namespace

ProfileAudit audit_profile(const CnfFormula& f) {
  ProfileAudit audit;
  audit.per_variable.resize(static_cast<std::size_t>(f.var_count()));
  for (const Clause& c : f.clauses()) {
    if (c.size() == 3)
      ++audit.three_clauses;
    else if (c.size() == 2)
      ++audit.two_clauses;
    else
      audit.violations.push_back("clause of width " + std::to_string(c.size()));
    for (const Literal& l : c) {
      VariableProfile& p = audit.per_variable[static_cast<std::size_t>(l.var)];
      Occurrences& o = c.size() == 3 ? p.three : p.two;
      if (c.size() != 3 && c.size() != 2) continue;
      (l.positive ? o.positive : o.negative) += 1;
    }
  }
  std::int64_t d = audit.per_variable.empty() ? 0 : audit.per_variable[0].two.positive;
  for (int x = 0; x < f.var_count(); ++x) {
    const VariableProfile& p = audit.per_variable[static_cast<std::size_t>(x)];
    if (p.three.positive != 1 || p.three.negative != 1)
      audit.violations.push_back("variable " + std::to_string(x) + " has 3-clause occurrences " +
                                 std::to_string(p.three.positive) + "+/" + std::to_string(p.three.negative) + "-");
    if (p.two.positive != d || p.two.negative != d) {
      audit.violations.push_back("variable " + std::to_string(x) + " has 2-clause occurrences " +
                                 std::to_string(p.two.positive) + "+/" + std::to_string(p.two.negative) +
                                 "-, expected " + std::to_string(d));
      d = -1;
    }
  }
  audit.ok = audit.violations.empty();
  audit.d = audit.ok ? static_cast<int>(d) : -1;
  return audit;
}

// ---------------------------------------------------------------------------

SsatReduction nae3_to_ssat(const GapInstance<CnfFormula>& in, std::uint64_t seed) {
  const CnfFormula& f = in.instance;
  if (in.unit != static_cast<std::int64_t>(f.clause_count()))
    throw DomainError("nae3_to_ssat: unit does not match the clause count");
  if (!f.is_exact_width(3)) throw DomainError("nae3_to_ssat: input is not exact-3-CNF");
  if (in.gap.beta() != 1) throw DomainError("nae3_to_ssat: gap upper end must be 1");

  SsatReduction r;
  r.source = f;
  const int n = f.var_count();
  r.copies.assign(static_cast<std::size_t>(n), {});
  for (std::size_t j = 0; j < f.clause_count(); ++j)
    for (int t = 0; t < 3; ++t) r.copies[static_cast<std::size_t>(f.clause(j)[t].var)].push_back(static_cast<int>(3 * j) + t);

  // Raise the shared starting degree until every gadget lands on it.
  const Rng root = Rng(seed).split("gadget");
  std::vector<Expander> gadgets(static_cast<std::size_t>(n));
  ExpanderOptions options;
  for (int round = 0;; ++round) {
    if (round > 64) throw ConstructionError("nae3_to_ssat: gadget degrees did not settle");
    int top = 0;
    for (int x = 0; x < n; ++x) {
      const auto size = static_cast<int>(r.copies[static_cast<std::size_t>(x)].size());
      if (size == 0) continue;
      gadgets[static_cast<std::size_t>(x)] =
          build_expander(size, Rational(2), root.split(static_cast<std::uint64_t>(x))(), options);
      top = std::max(top, gadgets[static_cast<std::size_t>(x)].spec.d);
    }
    bool uniform = true;
    for (int x = 0; x < n; ++x)
      if (!r.copies[static_cast<std::size_t>(x)].empty() && gadgets[static_cast<std::size_t>(x)].spec.d != top)
        uniform = false;
    r.d = top;
    if (uniform) break;
    options.min_degree = top;
  }

  std::vector<Clause> clauses;
  for (std::size_t j = 0; j < f.clause_count(); ++j) {
    Clause renamed;
    Clause reversed;
    for (int t = 0; t < 3; ++t) {
      const int v = static_cast<int>(3 * j) + t;
      renamed.push_back({v, f.clause(j)[t].positive});
      reversed.push_back({v, !f.clause(j)[t].positive});
    }
    clauses.push_back(std::move(renamed));
    clauses.push_back(std::move(reversed));
  }
  r.gadgets.resize(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    const auto& copy = r.copies[static_cast<std::size_t>(x)];
    if (copy.empty()) continue;
    r.gadgets[static_cast<std::size_t>(x)] = gadgets[static_cast<std::size_t>(x)].graph;
    for (const Edge& e : r.gadgets[static_cast<std::size_t>(x)].edges())
      for (std::int64_t k = 0; k < e.mult; ++k) {
        const int a = copy[static_cast<std::size_t>(e.u)];
        const int b = copy[static_cast<std::size_t>(e.v)];
        if (e.u == e.v) {
          clauses.push_back({{a, false}, {a, true}});
        } else {
          clauses.push_back({{a, false}, {b, true}});
          clauses.push_back({{a, true}, {b, false}});
        }
      }
  }

  const Rational alpha = in.gap.alpha();
  const Rational denom(2 + 3 * r.d);
  const GapParams gap((1 + alpha + 3 * r.d) / denom, Rational(1));
  r.output = make_gap_instance(CnfFormula(static_cast<int>(3 * f.clause_count()), std::move(clauses)), gap);
  r.profile = audit_profile(r.output.instance);
  return r;
}

Assignment SsatReduction::lift(const Assignment& out) const {
  if (out.size() != static_cast<std::size_t>(output.instance.var_count()))
    throw DimensionError("SsatReduction::lift: assignment size does not match the output formula");
  Assignment a(static_cast<std::size_t>(source.var_count()));
  for (int x = 0; x < source.var_count(); ++x) {
    int votes = 0;
    for (int v : copies[static_cast<std::size_t>(x)]) votes += out[static_cast<std::size_t>(v)] ? 1 : -1;
    a.set(static_cast<std::size_t>(x), votes > 0);
  }
  return a;
}

Assignment SsatReduction::expand(const Assignment& in) const {
  if (in.size() != static_cast<std::size_t>(source.var_count()))
    throw DimensionError("SsatReduction::expand: assignment size does not match the source formula");
  Assignment a(static_cast<std::size_t>(output.instance.var_count()));
  for (int x = 0; x < source.var_count(); ++x)
    for (int v : copies[static_cast<std::size_t>(x)]) a.set(static_cast<std::size_t>(v), in[static_cast<std::size_t>(x)]);
  return a;
}

// ---------------------------------------------------------------------------

FvsReduction ssat_to_fvs(const GapInstance<CnfFormula>& in) {
  const CnfFormula& f = in.instance;
  const ProfileAudit audit = audit_profile(f);
  if (!audit.ok) throw DomainError("ssat_to_fvs: input fails the occurrence profile (" + audit.violations.front() + ")");
  if (in.gap.beta() != 1) throw DomainError("ssat_to_fvs: gap upper end must be 1");

  const int n = f.var_count();
  std::vector<Arc> arcs;
  for (int x = 0; x < n; ++x) {
    arcs.push_back({2 * x, 2 * x + 1, 1});
    arcs.push_back({2 * x + 1, 2 * x, 1});
  }
  for (const Clause& c : f.clauses()) {
    const std::size_t w = c.size();
    if (w == 2) {
      arcs.push_back({literal_vertex(c[0]), literal_vertex(c[1]), 1});
      arcs.push_back({literal_vertex(c[1]), literal_vertex(c[0]), 1});
    } else {
      for (std::size_t i = 0; i < w; ++i) arcs.push_back({literal_vertex(c[i]), literal_vertex(c[(i + 1) % w]), 1});
    }
  }
  FvsReduction r;
  r.d = audit.d;
  const GapParams gap(Rational(1, 2), (4 - in.gap.alpha()) / 6);
  r.output = {Digraph(2 * n, std::move(arcs)), gap, 2 * static_cast<std::int64_t>(n)};
  return r;
}

Assignment FvsReduction::lift(const std::vector<int>& fvs) const {
  const int n = output.instance.n() / 2;
  std::vector<bool> in_set(static_cast<std::size_t>(output.instance.n()), false);
  for (int v : fvs) {
    if (v < 0 || v >= output.instance.n()) throw DimensionError("FvsReduction::lift: vertex out of range");
    in_set[static_cast<std::size_t>(v)] = true;
  }
  Assignment a(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x)
    a.set(static_cast<std::size_t>(x), in_set[static_cast<std::size_t>(2 * x)] && !in_set[static_cast<std::size_t>(2 * x + 1)]);
  return a;
}

// ---------------------------------------------------------------------------

FasReduction fvs_to_fas(const GapInstance<Digraph>& in) {
  const Digraph& d = in.instance;
  if (d.has_loops()) throw DomainError("fvs_to_fas: input has loops");
  const std::int64_t r = d.n() == 0 ? 0 : d.out_degree(0);
  if (!d.is_balanced_regular(r)) throw DomainError("fvs_to_fas: input is not balanced and regular");
  if (in.unit != d.n()) throw DomainError("fvs_to_fas: unit does not match the vertex count");

  const int n = d.n();
  std::vector<Arc> arcs;
  for (int u = 0; u < n; ++u) arcs.push_back({2 * u, 2 * u + 1, 1});
  for (const Arc& a : d.arcs()) arcs.push_back({2 * a.from + 1, 2 * a.to, a.mult});
  FasReduction out;
  out.source_n = n;
  out.r = r;
  const Rational scale(1, r + 1);
  out.output = {Digraph(2 * n, std::move(arcs)), in.gap.affine(Rational(0), scale), (r + 1) * n};
  return out;
}

std::vector<int> FasReduction::lift(const Ordering& pi) const {
  const Digraph& d = output.instance;
  if (pi.size() != static_cast<std::size_t>(d.n())) throw DimensionError("FasReduction::lift: ordering size mismatch");
  const auto pos = pi.positions();
  std::vector<bool> chosen(static_cast<std::size_t>(source_n), false);
  for (const Arc& a : d.arcs()) {
    if (pos[a.from] < pos[a.to]) continue;
    // (u-, u+) names u itself; (u+, v-) is traded for (v-, v+).
    chosen[static_cast<std::size_t>(a.from % 2 == 0 ? a.from / 2 : a.to / 2)] = true;
  }
  std::vector<int> set;
  for (int u = 0; u < source_n; ++u)
    if (chosen[static_cast<std::size_t>(u)]) set.push_back(u);
  return set;
}

// ---------------------------------------------------------------------------

Digraph subdivide_arcs(const Digraph& d) {
  std::vector<Arc> arcs;
  int next = d.n();
  for (const Arc& a : d.arcs())
    for (std::int64_t k = 0; k < a.mult; ++k) {
      arcs.push_back({a.from, next, 1});
      arcs.push_back({next, a.to, 1});
      ++next;
    }
  return Digraph(next, std::move(arcs));
}

GapInstance<Digraph> subdivide_arcs(const GapInstance<Digraph>& in) {
  if (in.unit != in.instance.arc_count()) throw DomainError("subdivide_arcs: unit does not match the arc count");
  Digraph out = subdivide_arcs(in.instance);
  const std::int64_t m = out.arc_count();
  return {std::move(out), in.gap.affine(Rational(0), Rational(1, 2)), m};
}

Digraph blowup(const Digraph& d, int t) {
  if (t < 1) throw DomainError("blowup: t must be at least 1");
  if (!d.is_simple()) throw DomainError("blowup: input digraph must be simple");
  std::vector<Arc> arcs;
  for (const Arc& a : d.arcs())
    for (int i = 0; i < t; ++i)
      for (int j = 0; j < t; ++j) arcs.push_back({a.from * t + i, a.to * t + j, 1});
  return Digraph(d.n() * t, std::move(arcs));
}

TournamentCompletion complete_to_tournament(const Digraph& d, std::uint64_t seed) {
  if (!d.is_simple()) throw DomainError("complete_to_tournament: input digraph must be simple");
  if (d.has_antiparallel_pair()) throw DomainError("complete_to_tournament: input has an antiparallel pair");
  Rng rng = Rng(seed).split("tournament");
  std::vector<Arc> arcs(d.arcs().begin(), d.arcs().end());
  TournamentCompletion out;
  for (int u = 0; u < d.n(); ++u)
    for (int v = u + 1; v < d.n(); ++v) {
      if (d.multiplicity(u, v) > 0 || d.multiplicity(v, u) > 0) continue;
      if (rng.coin())
        arcs.push_back({u, v, 1});
      else
        arcs.push_back({v, u, 1});
      ++out.random_arcs;
    }
  out.tournament = Digraph(d.n(), std::move(arcs));
  return out;
}

FastParams tournament_thresholds(const GapParams& gap, int d, int t, std::int64_t m, std::int64_t random_arcs) {
  FastParams p;
  p.d = d;
  p.blow_factor = t;
  p.gap = gap;
  const Rational core = Rational(static_cast<std::int64_t>(t) * t * m);
  const Rational half = Rational(random_arcs, 2);
  p.low = (2 * gap.alpha() + gap.beta()) / 3 * core + half;
  p.high = (gap.alpha() + 2 * gap.beta()) / 3 * core + half;
  return p;
}

MonteCarloReport tournament_monte_carlo(const Digraph& g, int t, int trials, std::uint64_t seed) {
  const Digraph blown = blowup(g, t);
  MonteCarloReport report;
  report.fas_blown = min_fas_exact(blown).value;
  report.trials = trials;
  const Rng root = Rng(seed).split("monte-carlo");
  double sum = 0;
  double sum_sq = 0;
  for (int i = 0; i < trials; ++i) {
    const TournamentCompletion tc = complete_to_tournament(blown, root.split(static_cast<std::uint64_t>(i))());
    const std::int64_t fas = min_fas_exact(tc.tournament).value;
    report.fas_values.push_back(fas);
    report.random_arcs.push_back(tc.random_arcs);
    if (fas < report.fas_blown || fas > report.fas_blown + tc.random_arcs) ++report.sandwich_violations;
    const double shifted = static_cast<double>(fas) - static_cast<double>(tc.random_arcs) / 2.0;
    sum += shifted;
    sum_sq += shifted * shifted;
  }
  if (trials > 0) {
    report.mean_shifted = sum / trials;
    const double variance = trials > 1 ? (sum_sq - trials * report.mean_shifted * report.mean_shifted) / (trials - 1) : 0;
    report.standard_error = std::sqrt(std::max(variance, 0.0) / trials);
    report.within_three_se =
        std::abs(report.mean_shifted - static_cast<double>(report.fas_blown)) <= 3 * report.standard_error + 1e-12;
  }
  return report;
}

}  // namespace gapred
