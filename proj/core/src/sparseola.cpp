#include "gapred/sparseola.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <vector>

#include "gapred/error.hpp"
#include "gapred/rng.hpp"

namespace gapred {

namespace {

std::string str(const BigInt& v) { return v.str(); }

BigInt provisional_degree(const BigInt& p) { return 2 * p + 2; }

// Expander building needs machine integers; paper-mode values may not fit.
std::int64_t narrow(const BigInt& v, const char* what) {
  if (v > BigInt(std::numeric_limits<int>::max()))
    throw DomainError(std::string("build_T: ") + what + " = " + v.str() + " is too large to construct");
  return static_cast<std::int64_t>(v);
}

}  // namespace

std::string to_string(ParamMode mode) { return mode == ParamMode::paper ? "paper" : "desk"; }

bool SparseParams::all_checks_hold() const {
  return std::all_of(checks.begin(), checks.end(), [](const ParamCheck& c) { return c.holds; });
}

BigInt SparseParams::degree_bound() const {
  BigInt max_block = 0;
  for (const BigInt& d : d_Hi) max_block = std::max(max_block, d);
  return BigInt(d_G) + Z + d_H + max_block + delta_HG;
}

std::vector<ParamCheck> check_params(const SparseParams& s) {
  std::vector<ParamCheck> checks;
  const Rational width = s.beta - s.alpha;
  checks.push_back({"d_G >= 2", s.d_G >= 2, "d_G = " + std::to_string(s.d_G)});
  checks.push_back({"d_G > 4/(beta-alpha)", Rational(s.d_G) > Rational(4) / width,
                    "4/(beta-alpha) = " + to_string(Rational(4) / width)});
  checks.push_back({"0 < phi < 1", s.phi > 0 && s.phi < 1, "phi = " + to_string(s.phi)});
  checks.push_back({"gamma = 3 phi d_G", s.gamma == 3 * s.phi * s.d_G,
                    "gamma = " + to_string(s.gamma) + ", 3 phi d_G = " + to_string(3 * s.phi * s.d_G)});
  checks.push_back({"Z phi >= 2", s.Z * s.phi >= 2, "Z phi = " + to_string(s.Z * s.phi)});
  checks.push_back({"2(2 alpha + 1) <= (beta-alpha) Z phi", 2 * (2 * s.alpha + 1) <= width * s.Z * s.phi,
                    to_string(2 * (2 * s.alpha + 1)) + " vs " + to_string(width * s.Z * s.phi)});
  const BigInt h_need = BigInt(3) * s.delta_HG + 3 * s.Z + s.d_G;
  checks.push_back({"p_H > 3 delta_HG + 3Z + d_G", s.p_H > h_need, str(s.p_H) + " vs " + str(h_need)});
  for (int i = s.Z; i >= 1; --i) {
    const BigInt next = i == s.Z ? BigInt(0) : s.d_Hi[static_cast<std::size_t>(i)];
    const BigInt need = next + 4 * s.d_H + 2 * BigInt(s.delta_HG);
    const BigInt& p = s.p_Hi[static_cast<std::size_t>(i - 1)];
    checks.push_back({"p_H" + std::to_string(i) + " > d_H" + std::to_string(i + 1) + " + 4 d_H + 2 delta_HG",
                      p > need, str(p) + " vs " + str(need)});
  }
  return checks;
}

SparseParams derive_params(const GapParams& gap, int d_G, ParamMode mode, const SparseOverrides& overrides) {
  SparseParams s;
  s.mode = mode;
  s.alpha = gap.alpha();
  s.beta = gap.beta();
  s.d_G = d_G;
  const Rational width = s.beta - s.alpha;
  if (mode == ParamMode::paper) {
    if (d_G < 2) throw DomainError("derive_params: d_G must be at least 2");
    if (Rational(d_G) <= Rational(4) / width)
      throw DomainError("derive_params: d_G = " + std::to_string(d_G) + " is not above 4/(beta-alpha) = " +
                        to_string(Rational(4) / width));
  }
  const bool desk = mode == ParamMode::desk;

  s.gamma = width / 4;
  s.phi = desk && overrides.phi > 0 ? overrides.phi : s.gamma / (3 * Rational(std::max(d_G, 1)));
  if (s.phi <= 0 || s.phi >= 1) throw DomainError("derive_params: phi must lie in (0, 1)");
  const BigInt Z = desk && overrides.Z > 0 ? BigInt(overrides.Z) : ceil(2 * (2 * s.alpha + 1) / (width * s.phi));
  if (Z < 1 || Z > 100000) throw DomainError("derive_params: Z = " + Z.str() + " is out of range");
  s.Z = static_cast<int>(Z);
  s.delta_HG = to_int64(ceil(Rational(1) / s.phi));

  s.p_H = desk && overrides.p_H > 0 ? BigInt(overrides.p_H) : BigInt(3) * s.delta_HG + 3 * s.Z + d_G + 1;
  s.d_H = provisional_degree(s.p_H);
  s.p_Hi.assign(static_cast<std::size_t>(s.Z), 0);
  s.d_Hi.assign(static_cast<std::size_t>(s.Z), 0);
  for (int i = s.Z; i >= 1; --i) {
    const BigInt next = i == s.Z ? BigInt(0) : s.d_Hi[static_cast<std::size_t>(i)];
    const BigInt p = desk && overrides.p_Hi > 0 ? BigInt(overrides.p_Hi) : next + 4 * s.d_H + 2 * BigInt(s.delta_HG) + 1;
    s.p_Hi[static_cast<std::size_t>(i - 1)] = p;
    s.d_Hi[static_cast<std::size_t>(i - 1)] = provisional_degree(p);
  }
  s.degrees_provisional = true;
  s.checks = check_params(s);
  return s;
}

// ---------------------------------------------------------------------------

MultiGraph SparseLayout::h_subgraph() const {
  std::vector<int> vertices;
  for (int v = h_begin(); v < h_end(); ++v) vertices.push_back(v);
  return induced_subgraph(graph, vertices);
}

SparseLayout build_T(const MultiGraph& g, const SparseParams& params, std::uint64_t seed,
                     const SparseOverrides& overrides) {
  if (!g.is_simple()) throw DomainError("build_T: input graph must be simple");
  if (!g.is_regular(params.d_G))
    throw DomainError("build_T: input graph is not " + std::to_string(params.d_G) + "-regular");
  if (g.n() % 2 != 0) throw DomainError("build_T: bisection needs an even number of vertices");

  SparseLayout layout;
  layout.params = params;
  layout.n = g.n();
  layout.m = g.edge_count();
  const int n = g.n();
  const int Z = params.Z;
  const int c = n == 0 ? 0 : static_cast<int>(to_int64(ceil(params.phi * n)));
  layout.block_size = c;

  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  auto add_expander = [&](const MultiGraph& x, int offset) {
    for (const Edge& e : x.edges()) edges.push_back({e.u + offset, e.v + offset, e.mult});
  };

  SparseParams& s = layout.params;
  const bool desk = s.mode == ParamMode::desk;
  const Rng root(seed);
  if (Z * c > 0) {
    const Expander h = build_expander(Z * c, Rational(narrow(s.p_H, "p_H")), root.split("H")());
    add_expander(h.graph, n);
    layout.h_expander = h.spec;
    s.d_H = h.spec.d;

    layout.block_expanders.resize(static_cast<std::size_t>(Z));
    for (int i = Z; i >= 1; --i) {
      const auto idx = static_cast<std::size_t>(i - 1);
      if (!(desk && overrides.p_Hi > 0)) {
        const BigInt next = i == Z ? BigInt(0) : s.d_Hi[idx + 1];
        s.p_Hi[idx] = next + 4 * s.d_H + 2 * BigInt(s.delta_HG) + 1;
      }
      const Expander b = build_expander(c, Rational(narrow(s.p_Hi[idx], "p_Hi")),
                                        root.split("H_i").split(static_cast<std::uint64_t>(i))());
      add_expander(b.graph, layout.block_begin(i));
      layout.block_expanders[idx] = b.spec;
      s.d_Hi[idx] = b.spec.d;
    }
    s.degrees_provisional = false;
    s.checks = check_params(s);

    // G-vertex j attaches to vertex j mod c of every block, so block degrees
    // differ by at most one.
    for (int i = 1; i <= Z; ++i)
      for (int j = 0; j < n; ++j) edges.push_back({j, layout.block_begin(i) + j % c, 1});
    layout.achieved_delta_HG = (n + c - 1) / c;
  }

  layout.graph = MultiGraph(n + Z * c, std::move(edges));
  return layout;
}

// ---------------------------------------------------------------------------

BudgetTerms budget_terms(int n, std::int64_t m, int Z, int block_size, const Rational& alpha,
                         AlphaRounding rounding) {
  if (n % 2 != 0) throw DomainError("budget_terms: n must be even");
  const Rational am = alpha * m;
  BudgetTerms t;
  if (is_integer(am)) {
    t.alpha_m = numerator(am);
  } else if (rounding == AlphaRounding::floor) {
    t.alpha_m = floor(am);
  } else {
    throw DomainError("budget_terms: alpha*m = " + to_string(am) + " is not an integer");
  }
  const BigInt half(n / 2);
  t.crossing = t.alpha_m * (BigInt(Z) * block_size + n);
  t.internal = BigInt(m) * n / 2;
  t.attach = (half + 1) * half * Z + BigInt(n) * block_size * (BigInt(Z) * (Z + 1) / 2);
  return t;
}

std::int64_t compute_budget(const SparseLayout& layout, std::int64_t ola_of_H, AlphaRounding rounding) {
  const BudgetTerms t = budget_terms(layout.n, layout.m, layout.params.Z, layout.block_size, layout.params.alpha,
                                     rounding);
  return to_int64(t.constant() + ola_of_H);
}

SymbolicBudget compute_budget_symbolic(const SparseLayout& layout, AlphaRounding rounding) {
  const BudgetTerms t = budget_terms(layout.n, layout.m, layout.params.Z, layout.block_size, layout.params.alpha,
                                     rounding);
  return {1, t.constant()};
}

// ---------------------------------------------------------------------------

Ordering ordering_from_bisection(const SparseLayout& layout, const VertexPartition& p, const Ordering& pi_H) {
  if (p.size() != static_cast<std::size_t>(layout.n))
    throw DimensionError("ordering_from_bisection: partition size does not match the source graph");
  if (pi_H.size() != static_cast<std::size_t>(layout.h_end() - layout.h_begin()))
    throw DimensionError("ordering_from_bisection: pi_H size does not match |H|");
  if (p.count_a() != p.count_b()) throw DomainError("ordering_from_bisection: partition is not balanced");
  std::vector<int> perm;
  perm.reserve(static_cast<std::size_t>(layout.graph.n()));
  for (int v = 0; v < layout.n; ++v)
    if (!p[v]) perm.push_back(v);
  for (std::size_t i = 0; i < pi_H.size(); ++i) perm.push_back(layout.h_begin() + pi_H[i]);
  for (int v = 0; v < layout.n; ++v)
    if (p[v]) perm.push_back(v);
  return Ordering(std::move(perm));
}

namespace {

bool range_consecutive(const std::vector<int>& pos, int begin, int end) {
  if (begin >= end) return true;
  int lo = pos[begin];
  int hi = pos[begin];
  for (int v = begin; v < end; ++v) {
    lo = std::min(lo, pos[v]);
    hi = std::max(hi, pos[v]);
  }
  return hi - lo + 1 == end - begin;
}

}  // namespace

StructureReport structure_report(const SparseLayout& layout, const Ordering& pi) {
  if (pi.size() != static_cast<std::size_t>(layout.graph.n()))
    throw DimensionError("structure_report: ordering size does not match T(G)");
  const auto pos = pi.positions();
  StructureReport r;
  r.h_consecutive = range_consecutive(pos, layout.h_begin(), layout.h_end());
  for (int i = 1; i <= layout.params.Z; ++i)
    r.block_consecutive.push_back(range_consecutive(pos, layout.block_begin(i), layout.block_begin(i) + layout.block_size));
  r.gamma_n = layout.params.gamma * layout.n;
  if (r.h_consecutive && layout.h_end() > layout.h_begin()) {
    int left = 0;
    for (int v = 0; v < layout.n; ++v)
      if (pos[v] < pos[layout.h_begin()]) ++left;
    r.imbalance = std::abs(2 * left - layout.n);
    r.imbalance_within_gamma_n = Rational(r.imbalance) <= r.gamma_n;
  }
  return r;
}

Ordering make_h_consecutive(const SparseLayout& layout, const Ordering& pi) {
  if (pi.size() != static_cast<std::size_t>(layout.graph.n()))
    throw DimensionError("make_h_consecutive: ordering size does not match T(G)");
  const std::size_t h_size = static_cast<std::size_t>(layout.h_end() - layout.h_begin());
  Ordering current = pi;
  while (true) {
    const auto perm = current.perm();
    // Runs of H positions as [begin, end) pairs.
    std::vector<std::pair<std::size_t, std::size_t>> runs;
    for (std::size_t i = 0; i < perm.size();) {
      if (!layout.is_h(perm[i])) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < perm.size() && layout.is_h(perm[j])) ++j;
      runs.push_back({i, j});
      i = j;
    }
    if (runs.size() <= 1) return current;
    const auto [first_begin, first_end] = runs.front();
    if (2 * (first_end - first_begin) <= h_size) {
      current = swap_adjacent_blocks(current, first_begin, first_end - first_begin, runs[1].first - first_end);
    } else {
      const auto [last_begin, last_end] = runs.back();
      const std::size_t gap_begin = runs[runs.size() - 2].second;
      current = swap_adjacent_blocks(current, gap_begin, last_begin - gap_begin, last_end - last_begin);
    }
  }
}

VertexPartition bisection_from_ordering(const SparseLayout& layout, const Ordering& pi) {
  const Ordering normalized = make_h_consecutive(layout, pi);
  const auto pos = normalized.positions();
  VertexPartition p(static_cast<std::size_t>(layout.n));
  if (layout.h_end() > layout.h_begin()) {
    const int split = pos[layout.h_begin()];
    for (int v = 0; v < layout.n; ++v) p.set(v, pos[v] > split);
  } else {
    std::vector<int> order;
    for (int i = 0; i < static_cast<int>(normalized.size()); ++i) order.push_back(normalized[i]);
    for (std::size_t i = static_cast<std::size_t>(layout.n) / 2; i < order.size(); ++i) p.set(order[i], true);
  }
  // Move the lowest-id vertices of the larger side across.
  const bool larger = p.count_b() > p.count_a();
  std::size_t to_move = (std::max(p.count_a(), p.count_b()) - std::min(p.count_a(), p.count_b())) / 2;
  for (int v = 0; v < layout.n && to_move > 0; ++v)
    if (p[v] == larger) {
      p.set(v, !larger);
      --to_move;
    }
  return p;
}

// ---------------------------------------------------------------------------

SwapBounds swap_bounds(const MultiGraph& g, const Ordering& pi, const BlockPair& blocks) {
  if (pi.size() != static_cast<std::size_t>(g.n())) throw DimensionError("swap_bounds: ordering size mismatch");
  if (blocks.x_len == 0 || blocks.y_len == 0) throw DomainError("swap_bounds: blocks must be nonempty");
  const std::size_t y_begin = blocks.x_begin + blocks.x_len;
  const std::size_t y_end = y_begin + blocks.y_len;
  if (y_end > pi.size()) throw DomainError("swap_bounds: blocks run past the ordering");

  const auto pos = pi.positions();
  SwapBounds b;
  std::int64_t into_right = 0;
  for (std::size_t i = blocks.x_begin; i < y_begin; ++i) {
    std::int64_t left = 0;
    std::int64_t across = 0;
    for (const Neighbor& nb : g.neighbors(pi[i])) {
      const auto q = static_cast<std::size_t>(pos[nb.vertex]);
      if (q < blocks.x_begin)
        left += nb.mult;
      else if (q >= y_end)
        into_right += nb.mult;
      else if (q >= y_begin)
        across += nb.mult;
    }
    b.P_X = std::max(b.P_X, left);
    b.P_C = std::max(b.P_C, across);
  }
  for (std::size_t i = y_begin; i < y_end; ++i) {
    std::int64_t right = 0;
    std::int64_t across = 0;
    for (const Neighbor& nb : g.neighbors(pi[i])) {
      const auto q = static_cast<std::size_t>(pos[nb.vertex]);
      if (q >= y_end)
        right += nb.mult;
      else if (q >= blocks.x_begin && q < y_begin)
        across += nb.mult;
    }
    b.P_Y = std::max(b.P_Y, right);
    b.P_C = std::max(b.P_C, across);
  }
  b.p = Rational(into_right, static_cast<std::int64_t>(blocks.x_len));
  return b;
}

Ordering apply_swap(const Ordering& pi, const BlockPair& blocks) {
  if (blocks.x_begin + blocks.x_len + blocks.y_len > pi.size())
    throw DomainError("apply_swap: blocks run past the ordering");
  return swap_adjacent_blocks(pi, blocks.x_begin, blocks.x_len, blocks.y_len);
}

}  // namespace gapred
