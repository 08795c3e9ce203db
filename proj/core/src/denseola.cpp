#include "gapred/denseola.hpp"

#include <string>
#include <vector>

#include "gapred/error.hpp"

namespace gapred {

std::int64_t DenseOlaOutput::complete_cost() const {
  return binomial(static_cast<std::int64_t>(graph.n()) + 1, 3);
}

DenseOlaOutput maxcut_to_ola(const GapInstance<MultiGraph>& in) {
  const MultiGraph& g = in.instance;
  if (in.unit != g.edge_count()) throw DomainError("maxcut_to_ola: unit does not match the edge count");
  if (!g.is_simple()) throw DomainError("maxcut_to_ola: source graph must be simple");

  DenseOlaOutput out;
  out.source = g;
  out.gap = in.gap;
  out.source_n = g.n();
  out.source_m = g.edge_count();
  out.M = to_int64(ceil(Rational(2) / (in.gap.beta() - in.gap.alpha())));
  const Rational beta_m = in.gap.beta() * out.source_m;
  out.yes_threshold = to_int64(ceil(beta_m));
  out.threshold_rounded = !is_integer(beta_m);

  const int n = g.n();
  const std::int64_t clique = out.M * n;
  if (clique > 1'000'000) throw DomainError("maxcut_to_ola: clique of size " + std::to_string(clique) + " is too large");
  out.clique_begin = n;
  out.clique_end = n + static_cast<int>(clique);

  const MultiGraph comp = complement(g);
  std::vector<Edge> edges(comp.edges().begin(), comp.edges().end());
  for (int u = out.clique_begin; u < out.clique_end; ++u) {
    for (int v = u + 1; v < out.clique_end; ++v) edges.push_back({u, v, 1});
    for (int s = 0; s < n; ++s) edges.push_back({s, u, 1});
  }
  out.graph = MultiGraph(out.clique_end, std::move(edges));
  out.budget = out.complete_cost() - out.yes_threshold * out.M * n;
  return out;
}

Ordering ordering_from_cut(const DenseOlaOutput& out, const VertexPartition& cut) {
  if (cut.size() != static_cast<std::size_t>(out.source_n))
    throw DimensionError("ordering_from_cut: partition size does not match the source graph");
  std::vector<int> perm;
  perm.reserve(static_cast<std::size_t>(out.graph.n()));
  for (int v = 0; v < out.source_n; ++v)
    if (!cut[v]) perm.push_back(v);
  for (int v = out.clique_begin; v < out.clique_end; ++v) perm.push_back(v);
  for (int v = 0; v < out.source_n; ++v)
    if (cut[v]) perm.push_back(v);
  return Ordering(std::move(perm));
}

std::int64_t source_cost_under(const DenseOlaOutput& out, const Ordering& pi) {
  if (pi.size() != static_cast<std::size_t>(out.graph.n()))
    throw DimensionError("source_cost_under: ordering size does not match the output graph");
  const auto pos = pi.positions();
  std::int64_t total = 0;
  for (const Edge& e : out.source.edges()) total += e.mult * std::abs(pos[e.u] - pos[e.v]);
  return total;
}

CliqueNormalization make_clique_consecutive(const DenseOlaOutput& out, const Ordering& pi) {
  if (pi.size() != static_cast<std::size_t>(out.graph.n()))
    throw DimensionError("make_clique_consecutive: ordering size does not match the output graph");
  auto in_clique = [&](int v) { return v >= out.clique_begin && v < out.clique_end; };

  CliqueNormalization result{pi, 0};
  const std::size_t total = pi.size();
  while (true) {
    const auto perm = result.ordering.perm();
    std::size_t first = 0;
    while (first < total && !in_clique(perm[first])) ++first;
    if (first == total) break;
    std::size_t first_end = first;
    while (first_end < total && in_clique(perm[first_end])) ++first_end;
    std::size_t second = first_end;
    while (second < total && !in_clique(perm[second])) ++second;
    if (second == total) break;  // a single block: consecutive
    std::size_t second_end = second;
    while (second_end < total && in_clique(perm[second_end])) ++second_end;

    // X = perm[first_end, second) holds only source vertices.
    const auto pos = result.ordering.positions();
    std::int64_t to_left = 0;
    std::int64_t to_right = 0;
    for (std::size_t i = first_end; i < second; ++i) {
      const int x = perm[i];
      for (const Neighbor& nb : out.source.neighbors(x)) {
        const auto p = static_cast<std::size_t>(pos[nb.vertex]);
        if (p < first_end)
          to_left += nb.mult;
        else if (p >= second)
          to_right += nb.mult;
      }
    }
    if (to_left <= to_right)
      result.ordering = swap_adjacent_blocks(result.ordering, first, first_end - first, second - first_end);
    else
      result.ordering = swap_adjacent_blocks(result.ordering, first_end, second - first_end, second_end - second);
    ++result.moves;
  }
  return result;
}

VertexPartition cut_from_ordering(const DenseOlaOutput& out, const Ordering& pi) {
  const Ordering normalized = make_clique_consecutive(out, pi).ordering;
  const auto pos = normalized.positions();
  const int clique_pos = out.clique_end > out.clique_begin ? pos[out.clique_begin] : 0;
  VertexPartition cut(static_cast<std::size_t>(out.source_n));
  // With an empty clique (n = 0) there is nothing to split.
  for (int v = 0; v < out.source_n; ++v) cut.set(v, pos[v] > clique_pos);
  return cut;
}

}  // namespace gapred
