#include "gapred/expander.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "gapred/error.hpp"

namespace gapred {

std::string to_string(CertificateKind kind) { return kind == CertificateKind::exact ? "exact" : "spectral"; }

std::optional<Rational> cheeger_exact(const MultiGraph& g, std::size_t cap) {
  const int n = g.n();
  if (static_cast<std::size_t>(n) > std::min<std::size_t>(cap, 28)) throw ResourceError("cheeger_exact", n, cap);
  if (n <= 1) return std::nullopt;

  std::vector<std::int64_t> outside(n, 0);
  for (int v = 0; v < n; ++v)
    for (const Neighbor& nb : g.neighbors(v)) outside[v] += nb.mult;

  // boundary[S] from boundary[S minus its lowest vertex]; loops never leave S.
  const std::uint32_t full = (1u << n) - 1;
  std::vector<std::int64_t> boundary(std::size_t{1} << n, 0);
  std::int64_t best_num = -1;
  std::int64_t best_den = 1;
  for (std::uint32_t s = 1; s <= full; ++s) {
    const int v = __builtin_ctz(s);
    const std::uint32_t rest = s & (s - 1);
    std::int64_t inside = 0;
    for (const Neighbor& nb : g.neighbors(v))
      if (rest & (1u << nb.vertex)) inside += nb.mult;
    boundary[s] = boundary[rest] + outside[v] - 2 * inside;
    const int size = __builtin_popcount(s);
    if (2 * size > n) continue;
    if (best_num < 0 || boundary[s] * best_den < best_num * size) {
      best_num = boundary[s];
      best_den = size;
    }
  }
  return Rational(best_num, best_den);
}

Rational spectral_bound(const MultiGraph& g) {
  const int n = g.n();
  if (n == 0) throw DomainError("spectral_bound: empty graph");
  const std::int64_t d = g.degree(0);
  if (!g.is_regular(d)) throw DomainError("spectral_bound: graph is not regular");
  if (n == 1) return Rational(0);

  Eigen::MatrixXd adj = Eigen::MatrixXd::Zero(n, n);
  for (const Edge& e : g.edges()) {
    if (e.u == e.v) {
      adj(e.u, e.u) += static_cast<double>(e.mult);
    } else {
      adj(e.u, e.v) += static_cast<double>(e.mult);
      adj(e.v, e.u) += static_cast<double>(e.mult);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(adj, Eigen::EigenvaluesOnly);
  const double lambda2 = solver.eigenvalues()(n - 2);
  const double gap = (static_cast<double>(d) - lambda2) / 2.0;

  // Eigenvalue error is about n * eps * ||A||; subtract a comfortable margin
  // and round down on a 2^-30 grid.
  const double margin = 1e-9 * static_cast<double>(std::max<std::int64_t>(d, 1)) * n;
  const double safe = gap - margin;
  if (safe <= 0) return Rational(0);
  const double scale = 1073741824.0;  // 2^30
  const auto numerator = static_cast<std::int64_t>(std::floor(safe * scale));
  return Rational(numerator, static_cast<std::int64_t>(scale));
}

MultiGraph random_regular_multigraph(int n, int d, Rng& rng) {
  if (n < 1 || d < 0) throw DomainError("random_regular_multigraph: need n >= 1 and d >= 0");
  if ((static_cast<std::int64_t>(n) * d) % 2 != 0) throw DomainError("random_regular_multigraph: d * n must be even");
  std::vector<int> stubs;
  stubs.reserve(static_cast<std::size_t>(n) * d);
  for (int v = 0; v < n; ++v)
    for (int i = 0; i < d; ++i) stubs.push_back(v);
  rng.shuffle(stubs);
  std::vector<Edge> edges;
  edges.reserve(stubs.size() / 2);
  for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
    const int u = std::min(stubs[i], stubs[i + 1]);
    const int v = std::max(stubs[i], stubs[i + 1]);
    edges.push_back({u, v, u == v ? 2 : 1});
  }
  return MultiGraph(n, std::move(edges));
}

Expander build_expander(int n, const Rational& p, std::uint64_t seed, const ExpanderOptions& options) {
  if (n < 1) throw DomainError("build_expander: n must be at least 1");
  if (p <= 0) throw DomainError("build_expander: p must be positive");

  const int start = std::max(static_cast<int>(to_int64(ceil(2 * p))) + 2, options.min_degree);

  if (n == 1) {
    // No admissible X exists, so h is +infinity; p is certified vacuously.
    MultiGraph g(1, {{0, 0, start}});
    return {std::move(g), {1, p, start, p, CertificateKind::exact}};
  }

  const bool exact = static_cast<std::size_t>(n) <= options.exact_cap;
  const Rng root = Rng(seed).split("expander");
  Rational best_seen(-1);
  for (int d = start; d <= options.d_ceiling; ++d) {
    if ((static_cast<std::int64_t>(n) * d) % 2 != 0) continue;
    for (int attempt = 0; attempt < options.max_tries; ++attempt) {
      Rng rng = root.split(static_cast<std::uint64_t>(d)).split(static_cast<std::uint64_t>(attempt));
      MultiGraph g = random_regular_multigraph(n, d, rng);
      const Rational h = exact ? *cheeger_exact(g, options.exact_cap) : spectral_bound(g);
      if (h > best_seen) best_seen = h;
      if (h >= p)
        return {std::move(g), {n, p, d, h, exact ? CertificateKind::exact : CertificateKind::spectral}};
    }
  }
  throw ConstructionError("build_expander: no graph on " + std::to_string(n) + " vertices certified h >= " +
                          to_string(p) + " up to degree " + std::to_string(options.d_ceiling) +
                          " (best certified " + to_string(best_seen) + ")");
}

}  // namespace gapred
