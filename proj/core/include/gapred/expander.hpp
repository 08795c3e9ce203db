#pragma once

// Certified random regular multigraphs standing in for explicit expander
// families. A graph is accepted only once its Cheeger number is certified to
// be at least the requested p, exactly on small graphs and through the
// spectral gap otherwise.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "gapred/model.hpp"
#include "gapred/rational.hpp"
#include "gapred/rng.hpp"

namespace gapred {

enum class CertificateKind { exact, spectral };

std::string to_string(CertificateKind kind);

struct ExpanderSpec {
  int n = 0;
  Rational p;
  int d = 0;
  Rational certified_h;
  CertificateKind kind = CertificateKind::exact;
};

struct ExpanderOptions {
  int max_tries = 32;
  int d_ceiling = 64;
  /// Lower bound on the starting degree, so several gadgets can share one d.
  int min_degree = 0;
  std::size_t exact_cap = 20;
};

struct Expander {
  MultiGraph graph;
  ExpanderSpec spec;
};

/// min over nonempty X with |X| <= n/2 of |delta(X)| / |X|. Returns nullopt
/// (h = +infinity) when no such X exists, i.e. n <= 1.
std::optional<Rational> cheeger_exact(const MultiGraph& g, std::size_t cap = 20);

/// (d - lambda_2) / 2 for a d-regular multigraph, where the adjacency matrix
/// has the loop count on its diagonal. Rounded down to a dyadic rational with
/// a safety margin so the result never overstates the floating-point value.
Rational spectral_bound(const MultiGraph& g);

/// Stub matching on d*n endpoints. A pair of stubs on the same vertex becomes
/// a loop of multiplicity 2, which keeps the graph exactly d-regular under the
/// loop-counts-once convention. Requires d*n even.
MultiGraph random_regular_multigraph(int n, int d, Rng& rng);

/// Starts at d = max(ceil(2p) + 2, min_degree), samples up to max_tries graphs
/// per degree and moves to the next degree when none certifies. Degrees with
/// odd d*n are skipped. Throws ConstructionError past d_ceiling.
Expander build_expander(int n, const Rational& p, std::uint64_t seed, const ExpanderOptions& options = {});

}  // namespace gapred
