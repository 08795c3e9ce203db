#pragma once

// Seeded random instances for experiments and tests.

#include "gapred/model.hpp"
#include "gapred/rng.hpp"

namespace gapred {

/// m clauses over n >= 3 variables, three distinct variables per clause,
/// polarities by fair coins.
CnfFormula random_e3cnf(int n, int m, Rng& rng);

/// Simple d-regular graph on n vertices by stub matching with rejection.
/// Needs n*d even and d < n.
MultiGraph random_regular_graph(int n, int d, Rng& rng);

/// Simple graph with m distinct edges chosen uniformly.
MultiGraph random_graph(int n, int m, Rng& rng);

/// Loop-free digraph with m distinct arcs. With `oriented` no pair is used in
/// both directions.
Digraph random_digraph(int n, int m, bool oriented, Rng& rng);

/// Bipartite graph with m distinct edges.
BipartiteGraph random_bipartite(int a, int b, int m, Rng& rng);

}  // namespace gapred
