#pragma once

// OLA -> Chain Completion with an exact per-ordering cost correspondence, and
// Chain Completion -> Fill-In, Interval, Proper Interval, Threshold and
// Trivially Perfect Completion by adding cliques on the sides of the
// bipartite graph.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gapred/model.hpp"
#include "gapred/oracle.hpp"

namespace gapred {

/// Where a B-vertex of the chain instance came from: the block S_owner, and
/// either an edge copy to `other` or a padding slot (other == -1).
struct BOrigin {
  int owner = 0;
  int other = -1;
  int slot = 0;

  bool padding() const noexcept { return other < 0; }
};

struct ChainInstance {
  BipartiteGraph graph;
  std::int64_t budget = 0;
  std::int64_t source_delta = 0;
  std::int64_t source_edges = 0;
  int source_n = 0;
  std::vector<BOrigin> edge_origin;  // indexed by B-vertex

  /// Delta * n(n-1)/2 - 2|E|, the gap between chain cost and arrangement cost.
  std::int64_t offset() const;
};

/// A = V(g). S_v holds Delta B-vertices v*Delta .. v*Delta + Delta-1: first one
/// per incident edge copy (adjacent to v and the other endpoint), then
/// padding adjacent to v only. Budget k + offset(). Loops are rejected.
ChainInstance ola_to_chain(const MultiGraph& g, std::int64_t k);

/// Edges needed to turn the instance into a chain graph whose neighborhoods
/// grow along pi: every b gets joined to all of A from its earliest neighbor
/// onwards, so it costs (n - earliest position) - deg(b).
std::int64_t chain_cost_for_order(const ChainInstance& ci, const Ordering& pi);

/// cost_of_ordering(source, pi) + offset(); chain_cost_for_order must agree.
std::int64_t chain_claim_value(const ChainInstance& ci, const MultiGraph& source, const Ordering& pi);

enum class GraphClass { chordal, interval, proper_interval, threshold, trivially_perfect };

std::string to_string(GraphClass cls);
/// Accepts the names printed by to_string; throws DomainError otherwise.
GraphClass parse_graph_class(std::string_view name);

/// Vertices 0..a-1 are A and a..a+b-1 are B.
MultiGraph cliques_on_both_sides(const BipartiteGraph& h);
MultiGraph clique_on_a(const BipartiteGraph& h);

struct CompletionInstance {
  MultiGraph graph;
  std::int64_t budget = 0;
  GraphClass target = GraphClass::chordal;
};

/// H plus cliques on A and on B. The three targets share one graph.
CompletionInstance chain_to_fillin(const ChainInstance& ci);
CompletionInstance chain_to_interval(const ChainInstance& ci);
CompletionInstance chain_to_proper_interval(const ChainInstance& ci);

/// H plus a clique on A only.
CompletionInstance chain_to_threshold(const ChainInstance& ci);
CompletionInstance chain_to_trivially_perfect(const ChainInstance& ci);

bool is_in_class(const MultiGraph& g, GraphClass cls);

/// Whether g + added lies in the class. Added pairs that are loops or already
/// edges of g are a DomainError.
bool verify_completion(const MultiGraph& g, const EdgeList& added, GraphClass cls);

/// Smallest added edge set (lex-first among the smallest) putting g in the
/// class, found by enumerating subsets of the missing edges. Returns nullopt
/// when nothing of size <= max_added works; throws ResourceError when g has
/// more than max_candidates missing edges.
std::optional<SolveResult<EdgeList>> min_completion_search(const MultiGraph& g, GraphClass cls,
                                                           std::size_t max_candidates = 36,
                                                           std::size_t max_added = 5);

/// Exact minimum completion for the classes with a peeling characterization,
/// by DP over vertex subsets. Threshold: the last vertex of a construction
/// sequence is isolated or dominating, O(2^n n). Trivially perfect: each
/// component has a universal vertex whose removal stays in the class, O(3^n).
/// Other classes are a DomainError. Caps: threshold n <= 20, trivially
/// perfect n <= 16.
SolveResult<EdgeList> min_completion_exact(const MultiGraph& g, GraphClass cls);

}  // namespace gapred
