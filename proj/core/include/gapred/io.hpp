#pragma once

// Instance and witness files. CNF is DIMACS; graphs, digraphs and bipartite
// graphs are small JSON objects; orderings, partitions, assignments and
// vertex sets are JSON arrays. Every writer produces text its reader maps
// back to an identical instance.

#include <string>
#include <string_view>
#include <vector>

#include "gapred/model.hpp"

namespace gapred {

/// Whole-file read; a missing or unreadable file is a ParseError.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

/// `c` comment lines, one `p cnf n m` header, clauses terminated by 0 and
/// free to span lines. A `%` line ends the clause section.
CnfFormula parse_dimacs(std::string_view text);
std::string write_dimacs(const CnfFormula& f);

/// {"n": int, "edges": [[u, v, mult], ...]} with u <= v. The mult entry may
/// be omitted and defaults to 1.
MultiGraph parse_graph_json(std::string_view text);
std::string write_graph_json(const MultiGraph& g);

/// Same shape with ordered (from, to) pairs.
Digraph parse_digraph_json(std::string_view text);
std::string write_digraph_json(const Digraph& d);

/// {"a": int, "b": int, "edges": [[a, b], ...]}.
BipartiteGraph parse_bipartite_json(std::string_view text);
std::string write_bipartite_json(const BipartiteGraph& h);

std::vector<int> parse_int_array(std::string_view text);
std::string write_int_array(const std::vector<int>& values);

/// Orderings list perm (vertex at each position).
std::string write_ordering(const Ordering& pi);
Ordering parse_ordering(std::string_view text);
/// Partitions list 0/1 sides, assignments 0/1 values.
std::string write_partition(const VertexPartition& p);
std::string write_assignment(const Assignment& a);
std::string write_edge_list(const EdgeList& edges);

}  // namespace gapred
