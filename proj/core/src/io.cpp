#include "gapred/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gapred/error.hpp"

namespace gapred {

using nlohmann::json;

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'", 0);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
  if (!out) throw Error("write to '" + path + "' failed");
}

// ---------------------------------------------------------------------------

namespace {

bool parse_long(std::string_view token, long long& value) {
  const char* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  return ec == std::errc() && ptr == end;
}

}  // namespace

CnfFormula parse_dimacs(std::string_view text) {
  long long n = -1;
  long long m = -1;
  std::vector<Clause> clauses;
  Clause current;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('\n', start), text.size());
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos) {
      if (end == text.size()) break;
      continue;
    }
    line = line.substr(first);
    if (line[0] == 'c') continue;
    if (line[0] == '%') break;
    std::istringstream tokens{std::string(line)};
    if (line[0] == 'p') {
      std::string p, fmt, ns, ms, extra;
      tokens >> p >> fmt >> ns >> ms;
      if (p != "p" || fmt != "cnf" || !parse_long(ns, n) || !parse_long(ms, m) || n < 0 || m < 0 || (tokens >> extra))
        throw ParseError("malformed header, expected 'p cnf <vars> <clauses>'", line_no);
      if (!clauses.empty() || !current.empty()) throw ParseError("header after clauses", line_no);
      continue;
    }
    if (n < 0) throw ParseError("clause before the 'p cnf' header", line_no);
    std::string token;
    while (tokens >> token) {
      long long lit = 0;
      if (!parse_long(token, lit)) throw ParseError("bad literal '" + token + "'", line_no);
      if (lit == 0) {
        if (current.empty()) throw ParseError("empty clause", line_no);
        clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      const long long var = lit < 0 ? -lit : lit;
      if (var > n) throw ParseError("literal " + token + " exceeds the declared " + std::to_string(n) + " variables", line_no);
      current.push_back({static_cast<int>(var - 1), lit > 0});
    }
    if (end == text.size()) break;
  }
  if (n < 0) throw ParseError("missing 'p cnf' header", 0);
  if (!current.empty()) throw ParseError("last clause is not terminated by 0", line_no);
  if (static_cast<long long>(clauses.size()) != m)
    throw ParseError("header declares " + std::to_string(m) + " clauses, found " + std::to_string(clauses.size()), 0);
  return CnfFormula(static_cast<int>(n), std::move(clauses));
}

std::string write_dimacs(const CnfFormula& f) {
  std::ostringstream out;
  out << "p cnf " << f.var_count() << ' ' << f.clause_count() << '\n';
  for (const Clause& c : f.clauses()) {
    for (const Literal& l : c) out << (l.positive ? l.var + 1 : -(l.var + 1)) << ' ';
    out << "0\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------

namespace {

std::size_t line_of(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), line_of(text, e.byte));
  }
}

long long get_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer", 0);
  return j.get<long long>();
}

long long get_field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"", 0);
  const long long v = get_int(obj.at(key), key);
  if (v < 0 || v > 100'000'000) throw ParseError(std::string("field \"") + key + "\" out of range", 0);
  return v;
}

const json& get_edges(const json& obj) {
  if (!obj.contains("edges") || !obj.at("edges").is_array()) throw ParseError("missing array \"edges\"", 0);
  return obj.at("edges");
}

struct Triple {
  long long u;
  long long v;
  long long mult;
};

Triple get_triple(const json& e, std::size_t index, long long n) {
  const std::string where = "edge " + std::to_string(index);
  if (!e.is_array() || e.size() < 2 || e.size() > 3) throw ParseError(where + " must be [u, v] or [u, v, mult]", 0);
  Triple t{get_int(e[0], where.c_str()), get_int(e[1], where.c_str()), e.size() == 3 ? get_int(e[2], where.c_str()) : 1};
  if (t.u < 0 || t.v < 0 || t.u >= n || t.v >= n) throw ParseError(where + " has a vertex out of range", 0);
  if (t.mult < 1) throw ParseError(where + " has multiplicity below 1", 0);
  return t;
}

}  // namespace

MultiGraph parse_graph_json(std::string_view text) {
  const json j = parse_json(text);
  const long long n = get_field(j, "n");
  std::vector<Edge> edges;
  const json& list = get_edges(j);
  for (std::size_t i = 0; i < list.size(); ++i) {
    const Triple t = get_triple(list[i], i, n);
    if (t.u > t.v) throw ParseError("edge " + std::to_string(i) + " is not normalized (u <= v)", 0);
    edges.push_back({static_cast<int>(t.u), static_cast<int>(t.v), t.mult});
  }
  return MultiGraph(static_cast<int>(n), std::move(edges));
}

std::string write_graph_json(const MultiGraph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v, e.mult});
  return json{{"n", g.n()}, {"edges", edges}}.dump() + "\n";
}

Digraph parse_digraph_json(std::string_view text) {
  const json j = parse_json(text);
  const long long n = get_field(j, "n");
  std::vector<Arc> arcs;
  const json& list = get_edges(j);
  for (std::size_t i = 0; i < list.size(); ++i) {
    const Triple t = get_triple(list[i], i, n);
    arcs.push_back({static_cast<int>(t.u), static_cast<int>(t.v), t.mult});
  }
  return Digraph(static_cast<int>(n), std::move(arcs));
}

std::string write_digraph_json(const Digraph& d) {
  json arcs = json::array();
  for (const Arc& a : d.arcs()) arcs.push_back({a.from, a.to, a.mult});
  return json{{"n", d.n()}, {"edges", arcs}}.dump() + "\n";
}

BipartiteGraph parse_bipartite_json(std::string_view text) {
  const json j = parse_json(text);
  const long long a = get_field(j, "a");
  const long long b = get_field(j, "b");
  std::vector<std::pair<int, int>> edges;
  const json& list = get_edges(j);
  for (std::size_t i = 0; i < list.size(); ++i) {
    const json& e = list[i];
    const std::string where = "edge " + std::to_string(i);
    if (!e.is_array() || e.size() != 2) throw ParseError(where + " must be [a, b]", 0);
    const long long x = get_int(e[0], where.c_str());
    const long long y = get_int(e[1], where.c_str());
    if (x < 0 || y < 0 || x >= a || y >= b) throw ParseError(where + " has a vertex out of range", 0);
    edges.push_back({static_cast<int>(x), static_cast<int>(y)});
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) throw ParseError("duplicate bipartite edge", 0);
  return BipartiteGraph(static_cast<int>(a), static_cast<int>(b), std::move(edges));
}

std::string write_bipartite_json(const BipartiteGraph& h) {
  json edges = json::array();
  for (const auto& [x, y] : h.edges()) edges.push_back({x, y});
  return json{{"a", h.a_size()}, {"b", h.b_size()}, {"edges", edges}}.dump() + "\n";
}

// ---------------------------------------------------------------------------

std::vector<int> parse_int_array(std::string_view text) {
  const json j = parse_json(text);
  if (!j.is_array()) throw ParseError("expected a JSON array", 0);
  std::vector<int> values;
  for (const json& v : j) values.push_back(static_cast<int>(get_int(v, "array entry")));
  return values;
}

std::string write_int_array(const std::vector<int>& values) { return json(values).dump() + "\n"; }

std::string write_ordering(const Ordering& pi) {
  return write_int_array(std::vector<int>(pi.perm().begin(), pi.perm().end()));
}

Ordering parse_ordering(std::string_view text) { return Ordering(parse_int_array(text)); }

std::string write_partition(const VertexPartition& p) {
  std::vector<int> sides;
  for (bool b : p.sides()) sides.push_back(b ? 1 : 0);
  return write_int_array(sides);
}

std::string write_assignment(const Assignment& a) {
  std::vector<int> values;
  for (bool b : a.values()) values.push_back(b ? 1 : 0);
  return write_int_array(values);
}

std::string write_edge_list(const EdgeList& edges) {
  json list = json::array();
  for (const auto& [u, v] : edges) list.push_back({u, v});
  return list.dump() + "\n";
}

}  // namespace gapred
