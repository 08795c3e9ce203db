#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "gapred/error.hpp"
#include "gapred/oracle.hpp"

namespace gapred {

namespace {

using Matrix = std::vector<std::vector<char>>;

Matrix simple_adjacency(const MultiGraph& g, const char* who) {
  if (!g.is_simple()) throw DomainError(std::string(who) + ": graph must be simple");
  Matrix adj(g.n(), std::vector<char>(g.n(), 0));
  for (const Edge& e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = 1;
  return adj;
}

// Maximum cardinality search; the reverse of the visiting order is a perfect
// elimination order whenever the graph is chordal.
std::vector<int> mcs_elimination_order(const MultiGraph& g) {
  const int n = g.n();
  std::vector<int> weight(n, 0);
  std::vector<bool> visited(n, false);
  std::vector<int> visit;
  visit.reserve(n);
  for (int i = 0; i < n; ++i) {
    int pick = -1;
    for (int v = 0; v < n; ++v)
      if (!visited[v] && (pick < 0 || weight[v] > weight[pick])) pick = v;
    visited[pick] = true;
    visit.push_back(pick);
    for (const Neighbor& nb : g.neighbors(pick))
      if (!visited[nb.vertex]) ++weight[nb.vertex];
  }
  std::reverse(visit.begin(), visit.end());
  return visit;
}

bool is_perfect_elimination_order(const Matrix& adj, const std::vector<int>& order) {
  const int n = static_cast<int>(order.size());
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  for (int i = 0; i < n; ++i) {
    const int v = order[i];
    int parent = -1;
    for (int u = 0; u < n; ++u)
      if (adj[v][u] && pos[u] > i && (parent < 0 || pos[u] < pos[parent])) parent = u;
    if (parent < 0) continue;
    for (int u = 0; u < n; ++u)
      if (u != parent && adj[v][u] && pos[u] > i && !adj[parent][u]) return false;
  }
  return true;
}

bool has_claw(const Matrix& adj) {
  const int n = static_cast<int>(adj.size());
  for (int c = 0; c < n; ++c) {
    std::vector<int> nb;
    for (int u = 0; u < n; ++u)
      if (adj[c][u]) nb.push_back(u);
    const std::size_t k = nb.size();
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) {
        if (adj[nb[i]][nb[j]]) continue;
        for (std::size_t l = j + 1; l < k; ++l)
          if (!adj[nb[i]][nb[l]] && !adj[nb[j]][nb[l]]) return true;
      }
  }
  return false;
}

// Depth-first search for a clique order in which every vertex occupies a
// contiguous run. Appending clique c after `last` is legal when no vertex of
// c was seen earlier unless it is still open (belongs to `last`).
class CliquePath {
 public:
  explicit CliquePath(std::vector<std::uint64_t> cliques) : cliques_(std::move(cliques)) {}

  bool solve() {
    const int k = static_cast<int>(cliques_.size());
    if (k <= 1) return true;
    for (int first = 0; first < k; ++first)
      if (extend(1ull << first, first, cliques_[first])) return true;
    return false;
  }

 private:
  struct StateHash {
    std::size_t operator()(const std::pair<std::uint64_t, int>& s) const noexcept {
      return std::hash<std::uint64_t>()(s.first * 0x9e3779b97f4a7c15ull + static_cast<std::uint64_t>(s.second));
    }
  };

  bool extend(std::uint64_t placed, int last, std::uint64_t seen) {
    const int k = static_cast<int>(cliques_.size());
    if (placed == (k == 64 ? ~0ull : ((1ull << k) - 1))) return true;
    if (failed_.count({placed, last})) return false;
    const std::uint64_t closed = seen & ~cliques_[last];
    for (int c = 0; c < k; ++c) {
      if (placed & (1ull << c)) continue;
      if (cliques_[c] & closed) continue;
      if (extend(placed | (1ull << c), c, seen | cliques_[c])) return true;
    }
    failed_.insert({placed, last});
    return false;
  }

  std::vector<std::uint64_t> cliques_;
  std::unordered_set<std::pair<std::uint64_t, int>, StateHash> failed_;
};

}  // namespace

bool is_chordal(const MultiGraph& g) {
  const Matrix adj = simple_adjacency(g, "is_chordal");
  return is_perfect_elimination_order(adj, mcs_elimination_order(g));
}

std::vector<std::vector<int>> maximal_cliques_chordal(const MultiGraph& g) {
  const Matrix adj = simple_adjacency(g, "maximal_cliques_chordal");
  const auto order = mcs_elimination_order(g);
  if (!is_perfect_elimination_order(adj, order)) throw DomainError("maximal_cliques_chordal: graph is not chordal");
  const int n = g.n();
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;

  std::vector<std::vector<int>> candidates;
  for (int i = 0; i < n; ++i) {
    const int v = order[i];
    std::vector<int> c{v};
    for (int u = 0; u < n; ++u)
      if (adj[v][u] && pos[u] > i) c.push_back(u);
    std::sort(c.begin(), c.end());
    candidates.push_back(std::move(c));
  }
  std::vector<std::vector<int>> maximal;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < candidates.size() && !dominated; ++j) {
      if (i == j) continue;
      const bool subset = std::includes(candidates[j].begin(), candidates[j].end(), candidates[i].begin(),
                                        candidates[i].end());
      // Equal candidates cannot occur (each contains a distinct lowest-PEO vertex
      // not present in earlier ones), so strict containment is the only case.
      if (subset && candidates[j].size() > candidates[i].size()) dominated = true;
    }
    if (!dominated) maximal.push_back(candidates[i]);
  }
  return maximal;
}

bool is_interval(const MultiGraph& g, std::size_t cap) {
  if (static_cast<std::size_t>(g.n()) > std::min<std::size_t>(cap, 64)) throw ResourceError("is_interval", g.n(), cap);
  if (!is_chordal(g)) return false;
  std::vector<std::uint64_t> masks;
  for (const auto& clique : maximal_cliques_chordal(g)) {
    std::uint64_t m = 0;
    for (int v : clique) m |= 1ull << v;
    masks.push_back(m);
  }
  return CliquePath(std::move(masks)).solve();
}

bool is_proper_interval(const MultiGraph& g, std::size_t cap) {
  const Matrix adj = simple_adjacency(g, "is_proper_interval");
  return !has_claw(adj) && is_interval(g, cap);
}

bool is_threshold(const MultiGraph& g) {
  const Matrix adj = simple_adjacency(g, "is_threshold");
  const int n = g.n();
  std::vector<bool> gone(n, false);
  std::vector<int> degree(n, 0);
  for (int v = 0; v < n; ++v)
    for (int u = 0; u < n; ++u) degree[v] += adj[v][u];
  for (int left = n; left > 0; --left) {
    int pick = -1;
    for (int v = 0; v < n && pick < 0; ++v)
      if (!gone[v] && (degree[v] == 0 || degree[v] == left - 1)) pick = v;
    if (pick < 0) return false;
    gone[pick] = true;
    for (int u = 0; u < n; ++u)
      if (adj[pick][u]) --degree[u];
  }
  return true;
}

bool is_trivially_perfect(const MultiGraph& g, std::size_t cap) {
  const int n = g.n();
  if (static_cast<std::size_t>(n) > cap) throw ResourceError("is_trivially_perfect", n, cap);
  const Matrix adj = simple_adjacency(g, "is_trivially_perfect");
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          const int q[4] = {a, b, c, d};
          int edges = 0;
          int deg[4] = {0, 0, 0, 0};
          for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
              if (adj[q[i]][q[j]]) {
                ++edges;
                ++deg[i];
                ++deg[j];
              }
          const int leaves = static_cast<int>(std::count(deg, deg + 4, 1));
          const bool p4 = edges == 3 && leaves == 2;  // a star K1,3 has three leaves
          const bool c4 = edges == 4 && std::count(deg, deg + 4, 2) == 4;
          if (p4 || c4) return false;
        }
  return true;
}

bool is_chain(const BipartiteGraph& h) {
  std::vector<int> order(h.a_size());
  for (int i = 0; i < h.a_size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    return h.neighbors_of_a(x).size() > h.neighbors_of_a(y).size();
  });
  for (std::size_t i = 1; i < order.size(); ++i)
    for (int b : h.neighbors_of_a(order[i]))
      if (!h.has_edge(order[i - 1], b)) return false;
  return true;
}

}  // namespace gapred
