#include <algorithm>
#include <cstdint>
#include <limits>
#include <set>
#include <vector>

#include "gapred/error.hpp"
#include "gapred/oracle.hpp"

namespace gapred {

namespace {

// Enumeration keys put vertex (or variable) 0 in the most significant bit, so
// increasing keys visit witnesses in lexicographic order.
inline std::uint32_t key_bit(int v, int n) { return 1u << (n - 1 - v); }

VertexPartition partition_from_key(std::uint32_t key, int n) {
  VertexPartition p(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) p.set(v, (key & key_bit(v, n)) != 0);
  return p;
}

Assignment assignment_from_key(std::uint32_t key, int n) {
  Assignment a(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) a.set(v, (key & key_bit(v, n)) != 0);
  return a;
}

void check_width(std::size_t n, std::size_t cap, const char* what) {
  if (n > std::min<std::size_t>(cap, 30)) throw ResourceError(what, n, cap);
}

struct ClauseMask {
  std::uint32_t pos = 0;
  std::uint32_t neg = 0;
};

std::vector<ClauseMask> clause_masks(const CnfFormula& f) {
  std::vector<ClauseMask> masks;
  masks.reserve(f.clause_count());
  for (const Clause& c : f.clauses()) {
    ClauseMask m;
    for (const Literal& l : c) (l.positive ? m.pos : m.neg) |= key_bit(l.var, f.var_count());
    masks.push_back(m);
  }
  return masks;
}

template <class Count>
SolveResult<Assignment> best_assignment(const CnfFormula& f, Count count) {
  const int n = f.var_count();
  const auto masks = clause_masks(f);
  std::int64_t best = -1;
  std::uint32_t best_key = 0;
  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::uint64_t k = 0; k < end; ++k) {
    const auto key = static_cast<std::uint32_t>(k);
    std::int64_t value = 0;
    for (const ClauseMask& m : masks) value += count(m, key);
    if (value > best) {
      best = value;
      best_key = key;
      if (best == static_cast<std::int64_t>(masks.size())) break;
    }
  }
  return {best, assignment_from_key(best_key, n)};
}

}  // namespace

SolveResult<VertexPartition> max_cut_exact(const MultiGraph& g, std::size_t cap) {
  const int n = g.n();
  check_width(static_cast<std::size_t>(n), cap, "max_cut_exact");
  if (n <= 1) return {0, VertexPartition(static_cast<std::size_t>(n))};

  // Gray code over vertices 1..n-1; vertex 0 stays on side A.
  std::vector<bool> side(n, false);
  std::uint32_t key = 0;
  std::int64_t cut = 0;
  std::int64_t best = 0;
  std::uint32_t best_key = 0;
  const std::uint64_t steps = std::uint64_t{1} << (n - 1);
  for (std::uint64_t i = 1; i < steps; ++i) {
    const int v = 1 + __builtin_ctzll(i);
    std::int64_t same = 0;
    std::int64_t across = 0;
    for (const Neighbor& nb : g.neighbors(v)) (side[nb.vertex] == side[v] ? same : across) += nb.mult;
    cut += same - across;
    side[v] = !side[v];
    key ^= key_bit(v, n);
    if (cut > best || (cut == best && key < best_key)) {
      best = cut;
      best_key = key;
    }
  }
  return {best, partition_from_key(best_key, n)};
}

SolveResult<VertexPartition> max_cut_exact_sparse(const MultiGraph& g, std::size_t width_cap) {
  const int n = g.n();
  struct Factor {
    std::vector<int> scope;  // sorted vertex ids
    std::vector<std::int64_t> table;
  };
  struct Step {
    int vertex;
    std::vector<int> scope;
    std::vector<std::uint8_t> choice;
  };

  std::vector<Factor> factors;
  std::vector<std::set<int>> interaction(n);
  for (const Edge& e : g.edges()) {
    if (e.u == e.v) continue;
    factors.push_back({{e.u, e.v}, {0, e.mult, e.mult, 0}});
    interaction[e.u].insert(e.v);
    interaction[e.v].insert(e.u);
  }
  std::vector<bool> alive_factor(factors.size(), true);
  std::vector<bool> eliminated(n, false);
  std::vector<Step> steps;
  std::int64_t constant = 0;

  for (int round = 0; round < n; ++round) {
    int v = -1;
    for (int u = 0; u < n; ++u)
      if (!eliminated[u] && (v < 0 || interaction[u].size() < interaction[v].size())) v = u;

    std::vector<std::size_t> bucket;
    std::set<int> joint;
    for (std::size_t f = 0; f < factors.size(); ++f) {
      if (!alive_factor[f]) continue;
      const auto& sc = factors[f].scope;
      if (!std::binary_search(sc.begin(), sc.end(), v)) continue;
      bucket.push_back(f);
      alive_factor[f] = false;
      for (int u : sc)
        if (u != v) joint.insert(u);
    }
    std::vector<int> scope(joint.begin(), joint.end());
    if (scope.size() > width_cap) throw ResourceError("max_cut_exact_sparse induced width", scope.size(), width_cap);

    // For every factor in the bucket, where each scope entry reads its bit:
    // -1 for the eliminated vertex, otherwise the position in `scope`.
    std::vector<std::vector<int>> where(bucket.size());
    for (std::size_t b = 0; b < bucket.size(); ++b)
      for (int u : factors[bucket[b]].scope)
        where[b].push_back(u == v ? -1
                                  : static_cast<int>(std::lower_bound(scope.begin(), scope.end(), u) - scope.begin()));

    const std::size_t size = std::size_t{1} << scope.size();
    Factor merged{scope, std::vector<std::int64_t>(size, 0)};
    Step step{v, scope, std::vector<std::uint8_t>(size, 0)};
    for (std::size_t idx = 0; idx < size; ++idx) {
      std::int64_t value[2] = {0, 0};
      for (int x = 0; x < 2; ++x)
        for (std::size_t b = 0; b < bucket.size(); ++b) {
          std::size_t local = 0;
          for (std::size_t j = 0; j < where[b].size(); ++j) {
            const int pos = where[b][j];
            const std::size_t bit = pos < 0 ? static_cast<std::size_t>(x) : (idx >> pos) & 1u;
            local |= bit << j;
          }
          value[x] += factors[bucket[b]].table[local];
        }
      merged.table[idx] = std::max(value[0], value[1]);
      step.choice[idx] = value[1] > value[0] ? 1 : 0;
    }

    if (scope.empty()) {
      constant += merged.table[0];
    } else {
      factors.push_back(std::move(merged));
      alive_factor.push_back(true);
    }
    steps.push_back(std::move(step));

    eliminated[v] = true;
    for (int a : interaction[v]) {
      interaction[a].erase(v);
      for (int b : interaction[v])
        if (a != b) interaction[a].insert(b);
    }
    interaction[v].clear();
  }

  std::vector<bool> side(n, false);
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    std::size_t idx = 0;
    for (std::size_t j = 0; j < it->scope.size(); ++j)
      if (side[it->scope[j]]) idx |= std::size_t{1} << j;
    side[it->vertex] = it->choice[idx] != 0;
  }
  if (n > 0 && side[0]) side.flip();
  return {constant, VertexPartition(std::move(side))};
}

SolveResult<VertexPartition> min_bisection_exact(const MultiGraph& g, std::size_t cap) {
  const int n = g.n();
  if (n % 2 != 0) throw DomainError("min_bisection_exact: odd vertex count " + std::to_string(n));
  check_width(static_cast<std::size_t>(n), cap, "min_bisection_exact");
  if (n == 0) return {0, VertexPartition()};

  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  std::uint32_t best_key = 0;
  const std::uint64_t end = std::uint64_t{1} << (n - 1);  // vertex 0 stays on side A
  for (std::uint64_t k = 0; k < end; ++k) {
    const auto key = static_cast<std::uint32_t>(k);
    if (2 * __builtin_popcount(key) != n) continue;
    std::int64_t cut = 0;
    for (const Edge& e : g.edges())
      if (((key & key_bit(e.u, n)) != 0) != ((key & key_bit(e.v, n)) != 0)) cut += e.mult;
    if (cut < best) {
      best = cut;
      best_key = key;
    }
  }
  return {best, partition_from_key(best_key, n)};
}

SolveResult<Assignment> max_nae_exact(const CnfFormula& f, std::size_t cap) {
  check_width(static_cast<std::size_t>(f.var_count()), cap, "max_nae_exact");
  return best_assignment(f, [](const ClauseMask& m, std::uint32_t a) -> std::int64_t {
    const bool some_true = ((m.pos & a) | (m.neg & ~a)) != 0;
    const bool some_false = ((m.pos & ~a) | (m.neg & a)) != 0;
    return some_true && some_false;
  });
}

SolveResult<Assignment> max_sat_exact(const CnfFormula& f, std::size_t cap) {
  check_width(static_cast<std::size_t>(f.var_count()), cap, "max_sat_exact");
  return best_assignment(f, [](const ClauseMask& m, std::uint32_t a) -> std::int64_t {
    return ((m.pos & a) | (m.neg & ~a)) != 0;
  });
}

}  // namespace gapred
