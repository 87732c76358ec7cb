#include "ibound/independence.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "ibound/errors.hpp"

namespace ibound {

namespace {

using Mask = std::uint64_t;

struct Solver {
  int n;
  std::vector<Mask> nbr;
  int best_size = 0;
  Mask best_set = 0;

  int degree_in(int v, Mask pool) const { return std::popcount(nbr[v] & pool); }

  // max-degree vertex within pool, ties to the lowest index
  int branch_vertex(Mask pool) const {
    int best = -1, best_deg = -1;
    for (Mask m = pool; m;) {
      const int v = std::countr_zero(m);
      m &= m - 1;
      const int d = degree_in(v, pool);
      if (d > best_deg) {
        best_deg = d;
        best = v;
      }
    }
    return best;
  }

  // greedy min-degree fill, for the initial lower bound
  void greedy(Mask pool) {
    Mask chosen = 0;
    int size = 0;
    while (pool) {
      int pick = -1, pick_deg = n + 1;
      for (Mask m = pool; m;) {
        const int v = std::countr_zero(m);
        m &= m - 1;
        const int d = degree_in(v, pool);
        if (d < pick_deg) {
          pick_deg = d;
          pick = v;
        }
      }
      chosen |= Mask{1} << pick;
      ++size;
      pool &= ~(nbr[pick] | (Mask{1} << pick));
    }
    best_size = size;
    best_set = chosen;
  }

  // every edge inside the pool needs an endpoint outside the independent set,
  // and one excluded vertex covers at most max-degree of them
  int upper_bound(Mask pool) const {
    const int size = std::popcount(pool);
    long edges2 = 0;  // twice the edge count
    int maxdeg = 0;
    for (Mask m = pool; m;) {
      const int v = std::countr_zero(m);
      m &= m - 1;
      const int d = degree_in(v, pool);
      edges2 += d;
      maxdeg = std::max(maxdeg, d);
    }
    if (maxdeg == 0) return size;
    const long excluded = (edges2 / 2 + maxdeg - 1) / maxdeg;
    return size - static_cast<int>(excluded);
  }

  void search(Mask current, int size, Mask pool) {
    if (pool == 0) {
      if (size > best_size) {
        best_size = size;
        best_set = current;
      }
      return;
    }
    if (size + upper_bound(pool) <= best_size) return;
    const int v = branch_vertex(pool);
    const Mask vbit = Mask{1} << v;
    search(current | vbit, size + 1, pool & ~(nbr[v] | vbit));  // take v
    search(current, size, pool & ~vbit);                        // skip v
  }
};

std::vector<int> mask_to_vertices(Mask m) {
  std::vector<int> out;
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

}  // namespace

IndependenceResult independence_number(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 64)
    throw budget_error("independence_number: " + std::to_string(n) +
                       " vertices exceeds the 64-vertex budget");
  if (n == 0) return {0, {}};
  Solver solver{n, g.neighbor_masks()};
  const Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  solver.greedy(all);
  solver.search(0, 0, all);
  return {solver.best_size, mask_to_vertices(solver.best_set)};
}

CriticalityReport is_alpha_critical(const Graph& g) {
  const int alpha = independence_number(g).alpha;
  CriticalityReport report;
  for (const auto& e : g.edges()) {
    const IndependenceResult sub = independence_number(delete_edge(g, e.first, e.second));
    if (sub.alpha <= alpha) return {false, {}};  // short-circuit
    report.per_edge[e] = sub.witness;
  }
  report.is_critical = true;
  return report;
}

bool is_independent_set(const Graph& g, const std::vector<int>& vertices) {
  for (int v : vertices)
    if (v < 0 || v >= g.vertex_count()) return false;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (vertices[i] == vertices[j]) return false;
      if (g.has_edge(vertices[i], vertices[j])) return false;
    }
  return true;
}

}  // namespace ibound
