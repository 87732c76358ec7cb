#pragma once

#include <random>
#include <set>
#include <vector>

#include "ibound/certify.hpp"
#include "ibound/graph.hpp"
#include "ibound/paley.hpp"
#include "ibound/rational.hpp"
#include "ibound/sym_matrix.hpp"

namespace ibound::testing {

// 7-vertex gadget pattern whose generic determinant is a monomial carried by
// its unique triangle {0,1,2} (squared pendant-path variables drop out).
inline Graph triangle_gadget_pattern() {
  return Graph(7, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 6}});
}

// 7-vertex gadget pattern whose monomial is carried by the 5-cycle
// 2-3-4-6-5-2, with the pendant edge squared.
inline Graph pentagon_gadget_pattern() {
  return Graph(7, {{0, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 5}, {3, 4}, {4, 6}, {5, 6}});
}

// Exhaustive independence number for small n; the independent oracle for the
// branch-and-bound solver.
inline int brute_force_alpha(const Graph& g) {
  const int n = g.vertex_count();
  int best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u) {
      if (!((mask >> u) & 1)) continue;
      for (int v = u + 1; v < n && ok; ++v)
        if (((mask >> v) & 1) && g.has_edge(u, v)) ok = false;
    }
    if (ok) best = std::max(best, static_cast<int>(std::popcount(mask)));
  }
  return best;
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::vector<Edge> edges;
  const auto threshold = static_cast<std::uint64_t>(p * double(~std::uint64_t{0}));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng() <= threshold) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

inline Rational random_rational(std::mt19937_64& rng, int num_range = 10, int den_range = 6) {
  const long num = static_cast<long>(rng() % (2 * num_range + 1)) - num_range;
  const long den = 1 + static_cast<long>(rng() % den_range);
  return Rational(num, den);
}

inline SymMatrix random_symmetric(std::mt19937_64& rng, int n, double density = 0.8) {
  SymMatrix m(n);
  const auto threshold = static_cast<std::uint64_t>(density * double(~std::uint64_t{0}));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      if (rng() <= threshold) m.set(i, j, random_rational(rng));
  return m;
}

inline SignVector random_signs(std::mt19937_64& rng, const Graph& g) {
  SignVector s;
  s.bits.resize(g.edges().size());
  for (auto& b : s.bits) b = rng() & 1;
  return s;
}

// Cached gadget scans for the two graphs used throughout the certify tests.
const std::vector<GadgetCopy>& paley17_gadgets();
const std::vector<GadgetCopy>& paley17_minus0_gadgets();

}  // namespace ibound::testing
