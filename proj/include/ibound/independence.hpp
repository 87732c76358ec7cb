#pragma once

#include <map>
#include <vector>

#include "ibound/graph.hpp"

namespace ibound {

struct IndependenceResult {
  int alpha = 0;
  std::vector<int> witness;  // one maximum independent set, sorted
};

// Exact independence number with witness.  Branch and bound: branch on a
// max-degree vertex (ties broken by lowest index), greedy initial solution,
// degree-based upper-bound pruning.  Budget: at most 64 vertices.
IndependenceResult independence_number(const Graph& g);

struct CriticalityReport {
  bool is_critical = false;
  // present for every edge when critical: an independent set of size
  // alpha(G)+1 in G - e
  std::map<Edge, std::vector<int>> per_edge;
};

// True iff alpha(G - e) > alpha(G) for every edge e.
CriticalityReport is_alpha_critical(const Graph& g);

// Re-verification used by certificate checking and tests: pairwise
// non-adjacency straight off the edge set, no solver involved.
bool is_independent_set(const Graph& g, const std::vector<int>& vertices);

}  // namespace ibound
