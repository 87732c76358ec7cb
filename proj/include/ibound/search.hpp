#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ibound/inertia.hpp"
#include "ibound/paley.hpp"

namespace ibound {

// Integer weight per edge class of P(q), e.g. classes 1,2,4,8 for q=17.
struct ClassWeighting {
  std::vector<std::pair<int, int>> weights;  // (class, weight), sorted by class

  friend bool operator==(const ClassWeighting&, const ClassWeighting&) = default;
};

// Entry (u,v) = weight of the class of (u,v); the result is circulant.
WeightMatrix circulant_weight_matrix(const PaleyParams& p, const ClassWeighting& w);

struct SearchReport {
  Inertia best_inertia;
  int bound = 0;
  int alpha = 0;
  int gap = 0;  // bound - alpha
  long iterations = 0;
  std::uint64_t seed = 0;
  std::optional<ClassWeighting> weights;        // circulant searches
  std::optional<std::vector<int>> edge_weights; // random search, per edge index
};

struct GridSearchResult {
  SearchReport best;
  // every weighting achieving the minimum bound, in scan order
  std::vector<ClassWeighting> argmin_weightings;
  long evaluated = 0;
  bool partial = false;  // evaluation budget ran out before the scan finished
};

// Exhaustive scan of integer class weightings in [lo, hi]^(#classes), skipping
// the all-zero tuple and fixing the first nonzero weight positive (W and -W
// give the same bound).  Exact inertia at every grid point.
GridSearchResult grid_search_circulant(const PaleyParams& p, int lo, int hi,
                                       long max_evaluations = 20'000'000,
                                       int threads = 1);

// Seeded stream of random integer weight matrices supported on E(G), weight
// magnitudes <= 64, exact inertia each; optional single-edge hill climbing.
// Identical seed and parameters give identical reports.
SearchReport random_edge_search(const Graph& g, int alpha, long iterations,
                                std::uint64_t seed, bool hill_climb = false);

}  // namespace ibound
