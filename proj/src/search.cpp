#include "ibound/search.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <thread>

#include "ibound/independence.hpp"

namespace ibound {

WeightMatrix circulant_weight_matrix(const PaleyParams& p, const ClassWeighting& w) {
  const std::vector<int> classes = class_half_set(p);
  std::vector<int> weight_of_class(p.q, 0);
  bool any = false;
  for (const auto& [cls, weight] : w.weights) {
    if (std::find(classes.begin(), classes.end(), cls) == classes.end())
      throw std::invalid_argument("circulant_weight_matrix: " + std::to_string(cls) +
                                  " is not an edge class of P(" + std::to_string(p.q) + ")");
    weight_of_class[cls] = weight;
    any = any || weight != 0;
  }
  if (!any) throw std::invalid_argument("circulant_weight_matrix: all weights zero");

  WeightMatrix out(paley(p.q));
  for (const auto& [u, v] : out.graph().edges())
    out.set_weight(u, v, weight_of_class[edge_class(p, {u, v})]);
  return out;
}

namespace {

// circulant inertia evaluated straight from a dense integer matrix, avoiding
// WeightMatrix construction in the hot loop
Inertia circulant_inertia(const PaleyParams& p, const std::vector<int>& half,
                          const int* weights_by_class_pos) {
  const int q = p.q;
  std::vector<int> by_diff(q, 0);
  for (std::size_t c = 0; c < half.size(); ++c) {
    by_diff[half[c]] = weights_by_class_pos[c];
    by_diff[q - half[c]] = weights_by_class_pos[c];
  }
  SymMatrix m(q);
  for (int u = 0; u < q; ++u)
    for (int v = u + 1; v < q; ++v) {
      const int w = by_diff[v - u];
      if (w != 0) m.set(u, v, w);
    }
  return inertia(m);
}

struct GridChunkResult {
  int best_bound;
  Inertia best_inertia;
  std::vector<std::vector<int>> argmin_tuples;
  long evaluated = 0;
};

}  // namespace

GridSearchResult grid_search_circulant(const PaleyParams& p, int lo, int hi,
                                       long max_evaluations, int threads) {
  if (lo > hi) throw std::invalid_argument("grid_search_circulant: empty range");
  const std::vector<int> half = class_half_set(p);
  const int m = static_cast<int>(half.size());
  const int span = hi - lo + 1;
  const int alpha = independence_number(paley(p.q)).alpha;

  // chunk by the first coordinate; merge order is fixed, so the outcome does
  // not depend on the thread count
  std::vector<GridChunkResult> chunks(span);
  std::atomic<long> spent{0};
  auto run_chunk = [&](int chunk_idx) {
    GridChunkResult& out = chunks[chunk_idx];
    out.best_bound = p.q + 1;
    std::vector<int> w(m, 0);
    w[0] = lo + chunk_idx;
    // first coordinate fixed; odometer over the rest
    for (int i = 1; i < m; ++i) w[i] = lo;
    while (true) {
      // symmetry: skip all-zero, и fix the first nonzero weight positive
      int first_nonzero = 0;
      for (int i = 0; i < m; ++i)
        if (w[i] != 0) {
          first_nonzero = w[i];
          break;
        }
      if (first_nonzero > 0) {
        if (spent.fetch_add(1) >= max_evaluations) {
          out.evaluated = -1;  // budget ran out inside this chunk
          return;
        }
        const Inertia in = circulant_inertia(p, half, w.data());
        const int bound = bound_from_inertia(in, p.q);
        if (bound < out.best_bound) {
          out.best_bound = bound;
          out.best_inertia = in;
          out.argmin_tuples.clear();
        }
        if (bound == out.best_bound) out.argmin_tuples.push_back(w);
        ++out.evaluated;
      }
      int pos = m - 1;
      while (pos >= 1 && w[pos] == hi) w[pos--] = lo;
      if (pos < 1) break;
      ++w[pos];
    }
  };

  if (threads <= 1) {
    for (int c = 0; c < span; ++c) run_chunk(c);
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> workers;
    const int nthreads = std::min(threads, span);
    for (int t = 0; t < nthreads; ++t)
      workers.emplace_back([&] {
        for (int c = next.fetch_add(1); c < span; c = next.fetch_add(1)) run_chunk(c);
      });
    for (auto& worker : workers) worker.join();
  }

  GridSearchResult result;
  result.best.alpha = alpha;
  int best_bound = p.q + 1;
  for (const auto& chunk : chunks) {
    if (chunk.evaluated < 0) result.partial = true;
    else result.evaluated += chunk.evaluated;
    if (chunk.argmin_tuples.empty()) continue;
    if (chunk.best_bound < best_bound) {
      best_bound = chunk.best_bound;
      result.best.best_inertia = chunk.best_inertia;
      result.argmin_weightings.clear();
    }
    if (chunk.best_bound == best_bound)
      for (const auto& tuple : chunk.argmin_tuples) {
        ClassWeighting cw;
        for (int i = 0; i < m; ++i) cw.weights.emplace_back(half[i], tuple[i]);
        result.argmin_weightings.push_back(std::move(cw));
      }
  }
  if (result.argmin_weightings.empty())
    throw std::invalid_argument("grid_search_circulant: range contains no admissible weighting");
  result.best.bound = best_bound;
  result.best.gap = best_bound - alpha;
  result.best.iterations = result.evaluated;
  result.best.weights = result.argmin_weightings.front();
  return result;
}

namespace {

// bounded draws layered on the standard engine; std::uniform_int_distribution
// is implementation-defined, this is not
int draw_weight(std::mt19937_64& rng) {
  const int magnitude = 1 + static_cast<int>(rng() % 64);
  return (rng() & 1) ? -magnitude : magnitude;
}

Inertia weights_inertia(const Graph& g, const std::vector<int>& weights) {
  SymMatrix m(g.vertex_count());
  for (std::size_t i = 0; i < g.edges().size(); ++i)
    m.set(g.edges()[i].first, g.edges()[i].second, weights[i]);
  return inertia(m);
}

}  // namespace

SearchReport random_edge_search(const Graph& g, int alpha, long iterations,
                                std::uint64_t seed, bool hill_climb) {
  const int n = g.vertex_count();
  const int ne = g.edge_count();
  std::mt19937_64 rng(seed);

  SearchReport report;
  report.alpha = alpha;
  report.iterations = iterations;
  report.seed = seed;
  report.bound = n + 1;

  std::vector<int> weights(ne);
  for (long it = 0; it < iterations; ++it) {
    for (int e = 0; e < ne; ++e) weights[e] = draw_weight(rng);
    Inertia in = weights_inertia(g, weights);
    int bound = bound_from_inertia(in, n);
    if (hill_climb) {
      // one greedy pass of single-edge redraws
      for (int e = 0; e < ne; ++e) {
        const int saved = weights[e];
        weights[e] = draw_weight(rng);
        const Inertia cand = weights_inertia(g, weights);
        const int cand_bound = bound_from_inertia(cand, n);
        if (cand_bound < bound) {
          bound = cand_bound;
          in = cand;
        } else {
          weights[e] = saved;
        }
      }
    }
    if (bound < report.bound) {
      report.bound = bound;
      report.best_inertia = in;
      report.edge_weights = weights;
    }
  }
  report.gap = report.bound - alpha;
  return report;
}

}  // namespace ibound
