#include "ibound/subgraph.hpp"

#include <algorithm>
#include <numeric>

#include "ibound/errors.hpp"

namespace ibound {

namespace {

struct Searcher {
  const Graph& pattern;
  const Graph& host;
  bool first_only;
  std::vector<int> order;       // pattern vertices, most-constrained first
  std::vector<int> assignment;  // pattern vertex -> host vertex or -1
  std::vector<bool> used;       // host vertex taken
  std::vector<std::vector<int>> found;
  bool done = false;

  void run() {
    const int np = pattern.vertex_count();
    assignment.assign(np, -1);
    used.assign(host.vertex_count(), false);

    // order by descending degree, then index; later vertices tend to be
    // constrained by earlier neighbors
    order.resize(np);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return pattern.degree(a) > pattern.degree(b);
    });
    extend(0);
  }

  void extend(std::size_t depth) {
    if (done) return;
    if (depth == order.size()) {
      found.push_back(assignment);
      if (first_only) done = true;
      return;
    }
    const int p = order[depth];
    const int pdeg = pattern.degree(p);
    for (int h = 0; h < host.vertex_count(); ++h) {
      if (used[h] || host.degree(h) < pdeg) continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        const int p2 = order[d];
        ok = pattern.has_edge(p, p2) == host.has_edge(h, assignment[p2]);
      }
      if (!ok) continue;
      assignment[p] = h;
      used[h] = true;
      extend(depth + 1);
      used[h] = false;
      assignment[p] = -1;
      if (done) return;
    }
  }
};

}  // namespace

InducedCopies find_induced_copies(const Graph& pattern, const Graph& host,
                                  const CopySearchOptions& options) {
  if (!options.first_only && pattern.vertex_count() > options.max_pattern)
    throw budget_error("find_induced_copies: pattern has " +
                       std::to_string(pattern.vertex_count()) +
                       " vertices, enumeration budget is " +
                       std::to_string(options.max_pattern));
  InducedCopies result;
  if (pattern.vertex_count() > host.vertex_count()) return result;

  Searcher searcher{pattern, host, options.first_only};
  searcher.run();
  result.maps = std::move(searcher.found);
  std::sort(result.maps.begin(), result.maps.end());

  for (const auto& map : result.maps) {
    std::vector<int> image = map;
    std::sort(image.begin(), image.end());
    result.image_sets.push_back(std::move(image));
  }
  std::sort(result.image_sets.begin(), result.image_sets.end());
  result.image_sets.erase(std::unique(result.image_sets.begin(), result.image_sets.end()),
                          result.image_sets.end());
  return result;
}

}  // namespace ibound
