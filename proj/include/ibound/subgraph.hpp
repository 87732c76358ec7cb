#pragma once

#include <vector>

#include "ibound/graph.hpp"

namespace ibound {

struct CopySearchOptions {
  // Full enumeration is only allowed for small patterns; existence queries
  // (first_only) may go larger.
  int max_pattern = 9;
  bool first_only = false;
};

struct InducedCopies {
  // maps[k][p] = host vertex assigned to pattern vertex p
  std::vector<std::vector<int>> maps;
  // distinct image vertex sets, each sorted, list sorted lexicographically
  std::vector<std::vector<int>> image_sets;
};

// All injections pattern -> host preserving both edges and non-edges.
InducedCopies find_induced_copies(const Graph& pattern, const Graph& host,
                                  const CopySearchOptions& options = {});

}  // namespace ibound
