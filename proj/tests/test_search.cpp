#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "ibound/independence.hpp"
#include "ibound/json_io.hpp"
#include "ibound/search.hpp"

using namespace ibound;
using namespace ibound::testing;

namespace {

ClassWeighting weighting17(int w1, int w2, int w4, int w8) {
  return {{{1, w1}, {2, w2}, {4, w4}, {8, w8}}};
}

}  // namespace

TEST_CASE("the published circulant weighting has inertia (13,4,0)") {
  const PaleyParams p = paley_params(17);
  const WeightMatrix w = circulant_weight_matrix(p, weighting17(30, -22, -12, 7));
  const Inertia in = inertia(w.to_matrix());
  CHECK(in == Inertia{13, 4, 0});
  CHECK(bound_from_inertia(in, 17) == 4);
  CHECK(inertia_bound(w.graph(), w) == 4);
}

TEST_CASE("unit class weights recover the adjacency spectrum counts") {
  const PaleyParams p = paley_params(17);
  const WeightMatrix w = circulant_weight_matrix(p, weighting17(1, 1, 1, 1));
  CHECK(inertia(w.to_matrix()) == Inertia{9, 8, 0});
}

TEST_CASE("q = 5 circulant is the 5-cycle") {
  const PaleyParams p = paley_params(5);
  const WeightMatrix w = circulant_weight_matrix(p, {{{1, 1}}});
  CHECK(w.graph() == paley(5));
  CHECK(inertia(w.to_matrix()) == Inertia{3, 2, 0});
}

TEST_CASE("circulant matrices commute with the cyclic shift") {
  for (int q : {13, 17}) {
    const PaleyParams p = paley_params(q);
    ClassWeighting cw;
    int v = 3;
    for (int cls : class_half_set(p)) cw.weights.emplace_back(cls, (v += 5) % 11 - 5);
    if (std::all_of(cw.weights.begin(), cw.weights.end(),
                    [](const auto& kv) { return kv.second == 0; }))
      cw.weights[0].second = 1;
    const SymMatrix m = circulant_weight_matrix(p, cw).to_matrix();

    // (PW)_{ij} = W_{i-1,j},  (WP)_{ij} = W_{i,j+1}; equality for all i,j is
    // exactly PW = WP for the shift P: i -> i+1 (mod q)
    for (int i = 0; i < q; ++i)
      for (int j = 0; j < q; ++j)
        CHECK(m.get((i - 1 + q) % q, j) == m.get(i, (j + 1) % q));
  }
}

TEST_CASE("invalid weightings are rejected") {
  const PaleyParams p = paley_params(17);
  CHECK_THROWS_AS(circulant_weight_matrix(p, {{{3, 5}}}), std::invalid_argument);
  CHECK_THROWS_AS(circulant_weight_matrix(p, weighting17(0, 0, 0, 0)),
                  std::invalid_argument);
}

TEST_CASE("the bound is invariant under nonzero scaling") {
  const PaleyParams p = paley_params(17);
  const WeightMatrix base = circulant_weight_matrix(p, weighting17(30, -22, -12, 7));
  const Graph& g = base.graph();
  const int bound = inertia_bound(g, base);
  for (const Rational c : {Rational(3), Rational(-1), Rational(-7, 5), Rational(1, 9)}) {
    WeightMatrix scaled(g);
    for (const auto& [u, v] : g.edges()) scaled.set_weight(u, v, base.weight(u, v) * c);
    CHECK(inertia_bound(g, scaled) == bound);
  }
}

TEST_CASE("grid search on q = 5 reaches the tight bound") {
  const PaleyParams p = paley_params(5);
  const GridSearchResult result = grid_search_circulant(p, -2, 2);
  CHECK(result.best.bound == 2);
  CHECK(result.best.gap == 0);
  CHECK(result.best.alpha == 2);
  CHECK_FALSE(result.partial);
  CHECK(result.evaluated == 2);  // w = 1 and w = 2 after the symmetry reductions
  CHECK(result.argmin_weightings.size() == 2);
}

TEST_CASE("a small grid slice of q = 17 never beats bound 4") {
  const PaleyParams p = paley_params(17);
  const GridSearchResult result = grid_search_circulant(p, -2, 2);
  CHECK(result.best.bound >= 4);
  CHECK_FALSE(result.partial);
}

TEST_CASE("grid search respects the evaluation budget") {
  const PaleyParams p = paley_params(17);
  const GridSearchResult result = grid_search_circulant(p, -2, 2, 10);
  CHECK(result.partial);
}

TEST_CASE("random search finds the tight bound on K3") {
  const Graph k3(3, {{0, 1}, {0, 2}, {1, 2}});
  const SearchReport report = random_edge_search(k3, 1, 25, 42);
  CHECK(report.gap == 0);
  CHECK(report.bound == 1);
}

TEST_CASE("random search on P(17) never reaches gap 0") {
  const Graph p17 = paley(17);
  const SearchReport report = random_edge_search(p17, 3, 400, 1234);
  CHECK(report.gap >= 1);
  CHECK(report.bound >= 4);
}

TEST_CASE("random search is deterministic per seed") {
  const Graph p13 = paley(13);
  const SearchReport a = random_edge_search(p13, 3, 60, 99, true);
  const SearchReport b = random_edge_search(p13, 3, 60, 99, true);
  CHECK(search_report_to_json(a).dump() == search_report_to_json(b).dump());

  const SearchReport c = random_edge_search(p13, 3, 60, 100, true);
  CHECK(search_report_to_json(a).dump() != search_report_to_json(c).dump());
}

TEST_CASE("search reports never claim a gap below zero") {
  std::mt19937_64 rng(17001);
  for (int trial = 0; trial < 12; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 7);
    Graph g = random_graph(rng, n, 0.5);
    if (g.edge_count() == 0) continue;
    const int alpha = independence_number(g).alpha;
    const SearchReport report = random_edge_search(g, alpha, 40, rng());
    CHECK(report.gap >= 0);
  }
}
