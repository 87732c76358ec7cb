#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "ibound/edge_polynomial.hpp"
#include "ibound/errors.hpp"
#include "ibound/inertia.hpp"

using namespace ibound;
using namespace ibound::testing;

namespace {

EdgePolynomial::Term term(std::vector<std::uint8_t> exps, std::int64_t coeff) {
  return {std::move(exps), coeff};
}

}  // namespace

TEST_CASE("determinant of a single edge") {
  const EdgePolynomial det = symbolic_determinant(Graph(2, {{0, 1}}));
  CHECK(det == EdgePolynomial({{0, 1}}, {term({2}, -1)}));
  CHECK(det.str() == "-x(0,1)^2");
}

TEST_CASE("determinant of the triangle") {
  const EdgePolynomial det = symbolic_determinant(Graph(3, {{0, 1}, {0, 2}, {1, 2}}));
  CHECK(det == EdgePolynomial({{0, 1}, {0, 2}, {1, 2}}, {term({1, 1, 1}, 2)}));
}

TEST_CASE("determinant of the triangle gadget pattern") {
  const Graph g1 = triangle_gadget_pattern();
  const EdgePolynomial det = symbolic_determinant(g1);
  // 2 abc g^2 h^2 in the edge variables (0,1),(0,2),(1,2),(3,5),(4,6)
  CHECK(det == EdgePolynomial(g1.edges(), {term({1, 1, 1, 0, 0, 0, 2, 2}, 2)}));

  const auto mono = is_monomial(det);
  REQUIRE(mono.has_value());
  CHECK(mono->coefficient == 2);
  CHECK(mono->exponents ==
        std::vector<std::pair<Edge, int>>{
            {{0, 1}, 1}, {{0, 2}, 1}, {{1, 2}, 1}, {{3, 5}, 2}, {{4, 6}, 2}});
}

TEST_CASE("determinant of the pentagon gadget pattern") {
  const Graph g2 = pentagon_gadget_pattern();
  const EdgePolynomial det = symbolic_determinant(g2);
  // -2 a^2 efghi: a=(0,1), e=(2,3), f=(2,5), g=(3,4), h=(4,6), i=(5,6)
  CHECK(det ==
        EdgePolynomial(g2.edges(), {term({2, 0, 0, 0, 1, 1, 1, 1, 1}, -2)}));

  const auto mono = is_monomial(det);
  REQUIRE(mono.has_value());
  CHECK(mono->coefficient == -2);
}

TEST_CASE("odd cycles have monomial determinants, even cycles do not") {
  const Graph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  const EdgePolynomial det5 = symbolic_determinant(c5);
  CHECK(det5 == EdgePolynomial(c5.edges(), {term({1, 1, 1, 1, 1}, 2)}));

  const Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  CHECK_FALSE(is_monomial(symbolic_determinant(c4)).has_value());

  // a path of odd order is singular
  const Graph p3(3, {{0, 1}, {1, 2}});
  CHECK(symbolic_determinant(p3).is_zero());
  CHECK_FALSE(is_monomial(symbolic_determinant(p3)).has_value());
}

TEST_CASE("is_monomial rejects sums") {
  // a^2 - bc over three variables
  const EdgePolynomial p({{0, 1}, {0, 2}, {1, 2}},
                         {term({2, 0, 0}, 1), term({0, 1, 1}, -1)});
  CHECK_FALSE(is_monomial(p).has_value());
  CHECK_FALSE(is_monomial(EdgePolynomial({{0, 1}}, {})).has_value());
}

TEST_CASE("symbolic and numeric determinants agree on random evaluations") {
  std::mt19937_64 rng(9001);
  int trials = 0;
  while (trials < 120) {
    const int n = 2 + static_cast<int>(rng() % 7);  // up to 8 vertices
    const Graph g = random_graph(rng, n, 0.6);
    const EdgePolynomial det = symbolic_determinant(g);
    std::vector<Rational> values;
    for (std::size_t i = 0; i < g.edges().size(); ++i) values.push_back(random_rational(rng));
    SymMatrix m(n);
    for (std::size_t i = 0; i < g.edges().size(); ++i)
      m.set(g.edges()[i].first, g.edges()[i].second, values[i]);
    CHECK(det.evaluate(values) == determinant(m));
    ++trials;
  }
}

TEST_CASE("Leibniz and fraction-free elimination agree") {
  std::mt19937_64 rng(9002);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const Graph g = random_graph(rng, n, 0.55);
    CHECK(symbolic_determinant_leibniz(g) == symbolic_determinant_bareiss(g));
  }
  CHECK(symbolic_determinant_leibniz(triangle_gadget_pattern()) ==
        symbolic_determinant_bareiss(triangle_gadget_pattern()));
  CHECK(symbolic_determinant_leibniz(pentagon_gadget_pattern()) ==
        symbolic_determinant_bareiss(pentagon_gadget_pattern()));

  // the 9-vertex dispatch point runs the polynomial elimination
  std::vector<Edge> c9;
  for (int v = 0; v < 9; ++v) c9.push_back(make_edge(v, (v + 1) % 9));
  const Graph cycle9(9, c9);
  const EdgePolynomial det9 = symbolic_determinant(cycle9);
  CHECK(det9 == symbolic_determinant_leibniz(cycle9));
  const auto mono = is_monomial(det9);
  REQUIRE(mono.has_value());
  CHECK(mono->coefficient == 2);  // odd cycle again
}

TEST_CASE("pattern budget") {
  std::vector<Edge> c10;
  for (int v = 0; v < 10; ++v) c10.push_back(make_edge(v, (v + 1) % 10));
  CHECK_THROWS_AS(symbolic_determinant(Graph(10, c10)), budget_error);
}

TEST_CASE("evaluation validates arity") {
  const EdgePolynomial det = symbolic_determinant(Graph(2, {{0, 1}}));
  std::vector<Rational> wrong;
  CHECK_THROWS_AS(det.evaluate(wrong), std::invalid_argument);
}
