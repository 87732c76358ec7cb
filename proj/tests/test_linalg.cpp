#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "ibound/inertia.hpp"
#include "ibound/paley.hpp"

using namespace ibound;
using namespace ibound::testing;

namespace {

SymMatrix triangle_gadget_matrix(const Rational& a, const Rational& b, const Rational& c,
                                 const Rational& d, const Rational& e, const Rational& f,
                                 const Rational& g, const Rational& h) {
  SymMatrix m(7);
  m.set(0, 1, a);
  m.set(0, 2, b);
  m.set(1, 2, c);
  m.set(1, 3, d);
  m.set(2, 4, e);
  m.set(3, 4, f);
  m.set(3, 5, g);
  m.set(4, 6, h);
  return m;
}

}  // namespace

TEST_CASE("inertia of tiny matrices") {
  CHECK(inertia(SymMatrix(1)) == Inertia{0, 0, 1});

  SymMatrix swap2(2);
  swap2.set(0, 1, 1);
  CHECK(inertia(swap2) == Inertia{1, 1, 0});

  CHECK(inertia(SymMatrix::identity(3)) == Inertia{3, 0, 0});
  CHECK(inertia(SymMatrix(0)) == Inertia{0, 0, 0});
}

TEST_CASE("inertia of the Paley 17 adjacency matrix") {
  CHECK(inertia(WeightMatrix::adjacency(paley(17)).to_matrix()) == Inertia{9, 8, 0});
}

TEST_CASE("gadget submatrix inertia at the all-ones point") {
  CHECK(inertia(triangle_gadget_matrix(1, 1, 1, 1, 1, 1, 1, 1)) == Inertia{3, 4, 0});
}

TEST_CASE("determinants") {
  CHECK(determinant(SymMatrix::identity(3)) == Rational(1));
  CHECK(determinant(triangle_gadget_matrix(1, 1, 1, 0, 0, 0, 1, 1)) == Rational(2));
  // pentagon gadget at all ones: -2 a^2 efghi = -2
  SymMatrix w2(7);
  w2.set(0, 1, 1);
  w2.set(1, 2, 1);
  w2.set(1, 3, 1);
  w2.set(1, 4, 1);
  w2.set(2, 3, 1);
  w2.set(2, 5, 1);
  w2.set(3, 4, 1);
  w2.set(4, 6, 1);
  w2.set(5, 6, 1);
  CHECK(determinant(w2) == Rational(-2));
}

TEST_CASE("principal submatrices") {
  const SymMatrix adj = WeightMatrix::adjacency(paley(17)).to_matrix();
  const std::vector<int> all = [] {
    std::vector<int> v(17);
    for (int i = 0; i < 17; ++i) v[i] = i;
    return v;
  }();
  const SymMatrix full = principal_submatrix(adj, all);
  for (int i = 0; i < 17; ++i)
    for (int j = 0; j < 17; ++j) CHECK(full.get(i, j) == adj.get(i, j));

  const std::vector<int> tri = {0, 1, 2};
  CHECK(inertia(principal_submatrix(adj, tri)) == Inertia{1, 2, 0});

  const std::vector<int> bad = {0, 99};
  CHECK_THROWS_AS(principal_submatrix(adj, bad), std::invalid_argument);
}

TEST_CASE("inertia bound") {
  const Graph p17 = paley(17);
  CHECK(inertia_bound(p17, WeightMatrix::adjacency(p17)) == 8);

  const Graph k2(2, {{0, 1}});
  CHECK(inertia_bound(k2, WeightMatrix::adjacency(k2)) == 1);

  CHECK_THROWS_AS(inertia_bound(p17, WeightMatrix::adjacency(k2)), std::invalid_argument);
}

TEST_CASE("weight matrices reject off-support entries") {
  WeightMatrix w(paley(17));
  CHECK_THROWS_AS(w.set_weight(0, 3, 1), std::invalid_argument);  // non-edge
  CHECK_THROWS_AS(w.set_weight(0, 0, 1), std::invalid_argument);  // diagonal
  w.set_weight(0, 1, Rational(1, 2));
  CHECK(w.weight(1, 0) == Rational(1, 2));
  CHECK(w.weight(0, 3) == Rational(0));
}

TEST_CASE("Sylvester invariance under +-1 diagonal congruence") {
  std::mt19937_64 rng(7001);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const SymMatrix m = random_symmetric(rng, n);
    std::vector<int> d(n);
    for (auto& x : d) x = (rng() & 1) ? 1 : -1;
    SymMatrix conj(n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) conj.set(i, j, Rational(d[i] * d[j]) * m.get(i, j));
    CHECK(inertia(conj) == inertia(m));
  }
}

TEST_CASE("interlacing: submatrix sign counts never exceed the matrix's") {
  std::mt19937_64 rng(7002);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const SymMatrix m = random_symmetric(rng, n);
    std::vector<int> subset;
    for (int v = 0; v < n; ++v)
      if (rng() & 1) subset.push_back(v);
    const Inertia whole = inertia(m);
    const Inertia part = inertia(principal_submatrix(m, subset));
    CHECK(part.n_plus <= whole.n_plus);
    CHECK(part.n_minus <= whole.n_minus);
  }
}

TEST_CASE("determinant and inertia are consistent") {
  std::mt19937_64 rng(7003);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const SymMatrix m = random_symmetric(rng, n, 0.6);
    const Inertia in = inertia(m);
    const Rational det = determinant(m);
    CHECK(in.n_plus + in.n_minus + in.n_zero == n);
    CHECK((in.n_zero == 0) == !det.is_zero());
    if (in.n_zero == 0) CHECK(det.sign() == (in.n_minus % 2 == 0 ? 1 : -1));
    // the two readings of the bound agree
    CHECK(bound_from_inertia(in, n) == bound_from_inertia_alt(in));
  }
}

TEST_CASE("integer fast path agrees with the rational path") {
  std::mt19937_64 rng(7004);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    SymMatrix m(n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j)
        if (rng() % 10 < 7)
          m.set(i, j, Rational(static_cast<long>(rng() % 61) - 30));
    // scaling by a positive non-integer forces the rational elimination; the
    // result must not change (congruence by (1/3) I)
    SymMatrix scaled(n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) scaled.set(i, j, m.get(i, j) * Rational(1, 3));
    CHECK(inertia(m) == inertia(scaled));
  }
}

TEST_CASE("huge integer entries take the GMP continuation") {
  // adjacency scaled by 2^59 spills out of the machine-word budget instantly
  SymMatrix big = WeightMatrix::adjacency(paley(17)).to_matrix();
  const Rational scale(mpz_class(mpz_class(1) << 59));
  for (int i = 0; i < 17; ++i)
    for (int j = i; j < 17; ++j)
      if (!big.get(i, j).is_zero()) big.set(i, j, big.get(i, j) * scale);
  CHECK(inertia(big) == Inertia{9, 8, 0});
}
