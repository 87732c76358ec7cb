#pragma once

#include <string>

#include "ibound/sym_matrix.hpp"

namespace ibound {

// Eigenvalue sign counts of a symmetric matrix.
struct Inertia {
  int n_plus = 0;
  int n_minus = 0;
  int n_zero = 0;

  friend bool operator==(const Inertia&, const Inertia&) = default;
};

// Inertia by symmetric congruence elimination (Sylvester's law); no
// eigenvalues are ever computed.  Total function.
Inertia inertia(const SymMatrix& m);

// Exact determinant, by fraction-free elimination on integer input and
// rational elimination otherwise.
Rational determinant(const SymMatrix& m);

// min(n - n_plus, n - n_minus) for a weight matrix of g.
int inertia_bound(const Graph& g, const WeightMatrix& w);

// The two equivalent readings of the bound; they agree for every inertia.
int bound_from_inertia(const Inertia& in, int n);       // n - max(n+, n-)
int bound_from_inertia_alt(const Inertia& in);          // n0 + min(n+, n-)

std::string format_inertia(const Inertia& in);  // "(n+, n-, n0)"

}  // namespace ibound
