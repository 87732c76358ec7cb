#pragma once

#include <array>
#include <vector>

#include "ibound/graph.hpp"

namespace ibound {

// Arithmetic context for the Paley graph P(q), q prime, q = 1 (mod 4).
struct PaleyParams {
  int q = 0;
  std::vector<int> squares;  // nonzero quadratic residues mod q, sorted

  bool is_square(int x) const;  // of x mod q, x not = 0 mod q
};

bool is_prime(int n);

// { x^2 mod q : x in 1..q-1 }, size (q-1)/2.  Requires q prime, q >= 3.
std::vector<int> quadratic_residues(int q);

PaleyParams paley_params(int q);

// Vertices 0..q-1, u ~ v iff u-v is a nonzero square mod q.
Graph paley(int q);

// Canonical positive half of the connection set: residues r <= (q-1)/2
// (each paired with q-r).  For q=17 this is {1,2,4,8}.
std::vector<int> class_half_set(const PaleyParams& p);

// The unique k in the half set with u-v = +-k (mod q).  Rejects non-edges.
int edge_class(const PaleyParams& p, Edge e);

// One Hamiltonian cycle per edge class, each starting at 0 and stepping +k.
// Classes whose step does not generate the full cycle are rejected.
std::vector<std::vector<int>> two_factorization(const PaleyParams& p);

// Sorted multiset of the three edge-class labels of a triangle of P(q).
std::array<int, 3> triangle_pattern(const PaleyParams& p, const Triangle& t);

// v -> (a*v + b) mod q with a a nonzero square; always an automorphism.
struct Automorphism {
  int a = 1;
  int b = 0;
};

// The induced vertex permutation; rejects a outside the residue set.
std::vector<int> apply_automorphism(const PaleyParams& p, const Automorphism& sigma);

}  // namespace ibound
