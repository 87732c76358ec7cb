#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ibound/gf2.hpp"
#include "ibound/graph.hpp"
#include "ibound/inertia.hpp"

namespace ibound {

// One bit per edge of a host graph, indexed like Graph::edges().
// 0 = positive weight, 1 = negative weight.
struct SignVector {
  std::vector<std::uint8_t> bits;

  static SignVector all_positive(const Graph& g);
  bool edge_sign(const Graph& g, int u, int v) const;
};

// Weight matrix with entries +-1 according to the sign vector.
WeightMatrix unit_weight_matrix(const Graph& g, const SignVector& s);

// An induced (2a+1)-vertex subgraph with independence number a whose generic
// symbolic determinant is a single monomial.  Once every edge weight is
// nonzero, the submatrix is forced to inertia (a+1, a, 0) or (a, a+1, 0),
// decided by the parity of negative weights on odd_support.
struct GadgetCopy {
  std::vector<int> image_vertices;  // sorted host vertices
  std::vector<int> mapping;         // local pattern vertex -> host vertex
  std::vector<Edge> odd_support;    // host edges with odd exponent, sorted
  bool const_negative = false;      // monomial coefficient is negative

  friend bool operator==(const GadgetCopy&, const GadgetCopy&) = default;
};

// Scans all (2*alpha+1)-subsets.  Requires 2*alpha+1 <= 9 and alpha =
// independence_number(g).  Output is sorted by image vertex set.
std::vector<GadgetCopy> enumerate_gadgets(const Graph& g, int alpha, int threads = 1);

// 1 means any nowhere-zero weight matrix with these edge signs gives the
// gadget submatrix alpha+1 POSITIVE eigenvalues (negative determinant);
// 0 means alpha+1 negative eigenvalues.
bool direction_of(const Graph& g, const GadgetCopy& gadget, const SignVector& s);

// One GF(2) row per gadget:  sum of odd_support sign variables + d =
// const_negative.  The global bit d absorbs the W -> -W symmetry.
struct ParitySystem {
  int num_edge_variables = 0;  // variable i = edge i; variable num_edge_variables = d
  Gf2System system;
};

ParitySystem build_parity_system(const Graph& g, const std::vector<GadgetCopy>& gadgets);

struct NonTightnessCertificate {
  Graph graph;
  int alpha = 0;
  std::map<Edge, std::vector<int>> critical_witnesses;
  std::vector<GadgetCopy> gadgets;
  std::vector<int> farkas_rows;  // row indices into gadgets; GF(2) sum is 0 = 1
  std::optional<std::string> normalization_note;
};

struct Verdict {
  enum class Kind { NotTight, Unknown };
  Kind kind = Kind::Unknown;
  std::string reason;  // set for Unknown
  std::optional<NonTightnessCertificate> certificate;
  std::optional<SignVector> feasible_signs;  // set when the parity system is feasible

  bool not_tight() const { return kind == Kind::NotTight; }
};

std::string format_verdict(const Verdict& v);  // NOT_TIGHT / UNKNOWN(<reason>)

// Full pipeline: independence number, criticality gate, gadget scan, parity
// system.  Budget overruns and missing prerequisites surface as UNKNOWN,
// never as a wrong verdict.
Verdict certify_not_tight(const Graph& g, int threads = 1);

struct VerificationResult {
  bool ok = false;
  std::string reason;  // first failed check when !ok
};

// Recomputes everything the certificate claims without trusting it.
VerificationResult verify_certificate(const Graph& g, const NonTightnessCertificate& cert);

// Switching by a +-1 diagonal: returns signs equivalent to s that are 0
// (positive) on every edge of the given spanning tree, plus the diagonal.
std::pair<SignVector, std::vector<int>> normalize_signs(const Graph& g, const SignVector& s,
                                                        const std::vector<Edge>& tree);

// Sign of a triangle under a (possibly partial) assignment is the parity of
// negative edges; covered triangles are constrained to global_sign.
struct PropagationResult {
  // -1 undetermined, else 0/1 per edge index
  std::vector<int> signs;
  // covered triangles that are fully determined and violate global_sign
  std::vector<Triangle> violated;
  int undetermined = 0;

  bool contradiction() const { return !violated.empty(); }
  bool complete() const { return undetermined == 0; }
};

PropagationResult propagate_triangle_signs(const Graph& g, const std::vector<int>& fixed,
                                           bool global_sign,
                                           const std::vector<Triangle>& covered);

// Two gadget copies whose directions disagree under s, confirmed numerically:
// the +-1 weight matrix W(s) has principal submatrices with exact inertias
// (a+1, a, 0) and (a, a+1, 0), so its bound is at least a+1.
struct ConflictWitness {
  GadgetCopy positive_gadget;  // direction 1: alpha+1 positive eigenvalues
  GadgetCopy negative_gadget;  // direction 0: alpha+1 negative eigenvalues
  Inertia positive_inertia;
  Inertia negative_inertia;
  int alpha = 0;
  int bound = 0;  // inertia bound of the full W(s)
};

std::optional<ConflictWitness> conflict_witness(const Graph& g, const SignVector& s,
                                                const std::vector<GadgetCopy>& gadgets);

// Triangles whose edge set appears verbatim as some gadget's odd support.
std::vector<Triangle> covered_triangles(const Graph& g,
                                        const std::vector<GadgetCopy>& gadgets);

}  // namespace ibound
