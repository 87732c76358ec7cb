#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ibound/graph.hpp"
#include "ibound/rational.hpp"

namespace ibound {

// Multivariate polynomial with integer coefficients, one variable per edge of
// a fixed pattern graph.  Canonical form: monomials sorted lexicographically
// by exponent vector, no zero coefficients.  Coefficients of the determinants
// handled here are bounded by 9! and stay well inside int64.
class EdgePolynomial {
 public:
  struct Term {
    std::vector<std::uint8_t> exponents;  // parallel to variables()
    std::int64_t coefficient = 0;

    friend bool operator==(const Term&, const Term&) = default;
  };

  EdgePolynomial() = default;
  // Terms are combined, zero coefficients dropped, order canonicalized.
  EdgePolynomial(std::vector<Edge> variables, std::vector<Term> terms);

  const std::vector<Edge>& variables() const { return variables_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational evaluate(std::span<const Rational> values) const;

  std::string str() const;

  friend bool operator==(const EdgePolynomial&, const EdgePolynomial&) = default;

 private:
  std::vector<Edge> variables_;
  std::vector<Term> terms_;
};

// det of the generic weight matrix of the pattern (variable x_e on each edge
// e, zero elsewhere).  Dispatches on order: Leibniz expansion up to 8
// vertices, fraction-free elimination over the polynomial ring at 9.
EdgePolynomial symbolic_determinant(const Graph& pattern);

// The two routes, exposed for cross-checking.
EdgePolynomial symbolic_determinant_leibniz(const Graph& pattern);
EdgePolynomial symbolic_determinant_bareiss(const Graph& pattern);

struct MonomialInfo {
  std::int64_t coefficient = 0;
  std::vector<std::pair<Edge, int>> exponents;  // nonzero only, sorted by edge
};

// Present iff the polynomial has exactly one monomial with nonzero coefficient.
std::optional<MonomialInfo> is_monomial(const EdgePolynomial& p);

}  // namespace ibound
