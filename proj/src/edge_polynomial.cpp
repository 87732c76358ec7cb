#include "ibound/edge_polynomial.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "ibound/errors.hpp"

namespace ibound {

namespace {

constexpr int kMaxPatternVertices = 9;
constexpr int kMaxVariables = kMaxPatternVertices * (kMaxPatternVertices - 1) / 2;

void sort_and_combine(std::vector<EdgePolynomial::Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.exponents < b.exponents; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i;
    std::int64_t coeff = 0;
    while (j < terms.size() && terms[j].exponents == terms[i].exponents)
      coeff += terms[j++].coefficient;
    if (coeff != 0) {
      if (out != i) terms[out].exponents = std::move(terms[i].exponents);
      terms[out].coefficient = coeff;
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

}  // namespace

EdgePolynomial::EdgePolynomial(std::vector<Edge> variables, std::vector<Term> terms)
    : variables_(std::move(variables)), terms_(std::move(terms)) {
  if (!std::is_sorted(variables_.begin(), variables_.end()))
    throw std::invalid_argument("EdgePolynomial: variables must be sorted");
  for (const auto& t : terms_)
    if (t.exponents.size() != variables_.size())
      throw std::invalid_argument("EdgePolynomial: exponent vector length mismatch");
  sort_and_combine(terms_);
}

Rational EdgePolynomial::evaluate(std::span<const Rational> values) const {
  if (values.size() != variables_.size())
    throw std::invalid_argument("EdgePolynomial: wrong number of values");
  Rational total(0);
  for (const auto& term : terms_) {
    Rational prod(static_cast<long>(term.coefficient));
    for (std::size_t v = 0; v < values.size(); ++v)
      for (int e = 0; e < term.exponents[v]; ++e) prod *= values[v];
    total += prod;
  }
  return total;
}

std::string EdgePolynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& term : terms_) {
    if (!out.empty()) out += term.coefficient >= 0 ? " + " : " - ";
    else if (term.coefficient < 0) out += "-";
    const auto mag = term.coefficient < 0 ? -term.coefficient : term.coefficient;
    bool wrote = false;
    if (mag != 1) {
      out += std::to_string(mag);
      wrote = true;
    }
    for (std::size_t v = 0; v < variables_.size(); ++v) {
      if (term.exponents[v] == 0) continue;
      if (wrote) out += "*";
      out += "x(" + std::to_string(variables_[v].first) + "," +
             std::to_string(variables_[v].second) + ")";
      if (term.exponents[v] > 1) out += "^" + std::to_string(int(term.exponents[v]));
      wrote = true;
    }
    if (!wrote) out += "1";
  }
  return out;
}

EdgePolynomial symbolic_determinant_leibniz(const Graph& pattern) {
  const int n = pattern.vertex_count();
  if (n > kMaxPatternVertices)
    throw budget_error("symbolic_determinant: pattern exceeds " +
                       std::to_string(kMaxPatternVertices) + " vertices");
  const std::vector<Edge>& vars = pattern.edges();
  const int nv = static_cast<int>(vars.size());

  // variable index per vertex pair
  std::array<std::array<int, kMaxPatternVertices>, kMaxPatternVertices> var_at{};
  for (auto& row : var_at) row.fill(-1);
  for (int v = 0; v < nv; ++v) {
    var_at[vars[v].first][vars[v].second] = v;
    var_at[vars[v].second][vars[v].first] = v;
  }

  // DFS over permutations with nonzero support; entries M[i][sigma(i)] exist
  // only when (i, sigma(i)) is an edge, so the recursion prunes hard.
  std::vector<EdgePolynomial::Term> terms;
  std::array<int, kMaxPatternVertices> perm{};
  std::array<bool, kMaxPatternVertices> used{};
  std::array<std::uint8_t, kMaxVariables> exps{};

  auto parity = [&](int size) {
    // count inversions
    int inv = 0;
    for (int i = 0; i < size; ++i)
      for (int j = i + 1; j < size; ++j)
        if (perm[i] > perm[j]) ++inv;
    return inv % 2;
  };

  auto dfs = [&](auto&& self, int row) -> void {
    if (row == n) {
      EdgePolynomial::Term t;
      t.exponents.assign(exps.begin(), exps.begin() + nv);
      t.coefficient = parity(n) ? -1 : 1;
      terms.push_back(std::move(t));
      return;
    }
    for (int col : pattern.neighbors(row)) {
      if (used[col]) continue;
      const int v = var_at[row][col];
      used[col] = true;
      perm[row] = col;
      ++exps[v];
      self(self, row + 1);
      --exps[v];
      used[col] = false;
    }
  };
  if (n > 0) dfs(dfs, 0);
  else terms.push_back({std::vector<std::uint8_t>{}, 1});  // det of the empty matrix
  return EdgePolynomial(vars, std::move(terms));
}

namespace {

// Minimal polynomial ring ops for the fraction-free route.  Polynomials are
// canonical term vectors over a shared variable list.
using Terms = std::vector<EdgePolynomial::Term>;

Terms poly_mul(const Terms& a, const Terms& b) {
  Terms out;
  out.reserve(a.size() * b.size());
  for (const auto& ta : a)
    for (const auto& tb : b) {
      EdgePolynomial::Term t;
      t.exponents.resize(ta.exponents.size());
      for (std::size_t i = 0; i < t.exponents.size(); ++i)
        t.exponents[i] = static_cast<std::uint8_t>(ta.exponents[i] + tb.exponents[i]);
      t.coefficient = ta.coefficient * tb.coefficient;
      out.push_back(std::move(t));
    }
  sort_and_combine(out);
  return out;
}

Terms poly_sub(const Terms& a, const Terms& b) {
  Terms out = a;
  out.reserve(a.size() + b.size());
  for (const auto& t : b) {
    auto neg = t;
    neg.coefficient = -neg.coefficient;
    out.push_back(std::move(neg));
  }
  sort_and_combine(out);
  return out;
}

// Exact division; the Bareiss recurrence guarantees the quotient exists.
Terms poly_divexact(Terms num, const Terms& den) {
  if (den.empty()) throw std::logic_error("poly_divexact: division by zero polynomial");
  Terms quot;
  const auto& lead = den.back();  // largest in the term order
  while (!num.empty()) {
    const auto& top = num.back();
    EdgePolynomial::Term q;
    q.exponents.resize(top.exponents.size());
    for (std::size_t i = 0; i < q.exponents.size(); ++i) {
      if (top.exponents[i] < lead.exponents[i])
        throw std::logic_error("poly_divexact: inexact monomial division");
      q.exponents[i] = static_cast<std::uint8_t>(top.exponents[i] - lead.exponents[i]);
    }
    if (top.coefficient % lead.coefficient != 0)
      throw std::logic_error("poly_divexact: inexact coefficient division");
    q.coefficient = top.coefficient / lead.coefficient;
    num = poly_sub(num, poly_mul(den, {q}));
    quot.push_back(std::move(q));
  }
  sort_and_combine(quot);
  return quot;
}

}  // namespace

EdgePolynomial symbolic_determinant_bareiss(const Graph& pattern) {
  const int n = pattern.vertex_count();
  if (n > kMaxPatternVertices)
    throw budget_error("symbolic_determinant: pattern exceeds " +
                       std::to_string(kMaxPatternVertices) + " vertices");
  const std::vector<Edge>& vars = pattern.edges();
  const int nv = static_cast<int>(vars.size());
  if (n == 0) {
    EdgePolynomial::Term one;
    one.exponents.assign(nv, 0);
    one.coefficient = 1;
    return EdgePolynomial(vars, {one});
  }

  std::vector<Terms> a(static_cast<std::size_t>(n) * n);
  for (int v = 0; v < nv; ++v) {
    EdgePolynomial::Term t;
    t.exponents.assign(nv, 0);
    t.exponents[v] = 1;
    t.coefficient = 1;
    a[vars[v].first * n + vars[v].second] = {t};
    a[vars[v].second * n + vars[v].first] = {t};
  }
  auto at = [&](int i, int j) -> Terms& { return a[i * n + j]; };

  Terms prev{EdgePolynomial::Term{std::vector<std::uint8_t>(nv, 0), 1}};  // constant 1
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (at(k, k).empty()) {
      int piv = -1;
      for (int r = k + 1; r < n; ++r)
        if (!at(r, k).empty()) {
          piv = r;
          break;
        }
      if (piv < 0) return EdgePolynomial(vars, {});  // zero column: det = 0
      for (int c = 0; c < n; ++c) std::swap(at(piv, c), at(k, c));
      sign = -sign;
    }
    for (int r = k + 1; r < n; ++r)
      for (int c = k + 1; c < n; ++c)
        at(r, c) = poly_divexact(
            poly_sub(poly_mul(at(k, k), at(r, c)), poly_mul(at(r, k), at(k, c))), prev);
    prev = at(k, k);
  }
  Terms det = at(n - 1, n - 1);
  if (sign < 0)
    for (auto& t : det) t.coefficient = -t.coefficient;
  return EdgePolynomial(vars, std::move(det));
}

EdgePolynomial symbolic_determinant(const Graph& pattern) {
  return pattern.vertex_count() <= 8 ? symbolic_determinant_leibniz(pattern)
                                     : symbolic_determinant_bareiss(pattern);
}

std::optional<MonomialInfo> is_monomial(const EdgePolynomial& p) {
  if (p.terms().size() != 1) return std::nullopt;
  const auto& term = p.terms().front();
  MonomialInfo info;
  info.coefficient = term.coefficient;
  for (std::size_t v = 0; v < p.variables().size(); ++v)
    if (term.exponents[v] > 0)
      info.exponents.emplace_back(p.variables()[v], int(term.exponents[v]));
  return info;
}

}  // namespace ibound
