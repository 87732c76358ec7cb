#include "ibound/sym_matrix.hpp"

#include <stdexcept>
#include <string>

namespace ibound {

SymMatrix::SymMatrix(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("SymMatrix: negative order");
  upper_.assign(static_cast<std::size_t>(n) * (n + 1) / 2, Rational(0));
}

SymMatrix SymMatrix::identity(int n) {
  SymMatrix m(n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

std::size_t SymMatrix::index(int i, int j) const {
  // row-major upper triangle: row i starts at i*n - i*(i-1)/2 - i
  return static_cast<std::size_t>(i) * n_ - static_cast<std::size_t>(i) * (i - 1) / 2 +
         (j - i);
}

const Rational& SymMatrix::get(int i, int j) const {
  if (i < 0 || j < 0 || i >= n_ || j >= n_)
    throw std::invalid_argument("SymMatrix: index out of range");
  return i <= j ? upper_[index(i, j)] : upper_[index(j, i)];
}

void SymMatrix::set(int i, int j, Rational value) {
  if (i < 0 || j < 0 || i >= n_ || j >= n_)
    throw std::invalid_argument("SymMatrix: index out of range");
  upper_[i <= j ? index(i, j) : index(j, i)] = std::move(value);
}

SymMatrix principal_submatrix(const SymMatrix& m, std::span<const int> subset) {
  for (int idx : subset)
    if (idx < 0 || idx >= m.order())
      throw std::invalid_argument("principal_submatrix: index " + std::to_string(idx) +
                                  " out of range");
  SymMatrix out(static_cast<int>(subset.size()));
  for (std::size_t i = 0; i < subset.size(); ++i)
    for (std::size_t j = i; j < subset.size(); ++j)
      out.set(static_cast<int>(i), static_cast<int>(j), m.get(subset[i], subset[j]));
  return out;
}

WeightMatrix::WeightMatrix(Graph graph) : graph_(std::move(graph)) {
  by_edge_.assign(graph_.edges().size(), Rational(0));
}

const Rational& WeightMatrix::weight(int u, int v) const {
  static const Rational zero(0);
  const int idx = graph_.edge_index(u, v);
  return idx < 0 ? zero : by_edge_[idx];
}

void WeightMatrix::set_weight(int u, int v, Rational value) {
  const int idx = graph_.edge_index(u, v);
  if (idx < 0)
    throw std::invalid_argument("WeightMatrix: (" + std::to_string(u) + "," +
                                std::to_string(v) + ") is not an edge; support must "
                                "stay inside the edge set");
  by_edge_[idx] = std::move(value);
}

SymMatrix WeightMatrix::to_matrix() const {
  SymMatrix m(graph_.vertex_count());
  const auto& es = graph_.edges();
  for (std::size_t i = 0; i < es.size(); ++i) m.set(es[i].first, es[i].second, by_edge_[i]);
  return m;
}

WeightMatrix WeightMatrix::adjacency(Graph graph) {
  WeightMatrix w(std::move(graph));
  for (const auto& [u, v] : w.graph_.edges()) w.set_weight(u, v, 1);
  return w;
}

}  // namespace ibound
