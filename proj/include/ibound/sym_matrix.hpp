#pragma once

#include <span>
#include <vector>

#include "ibound/graph.hpp"
#include "ibound/rational.hpp"

namespace ibound {

// Symmetric rational matrix, upper triangle stored.  Reads work for any (i,j).
class SymMatrix {
 public:
  SymMatrix() : n_(0) {}
  explicit SymMatrix(int n);

  static SymMatrix identity(int n);

  int order() const { return n_; }

  const Rational& get(int i, int j) const;
  void set(int i, int j, Rational value);

 private:
  std::size_t index(int i, int j) const;  // requires i <= j

  int n_;
  std::vector<Rational> upper_;
};

// Rows and columns restricted to the given indices, in the given order.
SymMatrix principal_submatrix(const SymMatrix& m, std::span<const int> subset);

// Symmetric rational matrix whose support lies inside a graph's edge set,
// with identically zero diagonal.
class WeightMatrix {
 public:
  explicit WeightMatrix(Graph graph);

  const Graph& graph() const { return graph_; }
  const Rational& weight(int u, int v) const;  // zero for non-edges
  const Rational& weight_by_index(int edge_idx) const { return by_edge_[edge_idx]; }
  void set_weight(int u, int v, Rational value);  // rejects non-edges

  SymMatrix to_matrix() const;

  static WeightMatrix adjacency(Graph graph);  // every edge weight 1

 private:
  Graph graph_;
  std::vector<Rational> by_edge_;  // parallel to graph_.edges()
};

}  // namespace ibound
