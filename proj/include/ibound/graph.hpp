#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace ibound {

// Undirected edge, normalized so first < second.
using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

// Sorted vertex triple inducing a K3 in its host graph.
using Triangle = std::array<int, 3>;

// Simple undirected graph on vertices 0..n-1.  Immutable after construction;
// edges are stored sorted and duplicate-free.
class Graph {
 public:
  Graph() : n_(0) {}
  Graph(int n, std::vector<Edge> edges);  // validates, normalizes, sorts

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_edge(int u, int v) const;
  // Index of (u,v) in the sorted edge list, or -1 if absent.
  int edge_index(int u, int v) const;

  int degree(int v) const;
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }

  // Neighbor masks, one 64-bit word per vertex.  Requires n <= 64.
  std::vector<std::uint64_t> neighbor_masks() const;

  Graph complement() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;  // sorted neighbor lists
};

// Induced subgraph together with its relabeling: vertices[new] = old.
struct InducedSubgraph {
  Graph graph;
  std::vector<int> vertices;
};

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& subset);

// Vertex deletion keeps labels contiguous; old_to_new[v] = -1 for the deleted
// vertex so original names stay traceable.
struct VertexDeletion {
  Graph graph;
  std::vector<int> old_to_new;
  int deleted;
};

VertexDeletion delete_vertex(const Graph& g, int v);
Graph delete_edge(const Graph& g, int u, int v);

// All triangles, each as a sorted triple, in lexicographic order.
std::vector<Triangle> triangles(const Graph& g);

}  // namespace ibound
