#include "ibound/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "ibound/errors.hpp"

namespace ibound {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
  edges_.reserve(edges.size());
  for (const auto& [u, v] : edges) {
    if (u == v) throw std::invalid_argument("Graph: self-loop at vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("Graph: edge (" + std::to_string(u) + "," +
                                  std::to_string(v) + ") out of range for n=" +
                                  std::to_string(n));
    edges_.push_back(make_edge(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw std::invalid_argument("Graph: duplicate edge");
  adj_.assign(n_, {});
  for (const auto& [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

bool Graph::has_edge(int u, int v) const { return edge_index(u, v) >= 0; }

int Graph::edge_index(int u, int v) const {
  if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_) return -1;
  const Edge e = make_edge(u, v);
  const auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return -1;
  return static_cast<int>(it - edges_.begin());
}

int Graph::degree(int v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("Graph: vertex out of range");
  return static_cast<int>(adj_[v].size());
}

std::vector<std::uint64_t> Graph::neighbor_masks() const {
  if (n_ > 64) throw budget_error("Graph: bitmask operations limited to 64 vertices");
  std::vector<std::uint64_t> rows(n_, 0);
  for (const auto& [u, v] : edges_) {
    rows[u] |= std::uint64_t{1} << v;
    rows[v] |= std::uint64_t{1} << u;
  }
  return rows;
}

Graph Graph::complement() const {
  std::vector<Edge> comp;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (!has_edge(u, v)) comp.push_back({u, v});
  return Graph(n_, std::move(comp));
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& subset) {
  std::vector<int> verts = subset;
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  for (int v : verts)
    if (v < 0 || v >= g.vertex_count())
      throw std::invalid_argument("induced_subgraph: vertex " + std::to_string(v) +
                                  " out of range");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (g.has_edge(verts[i], verts[j]))
        edges.push_back({static_cast<int>(i), static_cast<int>(j)});
  return {Graph(static_cast<int>(verts.size()), std::move(edges)), std::move(verts)};
}

VertexDeletion delete_vertex(const Graph& g, int v) {
  const int n = g.vertex_count();
  if (v < 0 || v >= n) throw std::invalid_argument("delete_vertex: vertex out of range");
  std::vector<int> old_to_new(n);
  for (int u = 0; u < n; ++u) old_to_new[u] = u < v ? u : u - 1;
  old_to_new[v] = -1;
  std::vector<Edge> edges;
  for (const auto& [a, b] : g.edges())
    if (a != v && b != v) edges.push_back({old_to_new[a], old_to_new[b]});
  return {Graph(n - 1, std::move(edges)), std::move(old_to_new), v};
}

Graph delete_edge(const Graph& g, int u, int v) {
  if (!g.has_edge(u, v))
    throw std::invalid_argument("delete_edge: (" + std::to_string(u) + "," +
                                std::to_string(v) + ") is not an edge");
  const Edge target = make_edge(u, v);
  std::vector<Edge> edges;
  edges.reserve(g.edge_count() - 1);
  for (const auto& e : g.edges())
    if (e != target) edges.push_back(e);
  return Graph(g.vertex_count(), std::move(edges));
}

std::vector<Triangle> triangles(const Graph& g) {
  std::vector<Triangle> out;
  for (const auto& [u, v] : g.edges()) {
    // common neighbors above v keep each triangle unique and sorted
    const auto& nu = g.neighbors(u);
    const auto& nv = g.neighbors(v);
    std::size_t i = 0, j = 0;
    while (i < nu.size() && j < nv.size()) {
      if (nu[i] < nv[j]) ++i;
      else if (nu[i] > nv[j]) ++j;
      else {
        if (nu[i] > v) out.push_back({u, v, nu[i]});
        ++i;
        ++j;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ibound
