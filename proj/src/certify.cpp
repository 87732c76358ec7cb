#include "ibound/certify.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <thread>

#include "ibound/edge_polynomial.hpp"
#include "ibound/errors.hpp"
#include "ibound/independence.hpp"

namespace ibound {

SignVector SignVector::all_positive(const Graph& g) {
  return {std::vector<std::uint8_t>(g.edges().size(), 0)};
}

bool SignVector::edge_sign(const Graph& g, int u, int v) const {
  const int idx = g.edge_index(u, v);
  if (idx < 0) throw std::invalid_argument("SignVector: not an edge");
  return bits[idx] != 0;
}

WeightMatrix unit_weight_matrix(const Graph& g, const SignVector& s) {
  if (s.bits.size() != g.edges().size())
    throw std::invalid_argument("unit_weight_matrix: sign vector size mismatch");
  WeightMatrix w(g);
  for (std::size_t i = 0; i < g.edges().size(); ++i)
    w.set_weight(g.edges()[i].first, g.edges()[i].second, s.bits[i] ? -1 : 1);
  return w;
}

namespace {

// examines one subset; returns the gadget if it qualifies
std::optional<GadgetCopy> gadget_of_subset(const Graph& g, int alpha,
                                           const std::vector<int>& subset) {
  const InducedSubgraph ind = induced_subgraph(g, subset);
  if (independence_number(ind.graph).alpha != alpha) return std::nullopt;
  const auto mono = is_monomial(symbolic_determinant(ind.graph));
  if (!mono) return std::nullopt;

  GadgetCopy copy;
  copy.image_vertices = ind.vertices;
  copy.mapping = ind.vertices;  // local vertex i of the induced pattern -> host vertex
  copy.const_negative = mono->coefficient < 0;
  for (const auto& [edge, exp] : mono->exponents)
    if (exp % 2 == 1)
      copy.odd_support.push_back(
          make_edge(ind.vertices[edge.first], ind.vertices[edge.second]));
  std::sort(copy.odd_support.begin(), copy.odd_support.end());

  // odd support is a cycle-space member: even degree at every image vertex
  std::map<int, int> deg;
  for (const auto& [u, v] : copy.odd_support) {
    ++deg[u];
    ++deg[v];
  }
  for (const auto& [v, d] : deg)
    if (d % 2 != 0)
      throw std::logic_error("enumerate_gadgets: odd support has odd degree at vertex " +
                             std::to_string(v));
  return copy;
}

std::vector<std::vector<int>> all_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k > n || k < 0) return out;
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

}  // namespace

std::vector<GadgetCopy> enumerate_gadgets(const Graph& g, int alpha, int threads) {
  if (alpha != independence_number(g).alpha)
    throw std::invalid_argument("enumerate_gadgets: alpha does not match the graph");
  const int order = 2 * alpha + 1;
  if (order > 9)
    throw budget_error("enumerate_gadgets: gadget order " + std::to_string(order) +
                       " exceeds the 9-vertex budget");

  const auto subsets = all_subsets(g.vertex_count(), order);
  std::vector<GadgetCopy> gadgets;
  if (threads <= 1) {
    for (const auto& s : subsets)
      if (auto copy = gadget_of_subset(g, alpha, s)) gadgets.push_back(std::move(*copy));
    return gadgets;
  }

  // chunked scan with deterministic merge order
  const std::size_t nthreads = std::min<std::size_t>(threads, subsets.size() ? subsets.size() : 1);
  std::vector<std::vector<GadgetCopy>> partial(nthreads);
  std::vector<std::thread> workers;
  for (std::size_t t = 0; t < nthreads; ++t)
    workers.emplace_back([&, t] {
      const std::size_t lo = subsets.size() * t / nthreads;
      const std::size_t hi = subsets.size() * (t + 1) / nthreads;
      for (std::size_t i = lo; i < hi; ++i)
        if (auto copy = gadget_of_subset(g, alpha, subsets[i]))
          partial[t].push_back(std::move(*copy));
    });
  for (auto& w : workers) w.join();
  for (auto& chunk : partial)
    for (auto& copy : chunk) gadgets.push_back(std::move(copy));
  return gadgets;
}

bool direction_of(const Graph& g, const GadgetCopy& gadget, const SignVector& s) {
  int parity = gadget.const_negative ? 1 : 0;
  for (const auto& [u, v] : gadget.odd_support)
    if (s.edge_sign(g, u, v)) parity ^= 1;
  return parity != 0;
}

ParitySystem build_parity_system(const Graph& g, const std::vector<GadgetCopy>& gadgets) {
  if (gadgets.empty())
    throw std::invalid_argument("build_parity_system: empty gadget list");
  const int ne = g.edge_count();
  ParitySystem ps{ne, Gf2System(ne + 1)};
  std::vector<int> support;
  for (const auto& gadget : gadgets) {
    support.clear();
    for (const auto& [u, v] : gadget.odd_support) {
      const int idx = g.edge_index(u, v);
      if (idx < 0)
        throw std::invalid_argument("build_parity_system: odd support outside edge set");
      support.push_back(idx);
    }
    support.push_back(ne);  // the shared direction bit d
    ps.system.add_row(support, gadget.const_negative);
  }
  return ps;
}

std::string format_verdict(const Verdict& v) {
  if (v.not_tight()) return "NOT_TIGHT";
  return "UNKNOWN(" + v.reason + ")";
}

Verdict certify_not_tight(const Graph& g, int threads) {
  Verdict verdict;
  int alpha = 0;
  CriticalityReport crit;
  try {
    alpha = independence_number(g).alpha;
    if (2 * alpha + 1 > 9) {
      verdict.reason = "gadget order " + std::to_string(2 * alpha + 1) +
                       " exceeds the 9-vertex enumeration budget";
      return verdict;
    }
    crit = is_alpha_critical(g);
  } catch (const budget_error& e) {
    verdict.reason = e.what();
    return verdict;
  }
  if (!crit.is_critical) {
    verdict.reason = "criticality prerequisite fails";
    return verdict;
  }
  const std::vector<GadgetCopy> gadgets = enumerate_gadgets(g, alpha, threads);
  if (gadgets.empty()) {
    verdict.reason = "no monomial-determinant gadgets found";
    return verdict;
  }
  const ParitySystem ps = build_parity_system(g, gadgets);
  const Gf2Outcome outcome = solve_gf2(ps.system);
  if (const auto* infeasible = std::get_if<Gf2Infeasible>(&outcome)) {
    NonTightnessCertificate cert;
    cert.graph = g;
    cert.alpha = alpha;
    cert.critical_witnesses = std::move(crit.per_edge);
    cert.gadgets = gadgets;
    cert.farkas_rows = infeasible->farkas_rows;
    verdict.kind = Verdict::Kind::NotTight;
    verdict.certificate = std::move(cert);
    return verdict;
  }
  const auto& feasible = std::get<Gf2Feasible>(outcome);
  SignVector signs;
  signs.bits.assign(feasible.solution.begin(), feasible.solution.begin() + g.edge_count());
  verdict.reason = "parity system is feasible: a sign class makes all gadget directions agree";
  verdict.feasible_signs = std::move(signs);
  return verdict;
}

VerificationResult verify_certificate(const Graph& g, const NonTightnessCertificate& cert) {
  const auto fail = [](std::string reason) { return VerificationResult{false, std::move(reason)}; };

  if (!(cert.graph == g)) return fail("graph description mismatch");

  // independence number and criticality witnesses, recomputed
  const IndependenceResult ind = independence_number(g);
  if (ind.alpha != cert.alpha) return fail("alpha mismatch");
  for (const auto& e : g.edges()) {
    const auto it = cert.critical_witnesses.find(e);
    if (it == cert.critical_witnesses.end()) return fail("missing criticality witness");
    if (static_cast<int>(it->second.size()) != cert.alpha + 1)
      return fail("criticality witness has wrong size");
    if (!is_independent_set(delete_edge(g, e.first, e.second), it->second))
      return fail("criticality witness is not independent");
  }

  // each gadget, from scratch
  for (const auto& gadget : cert.gadgets) {
    if (gadget.image_vertices.size() != static_cast<std::size_t>(2 * cert.alpha + 1))
      return fail("gadget has wrong order");
    for (int v : gadget.image_vertices)
      if (v < 0 || v >= g.vertex_count()) return fail("gadget vertex out of range");
    const InducedSubgraph ind_sub = induced_subgraph(g, gadget.image_vertices);
    if (ind_sub.vertices != gadget.image_vertices) return fail("induced subgraph mismatch");
    if (independence_number(ind_sub.graph).alpha != cert.alpha)
      return fail("gadget independence number mismatch");
    const auto mono = is_monomial(symbolic_determinant(ind_sub.graph));
    if (!mono) return fail("gadget determinant is not a monomial");
    if ((mono->coefficient < 0) != gadget.const_negative)
      return fail("gadget determinant sign mismatch");
    std::vector<Edge> odd;
    for (const auto& [edge, exp] : mono->exponents)
      if (exp % 2 == 1)
        odd.push_back(make_edge(ind_sub.vertices[edge.first], ind_sub.vertices[edge.second]));
    std::sort(odd.begin(), odd.end());
    if (odd != gadget.odd_support) return fail("gadget odd support mismatch");
  }

  // Farkas rows: coefficients (every edge and d) cancel, right sides sum to 1
  if (cert.farkas_rows.empty()) return fail("empty farkas row set");
  std::set<Edge> support_sum;
  int d_sum = 0, rhs_sum = 0;
  for (int row : cert.farkas_rows) {
    if (row < 0 || row >= static_cast<int>(cert.gadgets.size()))
      return fail("farkas row index out of range");
    const auto& gadget = cert.gadgets[row];
    for (const auto& e : gadget.odd_support) {
      const auto it = support_sum.find(e);
      if (it == support_sum.end()) support_sum.insert(e);
      else support_sum.erase(it);
    }
    d_sum ^= 1;
    rhs_sum ^= gadget.const_negative ? 1 : 0;
  }
  if (!support_sum.empty()) return fail("farkas sum has nonzero edge coefficient");
  if (d_sum != 0) return fail("farkas sum has nonzero direction coefficient");
  if (rhs_sum != 1) return fail("farkas sum rhs = 0");

  return {true, ""};
}

std::pair<SignVector, std::vector<int>> normalize_signs(const Graph& g, const SignVector& s,
                                                        const std::vector<Edge>& tree) {
  const int n = g.vertex_count();
  if (s.bits.size() != g.edges().size())
    throw std::invalid_argument("normalize_signs: sign vector size mismatch");
  if (static_cast<int>(tree.size()) != n - 1)
    throw std::invalid_argument("normalize_signs: spanning tree needs n-1 edges");
  std::vector<std::vector<int>> tree_adj(n);
  for (const auto& e : tree) {
    if (g.edge_index(e.first, e.second) < 0)
      throw std::invalid_argument("normalize_signs: tree edge not in graph");
    tree_adj[e.first].push_back(e.second);
    tree_adj[e.second].push_back(e.first);
  }

  // root at 0; flip[v] = 1 means diagonal entry -1
  std::vector<int> flip(n, -1);
  flip[0] = 0;
  std::vector<int> stack{0};
  int seen = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int v : tree_adj[u]) {
      if (flip[v] >= 0) continue;
      flip[v] = flip[u] ^ (s.edge_sign(g, u, v) ? 1 : 0);
      stack.push_back(v);
      ++seen;
    }
  }
  if (seen != n) throw std::invalid_argument("normalize_signs: tree is not spanning");

  SignVector out;
  out.bits.resize(g.edges().size());
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const auto& [u, v] = g.edges()[i];
    out.bits[i] = static_cast<std::uint8_t>(s.bits[i] ^ flip[u] ^ flip[v]);
  }
  std::vector<int> diagonal(n);
  for (int v = 0; v < n; ++v) diagonal[v] = flip[v] ? -1 : 1;
  return {out, diagonal};
}

PropagationResult propagate_triangle_signs(const Graph& g, const std::vector<int>& fixed,
                                           bool global_sign,
                                           const std::vector<Triangle>& covered) {
  if (fixed.size() != g.edges().size())
    throw std::invalid_argument("propagate_triangle_signs: fixed vector size mismatch");
  PropagationResult result;
  result.signs = fixed;
  for (int v : result.signs)
    if (v < -1 || v > 1)
      throw std::invalid_argument("propagate_triangle_signs: signs must be -1, 0 or 1");

  const int target = global_sign ? 1 : 0;
  // synchronous rounds: every forcing in a round reads the assignment as it
  // stood when the round began, so checks never race ahead of forcings (this
  // is what makes the class-by-class forcing arguments come out verbatim)
  std::map<int, std::pair<int, Triangle>> pending;
  bool changed = true;
  while (changed) {
    changed = false;
    pending.clear();
    for (const auto& t : covered) {
      int idx[3] = {g.edge_index(t[0], t[1]), g.edge_index(t[0], t[2]),
                    g.edge_index(t[1], t[2])};
      for (int e : idx)
        if (e < 0) throw std::invalid_argument("propagate_triangle_signs: not a triangle");
      int unknown = -1, parity = target, known = 0;
      for (int e : idx) {
        if (result.signs[e] < 0) unknown = e;
        else {
          parity ^= result.signs[e];
          ++known;
        }
      }
      if (known != 2 || unknown < 0) continue;
      const auto it = pending.find(unknown);
      if (it == pending.end()) {
        pending.emplace(unknown, std::pair{parity, t});
      } else if (it->second.first != parity) {
        // two triangles force the same edge both ways within one round
        result.violated.push_back(it->second.second);
        result.violated.push_back(t);
        std::sort(result.violated.begin(), result.violated.end());
        result.violated.erase(std::unique(result.violated.begin(), result.violated.end()),
                              result.violated.end());
        for (int v : result.signs)
          if (v < 0) ++result.undetermined;
        return result;
      }
    }
    for (const auto& [edge, forced] : pending) {
      result.signs[edge] = forced.first;
      changed = true;
    }
  }
  for (const auto& t : covered) {
    const int idx[3] = {g.edge_index(t[0], t[1]), g.edge_index(t[0], t[2]),
                        g.edge_index(t[1], t[2])};
    int parity = 0;
    bool complete = true;
    for (int e : idx) {
      if (result.signs[e] < 0) complete = false;
      else parity ^= result.signs[e];
    }
    if (complete && parity != target) result.violated.push_back(t);
  }
  for (int v : result.signs)
    if (v < 0) ++result.undetermined;
  return result;
}

std::optional<ConflictWitness> conflict_witness(const Graph& g, const SignVector& s,
                                                const std::vector<GadgetCopy>& gadgets) {
  const GadgetCopy* pos = nullptr;
  const GadgetCopy* neg = nullptr;
  for (const auto& gadget : gadgets) {
    if (direction_of(g, gadget, s)) {
      if (!pos) pos = &gadget;
    } else if (!neg) {
      neg = &gadget;
    }
    if (pos && neg) break;
  }
  if (!pos || !neg) return std::nullopt;

  const int alpha = (static_cast<int>(pos->image_vertices.size()) - 1) / 2;
  const WeightMatrix w = unit_weight_matrix(g, s);
  const SymMatrix full = w.to_matrix();
  const Inertia pos_in = inertia(principal_submatrix(full, pos->image_vertices));
  const Inertia neg_in = inertia(principal_submatrix(full, neg->image_vertices));
  const Inertia expected_pos{alpha + 1, alpha, 0};
  const Inertia expected_neg{alpha, alpha + 1, 0};
  if (!(pos_in == expected_pos) || !(neg_in == expected_neg))
    throw std::logic_error("conflict_witness: submatrix inertia disagrees with direction");
  ConflictWitness witness;
  witness.positive_gadget = *pos;
  witness.negative_gadget = *neg;
  witness.positive_inertia = pos_in;
  witness.negative_inertia = neg_in;
  witness.alpha = alpha;
  witness.bound = bound_from_inertia(inertia(full), g.vertex_count());
  return witness;
}

std::vector<Triangle> covered_triangles(const Graph& g,
                                        const std::vector<GadgetCopy>& gadgets) {
  std::set<std::vector<Edge>> odd_supports;
  for (const auto& gadget : gadgets) odd_supports.insert(gadget.odd_support);
  std::vector<Triangle> out;
  for (const auto& t : triangles(g)) {
    std::vector<Edge> edges = {make_edge(t[0], t[1]), make_edge(t[0], t[2]),
                               make_edge(t[1], t[2])};
    std::sort(edges.begin(), edges.end());
    if (odd_supports.count(edges)) out.push_back(t);
  }
  return out;
}

}  // namespace ibound
