#include "ibound/paley.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ibound {

bool PaleyParams::is_square(int x) const {
  int r = x % q;
  if (r < 0) r += q;
  return std::binary_search(squares.begin(), squares.end(), r);
}

bool is_prime(int n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (int d = 3; static_cast<long>(d) * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::vector<int> quadratic_residues(int q) {
  if (q < 3 || !is_prime(q))
    throw std::invalid_argument("quadratic_residues: q=" + std::to_string(q) +
                                " is not a prime >= 3");
  std::vector<int> out;
  for (int x = 1; x < q; ++x) out.push_back(static_cast<int>((static_cast<long>(x) * x) % q));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PaleyParams paley_params(int q) {
  if (!is_prime(q) || q % 4 != 1)
    throw std::invalid_argument("paley: q=" + std::to_string(q) +
                                " must be a prime congruent to 1 mod 4");
  return {q, quadratic_residues(q)};
}

Graph paley(int q) {
  const PaleyParams p = paley_params(q);
  std::vector<Edge> edges;
  for (int u = 0; u < q; ++u)
    for (int v = u + 1; v < q; ++v)
      if (p.is_square(v - u)) edges.push_back({u, v});
  return Graph(q, std::move(edges));
}

std::vector<int> class_half_set(const PaleyParams& p) {
  std::vector<int> out;
  for (int r : p.squares)
    if (r <= (p.q - 1) / 2) out.push_back(r);
  return out;
}

int edge_class(const PaleyParams& p, Edge e) {
  int d = (e.second - e.first) % p.q;
  if (d < 0) d += p.q;
  const int k = std::min(d, p.q - d);
  if (d == 0 || !p.is_square(d))
    throw std::invalid_argument("edge_class: (" + std::to_string(e.first) + "," +
                                std::to_string(e.second) + ") is not an edge of P(" +
                                std::to_string(p.q) + ")");
  return k;
}

std::vector<std::vector<int>> two_factorization(const PaleyParams& p) {
  std::vector<std::vector<int>> cycles;
  for (int k : class_half_set(p)) {
    std::vector<int> cycle;
    int v = 0;
    do {
      cycle.push_back(v);
      v = (v + k) % p.q;
    } while (v != 0);
    if (static_cast<int>(cycle.size()) != p.q)
      throw std::invalid_argument("two_factorization: class " + std::to_string(k) +
                                  " splits into multiple cycles");
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

std::array<int, 3> triangle_pattern(const PaleyParams& p, const Triangle& t) {
  std::array<int, 3> labels = {edge_class(p, make_edge(t[0], t[1])),
                               edge_class(p, make_edge(t[0], t[2])),
                               edge_class(p, make_edge(t[1], t[2]))};
  std::sort(labels.begin(), labels.end());
  return labels;
}

std::vector<int> apply_automorphism(const PaleyParams& p, const Automorphism& sigma) {
  if (sigma.a % p.q == 0 || !p.is_square(sigma.a))
    throw std::invalid_argument("apply_automorphism: a=" + std::to_string(sigma.a) +
                                " is not a nonzero square mod " + std::to_string(p.q));
  std::vector<int> perm(p.q);
  for (int v = 0; v < p.q; ++v) {
    int image = static_cast<int>((static_cast<long>(sigma.a) * v + sigma.b) % p.q);
    if (image < 0) image += p.q;
    perm[v] = image;
  }
  return perm;
}

}  // namespace ibound
