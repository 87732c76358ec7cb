#include "ibound/inertia.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace ibound {

/*
 * Inertia via symmetric congruence elimination.
 *
 * Pivot policy (deterministic; Sylvester's law makes the order irrelevant to
 * the result):
 *   - 1x1 pivot on the first nonzero diagonal entry of the live block; its
 *     sign contributes to n+ or n-.
 *   - When the live diagonal is identically zero but an off-diagonal entry b
 *     survives, a 2x2 block [[0,b],[b,0]] is pivoted out, contributing one
 *     positive and one negative eigenvalue regardless of the sign of b.
 *   - An all-zero live block contributes its size to n0.
 *
 * Two arithmetic backends run the same elimination:
 *   - the general path does the Schur updates in rational arithmetic;
 *   - integer matrices take a fraction-free (Bareiss) form in which the live
 *     block holds bordered minors S_rc = det(M[P+r, P+c]) and delta =
 *     det(M[P,P]), so the true Schur complement is S/delta and every division
 *     below is exact (Sylvester's determinant identity).  Entries start in
 *     128-bit machine words and spill into GMP integers when a bit-budget
 *     scan says the next step could overflow.
 */

namespace {

using i128 = __int128;

int bits_of(i128 v) {
  if (v < 0) v = -v;
  const auto hi = static_cast<std::uint64_t>(static_cast<unsigned __int128>(v) >> 64);
  const auto lo = static_cast<std::uint64_t>(static_cast<unsigned __int128>(v));
  if (hi != 0) return 128 - std::countl_zero(hi);
  return lo == 0 ? 0 : 64 - std::countl_zero(lo);
}

void import_i128(mpz_class& out, i128 v) {
  const bool neg = v < 0;
  unsigned __int128 mag = neg ? -static_cast<unsigned __int128>(v) : v;
  mpz_import(out.get_mpz_t(), 1, 1, sizeof(mag), 0, 0, &mag);
  if (neg) mpz_neg(out.get_mpz_t(), out.get_mpz_t());
}

// Fraction-free continuation on GMP integers.  `a` is the live block of size
// m (row-major), delta the current principal minor.  np/nm accumulate.
Inertia bareiss_mpz(std::vector<mpz_class>& a, int m, mpz_class delta, int np, int nm) {
  auto at = [&](int i, int j) -> mpz_class& { return a[i * m + j]; };
  mpz_class t1, d2;
  int nz = 0;
  int k = 0;
  while (k < m) {
    int piv = -1;
    for (int i = k; i < m; ++i)
      if (at(i, i) != 0) {
        piv = i;
        break;
      }
    if (piv >= 0) {
      if (piv != k) {
        for (int c = 0; c < m; ++c) mpz_swap(at(piv, c).get_mpz_t(), at(k, c).get_mpz_t());
        for (int r = 0; r < m; ++r) mpz_swap(at(r, piv).get_mpz_t(), at(r, k).get_mpz_t());
      }
      if ((sgn(at(k, k)) > 0) == (sgn(delta) > 0)) ++np; else ++nm;
      for (int r = k + 1; r < m; ++r)
        for (int c = r; c < m; ++c) {
          mpz_mul(t1.get_mpz_t(), at(k, k).get_mpz_t(), at(r, c).get_mpz_t());
          mpz_submul(t1.get_mpz_t(), at(r, k).get_mpz_t(), at(k, c).get_mpz_t());
          mpz_divexact(t1.get_mpz_t(), t1.get_mpz_t(), delta.get_mpz_t());
          at(r, c) = t1;
          if (c != r) at(c, r) = t1;
        }
      delta = at(k, k);
      ++k;
    } else {
      int p = -1, q = -1;
      for (int i = k; i < m && p < 0; ++i)
        for (int j = i + 1; j < m; ++j)
          if (at(i, j) != 0) {
            p = i;
            q = j;
            break;
          }
      if (p < 0) {
        nz += m - k;
        break;
      }
      if (p != k) {
        for (int c = 0; c < m; ++c) mpz_swap(at(p, c).get_mpz_t(), at(k, c).get_mpz_t());
        for (int r = 0; r < m; ++r) mpz_swap(at(r, p).get_mpz_t(), at(r, k).get_mpz_t());
      }
      if (q != k + 1) {
        for (int c = 0; c < m; ++c) mpz_swap(at(q, c).get_mpz_t(), at(k + 1, c).get_mpz_t());
        for (int r = 0; r < m; ++r) mpz_swap(at(r, q).get_mpz_t(), at(r, k + 1).get_mpz_t());
      }
      const mpz_class b = at(k, k + 1);
      ++np;
      ++nm;
      // S''_rc = -b (b S_rc - S_rk S_{k+1,c} - S_{r,k+1} S_kc) / delta^2
      d2 = delta * delta;
      for (int r = k + 2; r < m; ++r)
        for (int c = r; c < m; ++c) {
          mpz_mul(t1.get_mpz_t(), b.get_mpz_t(), at(r, c).get_mpz_t());
          mpz_submul(t1.get_mpz_t(), at(r, k).get_mpz_t(), at(k + 1, c).get_mpz_t());
          mpz_submul(t1.get_mpz_t(), at(r, k + 1).get_mpz_t(), at(k, c).get_mpz_t());
          mpz_neg(t1.get_mpz_t(), t1.get_mpz_t());
          mpz_mul(t1.get_mpz_t(), t1.get_mpz_t(), b.get_mpz_t());
          mpz_divexact(t1.get_mpz_t(), t1.get_mpz_t(), d2.get_mpz_t());
          at(r, c) = t1;
          if (c != r) at(c, r) = t1;
        }
      // Desnanot-Jacobi: delta'' * delta = -b^2
      t1 = -b * b;
      mpz_divexact(delta.get_mpz_t(), t1.get_mpz_t(), delta.get_mpz_t());
      k += 2;
    }
  }
  return {np, nm, nz};
}

// Machine-word head of the fraction-free elimination.
Inertia inertia_integer(const SymMatrix& m) {
  const int n = m.order();
  std::vector<i128> a(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      const auto v = m.get(i, j).as_int64();
      a[i * n + j] = a[j * n + i] = static_cast<i128>(*v);
    }
  auto at = [&](int i, int j) -> i128& { return a[i * n + j]; };

  int np = 0, nm = 0, nz = 0;
  i128 delta = 1;
  int k = 0;
  while (k < n) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (at(i, i) != 0) {
        piv = i;
        break;
      }

    // bit budget for the next step: products of two entries for a 1x1 pivot,
    // of three for a 2x2, plus carry headroom
    int mb = bits_of(delta);
    for (int i = k; i < n; ++i)
      for (int j = i; j < n; ++j) mb = std::max(mb, bits_of(at(i, j)));
    const int need = piv >= 0 ? 2 * mb + 2 : 3 * mb + 4;
    if (need > 126) {
      const int live = n - k;
      std::vector<mpz_class> big(static_cast<std::size_t>(live) * live);
      for (int r = 0; r < live; ++r)
        for (int c = 0; c < live; ++c) import_i128(big[r * live + c], at(k + r, k + c));
      mpz_class big_delta;
      import_i128(big_delta, delta);
      return bareiss_mpz(big, live, std::move(big_delta), np, nm);
    }

    if (piv >= 0) {
      if (piv != k) {
        for (int c = 0; c < n; ++c) std::swap(at(piv, c), at(k, c));
        for (int r = 0; r < n; ++r) std::swap(at(r, piv), at(r, k));
      }
      const i128 s = at(k, k);
      if ((s > 0) == (delta > 0)) ++np; else ++nm;
      for (int r = k + 1; r < n; ++r) {
        const i128 srk = at(r, k);
        for (int c = r; c < n; ++c) {
          const i128 v = (s * at(r, c) - srk * at(k, c)) / delta;
          at(r, c) = v;
          at(c, r) = v;
        }
      }
      delta = s;
      ++k;
    } else {
      int p = -1, q = -1;
      for (int i = k; i < n && p < 0; ++i)
        for (int j = i + 1; j < n; ++j)
          if (at(i, j) != 0) {
            p = i;
            q = j;
            break;
          }
      if (p < 0) {
        nz += n - k;
        break;
      }
      if (p != k) {
        for (int c = 0; c < n; ++c) std::swap(at(p, c), at(k, c));
        for (int r = 0; r < n; ++r) std::swap(at(r, p), at(r, k));
      }
      if (q != k + 1) {
        for (int c = 0; c < n; ++c) std::swap(at(q, c), at(k + 1, c));
        for (int r = 0; r < n; ++r) std::swap(at(r, q), at(r, k + 1));
      }
      const i128 b = at(k, k + 1);
      ++np;
      ++nm;
      const i128 d2 = delta * delta;
      for (int r = k + 2; r < n; ++r) {
        const i128 srk = at(r, k), srk1 = at(r, k + 1);
        for (int c = r; c < n; ++c) {
          const i128 v = (-b * (b * at(r, c) - srk * at(k + 1, c) - srk1 * at(k, c))) / d2;
          at(r, c) = v;
          at(c, r) = v;
        }
      }
      delta = (-b * b) / delta;
      k += 2;
    }
  }
  return {np, nm, nz};
}

// General path: same elimination with rational Schur updates.
Inertia inertia_rational(const SymMatrix& m) {
  const int n = m.order();
  std::vector<Rational> a(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) a[i * n + j] = a[j * n + i] = m.get(i, j);
  auto at = [&](int i, int j) -> Rational& { return a[i * n + j]; };

  int np = 0, nm = 0, nz = 0;
  int k = 0;
  while (k < n) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (!at(i, i).is_zero()) {
        piv = i;
        break;
      }
    if (piv >= 0) {
      if (piv != k) {
        for (int c = 0; c < n; ++c) std::swap(at(piv, c), at(k, c));
        for (int r = 0; r < n; ++r) std::swap(at(r, piv), at(r, k));
      }
      const Rational s = at(k, k);
      if (s.sign() > 0) ++np; else ++nm;
      for (int r = k + 1; r < n; ++r) {
        const Rational factor = at(r, k) / s;
        if (factor.is_zero()) continue;
        for (int c = r; c < n; ++c) {
          const Rational v = at(r, c) - factor * at(k, c);
          at(r, c) = v;
          at(c, r) = v;
        }
      }
      ++k;
    } else {
      int p = -1, q = -1;
      for (int i = k; i < n && p < 0; ++i)
        for (int j = i + 1; j < n; ++j)
          if (!at(i, j).is_zero()) {
            p = i;
            q = j;
            break;
          }
      if (p < 0) {
        nz += n - k;
        break;
      }
      if (p != k) {
        for (int c = 0; c < n; ++c) std::swap(at(p, c), at(k, c));
        for (int r = 0; r < n; ++r) std::swap(at(r, p), at(r, k));
      }
      if (q != k + 1) {
        for (int c = 0; c < n; ++c) std::swap(at(q, c), at(k + 1, c));
        for (int r = 0; r < n; ++r) std::swap(at(r, q), at(r, k + 1));
      }
      const Rational b = at(k, k + 1);
      ++np;
      ++nm;
      for (int r = k + 2; r < n; ++r) {
        const Rational frk = at(r, k) / b, frk1 = at(r, k + 1) / b;
        for (int c = r; c < n; ++c) {
          const Rational v = at(r, c) - frk * at(k + 1, c) - frk1 * at(k, c);
          at(r, c) = v;
          at(c, r) = v;
        }
      }
      k += 2;
    }
  }
  return {np, nm, nz};
}

bool all_entries_small_integers(const SymMatrix& m) {
  for (int i = 0; i < m.order(); ++i)
    for (int j = i; j < m.order(); ++j) {
      const auto v = m.get(i, j).as_int64();
      if (!v) return false;
      // leave room for the first elimination products
      if (*v > (std::int64_t{1} << 60) || *v < -(std::int64_t{1} << 60)) return false;
    }
  return true;
}

}  // namespace

Inertia inertia(const SymMatrix& m) {
  if (m.order() == 0) return {0, 0, 0};
  if (all_entries_small_integers(m)) return inertia_integer(m);
  return inertia_rational(m);
}

Rational determinant(const SymMatrix& m) {
  const int n = m.order();
  if (n == 0) return Rational(1);
  // rational Gaussian elimination with row pivoting; sign tracked per swap
  std::vector<Rational> a(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i * n + j] = m.get(i, j);
  auto at = [&](int i, int j) -> Rational& { return a[i * n + j]; };
  Rational det(1);
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int r = k; r < n; ++r)
      if (!at(r, k).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) return Rational(0);
    if (piv != k) {
      for (int c = 0; c < n; ++c) std::swap(at(piv, c), at(k, c));
      det = -det;
    }
    det *= at(k, k);
    for (int r = k + 1; r < n; ++r) {
      if (at(r, k).is_zero()) continue;
      const Rational factor = at(r, k) / at(k, k);
      for (int c = k; c < n; ++c) at(r, c) -= factor * at(k, c);
    }
  }
  return det;
}

int inertia_bound(const Graph& g, const WeightMatrix& w) {
  if (!(w.graph() == g))
    throw std::invalid_argument("inertia_bound: weight matrix belongs to a different graph");
  return bound_from_inertia(inertia(w.to_matrix()), g.vertex_count());
}

int bound_from_inertia(const Inertia& in, int n) {
  return std::min(n - in.n_plus, n - in.n_minus);
}

int bound_from_inertia_alt(const Inertia& in) {
  return in.n_zero + std::min(in.n_plus, in.n_minus);
}

std::string format_inertia(const Inertia& in) {
  return "(" + std::to_string(in.n_plus) + ", " + std::to_string(in.n_minus) + ", " +
         std::to_string(in.n_zero) + ")";
}

}  // namespace ibound
