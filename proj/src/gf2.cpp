#include "ibound/gf2.hpp"

#include <algorithm>
#include <stdexcept>

namespace ibound {

Gf2System::Gf2System(int num_variables)
    : num_vars_(num_variables), words_((num_variables + 63) / 64) {
  if (num_variables < 0) throw std::invalid_argument("Gf2System: negative variable count");
}

void Gf2System::add_row(std::span<const int> support, bool rhs) {
  std::vector<std::uint64_t> row(words_, 0);
  for (int v : support) {
    if (v < 0 || v >= num_vars_)
      throw std::invalid_argument("Gf2System: variable out of range");
    row[v / 64] ^= std::uint64_t{1} << (v % 64);  // xor: duplicate support cancels
  }
  rows_.push_back(std::move(row));
  rhs_.push_back(rhs);
}

bool Gf2System::row_has(int row, int var) const {
  return (rows_[row][var / 64] >> (var % 64)) & 1;
}

struct Gf2Solver {
  static Gf2Outcome run(const Gf2System& sys) {
    const int m = sys.num_rows();
    const int n = sys.num_vars_;
    const int words = sys.words_;
    const int pwords = (m + 63) / 64;

    // working rows + provenance bitsets over original row indices
    auto rows = sys.rows_;
    std::vector<std::uint8_t> rhs(sys.rhs_.begin(), sys.rhs_.end());
    std::vector<std::vector<std::uint64_t>> prov(m, std::vector<std::uint64_t>(pwords, 0));
    for (int r = 0; r < m; ++r) prov[r][r / 64] |= std::uint64_t{1} << (r % 64);

    std::vector<int> pivot_row_of_var(n, -1);
    int rank = 0;
    for (int var = 0; var < n && rank < m; ++var) {
      int piv = -1;
      for (int r = rank; r < m; ++r)
        if ((rows[r][var / 64] >> (var % 64)) & 1) {
          piv = r;
          break;
        }
      if (piv < 0) continue;
      std::swap(rows[piv], rows[rank]);
      std::swap(rhs[piv], rhs[rank]);
      std::swap(prov[piv], prov[rank]);
      for (int r = 0; r < m; ++r) {
        if (r == rank) continue;
        if ((rows[r][var / 64] >> (var % 64)) & 1) {
          for (int w = 0; w < words; ++w) rows[r][w] ^= rows[rank][w];
          rhs[r] ^= rhs[rank];
          for (int w = 0; w < pwords; ++w) prov[r][w] ^= prov[rank][w];
        }
      }
      pivot_row_of_var[var] = rank;
      ++rank;
    }

    // any zero row with rhs 1 certifies infeasibility
    for (int r = 0; r < m; ++r) {
      bool zero = true;
      for (int w = 0; w < words && zero; ++w) zero = rows[r][w] == 0;
      if (zero && rhs[r]) {
        std::vector<int> farkas;
        for (int i = 0; i < m; ++i)
          if ((prov[r][i / 64] >> (i % 64)) & 1) farkas.push_back(i);
        return Gf2Infeasible{std::move(farkas)};
      }
    }

    // canonical solution: free variables are 0, pivots read off reduced rows
    Gf2Feasible feasible;
    feasible.solution.assign(n, 0);
    for (int var = 0; var < n; ++var) {
      const int r = pivot_row_of_var[var];
      if (r >= 0) feasible.solution[var] = rhs[r];
    }
    feasible.rank = rank;
    feasible.free_variables = n - rank;
    return feasible;
  }
};

Gf2Outcome solve_gf2(const Gf2System& system) { return Gf2Solver::run(system); }

}  // namespace ibound
