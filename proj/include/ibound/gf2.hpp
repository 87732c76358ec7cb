#pragma once

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

namespace ibound {

// Dense linear system over GF(2).  Rows are added with their variable
// support; solving tracks which original rows combine into each working row,
// so infeasibility comes with an explicit certificate.
class Gf2System {
 public:
  explicit Gf2System(int num_variables);

  int num_variables() const { return num_vars_; }
  int num_rows() const { return static_cast<int>(rows_.size()); }

  void add_row(std::span<const int> support, bool rhs);

  bool row_rhs(int row) const { return rhs_[row]; }
  bool row_has(int row, int var) const;

 private:
  friend struct Gf2Solver;
  int num_vars_;
  int words_;
  std::vector<std::vector<std::uint64_t>> rows_;
  std::vector<bool> rhs_;
};

struct Gf2Feasible {
  // canonical solution: free variables set to 0, in variable order
  std::vector<std::uint8_t> solution;
  int rank = 0;
  int free_variables = 0;
};

struct Gf2Infeasible {
  // original row indices whose GF(2) sum is 0 = 1
  std::vector<int> farkas_rows;
};

using Gf2Outcome = std::variant<Gf2Feasible, Gf2Infeasible>;

Gf2Outcome solve_gf2(const Gf2System& system);

}  // namespace ibound
