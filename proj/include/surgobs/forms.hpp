#pragma once

#include <vector>

#include "surgobs/matrix.hpp"

namespace surgobs {

// Inertia (b+, b0, b-) of a symmetric form.
struct Inertia {
  int b_plus = 0;
  int b_zero = 0;
  int b_minus = 0;

  int signature() const { return b_plus - b_minus; }
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

// Exact inertia by symmetric Gaussian elimination over the rationals.
//
// Pivots on the lowest-index nonzero diagonal entry. When every remaining
// diagonal entry vanishes, the lowest (i, j) with a nonzero off-diagonal
// entry is split off as a hyperbolic 2x2 block, contributing (1, 0, 1).
// Whatever survives once the remaining block is zero counts toward b0.
Inertia congruence_diagonalize(const SymIntMatrix& q);

// U * M * V == D with D diagonal, nonnegative and d_i | d_{i+1}; U and V
// unimodular.
struct SmithForm {
  IntMatrix d;
  IntMatrix u;
  IntMatrix v;

  std::vector<Integer> diagonal() const;
};

SmithForm smith_normal_form(const IntMatrix& m);

// Invariant factors of coker(M) for square M, skipping units; a 0 entry
// stands for a free Z summand.
std::vector<Integer> cokernel_invariants(const IntMatrix& m);

}  // namespace surgobs
