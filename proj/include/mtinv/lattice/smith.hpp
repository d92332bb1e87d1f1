#pragma once

#include <cstddef>
#include <optional>

#include "mtinv/lattice/fin_ab_group.hpp"
#include "mtinv/lattice/int_matrix.hpp"

namespace mtinv {

// U * of * V == D with U, V unimodular and D diagonal. The nonzero diagonal
// entries of D are positive, form a divisibility chain, and come first.
// The inverses of U and V are tracked alongside so callers never invert.
struct SmithDecomposition {
  IntMatrix of;
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  IntMatrix U_inv;
  IntMatrix V_inv;
  std::size_t rank = 0;

  // The first `rank` diagonal entries of D.
  IntVector invariant_factors() const;
};

// Pivoting picks the entry of least nonzero absolute value in the remaining
// block, lowest row-major index first, so the transforms are deterministic.
SmithDecomposition snf(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);

// Z^rows / image(m).
FinAbGroup cokernel(const IntMatrix& m);

// Columns form a basis of {x : m x = 0}; the basis spans a saturated sublattice.
IntMatrix kernel_basis(const IntMatrix& m);

// Some integer x with m x == target, if one exists.
std::optional<IntVector> solve_linear(const IntMatrix& m, const IntVector& target);

// Fraction-free (Bareiss) determinant of a square matrix.
Integer determinant(const IntMatrix& m);

bool is_unimodular(const IntMatrix& m);

// Reuses one Smith decomposition of m for many right-hand sides.
class LinearSolver {
 public:
  explicit LinearSolver(const IntMatrix& m);

  std::optional<IntVector> solve(const IntVector& target) const;
  // Solves m X == targets column by column; nullopt if any column fails.
  std::optional<IntMatrix> solve_columns(const IntMatrix& targets) const;
  bool in_image(const IntVector& v) const { return solve(v).has_value(); }
  bool contains_columns(const IntMatrix& vs) const;

  const SmithDecomposition& decomposition() const noexcept { return smith_; }

 private:
  SmithDecomposition smith_;
};

}  // namespace mtinv
