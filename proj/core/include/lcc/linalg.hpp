#pragma once

#include "lcc/matrix.hpp"

namespace lcc {

struct SymEigenResult {
    Vector eigenvalues;  // sorted ascending
};

// Solve A x = b for symmetric positive-definite A via Cholesky.
// Throws NotPositiveDefinite when a pivot falls at or below 1e-12 (the way a
// singular Hessian / separable-data problem announces itself).
Vector cholesky_solve(const Matrix& a, const Vector& b);

// All eigenvalues of a symmetric matrix via cyclic Jacobi rotations.
// Throws NonSymmetric when max |A_ij - A_ji| exceeds 1e-10.
SymEigenResult sym_eigenvalues(const Matrix& a);

}  // namespace lcc
