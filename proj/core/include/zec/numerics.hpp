#pragma once

#include <vector>

#include "zec/config.hpp"
#include "zec/matrix.hpp"

namespace zec {

/// Result of a Hermitian eigendecomposition: V diag(lambda) V^dagger
/// reconstructs the input. Eigenvalues sorted descending, eigenvector
/// columns orthonormal.
struct EigenDecomposition {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;
};

/// Diagonalize a Hermitian matrix by cyclic Jacobi rotations. Chosen over
/// faster tridiagonalization schemes: unconditionally convergent and easy
/// to verify, and the dimensions in this toolkit stay small.
///
/// Throws NotSquareError / NotHermitianError when the input violates the
/// preconditions (Hermiticity is checked entrywise against `tol`).
EigenDecomposition hermitian_eig(const ComplexMatrix& m, double tol = tol::hermiticity);

/// Gram-Schmidt orthonormalization of a linearly independent set, preserving
/// span and order. Throws RankDeficientError when a vector's residual after
/// projection falls below `tol` times its original norm.
ComplexMatrix orthonormalize(const std::vector<std::vector<cx>>& vectors, double tol = 1e-10);

/// Greedy variant used to build measurement bases: keeps the vectors that are
/// independent, silently drops the rest, and completes with canonical basis
/// vectors until `dim` orthonormal columns are reached.
ComplexMatrix complete_orthonormal_basis(const std::vector<std::vector<cx>>& seed, int dim,
                                         double drop_tol = 1e-8);

/// Trace distance D(a, b) = (1/2) sum_i |lambda_i(a - b)|.
/// For density operators the result lies in [0, 1].
double trace_abs_half(const ComplexMatrix& a, const ComplexMatrix& b,
                      double tol = tol::hermiticity);

}  // namespace zec
