#pragma once

#include <cstdint>
#include <vector>

#include "gatesynth/complex_matrix.hpp"

namespace gatesynth {

enum class Pauli { I, X, Y, Z };

/// The 2x2 Pauli matrices (and the identity).
ComplexMatrix pauli(Pauli which);

struct EigResult {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // columns; h = V diag(w) V^dag
};

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi
/// rotations. Input must be Hermitian within 1e-10; eigenvalues are returned
/// ascending. Throws NumericError on non-Hermitian input or if the sweep cap
/// (60 sweeps) is reached before the off-diagonal mass drops below roundoff.
EigResult hermitian_eig(const ComplexMatrix& h);

/// exp(-i t h) for Hermitian h, via the eigendecomposition
/// V exp(-i t w) V^dag. The result is unitary up to roundoff, and has unit
/// determinant whenever h is traceless.
ComplexMatrix expm_skew(const ComplexMatrix& h, double t);

/// Sum of singular values (computed from hermitian_eig of b^dag b). Bounds
/// max over unitaries U of Re tr(b U), which is what the dominance test in
/// pruning relies on.
double nuclear_norm(const ComplexMatrix& b);

/// Determinant by LU with partial pivoting.
Complex determinant(const ComplexMatrix& m);

/// Deterministic pseudo-random special unitary: orthonormalized complex
/// Gaussian matrix with the first column rephased so det = 1.
ComplexMatrix random_unitary(int dim, std::uint64_t seed);

}  // namespace gatesynth
