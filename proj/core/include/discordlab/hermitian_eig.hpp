#pragma once

#include <vector>

#include "discordlab/complex_matrix.hpp"

namespace discordlab {

/// Full eigensystem of a Hermitian matrix. Eigenvalues are sorted
/// non-increasing; column k of `eigenvectors` belongs to `eigenvalues[k]`
/// and the columns are orthonormal.
struct HermitianSpectrum {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;

    /// Sum_k lambda_k v_k v_k†, for reconstruction checks.
    ComplexMatrix reconstruct() const;
};

/// Eigendecomposition by cyclic complex Jacobi rotations.
///
/// The input is symmetrized to (a+a†)/2 before iterating, which absorbs
/// floating-point drift from upstream products; inputs whose anti-Hermitian
/// part exceeds 1e-10*max(1,||a||_F) are rejected instead. Sweeps stop once
/// the off-diagonal Frobenius norm falls below 1e-13*||a||_F, with a cap of
/// 100 sweeps. Identical input yields identical output.
HermitianSpectrum hermitian_eig(const ComplexMatrix& a);

/// Trace norm ||a||_1 = sum_i |lambda_i(a)| of a Hermitian matrix.
double trace_norm_hermitian(const ComplexMatrix& a);

/// Threshold below which an eigenvalue counts as (negative) zero:
/// tau = 1e-12*max(1,||a||_F). Eigenvalues in [-tau, tau] are treated as
/// exact zeros by every counting and negativity sum.
double negative_eig_threshold(const ComplexMatrix& a);

} // namespace discordlab
