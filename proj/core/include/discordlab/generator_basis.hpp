#pragma once

#include <cstddef>
#include <vector>

#include "discordlab/complex_matrix.hpp"

namespace discordlab {

/// Generalized Gell-Mann basis of su(d): d^2-1 Hermitian traceless matrices
/// normalized to Tr(g_a g_b) = 2 delta_ab.
///
/// The order is fixed so that correlation matrices are reproducible:
///   1. symmetric pairs  E_ij + E_ji            for i < j, row-major
///   2. antisymmetric    -i (E_ij - E_ji)       for i < j, row-major
///   3. diagonal         sqrt(2/(l(l+1))) (sum_{k<l} E_kk - l E_ll)  for l = 1..d-1
/// For d = 2 this yields the Pauli matrices (sigma_x, sigma_y, sigma_z).
struct GeneratorBasis {
    std::size_t dim;
    std::vector<ComplexMatrix> matrices;
};

/// Build the basis for local dimension d >= 2; throws RangeError below that.
GeneratorBasis generator_basis(std::size_t d);

} // namespace discordlab
