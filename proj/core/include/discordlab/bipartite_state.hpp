#pragma once

#include <cstddef>
#include <cstdint>

#include "discordlab/complex_matrix.hpp"

namespace discordlab {

/// A validated bipartite density matrix tagged with its (dim_a, dim_b)
/// factorization. Basis ordering is A-major: composite index k = a*dim_b + b.
///
/// Admission requires Hermiticity within 1e-10, unit trace within 1e-10 and
/// minimum eigenvalue >= -1e-10. The stored matrix is kept bit-identical to
/// the one supplied; validation never rewrites entries.
class BipartiteState {
public:
    std::size_t dim_a() const { return dim_a_; }
    std::size_t dim_b() const { return dim_b_; }
    std::size_t dim() const { return dim_a_ * dim_b_; }
    const ComplexMatrix& rho() const { return rho_; }

    friend BipartiteState make_state(std::size_t dim_a, std::size_t dim_b, ComplexMatrix matrix);
    friend BipartiteState reinterpret(const BipartiteState& s, std::size_t new_dim_a,
                                      std::size_t new_dim_b);

private:
    BipartiteState(std::size_t dim_a, std::size_t dim_b, ComplexMatrix rho)
        : dim_a_(dim_a), dim_b_(dim_b), rho_(std::move(rho)) {}

    std::size_t dim_a_;
    std::size_t dim_b_;
    ComplexMatrix rho_;
};

/// Validate and wrap a density matrix. Throws DimensionError on shape
/// mismatch and HermiticityError / TraceError / PositivityError on the
/// respective invariant violations.
BipartiteState make_state(std::size_t dim_a, std::size_t dim_b, ComplexMatrix matrix);

/// Transposition of the A indices only: block (i,j) of the dim_a x dim_a
/// block structure of the result is block (j,i) of rho. Hermitian and
/// unit-trace; applying it twice returns rho exactly.
ComplexMatrix partial_transpose_a(const BipartiteState& s);

/// Same matrix, new factorization tag (entries bit-identical). Throws
/// DimensionError unless new_dim_a * new_dim_b matches the total dimension.
BipartiteState reinterpret(const BipartiteState& s, std::size_t new_dim_a, std::size_t new_dim_b);

/// Rank-1 projector onto a normalized complex Gaussian vector (Haar-random
/// pure state). Same seed gives the identical state.
BipartiteState random_pure_state(std::size_t dim_a, std::size_t dim_b, std::uint64_t seed);

} // namespace discordlab
