#include "discordlab/bipartite_state.hpp"

#include <cmath>
#include <utility>

#include "discordlab/errors.hpp"
#include "discordlab/hermitian_eig.hpp"
#include "discordlab/rng.hpp"

namespace discordlab {

BipartiteState make_state(std::size_t dim_a, std::size_t dim_b, ComplexMatrix matrix) {
    if (dim_a == 0 || dim_b == 0)
        throw DimensionError("make_state: subsystem dimensions must be positive");
    const std::size_t d = dim_a * dim_b;
    if (matrix.rows() != d || matrix.cols() != d)
        throw DimensionError("make_state: matrix size does not match dim_a*dim_b");
    if (!matrix.all_finite())
        throw ValidationError("make_state: matrix has non-finite entries");
    if (hermiticity_defect(matrix) > 1e-10)
        throw HermiticityError("make_state: matrix is not Hermitian within 1e-10");
    if (std::abs(matrix.trace() - cdouble(1.0)) > 1e-10)
        throw TraceError("make_state: trace differs from 1 beyond 1e-10");
    const HermitianSpectrum spec = hermitian_eig(matrix);
    if (!spec.eigenvalues.empty() && spec.eigenvalues.back() < -1e-10)
        throw PositivityError("make_state: minimum eigenvalue below -1e-10");
    return BipartiteState(dim_a, dim_b, std::move(matrix));
}

ComplexMatrix partial_transpose_a(const BipartiteState& s) {
    const std::size_t m = s.dim_a();
    const std::size_t n = s.dim_b();
    const ComplexMatrix& rho = s.rho();
    ComplexMatrix pt(m * n, m * n);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t a2 = 0; a2 < m; ++a2)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t b2 = 0; b2 < n; ++b2)
                    pt(a * n + b, a2 * n + b2) = rho(a2 * n + b, a * n + b2);
    return pt;
}

BipartiteState reinterpret(const BipartiteState& s, std::size_t new_dim_a, std::size_t new_dim_b) {
    if (new_dim_a * new_dim_b != s.dim())
        throw DimensionError("reinterpret: new factorization does not match total dimension");
    return BipartiteState(new_dim_a, new_dim_b, s.rho());
}

BipartiteState random_pure_state(std::size_t dim_a, std::size_t dim_b, std::uint64_t seed) {
    const std::size_t d = dim_a * dim_b;
    RandomStream stream(seed);
    std::vector<cdouble> psi(d);
    double norm_sq = 0.0;
    for (cdouble& z : psi) {
        z = stream.complex_gaussian();
        norm_sq += std::norm(z);
    }
    const double inv = 1.0 / std::sqrt(norm_sq);
    ComplexMatrix rho(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            rho(i, j) = psi[i] * std::conj(psi[j]) * (inv * inv);
    return make_state(dim_a, dim_b, std::move(rho));
}

} // namespace discordlab
