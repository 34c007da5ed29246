#include "discordlab/sampling.hpp"

#include <vector>

#include "discordlab/rng.hpp"

namespace discordlab {

BipartiteState sample_state(const SamplerConfig& cfg, std::uint64_t index) {
    const std::size_t d = cfg.dim_a * cfg.dim_b;
    const std::size_t k = cfg.effective_k();
    RandomStream stream(substream_seed(cfg.seed, index));

    std::vector<cdouble> g(d * k);
    for (cdouble& z : g) z = stream.complex_gaussian();

    // rho = G G† / Tr(G G†); the diagonal of G G† is real, so the trace is
    // accumulated as a plain double.
    ComplexMatrix rho(d, d);
    double tr = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i; j < d; ++j) {
            cdouble s = 0.0;
            for (std::size_t c = 0; c < k; ++c) s += g[i * k + c] * std::conj(g[j * k + c]);
            rho(i, j) = s;
            rho(j, i) = std::conj(s);
        }
        tr += rho(i, i).real();
    }
    rho *= 1.0 / tr;
    // Pin the diagonal real and the triangles conjugate so validation sees an
    // exactly Hermitian matrix.
    for (std::size_t i = 0; i < d; ++i) rho(i, i) = rho(i, i).real();

    return make_state(cfg.dim_a, cfg.dim_b, std::move(rho));
}

} // namespace discordlab
