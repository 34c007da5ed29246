#pragma once

#include <cstddef>
#include <cstdint>

#include "discordlab/bipartite_state.hpp"

namespace discordlab {

/// Configuration of the Ginibre-induced random state ensemble.
///
/// ginibre_k is the column count of the Gaussian factor; 0 selects the
/// default k = dim_a*dim_b, which induces the Hilbert-Schmidt measure.
/// Smaller k biases toward lower-rank (more entangled) states, k = 1 gives
/// Haar-random pure states.
struct SamplerConfig {
    std::size_t dim_a = 2;
    std::size_t dim_b = 2;
    std::size_t ginibre_k = 0;
    std::uint64_t seed = 1;

    std::size_t effective_k() const { return ginibre_k == 0 ? dim_a * dim_b : ginibre_k; }
};

/// Draw sample `index` of the ensemble: rho = G G† / Tr(G G†) with G an
/// (dim_a*dim_b) x k matrix of independent standard complex Gaussians from
/// the substream keyed by (seed, index). Exactly PSD and unit trace by
/// construction; bit-identical for identical (cfg, index).
BipartiteState sample_state(const SamplerConfig& cfg, std::uint64_t index);

} // namespace discordlab
