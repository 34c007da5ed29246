#pragma once

#include <cstddef>

#include "discordlab/bipartite_state.hpp"

namespace discordlab {

/// Parameters of the m⊗m Werner family
///   rho_w = (m-z)/(m^3-m) I + (mz-1)/(m^3-m) F,    z in [-1, 1],
/// with F the swap operator sum_{kl} |k><l| ⊗ |l><k|.
struct WernerSpec {
    std::size_t m;
    double z;
};

BipartiteState werner_state(const WernerSpec& w);

/// m⊗m isotropic family parameterized by singlet fraction f in [0, 1]:
///   f |Phi+><Phi+| + (1-f) (I - |Phi+><Phi+|) / (m^2-1),
/// with |Phi+> = sum_k |kk> / sqrt(m).
BipartiteState isotropic_state(std::size_t m, double f);

} // namespace discordlab
