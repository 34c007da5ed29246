#include "discordlab/state_families.hpp"

#include <cmath>

#include "discordlab/errors.hpp"

namespace discordlab {

BipartiteState werner_state(const WernerSpec& w) {
    if (w.m < 2) throw RangeError("werner_state: m must be at least 2");
    if (!(w.z >= -1.0 && w.z <= 1.0)) throw RangeError("werner_state: z must lie in [-1, 1]");

    const std::size_t m = w.m;
    const std::size_t d = m * m;
    const double denom = static_cast<double>(m) * m * m - m;
    const double ci = (static_cast<double>(m) - w.z) / denom;
    const double cf = (static_cast<double>(m) * w.z - 1.0) / denom;

    ComplexMatrix rho(d, d);
    for (std::size_t i = 0; i < d; ++i) rho(i, i) = ci;
    // Swap operator: F[(a,b),(c,d)] = delta_ad delta_bc.
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            rho(a * m + b, b * m + a) += cf;

    return make_state(m, m, std::move(rho));
}

BipartiteState isotropic_state(std::size_t m, double f) {
    if (m < 2) throw RangeError("isotropic_state: m must be at least 2");
    if (!(f >= 0.0 && f <= 1.0)) throw RangeError("isotropic_state: f must lie in [0, 1]");

    const std::size_t d = m * m;
    const double md = static_cast<double>(m);
    const double noise = (1.0 - f) / (md * md - 1.0);

    // |Phi+><Phi+| has entries 1/m at ((a,a),(c,c)).
    ComplexMatrix rho(d, d);
    for (std::size_t i = 0; i < d; ++i) rho(i, i) = noise;
    const double w = (f - noise) / md;
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t c = 0; c < m; ++c)
            rho(a * m + a, c * m + c) += w;

    return make_state(m, m, std::move(rho));
}

} // namespace discordlab
