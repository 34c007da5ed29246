#pragma once

#include <cstddef>
#include <vector>

#include "discordlab/bipartite_state.hpp"

namespace discordlab {

/// Bloch data of a bipartite state over the su(m) x su(n) generator basis:
/// local vectors x (length m^2-1), y (length n^2-1) and the correlation
/// matrix T ((m^2-1) x (n^2-1), row-major), with
///   x_i = (m/2)  Tr[rho (g_i  ⊗ I_n)]
///   y_j = (n/2)  Tr[rho (I_m  ⊗ g_j)]
///   T_ij = (mn/4) Tr[rho (g_i ⊗ g_j)]
struct BlochForm {
    std::vector<double> x;
    std::vector<double> y;
    std::vector<double> t;

    std::size_t t_rows() const { return x.size(); }
    std::size_t t_cols() const { return y.size(); }
    double t_at(std::size_t i, std::size_t j) const { return t[i * y.size() + j]; }

    double x_norm_sq() const;
    double y_norm_sq() const;
    double t_norm_sq() const;
};

/// Extract the Bloch data of a valid state. Every coefficient is real for a
/// Hermitian input; the imaginary residue is checked against 1e-10 and then
/// discarded.
BlochForm bloch_decompose(const BipartiteState& s);

/// Assemble the state (1/mn)[I + sum x_i g_i⊗I + sum y_j I⊗g_j + sum T_ij g_i⊗g_j]
/// and run it through state validation, so inconsistent Bloch data surfaces
/// as a validation error. Inverse of bloch_decompose.
BipartiteState bloch_reconstruct(const BlochForm& b, std::size_t m, std::size_t n);

} // namespace discordlab
