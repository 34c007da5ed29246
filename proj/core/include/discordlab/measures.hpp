#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "discordlab/bipartite_state.hpp"

namespace discordlab {

/// Negativity together with the partial-transpose spectrum that produced it.
///
/// value = (2/(m-1)) * sum of |lambda| over eigenvalues of rho^{T_A} below
/// the negative-eigenvalue threshold tau, with m = dim_a. The normalization
/// always uses dim_a, also when dim_a > dim_b; callers wanting the paper
/// convention m <= n should reinterpret or order the factors themselves.
struct NegativityResult {
    double value;
    std::size_t negative_count;
    std::vector<double> spectrum; // eigenvalues of rho^{T_A}, non-increasing
};

NegativityResult negativity(const BipartiteState& s);

/// Number of partial-transpose eigenvalues below -tau. For dim_a = 2 the
/// count can never exceed dim_b - 1; an excess is a numerical bug, which the
/// test suite and the ppt-count command treat as a hard failure.
std::size_t negative_count(const BipartiteState& s);

/// Geometric discord value plus the optimizer data behind it.
struct DiscordResult {
    double value;
    std::vector<double> g_eigenvalues;     // spectrum of G, non-increasing
    std::vector<double> optimal_direction; // unit vector, length 3 for dim_a = 2
    BipartiteState classical_state;        // Pi^A(rho) at the optimizer
};

/// Exact geometric discord of a 2⊗n state:
///   D = (1/n) [ ||x||^2 + (2/n) ||T||^2 - lambda_max(G) ],
/// G = x x^t + (2/n) T T^t. The optimal measurement direction is the top
/// eigenvector of G, and classical_state is the projection of rho onto the
/// corresponding measurement basis. Throws DimensionError unless dim_a = 2.
DiscordResult discord_2n(const BipartiteState& s);

/// General m⊗n lower bound (m <= n):
///   (2/(m(m-1)n)) [ ||x||^2 + (2/n) ||T||^2 - sum_{k<m} lambda_k(G) ].
/// Coincides with discord_2n for m = 2.
double discord_lower_bound(const BipartiteState& s);

/// Squared distance 2 ||rho - Pi^A(rho)||^2 for the von Neumann measurement
/// along `direction` (unit 3-vector; projectors (I ± e·sigma)/2 on A).
/// Never smaller than discord_2n(s).value up to round-off.
double discord_via_measurement(const BipartiteState& s, const std::vector<double>& direction);

/// Independent minimization of discord_via_measurement over measurement
/// directions: Fibonacci-sphere grid of `resolution` points followed by
/// golden-section refinement on shrinking spherical caps down to 1e-10
/// direction tolerance. Serves as the oracle for discord_2n.
double discord_bruteforce(const BipartiteState& s, std::size_t resolution = 2000);

/// Violation report for the bound D >= N^2.
struct GapReport {
    double discord;
    double negativity;
    double gap; // discord - negativity^2
    bool violates; // gap < -1e-10, so round-off cannot manufacture counterexamples
};

GapReport gap(const BipartiteState& s);

/// Closed-form m⊗m Werner discord ((mz-1)/(m^2-1))^2.
double werner_discord_closed(std::size_t m, double z);

/// Closed-form negativity of the m=4 Werner state viewed as 2⊗8:
/// (-2-7z)/10 on [-1,-2/7), 0 on [-2/7,2/3], (-2+3z)/10 on (2/3,1].
double werner_negativity_2x8_closed(double z);

/// True iff the negativity is small enough (N <= 2/5) that no 2⊗3 state can
/// violate D >= N^2.
bool safe_region_predicate(double n_value);

/// Residuals of the optimality conditions at the closed-form optimizer
/// chi = classical_state of discord_2n:
///   first  = |Tr chi^2 - Tr(rho chi)|
///   second = |D - 2 Tr(rho^2 - chi^2)|
/// Both vanish (within round-off) when the optimizer is exact.
std::pair<double, double> optimality_residuals(const BipartiteState& s);

} // namespace discordlab
