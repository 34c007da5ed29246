#include "discordlab/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "discordlab/bloch.hpp"
#include "discordlab/errors.hpp"
#include "discordlab/generator_basis.hpp"
#include "discordlab/hermitian_eig.hpp"

namespace discordlab {

namespace {

// Pi^A(rho) for the qubit measurement along e: chi = sum_k (P_k ⊗ I) rho (P_k ⊗ I)
// with P_± = (I ± e·sigma)/2. Works directly on the n x n blocks of rho.
ComplexMatrix project_measurement(const BipartiteState& s, const std::vector<double>& e) {
    const std::size_t n = s.dim_b();
    const ComplexMatrix& rho = s.rho();

    // P_+ = (I + e·sigma)/2 as a 2x2; P_- = I - P_+.
    ComplexMatrix p(2, 2);
    p(0, 0) = 0.5 * (1.0 + e[2]);
    p(1, 1) = 0.5 * (1.0 - e[2]);
    p(0, 1) = 0.5 * cdouble(e[0], -e[1]);
    p(1, 0) = 0.5 * cdouble(e[0], e[1]);
    ComplexMatrix q = ComplexMatrix::identity(2);
    q -= p;

    // chi_{(a,b),(a',b')} = sum_k sum_{c,c'} P_k[a,c] rho[(c,b),(c',b')] P_k[c',a'].
    ComplexMatrix chi(2 * n, 2 * n);
    for (const ComplexMatrix& pk : {p, q}) {
        for (std::size_t a = 0; a < 2; ++a)
            for (std::size_t a2 = 0; a2 < 2; ++a2)
                for (std::size_t c = 0; c < 2; ++c)
                    for (std::size_t c2 = 0; c2 < 2; ++c2) {
                        const cdouble w = pk(a, c) * pk(c2, a2);
                        if (w == cdouble{}) continue;
                        for (std::size_t b = 0; b < n; ++b)
                            for (std::size_t b2 = 0; b2 < n; ++b2)
                                chi(a * n + b, a2 * n + b2) += w * rho(c * n + b, c2 * n + b2);
                    }
    }
    return chi;
}

void require_unit_direction(const std::vector<double>& e) {
    if (e.size() != 3) throw DimensionError("measurement direction must have length 3");
    const double norm = std::sqrt(e[0] * e[0] + e[1] * e[1] + e[2] * e[2]);
    if (std::abs(norm - 1.0) > 1e-10)
        throw RangeError("measurement direction must be a unit vector");
}

// G = x x^t + (2/n) T T^t from the Bloch form, embedded as a complex matrix
// for the shared eigensolver.
ComplexMatrix g_matrix(const BlochForm& b, std::size_t n) {
    const std::size_t r = b.t_rows();
    const std::size_t c = b.t_cols();
    ComplexMatrix g(r, r);
    const double two_over_n = 2.0 / static_cast<double>(n);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i; j < r; ++j) {
            double s = b.x[i] * b.x[j];
            double tt = 0.0;
            for (std::size_t k = 0; k < c; ++k) tt += b.t_at(i, k) * b.t_at(j, k);
            s += two_over_n * tt;
            g(i, j) = s;
            g(j, i) = s;
        }
    return g;
}

// Top eigenvector of G with a deterministic real gauge: the entry of largest
// modulus is rotated onto the positive real axis.
std::vector<double> top_direction(const HermitianSpectrum& spec) {
    const std::size_t r = spec.eigenvectors.rows();
    std::size_t imax = 0;
    double amax = 0.0;
    for (std::size_t i = 0; i < r; ++i) {
        const double a = std::abs(spec.eigenvectors(i, 0));
        if (a > amax) {
            amax = a;
            imax = i;
        }
    }
    const cdouble pivot = spec.eigenvectors(imax, 0);
    const cdouble gauge = std::conj(pivot) / std::abs(pivot);
    std::vector<double> e(r);
    double norm_sq = 0.0;
    for (std::size_t i = 0; i < r; ++i) {
        e[i] = (gauge * spec.eigenvectors(i, 0)).real();
        norm_sq += e[i] * e[i];
    }
    const double inv = 1.0 / std::sqrt(norm_sq);
    for (double& v : e) v *= inv;
    return e;
}

double real_trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    // Tr(a b) for Hermitian a, b; real up to round-off.
    cdouble s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, i);
    return s.real();
}

std::vector<double> fibonacci_sphere(std::size_t count) {
    std::vector<double> pts;
    pts.reserve(3 * count);
    const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (std::size_t i = 0; i < count; ++i) {
        const double z = 1.0 - (2.0 * i + 1.0) / static_cast<double>(count);
        const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        const double phi = golden_angle * static_cast<double>(i);
        pts.push_back(r * std::cos(phi));
        pts.push_back(r * std::sin(phi));
        pts.push_back(z);
    }
    return pts;
}

std::vector<double> rotate_towards(const std::vector<double>& e, const std::vector<double>& w,
                                   double t) {
    const double ct = std::cos(t);
    const double st = std::sin(t);
    std::vector<double> r{ct * e[0] + st * w[0], ct * e[1] + st * w[1], ct * e[2] + st * w[2]};
    const double inv = 1.0 / std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2]);
    for (double& v : r) v *= inv;
    return r;
}

template <typename F>
double golden_section_min(F&& f, double lo, double hi, double tol, double& best_t) {
    constexpr double inv_phi = 0.6180339887498949;
    double a = lo, b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    if (fc < fd) {
        best_t = c;
        return fc;
    }
    best_t = d;
    return fd;
}

} // namespace

NegativityResult negativity(const BipartiteState& s) {
    const ComplexMatrix pt = partial_transpose_a(s);
    const double tau = negative_eig_threshold(pt);
    const HermitianSpectrum spec = hermitian_eig(pt);

    NegativityResult r;
    r.spectrum = spec.eigenvalues;
    r.negative_count = 0;
    double neg_sum = 0.0;
    for (double lambda : spec.eigenvalues)
        if (lambda < -tau) {
            ++r.negative_count;
            neg_sum += -lambda;
        }
    r.value = 2.0 * neg_sum / (static_cast<double>(s.dim_a()) - 1.0);
    return r;
}

std::size_t negative_count(const BipartiteState& s) {
    const ComplexMatrix pt = partial_transpose_a(s);
    const double tau = negative_eig_threshold(pt);
    const HermitianSpectrum spec = hermitian_eig(pt);
    std::size_t count = 0;
    for (double lambda : spec.eigenvalues)
        if (lambda < -tau) ++count;
    return count;
}

DiscordResult discord_2n(const BipartiteState& s) {
    if (s.dim_a() != 2) throw DimensionError("discord_2n: requires dim_a = 2");
    const std::size_t n = s.dim_b();
    const BlochForm b = bloch_decompose(s);

    const ComplexMatrix g = g_matrix(b, n);
    const HermitianSpectrum spec = hermitian_eig(g);

    const double nd = static_cast<double>(n);
    const double value =
        (b.x_norm_sq() + (2.0 / nd) * b.t_norm_sq() - spec.eigenvalues.front()) / nd;

    std::vector<double> e = top_direction(spec);
    ComplexMatrix chi = project_measurement(s, e);

    return DiscordResult{value, spec.eigenvalues, std::move(e),
                         make_state(2, n, std::move(chi))};
}

double discord_lower_bound(const BipartiteState& s) {
    const std::size_t m = s.dim_a();
    const std::size_t n = s.dim_b();
    if (m > n) throw DimensionError("discord_lower_bound: requires dim_a <= dim_b");
    const BlochForm b = bloch_decompose(s);
    const ComplexMatrix g = g_matrix(b, n);
    const HermitianSpectrum spec = hermitian_eig(g);

    const double md = static_cast<double>(m);
    const double nd = static_cast<double>(n);
    double top = 0.0;
    for (std::size_t k = 0; k + 1 < m; ++k) top += spec.eigenvalues[k];
    return 2.0 / (md * (md - 1.0) * nd) *
           (b.x_norm_sq() + (2.0 / nd) * b.t_norm_sq() - top);
}

double discord_via_measurement(const BipartiteState& s, const std::vector<double>& direction) {
    if (s.dim_a() != 2) throw DimensionError("discord_via_measurement: requires dim_a = 2");
    require_unit_direction(direction);
    ComplexMatrix diff = s.rho();
    diff -= project_measurement(s, direction);
    return 2.0 * frobenius_sq(diff);
}

double discord_bruteforce(const BipartiteState& s, std::size_t resolution) {
    if (s.dim_a() != 2) throw DimensionError("discord_bruteforce: requires dim_a = 2");
    if (resolution < 2) resolution = 2;

    const auto objective = [&s](const std::vector<double>& e) {
        ComplexMatrix diff = s.rho();
        diff -= project_measurement(s, e);
        return 2.0 * frobenius_sq(diff);
    };

    // Coarse pass over a Fibonacci-sphere grid.
    const std::vector<double> grid = fibonacci_sphere(resolution);
    std::vector<double> best_e{0.0, 0.0, 1.0};
    double best = objective(best_e);
    for (std::size_t i = 0; i < resolution; ++i) {
        std::vector<double> e{grid[3 * i], grid[3 * i + 1], grid[3 * i + 2]};
        const double v = objective(e);
        if (v < best) {
            best = v;
            best_e = std::move(e);
        }
    }

    // Local polish: golden-section line searches along two orthogonal
    // geodesics through the incumbent. The cap only halves once the searches
    // stop moving the incumbent by a sizable fraction of it, so the shrink
    // schedule cannot outrun the coordinate descent.
    double cap = 4.0 / std::sqrt(static_cast<double>(resolution));
    for (int round = 0; cap > 1e-10 && round < 400; ++round) {
        // Tangent frame at best_e, seeded from the axis least aligned with it.
        const std::vector<double> e = best_e;
        std::size_t k = 0;
        for (std::size_t i = 1; i < 3; ++i)
            if (std::abs(e[i]) < std::abs(e[k])) k = i;
        std::vector<double> u(3, 0.0);
        u[k] = 1.0;
        const double du = u[0] * e[0] + u[1] * e[1] + u[2] * e[2];
        for (std::size_t i = 0; i < 3; ++i) u[i] -= du * e[i];
        double un = std::sqrt(u[0] * u[0] + u[1] * u[1] + u[2] * u[2]);
        for (double& v : u) v /= un;
        const std::vector<double> v{e[1] * u[2] - e[2] * u[1], e[2] * u[0] - e[0] * u[2],
                                    e[0] * u[1] - e[1] * u[0]};

        double moved = 0.0;
        for (const std::vector<double>& w : {u, v}) {
            double t_best = 0.0;
            const double f_best = golden_section_min(
                [&](double t) { return objective(rotate_towards(best_e, w, t)); }, -cap, cap,
                cap * 1e-3, t_best);
            if (f_best < best) {
                best = f_best;
                best_e = rotate_towards(best_e, w, t_best);
                moved = std::max(moved, std::abs(t_best));
            }
        }
        if (moved <= 0.35 * cap) cap *= 0.5;
    }
    return best;
}

GapReport gap(const BipartiteState& s) {
    const double d = discord_2n(s).value;
    const double n = negativity(s).value;
    const double g = d - n * n;
    return GapReport{d, n, g, g < -1e-10};
}

double werner_discord_closed(std::size_t m, double z) {
    if (m < 2) throw RangeError("werner_discord_closed: m must be at least 2");
    if (!(z >= -1.0 && z <= 1.0)) throw RangeError("werner_discord_closed: z must lie in [-1, 1]");
    const double md = static_cast<double>(m);
    const double r = (md * z - 1.0) / (md * md - 1.0);
    return r * r;
}

double werner_negativity_2x8_closed(double z) {
    if (!(z >= -1.0 && z <= 1.0))
        throw RangeError("werner_negativity_2x8_closed: z must lie in [-1, 1]");
    if (z < -2.0 / 7.0) return (-2.0 - 7.0 * z) / 10.0;
    if (z <= 2.0 / 3.0) return 0.0;
    return (-2.0 + 3.0 * z) / 10.0;
}

bool safe_region_predicate(double n_value) { return n_value <= 2.0 / 5.0; }

std::pair<double, double> optimality_residuals(const BipartiteState& s) {
    const DiscordResult d = discord_2n(s);
    const ComplexMatrix& rho = s.rho();
    const ComplexMatrix& chi = d.classical_state.rho();

    const double chi_sq = real_trace_product(chi, chi);
    const double rho_chi = real_trace_product(rho, chi);
    const double rho_sq = real_trace_product(rho, rho);

    const double first = std::abs(chi_sq - rho_chi);
    const double second = std::abs(d.value - 2.0 * (rho_sq - chi_sq));
    return {first, second};
}

} // namespace discordlab
