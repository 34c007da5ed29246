#include "discordlab/hermitian_eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "discordlab/errors.hpp"

namespace discordlab {

namespace {

// Frobenius norm of the strict off-diagonal part (counting both triangles).
double off_diagonal_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

constexpr int kMaxSweeps = 100;
constexpr double kOffDiagFactor = 1e-13;

} // namespace

ComplexMatrix HermitianSpectrum::reconstruct() const {
    const std::size_t n = eigenvectors.rows();
    ComplexMatrix r(n, n);
    for (std::size_t k = 0; k < eigenvalues.size(); ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                r(i, j) += eigenvalues[k] * eigenvectors(i, k) * std::conj(eigenvectors(j, k));
    return r;
}

HermitianSpectrum hermitian_eig(const ComplexMatrix& input) {
    if (!input.is_square()) throw DimensionError("hermitian_eig: non-square input");
    const std::size_t n = input.rows();

    const double scale = frobenius_norm(input);
    if (hermiticity_defect(input) > 1e-10 * std::max(1.0, scale))
        throw HermiticityError("hermitian_eig: input is not Hermitian within tolerance");

    // Symmetrized working copy.
    ComplexMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a(i, j) = 0.5 * (input(i, j) + std::conj(input(j, i)));

    ComplexMatrix v = ComplexMatrix::identity(n);
    const double threshold = kOffDiagFactor * scale;

    double off = off_diagonal_norm(a);
    int sweep = 0;
    while (off > threshold) {
        if (sweep++ >= kMaxSweeps)
            throw ConvergenceError("hermitian_eig: no convergence after sweep cap", off);

        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cdouble beta = a(p, q);
                const double absb = std::abs(beta);
                if (absb < 1e-300) continue;

                // Unitary plane rotation zeroing a(p,q):
                //   R = [[c, s*phase], [-s*conj(phase), c]] on the (p,q) plane
                // with phase = beta/|beta| and tan(theta) from the smaller
                // root of t^2 + 2*tau*t - 1 = 0.
                const cdouble phase = beta / absb;
                const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * absb);
                const double root = std::sqrt(tau * tau + 1.0);
                const double t = (tau >= 0.0) ? 1.0 / (tau + root) : 1.0 / (tau - root);
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                // Columns: B = A R touches columns p and q only.
                for (std::size_t i = 0; i < n; ++i) {
                    const cdouble aip = a(i, p);
                    const cdouble aiq = a(i, q);
                    a(i, p) = c * aip - s * std::conj(phase) * aiq;
                    a(i, q) = s * phase * aip + c * aiq;
                }
                // Rows: A' = R† B touches rows p and q only.
                for (std::size_t j = 0; j < n; ++j) {
                    const cdouble apj = a(p, j);
                    const cdouble aqj = a(q, j);
                    a(p, j) = c * apj - s * phase * aqj;
                    a(q, j) = s * std::conj(phase) * apj + c * aqj;
                }
                // Keep the pair exactly Hermitian against round-off drift.
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
                a(p, q) = 0.0;
                a(q, p) = 0.0;

                for (std::size_t i = 0; i < n; ++i) {
                    const cdouble vip = v(i, p);
                    const cdouble viq = v(i, q);
                    v(i, p) = c * vip - s * std::conj(phase) * viq;
                    v(i, q) = s * phase * vip + c * viq;
                }
            }
        }
        off = off_diagonal_norm(a);
    }

    // Sort non-increasing; stable so that degenerate clusters keep the
    // deterministic order the iteration produced.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&a](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });

    HermitianSpectrum spec;
    spec.eigenvalues.resize(n);
    spec.eigenvectors = ComplexMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        spec.eigenvalues[k] = a(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i) spec.eigenvectors(i, k) = v(i, order[k]);
    }
    return spec;
}

double trace_norm_hermitian(const ComplexMatrix& a) {
    const HermitianSpectrum spec = hermitian_eig(a);
    double s = 0.0;
    for (double lambda : spec.eigenvalues) s += std::abs(lambda);
    return s;
}

double negative_eig_threshold(const ComplexMatrix& a) {
    return 1e-12 * std::max(1.0, frobenius_norm(a));
}

} // namespace discordlab
