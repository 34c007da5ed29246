#include "discordlab/bloch.hpp"

#include <cmath>

#include "discordlab/errors.hpp"
#include "discordlab/generator_basis.hpp"

namespace discordlab {

namespace {

// Tr[rho (A ⊗ B)] without forming the tensor product; skips the zero
// entries, which for generator matrices leaves only a handful of terms.
cdouble trace_rho_kron(const ComplexMatrix& rho, const ComplexMatrix& a, const ComplexMatrix& b,
                       std::size_t m, std::size_t n) {
    cdouble s = 0.0;
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = 0; q < m; ++q) {
            const cdouble apq = a(q, p);
            if (apq == cdouble{}) continue;
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t w = 0; w < n; ++w) {
                    const cdouble brw = b(w, r);
                    if (brw == cdouble{}) continue;
                    s += rho(p * n + r, q * n + w) * apq * brw;
                }
        }
    return s;
}

// Tr[rho (A ⊗ I_n)].
cdouble trace_rho_a(const ComplexMatrix& rho, const ComplexMatrix& a, std::size_t m, std::size_t n) {
    cdouble s = 0.0;
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = 0; q < m; ++q) {
            const cdouble apq = a(q, p);
            if (apq == cdouble{}) continue;
            for (std::size_t r = 0; r < n; ++r) s += rho(p * n + r, q * n + r) * apq;
        }
    return s;
}

// Tr[rho (I_m ⊗ B)].
cdouble trace_rho_b(const ComplexMatrix& rho, const ComplexMatrix& b, std::size_t m, std::size_t n) {
    cdouble s = 0.0;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t w = 0; w < n; ++w) {
            const cdouble brw = b(w, r);
            if (brw == cdouble{}) continue;
            for (std::size_t p = 0; p < m; ++p) s += rho(p * n + r, p * n + w) * brw;
        }
    return s;
}

double realize(cdouble z, const char* what) {
    if (std::abs(z.imag()) > 1e-10)
        throw ValidationError(std::string("bloch_decompose: non-real coefficient in ") + what);
    return z.real();
}

double norm_sq(const std::vector<double>& v) {
    double s = 0.0;
    for (double e : v) s += e * e;
    return s;
}

} // namespace

double BlochForm::x_norm_sq() const { return norm_sq(x); }
double BlochForm::y_norm_sq() const { return norm_sq(y); }
double BlochForm::t_norm_sq() const { return norm_sq(t); }

BlochForm bloch_decompose(const BipartiteState& s) {
    const std::size_t m = s.dim_a();
    const std::size_t n = s.dim_b();
    const GeneratorBasis ga = generator_basis(m);
    const GeneratorBasis gb = generator_basis(n);
    const ComplexMatrix& rho = s.rho();

    BlochForm form;
    form.x.resize(ga.matrices.size());
    form.y.resize(gb.matrices.size());
    form.t.resize(ga.matrices.size() * gb.matrices.size());

    const double md = static_cast<double>(m);
    const double nd = static_cast<double>(n);
    for (std::size_t i = 0; i < ga.matrices.size(); ++i)
        form.x[i] = 0.5 * md * realize(trace_rho_a(rho, ga.matrices[i], m, n), "x");
    for (std::size_t j = 0; j < gb.matrices.size(); ++j)
        form.y[j] = 0.5 * nd * realize(trace_rho_b(rho, gb.matrices[j], m, n), "y");
    for (std::size_t i = 0; i < ga.matrices.size(); ++i)
        for (std::size_t j = 0; j < gb.matrices.size(); ++j)
            form.t[i * gb.matrices.size() + j] =
                0.25 * md * nd * realize(trace_rho_kron(rho, ga.matrices[i], gb.matrices[j], m, n), "T");
    return form;
}

BipartiteState bloch_reconstruct(const BlochForm& b, std::size_t m, std::size_t n) {
    if (m < 2 || n < 2) throw DimensionError("bloch_reconstruct: dimensions must be at least 2");
    const GeneratorBasis ga = generator_basis(m);
    const GeneratorBasis gb = generator_basis(n);
    if (b.x.size() != ga.matrices.size() || b.y.size() != gb.matrices.size() ||
        b.t.size() != b.x.size() * b.y.size())
        throw DimensionError("bloch_reconstruct: Bloch data sizes inconsistent with (m, n)");

    const std::size_t d = m * n;
    ComplexMatrix rho(d, d);
    for (std::size_t k = 0; k < d; ++k) rho(k, k) = 1.0;

    for (std::size_t i = 0; i < ga.matrices.size(); ++i) {
        if (b.x[i] == 0.0) continue;
        const ComplexMatrix& g = ga.matrices[i];
        for (std::size_t p = 0; p < m; ++p)
            for (std::size_t q = 0; q < m; ++q) {
                const cdouble gpq = g(p, q);
                if (gpq == cdouble{}) continue;
                for (std::size_t r = 0; r < n; ++r) rho(p * n + r, q * n + r) += b.x[i] * gpq;
            }
    }
    for (std::size_t j = 0; j < gb.matrices.size(); ++j) {
        if (b.y[j] == 0.0) continue;
        const ComplexMatrix& g = gb.matrices[j];
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t w = 0; w < n; ++w) {
                const cdouble grw = g(r, w);
                if (grw == cdouble{}) continue;
                for (std::size_t p = 0; p < m; ++p) rho(p * n + r, p * n + w) += b.y[j] * grw;
            }
    }
    for (std::size_t i = 0; i < ga.matrices.size(); ++i)
        for (std::size_t j = 0; j < gb.matrices.size(); ++j) {
            const double tij = b.t_at(i, j);
            if (tij == 0.0) continue;
            const ComplexMatrix& gi = ga.matrices[i];
            const ComplexMatrix& gj = gb.matrices[j];
            for (std::size_t p = 0; p < m; ++p)
                for (std::size_t q = 0; q < m; ++q) {
                    const cdouble gpq = gi(p, q);
                    if (gpq == cdouble{}) continue;
                    for (std::size_t r = 0; r < n; ++r)
                        for (std::size_t w = 0; w < n; ++w) {
                            const cdouble grw = gj(r, w);
                            if (grw == cdouble{}) continue;
                            rho(p * n + r, q * n + w) += tij * gpq * grw;
                        }
                }
        }

    rho *= 1.0 / static_cast<double>(d);
    return make_state(m, n, std::move(rho));
}

} // namespace discordlab
