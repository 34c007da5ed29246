#include "discordlab/generator_basis.hpp"

#include <cmath>

#include "discordlab/errors.hpp"

namespace discordlab {

GeneratorBasis generator_basis(std::size_t d) {
    if (d < 2) throw RangeError("generator_basis: local dimension must be at least 2");

    GeneratorBasis basis;
    basis.dim = d;
    basis.matrices.reserve(d * d - 1);

    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            ComplexMatrix g(d, d);
            g(i, j) = 1.0;
            g(j, i) = 1.0;
            basis.matrices.push_back(std::move(g));
        }
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            ComplexMatrix g(d, d);
            g(i, j) = cdouble(0.0, -1.0);
            g(j, i) = cdouble(0.0, 1.0);
            basis.matrices.push_back(std::move(g));
        }
    for (std::size_t l = 1; l < d; ++l) {
        ComplexMatrix g(d, d);
        const double w = std::sqrt(2.0 / (static_cast<double>(l) * (l + 1)));
        for (std::size_t k = 0; k < l; ++k) g(k, k) = w;
        g(l, l) = -w * static_cast<double>(l);
        basis.matrices.push_back(std::move(g));
    }
    return basis;
}

} // namespace discordlab
