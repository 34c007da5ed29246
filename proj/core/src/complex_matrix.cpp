#include "discordlab/complex_matrix.hpp"

#include <cmath>
#include <utility>

#include "discordlab/errors.hpp"

namespace discordlab {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cdouble> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_)
        throw DimensionError("entry count does not match rows*cols");
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            r(j, i) = std::conj((*this)(i, j));
    return r;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            r(j, i) = (*this)(i, j);
    return r;
}

cdouble ComplexMatrix::trace() const {
    if (!is_square()) throw DimensionError("trace of non-square matrix");
    cdouble t = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

bool ComplexMatrix::all_finite() const {
    for (const cdouble& z : data_)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw DimensionError("matrix addition size mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw DimensionError("matrix subtraction size mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cdouble scale) {
    for (cdouble& z : data_) z *= scale;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionError("matrix product size mismatch");
    ComplexMatrix r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const cdouble aik = a(i, k);
            if (aik == cdouble{}) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                r(i, j) += aik * b(k, j);
        }
    }
    return r;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const cdouble aij = a(i, j);
            if (aij == cdouble{}) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    r(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return r;
}

double frobenius_sq(const ComplexMatrix& a) {
    double s = 0.0;
    for (const cdouble& z : a.entries()) s += std::norm(z);
    return s;
}

double frobenius_norm(const ComplexMatrix& a) { return std::sqrt(frobenius_sq(a)); }

double hermiticity_defect(const ComplexMatrix& a) {
    if (!a.is_square()) throw DimensionError("hermiticity defect of non-square matrix");
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            s += std::norm(0.5 * (a(i, j) - std::conj(a(j, i))));
    return std::sqrt(s);
}

} // namespace discordlab
