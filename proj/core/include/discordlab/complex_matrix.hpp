#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace discordlab {

using cdouble = std::complex<double>;

/// Dense complex matrix in row-major order. This is the carrier for density
/// operators, partial transposes and every operator derived from them; sizes
/// stay small (at most a few hundred on a side) so storage is a flat vector
/// and products are plain triple loops.
class ComplexMatrix {
public:
    ComplexMatrix() = default;

    /// Zero-filled rows x cols matrix.
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    /// Adopt row-major entries; throws DimensionError if the count is off.
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cdouble> entries);

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    cdouble& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const cdouble& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<cdouble>& entries() const { return data_; }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    cdouble trace() const;

    /// True when no entry is NaN or infinite.
    bool all_finite() const;

    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator-=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(cdouble scale);

    friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
    friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
    friend ComplexMatrix operator*(ComplexMatrix lhs, cdouble scale) { return lhs *= scale; }
    friend ComplexMatrix operator*(cdouble scale, ComplexMatrix rhs) { return rhs *= scale; }

    bool operator==(const ComplexMatrix& rhs) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cdouble> data_;
};

/// Matrix product; throws DimensionError on inner-size mismatch.
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

/// Tensor (Kronecker) product in the row-major convention: block (i,j) of the
/// result equals a(i,j) * b.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Tr(a† a) = sum of squared entry moduli.
double frobenius_sq(const ComplexMatrix& a);

double frobenius_norm(const ComplexMatrix& a);

/// Frobenius norm of the anti-Hermitian part (a - a†)/2; zero iff Hermitian.
double hermiticity_defect(const ComplexMatrix& a);

} // namespace discordlab
