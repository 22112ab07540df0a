#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace qframe {

using cdouble = std::complex<double>;

/// Dense complex matrix, row-major. Used as the target of the complex-adjoint
/// embedding and by the Jacobi kernels.
class CMatrix
{
  public:
    CMatrix() = default;
    CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static CMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    cdouble &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const cdouble &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    CMatrix adjoint() const;
    double max_abs() const;

    friend CMatrix operator*(const CMatrix &a, const CMatrix &b);
    friend CMatrix operator+(const CMatrix &a, const CMatrix &b);
    friend CMatrix operator-(const CMatrix &a, const CMatrix &b);

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cdouble> data_;
};

struct CEig
{
    std::vector<double> values; // descending
    CMatrix vectors;            // column k belongs to values[k]
};

/// Cyclic Jacobi eigensolver for a complex Hermitian matrix. Only the upper
/// triangle is trusted; the lower one is taken as its conjugate.
CEig jacobi_hermitian_eig(const CMatrix &a);

struct CSvdRight
{
    std::vector<double> values; // descending, one per column of the input
    CMatrix v;                  // cols x cols unitary, column k belongs to values[k]
};

/// One-sided (Hestenes) Jacobi SVD. Returns the singular values together
/// with the right singular vectors; left vectors are left to the caller.
CSvdRight jacobi_svd_right(const CMatrix &a);

} // namespace qframe
