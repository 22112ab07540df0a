#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <vector>

#include "qframe/complex_kernel.hpp"
#include "qframe/quaternion.hpp"

namespace qframe {

/// Column vector in the right H-module H^n. Scalars act from the right.
class QVector
{
  public:
    QVector() = default;
    explicit QVector(std::size_t n) : entries_(n) {}
    QVector(std::initializer_list<Quaternion> init) : entries_(init) {}
    explicit QVector(std::vector<Quaternion> entries) : entries_(std::move(entries)) {}

    /// i-th standard basis vector of H^n.
    static QVector basis(std::size_t n, std::size_t i);

    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    Quaternion &operator[](std::size_t i) { return entries_[i]; }
    const Quaternion &operator[](std::size_t i) const { return entries_[i]; }

    const std::vector<Quaternion> &entries() const { return entries_; }

    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    QVector &operator+=(const QVector &v);
    QVector &operator-=(const QVector &v);

    friend bool operator==(const QVector &, const QVector &) = default;

  private:
    std::vector<Quaternion> entries_;
};

QVector operator+(QVector u, const QVector &v);
QVector operator-(QVector u, const QVector &v);
/// Right scalar multiplication u q.
QVector operator*(const QVector &u, const Quaternion &q);

/// Hermitian product <u|v> = sum conj(u_i) v_i; conjugate-linear in u.
Quaternion inner(const QVector &u, const QVector &v);
double norm(const QVector &u);
double max_abs(const QVector &u);

/// Dense quaternionic matrix, row-major. Acts on column vectors by left
/// multiplication, which commutes with right scalar multiplication.
class QMatrix
{
  public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    QMatrix(std::initializer_list<std::initializer_list<Quaternion>> rows);

    static QMatrix identity(std::size_t n);
    static QMatrix diagonal(const std::vector<Quaternion> &diag);
    static QMatrix from_columns(std::size_t rows, const std::vector<QVector> &columns);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Quaternion &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Quaternion &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    QVector column(std::size_t c) const;
    QVector row(std::size_t r) const;
    void set_column(std::size_t c, const QVector &v);

    double max_abs() const;
    double frobenius() const;

    QMatrix &operator+=(const QMatrix &m);
    QMatrix &operator-=(const QMatrix &m);

    friend bool operator==(const QMatrix &, const QMatrix &) = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Quaternion> data_;
};

QMatrix operator+(QMatrix a, const QMatrix &b);
QMatrix operator-(QMatrix a, const QMatrix &b);
QMatrix operator*(const QMatrix &a, const QMatrix &b);
QMatrix operator*(QMatrix a, double s);
QVector operator*(const QMatrix &m, const QVector &u);

QVector matvec(const QMatrix &m, const QVector &u);
QMatrix adjoint(const QMatrix &m);

/// Complex-adjoint representation: with M = A + B j entrywise, returns
/// [[A, B], [-conj(B), conj(A)]]. A star-homomorphism.
CMatrix complex_adjoint(const QMatrix &m);

/// Vector embedding paired with complex_adjoint: a + b j -> (a, -conj(b)),
/// so that complex_adjoint(M) * embed(u) == embed(M u).
std::vector<cdouble> embed(const QVector &u);
QVector unembed(const std::vector<cdouble> &x);

/// Maximum entrywise modulus of a - b.
double max_abs_diff(const QMatrix &a, const QMatrix &b);

inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kDefaultRankTol = 1e-12;
/// Relative tolerance used to pair the doubled spectrum of the complex adjoint.
inline constexpr double kPairingTol = 1e-8;

bool is_hermitian(const QMatrix &m, double tol = kHermitianTol);

struct HermEig
{
    std::vector<double> eigenvalues; // descending
    QMatrix eigenvectors;            // unitary, column k belongs to eigenvalues[k]
};

/// Eigendecomposition of a Hermitian quaternionic matrix through the complex
/// adjoint. Throws NotHermitian when |M - M*| exceeds kHermitianTol * max|M|.
HermEig herm_eig(const QMatrix &m);

/// U diag(f(lambda)) U*.
QMatrix spectral_apply(const HermEig &eig, const std::function<double(double)> &f);

/// Principal square root of a positive semidefinite Hermitian matrix.
/// Eigenvalues in [-1e-10 lambda_max, 0) are clamped to zero.
QMatrix sqrt_psd(const QMatrix &m);

struct QSvd
{
    QMatrix u;                           // m x m unitary
    std::vector<double> singular_values; // min(m, n), descending
    QMatrix v;                           // n x n unitary
    /// All n right-side values (trailing ones are zero when n > m).
    std::vector<double> all_values;
};

QSvd svd(const QMatrix &m);

/// Number of singular values above max(m, n) * rel_tol * sigma_max.
std::size_t rank(const QSvd &s, std::size_t rows, std::size_t cols, double rel_tol = kDefaultRankTol);
std::size_t rank(const QMatrix &m, double rel_tol = kDefaultRankTol);

double operator_norm(const QMatrix &m);

QMatrix pinv(const QMatrix &m, double rel_tol = kDefaultRankTol);

/// Minimal-norm solution of M x = v. Throws InconsistentSystem when v is
/// farther than 1e-8 ||v|| from the range of M.
QVector solve_min_norm(const QMatrix &m, const QVector &v, double rel_tol = kDefaultRankTol);

/// Orthonormal basis of ker(M), one column per kernel dimension.
QMatrix kernel_basis(const QMatrix &m, double rel_tol = kDefaultRankTol);

bool is_surjective(const QMatrix &m, double rel_tol = kDefaultRankTol);
bool is_bounded_below(const QMatrix &m, double rel_tol = kDefaultRankTol);

/// Entrywise check of B* B = I.
bool has_orthonormal_columns(const QMatrix &b, double tol = 1e-10);
bool is_unitary(const QMatrix &u, double tol = 1e-10);

/// P = B B* for B with orthonormal columns.
QMatrix orthogonal_projector(const QMatrix &b);

} // namespace qframe
