#include "qframe/qlinalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qframe {

// ---------------------------------------------------------------- QVector

QVector QVector::basis(std::size_t n, std::size_t i)
{
    QVector e(n);
    e[i] = 1.0;
    return e;
}

QVector &QVector::operator+=(const QVector &v)
{
    if (v.size() != size()) {
        throw DimensionMismatch("vector sum: lengths " + std::to_string(size()) + " and " +
                                std::to_string(v.size()));
    }
    for (std::size_t i = 0; i < size(); ++i) {
        entries_[i] += v[i];
    }
    return *this;
}

QVector &QVector::operator-=(const QVector &v)
{
    if (v.size() != size()) {
        throw DimensionMismatch("vector difference: lengths " + std::to_string(size()) + " and " +
                                std::to_string(v.size()));
    }
    for (std::size_t i = 0; i < size(); ++i) {
        entries_[i] -= v[i];
    }
    return *this;
}

QVector operator+(QVector u, const QVector &v) { return u += v; }
QVector operator-(QVector u, const QVector &v) { return u -= v; }

QVector operator*(const QVector &u, const Quaternion &q)
{
    QVector out(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        out[i] = u[i] * q;
    }
    return out;
}

Quaternion inner(const QVector &u, const QVector &v)
{
    if (u.size() != v.size()) {
        throw DimensionMismatch("inner product: lengths " + std::to_string(u.size()) + " and " +
                                std::to_string(v.size()));
    }
    Quaternion acc;
    for (std::size_t i = 0; i < u.size(); ++i) {
        acc += conj(u[i]) * v[i];
    }
    return acc;
}

double norm(const QVector &u)
{
    double scale = max_abs(u);
    if (scale == 0.0) {
        return 0.0;
    }
    double acc = 0.0;
    for (const auto &q : u) {
        acc += norm_sq(q * (1.0 / scale));
    }
    return scale * std::sqrt(acc);
}

double max_abs(const QVector &u)
{
    double m = 0.0;
    for (const auto &q : u) {
        m = std::max(m, modulus(q));
    }
    return m;
}

// ---------------------------------------------------------------- QMatrix

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Quaternion>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size())
{
    data_.reserve(rows_ * cols_);
    for (const auto &r : rows) {
        if (r.size() != cols_) {
            throw DimensionMismatch("ragged matrix literal");
        }
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

QMatrix QMatrix::identity(std::size_t n)
{
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

QMatrix QMatrix::diagonal(const std::vector<Quaternion> &diag)
{
    QMatrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) {
        m(i, i) = diag[i];
    }
    return m;
}

QMatrix QMatrix::from_columns(std::size_t rows, const std::vector<QVector> &columns)
{
    QMatrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        m.set_column(c, columns[c]);
    }
    return m;
}

QVector QMatrix::column(std::size_t c) const
{
    QVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        v[r] = (*this)(r, c);
    }
    return v;
}

QVector QMatrix::row(std::size_t r) const
{
    QVector v(cols_);
    for (std::size_t c = 0; c < cols_; ++c) {
        v[c] = (*this)(r, c);
    }
    return v;
}

void QMatrix::set_column(std::size_t c, const QVector &v)
{
    if (v.size() != rows_) {
        throw DimensionMismatch("column " + std::to_string(c) + " has length " +
                                std::to_string(v.size()) + ", expected " + std::to_string(rows_));
    }
    for (std::size_t r = 0; r < rows_; ++r) {
        (*this)(r, c) = v[r];
    }
}

double QMatrix::max_abs() const
{
    double m = 0.0;
    for (const auto &q : data_) {
        m = std::max(m, modulus(q));
    }
    return m;
}

double QMatrix::frobenius() const
{
    double acc = 0.0;
    for (const auto &q : data_) {
        acc += norm_sq(q);
    }
    return std::sqrt(acc);
}

QMatrix &QMatrix::operator+=(const QMatrix &m)
{
    if (m.rows_ != rows_ || m.cols_ != cols_) {
        throw DimensionMismatch("matrix sum: shape mismatch");
    }
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] += m.data_[i];
    }
    return *this;
}

QMatrix &QMatrix::operator-=(const QMatrix &m)
{
    if (m.rows_ != rows_ || m.cols_ != cols_) {
        throw DimensionMismatch("matrix difference: shape mismatch");
    }
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] -= m.data_[i];
    }
    return *this;
}

QMatrix operator+(QMatrix a, const QMatrix &b) { return a += b; }
QMatrix operator-(QMatrix a, const QMatrix &b) { return a -= b; }

QMatrix operator*(const QMatrix &a, const QMatrix &b)
{
    if (a.cols() != b.rows()) {
        throw DimensionMismatch("matrix product: " + std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + " times " + std::to_string(b.rows()) +
                                "x" + std::to_string(b.cols()));
    }
    QMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Quaternion x = a(r, k);
            for (std::size_t c = 0; c < b.cols(); ++c) {
                out(r, c) += x * b(k, c);
            }
        }
    }
    return out;
}

QMatrix operator*(QMatrix a, double s)
{
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            a(r, c) *= s;
        }
    }
    return a;
}

QVector matvec(const QMatrix &m, const QVector &u)
{
    if (m.cols() != u.size()) {
        throw DimensionMismatch("matvec: matrix has " + std::to_string(m.cols()) +
                                " columns, vector has length " + std::to_string(u.size()));
    }
    QVector out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Quaternion acc;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            acc += m(r, c) * u[c];
        }
        out[r] = acc;
    }
    return out;
}

QVector operator*(const QMatrix &m, const QVector &u) { return matvec(m, u); }

QMatrix adjoint(const QMatrix &m)
{
    QMatrix out(m.cols(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            out(c, r) = conj(m(r, c));
        }
    }
    return out;
}

double max_abs_diff(const QMatrix &a, const QMatrix &b) { return (a - b).max_abs(); }

// ---------------------------------------------------------- embeddings

CMatrix complex_adjoint(const QMatrix &m)
{
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    CMatrix out(2 * rows, 2 * cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            const auto [a, b] = to_complex_pair(m(r, c));
            out(r, c) = a;
            out(r, cols + c) = b;
            out(rows + r, c) = -std::conj(b);
            out(rows + r, cols + c) = std::conj(a);
        }
    }
    return out;
}

std::vector<cdouble> embed(const QVector &u)
{
    const std::size_t n = u.size();
    std::vector<cdouble> x(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto [a, b] = to_complex_pair(u[i]);
        x[i] = a;
        x[n + i] = -std::conj(b);
    }
    return x;
}

QVector unembed(const std::vector<cdouble> &x)
{
    const std::size_t n = x.size() / 2;
    QVector u(n);
    for (std::size_t i = 0; i < n; ++i) {
        u[i] = from_complex_pair(x[i], -std::conj(x[n + i]));
    }
    return u;
}

// ------------------------------------------------- spectral recovery

namespace {

std::vector<cdouble> complex_column(const CMatrix &m, std::size_t c)
{
    std::vector<cdouble> x(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        x[r] = m(r, c);
    }
    return x;
}

void project_out(QVector &v, const QVector &unit)
{
    const Quaternion coeff = inner(unit, v);
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] -= unit[i] * coeff;
    }
}

void orthogonalize(QVector &v, const std::vector<QVector> &basis)
{
    // two passes of classical Gram-Schmidt
    for (int pass = 0; pass < 2; ++pass) {
        for (const auto &b : basis) {
            project_out(v, b);
        }
    }
}

QVector normalized(const QVector &v)
{
    return v * Quaternion(1.0 / norm(v));
}

struct Recovered
{
    std::vector<double> values;
    QMatrix vectors;
};

/// Maps the doubled spectrum of a complex adjoint back to H^n. Values must be
/// sorted descending; each quaternionic value is expected twice.
Recovered recover_quaternionic(const std::vector<double> &cvalues, const CMatrix &cvectors,
                               const char *what)
{
    const std::size_t n = cvalues.size() / 2;
    double scale = 0.0;
    for (double v : cvalues) {
        scale = std::max(scale, std::abs(v));
    }
    auto close = [&](double x, double y) {
        return std::abs(x - y) <= kPairingTol * (scale + std::abs(x));
    };

    Recovered out;
    out.values.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double a = cvalues[2 * k];
        const double b = cvalues[2 * k + 1];
        if (!close(a, b)) {
            throw NumericalFailure(std::string(what) + ": complex spectrum is not doubled (" +
                                   std::to_string(a) + " vs " + std::to_string(b) + ")");
        }
        out.values[k] = 0.5 * (a + b);
    }

    std::vector<QVector> accepted;
    accepted.reserve(n);
    std::size_t start = 0;
    while (start < n) {
        std::size_t end = start + 1;
        while (end < n && close(out.values[end - 1], out.values[end])) {
            ++end;
        }
        std::vector<QVector> candidates;
        for (std::size_t c = 2 * start; c < 2 * end; ++c) {
            QVector u = unembed(complex_column(cvectors, c));
            orthogonalize(u, accepted);
            candidates.push_back(std::move(u));
        }
        const std::size_t d = end - start;
        for (std::size_t step = 0; step < d; ++step) {
            std::size_t best = 0;
            double best_norm = -1.0;
            for (std::size_t c = 0; c < candidates.size(); ++c) {
                const double nv = norm(candidates[c]);
                if (nv > best_norm) {
                    best_norm = nv;
                    best = c;
                }
            }
            if (best_norm < 0.5 / std::sqrt(static_cast<double>(d))) {
                throw NumericalFailure(std::string(what) + ": eigenvector recovery lost rank");
            }
            QVector unit = normalized(candidates[best]);
            orthogonalize(unit, accepted);
            unit = normalized(unit);
            candidates.erase(candidates.begin() + static_cast<std::ptrdiff_t>(best));
            for (auto &c : candidates) {
                project_out(c, unit);
            }
            accepted.push_back(std::move(unit));
        }
        start = end;
    }
    out.vectors = QMatrix::from_columns(n, accepted);
    return out;
}

/// Extends an orthonormal family in H^rows to a full orthonormal basis.
std::vector<QVector> complete_basis(std::vector<QVector> family, std::size_t rows)
{
    while (family.size() < rows) {
        QVector best;
        double best_norm = -1.0;
        for (std::size_t i = 0; i < rows; ++i) {
            QVector e = QVector::basis(rows, i);
            orthogonalize(e, family);
            const double ne = norm(e);
            if (ne > best_norm) {
                best_norm = ne;
                best = std::move(e);
            }
        }
        QVector unit = normalized(best);
        orthogonalize(unit, family);
        family.push_back(normalized(unit));
    }
    return family;
}

} // namespace

bool is_hermitian(const QMatrix &m, double tol)
{
    if (m.rows() != m.cols()) {
        return false;
    }
    const double bound = tol * m.max_abs();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = r; c < m.cols(); ++c) {
            if (modulus(m(r, c) - conj(m(c, r))) > bound) {
                return false;
            }
        }
    }
    return true;
}

HermEig herm_eig(const QMatrix &m)
{
    if (m.rows() != m.cols()) {
        throw DimensionMismatch("herm_eig: matrix is " + std::to_string(m.rows()) + "x" +
                                std::to_string(m.cols()));
    }
    if (!is_hermitian(m)) {
        throw NotHermitian("herm_eig: input is not Hermitian");
    }
    const CEig ce = jacobi_hermitian_eig(complex_adjoint(m));
    Recovered rec = recover_quaternionic(ce.values, ce.vectors, "herm_eig");
    return {std::move(rec.values), std::move(rec.vectors)};
}

QMatrix spectral_apply(const HermEig &eig, const std::function<double(double)> &f)
{
    const QMatrix &u = eig.eigenvectors;
    const std::size_t n = u.rows();
    QMatrix out(n, n);
    for (std::size_t k = 0; k < eig.eigenvalues.size(); ++k) {
        const double w = f(eig.eigenvalues[k]);
        if (w == 0.0) {
            continue;
        }
        for (std::size_t r = 0; r < n; ++r) {
            const Quaternion left = u(r, k) * w;
            for (std::size_t c = 0; c < n; ++c) {
                out(r, c) += left * conj(u(c, k));
            }
        }
    }
    // exact Hermitian symmetry; the two triangles differ only by rounding
    for (std::size_t r = 0; r < n; ++r) {
        out(r, r) = Quaternion(out(r, r).a0);
        for (std::size_t c = r + 1; c < n; ++c) {
            const Quaternion avg = (out(r, c) + conj(out(c, r))) * 0.5;
            out(r, c) = avg;
            out(c, r) = conj(avg);
        }
    }
    return out;
}

QMatrix sqrt_psd(const QMatrix &m)
{
    const HermEig eig = herm_eig(m);
    if (eig.eigenvalues.empty()) {
        return m;
    }
    const double top = std::max(eig.eigenvalues.front(), 0.0);
    const double floor = -1e-10 * top;
    if (eig.eigenvalues.back() < floor) {
        throw NotPositive("sqrt_psd: matrix is indefinite (smallest eigenvalue " +
                          std::to_string(eig.eigenvalues.back()) + ")");
    }
    return spectral_apply(eig, [](double x) { return x > 0.0 ? std::sqrt(x) : 0.0; });
}

QSvd svd(const QMatrix &m)
{
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    QSvd out;
    if (cols == 0) {
        out.u = QMatrix::identity(rows);
        out.v = QMatrix(0, 0);
        return out;
    }
    const CSvdRight cs = jacobi_svd_right(complex_adjoint(m));
    Recovered rec = recover_quaternionic(cs.values, cs.v, "svd");
    out.v = std::move(rec.vectors);
    out.all_values = std::move(rec.values);
    const std::size_t k = std::min(rows, cols);
    out.singular_values.assign(out.all_values.begin(), out.all_values.begin() + static_cast<std::ptrdiff_t>(k));

    const std::size_t r = rank(out, rows, cols);
    std::vector<QVector> left;
    left.reserve(rows);
    for (std::size_t i = 0; i < r; ++i) {
        QVector u = matvec(m, out.v.column(i)) * Quaternion(1.0 / out.all_values[i]);
        orthogonalize(u, left);
        left.push_back(normalized(u));
    }
    out.u = QMatrix::from_columns(rows, complete_basis(std::move(left), rows));
    return out;
}

std::size_t rank(const QSvd &s, std::size_t rows, std::size_t cols, double rel_tol)
{
    if (s.all_values.empty() || s.all_values.front() == 0.0) {
        return 0;
    }
    const double threshold =
        static_cast<double>(std::max(rows, cols)) * rel_tol * s.all_values.front();
    std::size_t r = 0;
    const std::size_t limit = std::min(rows, cols);
    while (r < limit && s.all_values[r] > threshold) {
        ++r;
    }
    return r;
}

std::size_t rank(const QMatrix &m, double rel_tol) { return rank(svd(m), m.rows(), m.cols(), rel_tol); }

double operator_norm(const QMatrix &m)
{
    if (m.rows() == 0 || m.cols() == 0) {
        return 0.0;
    }
    return svd(m).all_values.front();
}

QMatrix pinv(const QMatrix &m, double rel_tol)
{
    const QSvd s = svd(m);
    const std::size_t r = rank(s, m.rows(), m.cols(), rel_tol);
    QMatrix out(m.cols(), m.rows());
    for (std::size_t k = 0; k < r; ++k) {
        const double w = 1.0 / s.all_values[k];
        for (std::size_t i = 0; i < m.cols(); ++i) {
            const Quaternion left = s.v(i, k) * w;
            for (std::size_t j = 0; j < m.rows(); ++j) {
                out(i, j) += left * conj(s.u(j, k));
            }
        }
    }
    return out;
}

QVector solve_min_norm(const QMatrix &m, const QVector &v, double rel_tol)
{
    if (v.size() != m.rows()) {
        throw DimensionMismatch("solve_min_norm: right-hand side has length " +
                                std::to_string(v.size()) + ", expected " + std::to_string(m.rows()));
    }
    QVector x = matvec(pinv(m, rel_tol), v);
    const double residual = norm(matvec(m, x) - v);
    const double scale = norm(v);
    if (residual > 1e-8 * scale) {
        throw InconsistentSystem("solve_min_norm: right-hand side is outside the range (residual " +
                                     std::to_string(residual) + ")",
                                 residual);
    }
    return x;
}

QMatrix kernel_basis(const QMatrix &m, double rel_tol)
{
    const std::size_t n = m.cols();
    if (n == 0) {
        return QMatrix(0, 0);
    }
    const QSvd s = svd(m);
    const std::size_t r = rank(s, m.rows(), n, rel_tol);
    QMatrix out(n, n - r);
    for (std::size_t k = r; k < n; ++k) {
        out.set_column(k - r, s.v.column(k));
    }
    return out;
}

bool is_surjective(const QMatrix &m, double rel_tol) { return rank(m, rel_tol) == m.rows(); }

bool is_bounded_below(const QMatrix &m, double rel_tol) { return rank(m, rel_tol) == m.cols(); }

bool has_orthonormal_columns(const QMatrix &b, double tol)
{
    return max_abs_diff(adjoint(b) * b, QMatrix::identity(b.cols())) <= tol;
}

bool is_unitary(const QMatrix &u, double tol)
{
    return u.rows() == u.cols() && has_orthonormal_columns(u, tol) &&
           max_abs_diff(u * adjoint(u), QMatrix::identity(u.rows())) <= tol;
}

QMatrix orthogonal_projector(const QMatrix &b)
{
    if (!has_orthonormal_columns(b)) {
        throw NotOrthonormal("orthogonal_projector: columns are not orthonormal");
    }
    return b * adjoint(b);
}

} // namespace qframe
