#include "qframe/complex_kernel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qframe {

CMatrix CMatrix::identity(std::size_t n)
{
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

CMatrix CMatrix::adjoint() const
{
    CMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

double CMatrix::max_abs() const
{
    double m = 0.0;
    for (const auto &z : data_) {
        m = std::max(m, std::abs(z));
    }
    return m;
}

CMatrix operator*(const CMatrix &a, const CMatrix &b)
{
    CMatrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const cdouble x = a(r, k);
            for (std::size_t c = 0; c < b.cols_; ++c) {
                out(r, c) += x * b(k, c);
            }
        }
    }
    return out;
}

CMatrix operator+(const CMatrix &a, const CMatrix &b)
{
    CMatrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) {
        out.data_[i] += b.data_[i];
    }
    return out;
}

CMatrix operator-(const CMatrix &a, const CMatrix &b)
{
    CMatrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) {
        out.data_[i] -= b.data_[i];
    }
    return out;
}

namespace {

constexpr int kMaxSweeps = 60;
constexpr double kJacobiTol = 1e-15;

/// 2x2 unitary that annihilates the (p,q) entry of the Hermitian pencil
/// [[app, g], [conj(g), aqq]] under J* X J.
struct Rotation
{
    cdouble pp, pq, qp, qq;
};

Rotation make_rotation(double app, double aqq, cdouble g)
{
    const double absg = std::abs(g);
    const cdouble phase = g / absg;
    const double theta = (aqq - app) / (2.0 * absg);
    double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    if (theta < 0.0) {
        t = -t;
    }
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;
    // J = D P where D = diag(1, conj(phase)) makes the pivot real and P is
    // the classical real Jacobi rotation.
    return {c, s, -s * std::conj(phase), c * std::conj(phase)};
}

void rotate_columns(CMatrix &m, std::size_t p, std::size_t q, const Rotation &j)
{
    for (std::size_t r = 0; r < m.rows(); ++r) {
        const cdouble x = m(r, p);
        const cdouble y = m(r, q);
        m(r, p) = x * j.pp + y * j.qp;
        m(r, q) = x * j.pq + y * j.qq;
    }
}

void rotate_rows_adjoint(CMatrix &m, std::size_t p, std::size_t q, const Rotation &j)
{
    for (std::size_t c = 0; c < m.cols(); ++c) {
        const cdouble x = m(p, c);
        const cdouble y = m(q, c);
        m(p, c) = std::conj(j.pp) * x + std::conj(j.qp) * y;
        m(q, c) = std::conj(j.pq) * x + std::conj(j.qq) * y;
    }
}

std::vector<std::size_t> descending_order(const std::vector<double> &values)
{
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return values[x] > values[y]; });
    return order;
}

} // namespace

CEig jacobi_hermitian_eig(const CMatrix &input)
{
    const std::size_t n = input.rows();
    CMatrix a(n, n);
    double frob_sq = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
        a(r, r) = input(r, r).real();
        for (std::size_t c = r + 1; c < n; ++c) {
            a(r, c) = input(r, c);
            a(c, r) = std::conj(input(r, c));
        }
    }
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            frob_sq += std::norm(a(r, c));
        }
    }
    CMatrix v = CMatrix::identity(n);
    const double stop = kJacobiTol * kJacobiTol * frob_sq;

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                off += 2.0 * std::norm(a(p, q));
            }
        }
        if (off <= stop) {
            break;
        }
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cdouble g = a(p, q);
                if (std::abs(g) <= 1e-300) {
                    continue;
                }
                const Rotation j = make_rotation(a(p, p).real(), a(q, q).real(), g);
                rotate_columns(a, p, q, j);
                rotate_rows_adjoint(a, p, q, j);
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
                rotate_columns(v, p, q, j);
            }
        }
    }

    std::vector<double> diag(n);
    for (std::size_t i = 0; i < n; ++i) {
        diag[i] = a(i, i).real();
    }
    const auto order = descending_order(diag);
    CEig out;
    out.values.resize(n);
    out.vectors = CMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = diag[order[k]];
        for (std::size_t r = 0; r < n; ++r) {
            out.vectors(r, k) = v(r, order[k]);
        }
    }
    return out;
}

CSvdRight jacobi_svd_right(const CMatrix &input)
{
    CMatrix a = input;
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    CMatrix v = CMatrix::identity(cols);
    double frob2 = 0.0;
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            frob2 += std::norm(a(r, c));
        }
    }
    // couplings below this are roundoff between columns that are already negligible
    const double floor = kJacobiTol * kJacobiTol * frob2;

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        bool rotated = false;
        for (std::size_t p = 0; p < cols; ++p) {
            for (std::size_t q = p + 1; q < cols; ++q) {
                double alpha = 0.0;
                double beta = 0.0;
                cdouble gamma = 0.0;
                for (std::size_t r = 0; r < rows; ++r) {
                    alpha += std::norm(a(r, p));
                    beta += std::norm(a(r, q));
                    gamma += std::conj(a(r, p)) * a(r, q);
                }
                const double absg = std::abs(gamma);
                if (absg <= 1e-300 || absg <= floor || absg <= kJacobiTol * std::sqrt(alpha * beta)) {
                    continue;
                }
                const Rotation j = make_rotation(alpha, beta, gamma);
                rotate_columns(a, p, q, j);
                rotate_columns(v, p, q, j);
                rotated = true;
            }
        }
        if (!rotated) {
            break;
        }
    }

    std::vector<double> norms(cols, 0.0);
    for (std::size_t c = 0; c < cols; ++c) {
        double s = 0.0;
        for (std::size_t r = 0; r < rows; ++r) {
            s += std::norm(a(r, c));
        }
        norms[c] = std::sqrt(s);
    }
    const auto order = descending_order(norms);
    CSvdRight out;
    out.values.resize(cols);
    out.v = CMatrix(cols, cols);
    for (std::size_t k = 0; k < cols; ++k) {
        out.values[k] = norms[order[k]];
        for (std::size_t r = 0; r < cols; ++r) {
            out.v(r, k) = v(r, order[k]);
        }
    }
    return out;
}

} // namespace qframe
