#include <doctest.h>

#include <Eigen/Dense>
#include <random>

#include "qframe/complex_kernel.hpp"

using namespace qframe;

namespace {

CMatrix random_cmatrix(std::size_t r, std::size_t c, std::mt19937_64 &rng)
{
    std::normal_distribution<double> normal;
    CMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < c; ++j) {
            const double re = normal(rng);
            const double im = normal(rng);
            m(i, j) = cdouble(re, im);
        }
    }
    return m;
}

Eigen::MatrixXcd to_eigen(const CMatrix &m)
{
    Eigen::MatrixXcd out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            out(i, j) = m(i, j);
        }
    }
    return out;
}

} // namespace

TEST_CASE("Jacobi Hermitian eigensolver agrees with an independent solver")
{
    std::mt19937_64 rng(17);
    for (std::size_t n : {1u, 2u, 5u, 12u}) {
        const CMatrix x = random_cmatrix(n, n, rng);
        const CMatrix h = x + x.adjoint();
        const CEig e = jacobi_hermitian_eig(h);

        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> ref(to_eigen(h));
        const Eigen::VectorXd want = ref.eigenvalues().reverse();
        for (std::size_t k = 0; k < n; ++k) {
            CHECK(e.values[k] == doctest::Approx(want(static_cast<Eigen::Index>(k))).epsilon(1e-12).scale(10.0));
        }
        // H V = V diag(values), V unitary
        const Eigen::MatrixXcd v = to_eigen(e.vectors);
        const Eigen::MatrixXcd lhs = to_eigen(h) * v;
        for (std::size_t k = 0; k < n; ++k) {
            const auto kk = static_cast<Eigen::Index>(k);
            CHECK((lhs.col(kk) - v.col(kk) * e.values[k]).norm() <= 1e-12 * to_eigen(h).norm());
        }
        CHECK((v.adjoint() * v - Eigen::MatrixXcd::Identity(n, n)).norm() <= 1e-13);
    }
}

TEST_CASE("Jacobi eigensolver handles repeated eigenvalues")
{
    // block diag with a doubly repeated eigenvalue, conjugated by a unitary
    std::mt19937_64 rng(4);
    const CMatrix x = random_cmatrix(4, 4, rng);
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(to_eigen(x));
    const Eigen::MatrixXcd q = qr.householderQ();
    Eigen::VectorXd d(4);
    d << 3.0, 3.0, -1.0, 0.5;
    const Eigen::MatrixXcd h = q * d.asDiagonal() * q.adjoint();
    CMatrix hc(4, 4);
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            hc(i, j) = h(i, j);
        }
    }
    const CEig e = jacobi_hermitian_eig(hc);
    CHECK(e.values[0] == doctest::Approx(3.0).epsilon(1e-13));
    CHECK(e.values[1] == doctest::Approx(3.0).epsilon(1e-13));
    CHECK(e.values[2] == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(e.values[3] == doctest::Approx(-1.0).epsilon(1e-13));
}

TEST_CASE("one-sided Jacobi SVD agrees with an independent SVD")
{
    std::mt19937_64 rng(8);
    for (auto [r, c] : {std::pair<std::size_t, std::size_t>{3, 3}, {4, 7}, {9, 2}}) {
        const CMatrix a = random_cmatrix(r, c, rng);
        const CSvdRight s = jacobi_svd_right(a);
        Eigen::JacobiSVD<Eigen::MatrixXcd> ref(to_eigen(a));
        const auto sv = ref.singularValues();
        for (Eigen::Index k = 0; k < sv.size(); ++k) {
            CHECK(s.values[static_cast<std::size_t>(k)] == doctest::Approx(sv(k)).epsilon(1e-12));
        }
        for (std::size_t k = static_cast<std::size_t>(sv.size()); k < c; ++k) {
            CHECK(s.values[k] <= 1e-13 * sv(0));
        }
        const Eigen::MatrixXcd v = to_eigen(s.v);
        CHECK((v.adjoint() * v - Eigen::MatrixXcd::Identity(c, c)).norm() <= 1e-13);
        // columns of A V are mutually orthogonal with norms equal to the values
        const Eigen::MatrixXcd av = to_eigen(a) * v;
        for (std::size_t k = 0; k < c; ++k) {
            CHECK(av.col(static_cast<Eigen::Index>(k)).norm() == doctest::Approx(s.values[k]).epsilon(1e-12).scale(1.0));
        }
    }
}
