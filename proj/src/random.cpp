#include "qframe/random.hpp"

#include <algorithm>

namespace qframe {

Quaternion random_quaternion(Rng &rng)
{
    std::normal_distribution<double> normal(0.0, 1.0);
    const double a0 = normal(rng);
    const double a1 = normal(rng);
    const double a2 = normal(rng);
    const double a3 = normal(rng);
    return {a0, a1, a2, a3};
}

Quaternion random_unit_quaternion(Rng &rng)
{
    Quaternion q;
    do {
        q = random_quaternion(rng);
    } while (modulus(q) < 1e-8);
    return q * (1.0 / modulus(q));
}

QVector random_vector(std::size_t n, Rng &rng)
{
    QVector v(n);
    for (std::size_t i = 0; i < n; ++i) {
        v[i] = random_quaternion(rng);
    }
    return v;
}

QMatrix random_matrix(std::size_t rows, std::size_t cols, Rng &rng)
{
    QMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            m(r, c) = random_quaternion(rng);
        }
    }
    return m;
}

QMatrix random_hermitian(std::size_t n, Rng &rng)
{
    const QMatrix x = random_matrix(n, n, rng);
    QMatrix h = (x + adjoint(x)) * 0.5;
    for (std::size_t i = 0; i < n; ++i) {
        h(i, i) = Quaternion(h(i, i).a0);
    }
    return h;
}

QMatrix random_unitary(std::size_t n, Rng &rng) { return herm_eig(random_hermitian(n, rng)).eigenvectors; }

QMatrix random_matrix_of_rank(std::size_t rows, std::size_t cols, std::size_t r, Rng &rng)
{
    r = std::min({r, rows, cols});
    const QMatrix u = random_unitary(rows, rng);
    const QMatrix v = random_unitary(cols, rng);
    std::uniform_real_distribution<double> spread(0.5, 2.0);
    QMatrix out(rows, cols);
    for (std::size_t k = 0; k < r; ++k) {
        const double s = spread(rng);
        for (std::size_t i = 0; i < rows; ++i) {
            const Quaternion left = u(i, k) * s;
            for (std::size_t j = 0; j < cols; ++j) {
                out(i, j) += left * conj(v(j, k));
            }
        }
    }
    return out;
}

} // namespace qframe
