#pragma once

#include <cstdint>
#include <random>

#include "qframe/qlinalg.hpp"

namespace qframe {

using Rng = std::mt19937_64;

/// Four independent standard normal components.
Quaternion random_quaternion(Rng &rng);
QVector random_vector(std::size_t n, Rng &rng);
QMatrix random_matrix(std::size_t rows, std::size_t cols, Rng &rng);

/// (X + X*) / 2 for a random X.
QMatrix random_hermitian(std::size_t n, Rng &rng);

/// Eigenvector matrix of a random Hermitian matrix.
QMatrix random_unitary(std::size_t n, Rng &rng);

/// Random matrix with exactly the requested rank, built as U diag(s) V* with
/// s drawn from [0.5, 2].
QMatrix random_matrix_of_rank(std::size_t rows, std::size_t cols, std::size_t r, Rng &rng);

/// Random unit quaternion.
Quaternion random_unit_quaternion(Rng &rng);

} // namespace qframe
