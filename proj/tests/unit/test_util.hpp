#pragma once

#include <doctest.h>

#include "qframe/frame.hpp"
#include "qframe/random.hpp"

namespace qframe::testing {

inline void check_close(const Quaternion &got, const Quaternion &want, double tol)
{
    INFO("got (" << got.a0 << ", " << got.a1 << ", " << got.a2 << ", " << got.a3 << ") want ("
                 << want.a0 << ", " << want.a1 << ", " << want.a2 << ", " << want.a3 << ")");
    CHECK(modulus(got - want) <= tol);
}

inline Frame random_frame(std::size_t n, std::size_t m, Rng &rng)
{
    std::vector<QVector> vs;
    for (std::size_t i = 0; i < m; ++i) {
        vs.push_back(random_vector(n, rng));
    }
    return Frame(n, std::move(vs));
}

inline QVector e(std::size_t n, std::size_t i) { return QVector::basis(n, i); }

} // namespace qframe::testing
