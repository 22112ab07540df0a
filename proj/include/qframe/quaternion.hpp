#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <utility>

#include "qframe/errors.hpp"

namespace qframe {

/// A real quaternion a0 + a1 i + a2 j + a3 k with i^2 = j^2 = k^2 = ijk = -1.
struct Quaternion
{
    double a0 = 0.0;
    double a1 = 0.0;
    double a2 = 0.0;
    double a3 = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double r) : a0(r) {}
    constexpr Quaternion(double r, double x, double y, double z) : a0(r), a1(x), a2(y), a3(z) {}

    static constexpr Quaternion i() { return {0.0, 1.0, 0.0, 0.0}; }
    static constexpr Quaternion j() { return {0.0, 0.0, 1.0, 0.0}; }
    static constexpr Quaternion k() { return {0.0, 0.0, 0.0, 1.0}; }

    constexpr double real() const { return a0; }

    constexpr Quaternion &operator+=(const Quaternion &q)
    {
        a0 += q.a0;
        a1 += q.a1;
        a2 += q.a2;
        a3 += q.a3;
        return *this;
    }

    constexpr Quaternion &operator-=(const Quaternion &q)
    {
        a0 -= q.a0;
        a1 -= q.a1;
        a2 -= q.a2;
        a3 -= q.a3;
        return *this;
    }

    constexpr Quaternion &operator*=(double s)
    {
        a0 *= s;
        a1 *= s;
        a2 *= s;
        a3 *= s;
        return *this;
    }

    friend constexpr bool operator==(const Quaternion &, const Quaternion &) = default;
};

constexpr Quaternion operator+(Quaternion p, const Quaternion &q) { return p += q; }
constexpr Quaternion operator-(Quaternion p, const Quaternion &q) { return p -= q; }
constexpr Quaternion operator-(const Quaternion &q) { return {-q.a0, -q.a1, -q.a2, -q.a3}; }
constexpr Quaternion operator*(Quaternion q, double s) { return q *= s; }
constexpr Quaternion operator*(double s, Quaternion q) { return q *= s; }

// Hamilton product; ij = k, jk = i, ki = j.
constexpr Quaternion operator*(const Quaternion &p, const Quaternion &q)
{
    return {p.a0 * q.a0 - p.a1 * q.a1 - p.a2 * q.a2 - p.a3 * q.a3,
            p.a0 * q.a1 + p.a1 * q.a0 + p.a2 * q.a3 - p.a3 * q.a2,
            p.a0 * q.a2 - p.a1 * q.a3 + p.a2 * q.a0 + p.a3 * q.a1,
            p.a0 * q.a3 + p.a1 * q.a2 - p.a2 * q.a1 + p.a3 * q.a0};
}

constexpr Quaternion mul(const Quaternion &p, const Quaternion &q) { return p * q; }

constexpr Quaternion conj(const Quaternion &q) { return {q.a0, -q.a1, -q.a2, -q.a3}; }

constexpr double norm_sq(const Quaternion &q)
{
    return q.a0 * q.a0 + q.a1 * q.a1 + q.a2 * q.a2 + q.a3 * q.a3;
}

inline double modulus(const Quaternion &q)
{
    // hypot-style scaling keeps |q| finite for huge components
    const double m = std::max({std::abs(q.a0), std::abs(q.a1), std::abs(q.a2), std::abs(q.a3)});
    if (m == 0.0 || !std::isfinite(m)) {
        return m;
    }
    const Quaternion s = q * (1.0 / m);
    return m * std::sqrt(norm_sq(s));
}

/// Moduli below this are treated as zero by inverse().
inline constexpr double kInverseZeroThreshold = 1e-300;

inline Quaternion inverse(const Quaternion &q)
{
    const double m = modulus(q);
    if (m < kInverseZeroThreshold) {
        throw DivisionByZero("quaternion inverse of zero");
    }
    // q^-1 = conj(q) / |q|^2, divided in two steps to avoid overflow of |q|^2
    return conj(q) * (1.0 / m) * (1.0 / m);
}

/// Cayley-Dickson split q = z1 + z2 j with z1 = a0 + a1 i, z2 = a2 + a3 i.
inline std::pair<std::complex<double>, std::complex<double>> to_complex_pair(const Quaternion &q)
{
    return {{q.a0, q.a1}, {q.a2, q.a3}};
}

inline Quaternion from_complex_pair(std::complex<double> z1, std::complex<double> z2)
{
    return {z1.real(), z1.imag(), z2.real(), z2.imag()};
}

} // namespace qframe
