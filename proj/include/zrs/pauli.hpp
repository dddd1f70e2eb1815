#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>

#include "zrs/errors.hpp"
#include "zrs/tolerance.hpp"

namespace zrs {

using cplx = std::complex<double>;

inline constexpr cplx I{0.0, 1.0};

/// Dense 2x2 complex matrix, row-major.
struct Mat2 {
    std::array<cplx, 4> m{};

    constexpr Mat2() = default;
    constexpr Mat2(cplx a11, cplx a12, cplx a21, cplx a22) : m{a11, a12, a21, a22} {}

    static constexpr Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static constexpr Mat2 zero() { return {}; }

    constexpr cplx& operator()(int r, int c) { return m[2 * r + c]; }
    constexpr const cplx& operator()(int r, int c) const { return m[2 * r + c]; }

    cplx det() const { return m[0] * m[3] - m[1] * m[2]; }
    cplx trace() const { return m[0] + m[3]; }

    Mat2 adjoint() const {
        return {std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])};
    }

    /// Largest entry modulus.
    double max_norm() const {
        double r = 0.0;
        for (const auto& x : m) r = std::max(r, std::abs(x));
        return r;
    }

    /// Direct inverse by the adjugate formula.
    Mat2 inverse(double tol = Tolerance::default_base) const {
        const cplx d = det();
        const double scale = std::max(1.0, max_norm() * max_norm());
        if (std::abs(d) < tol * scale) throw SingularMatrix("2x2 determinant vanishes");
        return {m[3] / d, -m[1] / d, -m[2] / d, m[0] / d};
    }

    friend Mat2 operator+(const Mat2& a, const Mat2& b) {
        return {a.m[0] + b.m[0], a.m[1] + b.m[1], a.m[2] + b.m[2], a.m[3] + b.m[3]};
    }
    friend Mat2 operator-(const Mat2& a, const Mat2& b) {
        return {a.m[0] - b.m[0], a.m[1] - b.m[1], a.m[2] - b.m[2], a.m[3] - b.m[3]};
    }
    friend Mat2 operator*(const Mat2& a, const Mat2& b) {
        return {a.m[0] * b.m[0] + a.m[1] * b.m[2], a.m[0] * b.m[1] + a.m[1] * b.m[3],
                a.m[2] * b.m[0] + a.m[3] * b.m[2], a.m[2] * b.m[1] + a.m[3] * b.m[3]};
    }
    friend Mat2 operator*(cplx s, const Mat2& a) {
        return {s * a.m[0], s * a.m[1], s * a.m[2], s * a.m[3]};
    }
    friend Mat2 operator*(const Mat2& a, cplx s) { return s * a; }
    friend Mat2 operator/(const Mat2& a, cplx s) {
        return {a.m[0] / s, a.m[1] / s, a.m[2] / s, a.m[3] / s};
    }
    friend bool operator==(const Mat2&, const Mat2&) = default;

    /// Matrix-vector product.
    std::array<cplx, 2> apply(const std::array<cplx, 2>& v) const {
        return {m[0] * v[0] + m[1] * v[1], m[2] * v[0] + m[3] * v[1]};
    }
};

namespace pauli {
inline constexpr Mat2 sigma0{1.0, 0.0, 0.0, 1.0};
inline constexpr Mat2 sigma1{0.0, 1.0, 1.0, 0.0};
inline constexpr Mat2 sigma2{0.0, cplx{0.0, -1.0}, cplx{0.0, 1.0}, 0.0};
inline constexpr Mat2 sigma3{1.0, 0.0, 0.0, -1.0};

inline constexpr std::array<Mat2, 4> basis{sigma0, sigma1, sigma2, sigma3};
} // namespace pauli

/// Coefficients of a 2x2 matrix in the basis {sigma0, sigma1, sigma2, sigma3}.
struct PauliVector {
    cplx x0{}, x1{}, x2{}, x3{};

    /// Sum of squares of the vector part, x1^2 + x2^2 + x3^2 (no conjugation).
    cplx vector_square() const { return x1 * x1 + x2 * x2 + x3 * x3; }

    /// Largest modulus of the vector part.
    double vector_max_abs() const {
        return std::max({std::abs(x1), std::abs(x2), std::abs(x3)});
    }

    double max_abs() const { return std::max(std::abs(x0), vector_max_abs()); }

    /// sum |x_j|^2 over all four coefficients.
    double norm_squared() const {
        return std::norm(x0) + std::norm(x1) + std::norm(x2) + std::norm(x3);
    }

    cplx operator[](int j) const {
        switch (j) {
        case 0: return x0;
        case 1: return x1;
        case 2: return x2;
        default: return x3;
        }
    }

    friend PauliVector operator+(const PauliVector& a, const PauliVector& b) {
        return {a.x0 + b.x0, a.x1 + b.x1, a.x2 + b.x2, a.x3 + b.x3};
    }
    friend PauliVector operator*(cplx s, const PauliVector& a) {
        return {s * a.x0, s * a.x1, s * a.x2, s * a.x3};
    }
    friend bool operator==(const PauliVector&, const PauliVector&) = default;
};

inline PauliVector decompose(const Mat2& M) {
    const cplx m11 = M(0, 0), m12 = M(0, 1), m21 = M(1, 0), m22 = M(1, 1);
    return {(m11 + m22) * 0.5, (m12 + m21) * 0.5, I * (m12 - m21) * 0.5, (m11 - m22) * 0.5};
}

inline Mat2 compose(const PauliVector& x) {
    return {x.x0 + x.x3, x.x1 - I * x.x2, x.x1 + I * x.x2, x.x0 - x.x3};
}

/// x0^2 - (x1^2 + x2^2 + x3^2), the determinant of compose(x).
inline cplx det_pauli(const PauliVector& x) { return x.x0 * x.x0 - x.vector_square(); }

/// Inverse through (x0 sigma0 - sum x_j sigma_j) / det.
inline PauliVector inverse_pauli(const PauliVector& x, double tol = Tolerance::default_base) {
    const cplx d = det_pauli(x);
    if (std::abs(d) < tol * std::max(1.0, x.norm_squared()))
        throw SingularMatrix("Pauli determinant vanishes");
    return {x.x0 / d, -x.x1 / d, -x.x2 / d, -x.x3 / d};
}

/// Product in coefficient form:
/// (a0 + a.s)(b0 + b.s) = (a0 b0 + a.b) + (a0 b + b0 a + i a x b).s
inline PauliVector multiply(const PauliVector& a, const PauliVector& b) {
    const cplx dot = a.x1 * b.x1 + a.x2 * b.x2 + a.x3 * b.x3;
    const cplx c1 = a.x2 * b.x3 - a.x3 * b.x2;
    const cplx c2 = a.x3 * b.x1 - a.x1 * b.x3;
    const cplx c3 = a.x1 * b.x2 - a.x2 * b.x1;
    return {a.x0 * b.x0 + dot, a.x0 * b.x1 + b.x0 * a.x1 + I * c1,
            a.x0 * b.x2 + b.x0 * a.x2 + I * c2, a.x0 * b.x3 + b.x0 * a.x3 + I * c3};
}

} // namespace zrs
