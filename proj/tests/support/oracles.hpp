#pragma once

// Independent reference computations for tests. Nothing here calls the
// library's S-matrix, resolvent or quadrature code.

#include <cmath>
#include <complex>
#include <functional>
#include <random>

#include "zrs/pauli.hpp"

namespace oracle {

using zrs::cplx;
using zrs::I;
using zrs::Mat2;

// Closed forms of the worked examples.

// delta potential, coupling a
inline Mat2 delta_S(cplx a, cplx k) {
    const cplx f = 1.0 / (2.0 * k + I * a);
    return {f * I * a, -2.0 * k * f, -2.0 * k * f, f * I * a};
}

// mixed delta potential, coupling b (constant in k)
inline Mat2 mixed_S(cplx b) { return {-0.5 * b, -0.5 * (2.0 - b), -0.5 * (2.0 + b), 0.5 * b}; }

// delta' potential, coupling d
inline Mat2 delta_prime_S(cplx d, cplx k) {
    const cplx f = 1.0 / (d * k - 2.0 * I);
    return {-d * k * f, 2.0 * I * f, 2.0 * I * f, -d * k * f};
}

// a = -e^{i phi}, b = -1, c = 1, d = e^{-i phi}
inline Mat2 phase_family_S(double phi, cplx k) {
    const cplx e = std::exp(I * phi);
    const cplx k0 = I * e;
    const cplx s0 = -(k + k0) / (k - k0);
    const cplx off = 2.0 * I * k / ((k - k0) * (k - k0)) * 2.0 * e;
    return {s0, off, 0.0, s0};
}

inline Mat2 phase_family_frakT(double phi) {
    const double s = std::sin(phi / 2.0);
    const cplx f = 1.0 / (8.0 * s * s);
    const cplx diag = f * (1.0 - std::exp(-I * phi));
    return {diag, 2.0 * f, 0.0, diag};
}

// Adaptive Simpson on [a, b] for complex integrands.
inline cplx simpson(const std::function<cplx(double)>& f, double a, double b, double tol, int depth = 40) {
    std::function<cplx(double, double, cplx, cplx, cplx, cplx, double, int)> rec =
        [&](double l, double r, cplx fl, cplx fm, cplx fr, cplx whole, double eps, int d) -> cplx {
        const double m = 0.5 * (l + r);
        const double lm = 0.5 * (l + m), rm = 0.5 * (m + r);
        const cplx flm = f(lm), frm = f(rm);
        const cplx left = (m - l) / 6.0 * (fl + 4.0 * flm + fm);
        const cplx right = (r - m) / 6.0 * (fm + 4.0 * frm + fr);
        const cplx delta = left + right - whole;
        if (d <= 0 || std::abs(delta) <= 15.0 * eps) return left + right + delta / 15.0;
        return rec(l, m, fl, flm, fm, left, eps / 2.0, d - 1) + rec(m, r, fm, frm, fr, right, eps / 2.0, d - 1);
    };
    const double m = 0.5 * (a + b);
    const cplx fa = f(a), fm = f(m), fb = f(b);
    return rec(a, b, fa, fm, fb, (b - a) / 6.0 * (fa + 4.0 * fm + fb), tol, depth);
}

// Solution of -f'' - k^2 f = g on (0, inf), f(0) = 0, through the Dirichlet kernel
//   G(x, y) = sin(k min(x,y)) e^{ik max(x,y)} / k.
inline cplx dirichlet_half_line(const std::function<double(double)>& g, cplx k, double x, double cutoff) {
    const cplx inner = simpson([&](double y) { return std::sin(k * y) * g(y); }, 0.0, x, 1e-13);
    const cplx outer = simpson([&](double y) { return std::exp(I * k * y) * g(y); }, x, cutoff, 1e-13);
    return (std::exp(I * k * x) * inner + std::sin(k * x) * outer) / k;
}

// f'(0+) of the half-line Dirichlet solution by a one-sided five-point stencil.
inline cplx dirichlet_derivative_at_zero(const std::function<double(double)>& g, cplx k, double cutoff) {
    const double h = 1e-3 / std::max(1.0, std::abs(k));
    cplx f[5];
    f[0] = 0.0;
    for (int j = 1; j < 5; ++j) f[j] = dirichlet_half_line(g, k, j * h, cutoff);
    return (-25.0 * f[0] + 48.0 * f[1] - 36.0 * f[2] + 16.0 * f[3] - 3.0 * f[4]) / (12.0 * h);
}

/// || (A_T - z)^{-1} g - (A_F - z)^{-1} g ||^2 for g(x) = e^{-|x|}, z = k^2, Im k > 0,
/// built from the Friedrichs resolvent (Dirichlet at 0 on both sides) plus the
/// correction c1 h1 + c2 h2 fixed by the boundary condition
///   T (f(0+) + f'(0+), f(0-) - f'(0-)) = (f(0+), f(0-)) / 2,
/// with h1 = e^{ik|x|}, h2 = -sgn(x) e^{ik|x|}.
inline double resolvent_difference_norm2(const Mat2& T, cplx k) {
    const auto g = [](double y) { return std::exp(-std::abs(y)); };
    const double cutoff = 45.0;
    const cplx dp = dirichlet_derivative_at_zero(g, k, cutoff);  // f_F'(0+)
    const cplx dm = -dirichlet_derivative_at_zero(g, k, cutoff); // f_F'(0-), g even
    // f(0+) = c1 - c2, f(0-) = c1 + c2
    // f'(0+) = dp + ik c1 - ik c2, f'(0-) = dm - ik c1 - ik c2
    // u = f(0+) + f'(0+) = (1 + ik) c1 - (1 + ik) c2 + dp
    // v = f(0-) - f'(0-) = (1 + ik) c1 + (1 + ik) c2 - dm
    const cplx q = 1.0 + I * k;
    // T (u, v) - (f(0+), f(0-)) / 2 = 0, linear in (c1, c2)
    const cplx a11 = T(0, 0) * q + T(0, 1) * q - 0.5, a12 = -T(0, 0) * q + T(0, 1) * q + 0.5;
    const cplx a21 = T(1, 0) * q + T(1, 1) * q - 0.5, a22 = -T(1, 0) * q + T(1, 1) * q - 0.5;
    const cplx r1 = -(T(0, 0) * dp - T(0, 1) * dm), r2 = -(T(1, 0) * dp - T(1, 1) * dm);
    const cplx det = a11 * a22 - a12 * a21;
    const cplx c1 = (r1 * a22 - a12 * r2) / det, c2 = (a11 * r2 - a21 * r1) / det;
    const double L = 60.0 / k.imag();
    const double scale = std::norm(c1) + std::norm(c2);
    const double right =
        simpson([&](double x) { return cplx{std::norm((c1 - c2) * std::exp(I * k * x))}; }, 0.0, L, 1e-11 * scale).real();
    const double left =
        simpson([&](double x) { return cplx{std::norm((c1 + c2) * std::exp(-I * k * x))}; }, -L, 0.0, 1e-11 * scale).real();
    return right + left;
}

inline double rel_err(cplx got, cplx want) {
    const double d = std::abs(got - want);
    return want == 0.0 ? d : d / std::abs(want);
}

/// Largest entrywise relative error (absolute where the expected entry is zero).
inline double max_rel_err(const Mat2& got, const Mat2& want) {
    double e = 0.0;
    for (int j = 0; j < 4; ++j) e = std::max(e, rel_err(got.m[j], want.m[j]));
    return e;
}

inline cplx random_complex(std::mt19937_64& rng, double radius) {
    std::uniform_real_distribution<double> u(-radius, radius);
    return {u(rng), u(rng)};
}

inline Mat2 random_matrix(std::mt19937_64& rng, double radius = 1.0) {
    return {random_complex(rng, radius), random_complex(rng, radius), random_complex(rng, radius),
            random_complex(rng, radius)};
}

} // namespace oracle
