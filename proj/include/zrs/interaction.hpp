#pragma once

#include <cmath>
#include <optional>

#include "zrs/pauli.hpp"

namespace zrs {

/// Couplings of the singular potential
///   a<delta,.>delta + b<delta',.>delta + c<delta,.>delta' + d<delta',.>delta'.
struct PotentialABCD {
    cplx a{}, b{}, c{}, d{};

    /// ad - bc
    cplx det_T() const { return a * d - b * c; }

    /// 4 - det T + 2(a - d); vanishes exactly when -1 is an eigenvalue.
    cplx xi() const { return 4.0 - det_T() + 2.0 * (a - d); }

    /// True when the boundary matrix form exists (|xi| above the quadratic-scale threshold).
    bool admissible(double tol = Tolerance::default_base) const {
        const double s = 1.0 + std::abs(a) + std::abs(b) + std::abs(c) + std::abs(d);
        return std::abs(xi()) > tol * s * s;
    }

    friend bool operator==(const PotentialABCD&, const PotentialABCD&) = default;
};

/// A point interaction at x = 0, stored canonically by its boundary matrix.
///
/// The boundary condition reads
///   frakT (f(0+) + f'(0+), f(0-) - f'(0-))^T = 1/2 (f(0+), f(0-))^T.
/// `gamma` always holds decompose(frakT).
class Interaction {
public:
    Interaction() = default;

    static Interaction from_matrix(const Mat2& frakT) { return Interaction(frakT, std::nullopt); }

    static Interaction from_gamma(const PauliVector& gamma) {
        return Interaction(compose(gamma), std::nullopt);
    }

    /// Friedrichs extension (frakT = 0); S(k) = sigma0.
    static Interaction friedrichs() { return from_matrix(Mat2::zero()); }

    /// Krein extension (frakT = sigma0 / 2); S(k) = -sigma0.
    static Interaction krein() { return from_matrix(0.5 * Mat2::identity()); }

    static Interaction from_abcd(const PotentialABCD& p, double tol = Tolerance::default_base);

    const Mat2& frakT() const { return frakT_; }
    const PauliVector& gamma() const { return gamma_; }
    const std::optional<PotentialABCD>& origin() const { return origin_; }

    /// Matrix determinant of frakT.
    cplx det() const { return frakT_.det(); }

    /// Equality of the realised operator; provenance is ignored.
    friend bool operator==(const Interaction& a, const Interaction& b) { return a.frakT_ == b.frakT_; }

private:
    Interaction(const Mat2& frakT, std::optional<PotentialABCD> origin)
        : frakT_(frakT), gamma_(decompose(frakT)), origin_(origin) {}

    Mat2 frakT_ = Mat2::zero();
    PauliVector gamma_{};
    std::optional<PotentialABCD> origin_;
};

inline void require_admissible(const PotentialABCD& p, double tol) {
    if (!p.admissible(tol))
        throw NotRepresentable("4 - det T + 2(a - d) vanishes; -1 is an eigenvalue");
}

inline Interaction Interaction::from_abcd(const PotentialABCD& p, double tol) {
    require_admissible(p, tol);
    const cplx xi = p.xi();
    const cplx dT = p.det_T();
    const cplx s = 1.0 / (4.0 * xi);
    const Mat2 t{s * (xi + 2.0 * (p.b + p.c - p.a - p.d)), s * (4.0 + dT - 2.0 * (p.b - p.c)),
                 s * (4.0 + dT + 2.0 * (p.b - p.c)), s * (xi - 2.0 * (p.b + p.c + p.a + p.d))};
    return Interaction(t, p);
}

/// Pauli coefficients of frakT written directly in terms of (a, b, c, d).
inline PauliVector gamma_from_abcd(const PotentialABCD& p, double tol = Tolerance::default_base) {
    require_admissible(p, tol);
    const cplx xi = p.xi();
    return {(xi - 2.0 * (p.a + p.d)) / (4.0 * xi), (4.0 + p.det_T()) / (4.0 * xi),
            -I * (p.b - p.c) / (2.0 * xi), (p.b + p.c) / (2.0 * xi)};
}

/// Interaction whose boundary matrix is frakT^*; realises the adjoint operator.
inline Interaction adjoint(const Interaction& i) { return Interaction::from_matrix(i.frakT().adjoint()); }

inline bool is_hermitian(const Interaction& i, double tol = Tolerance::default_base) {
    const Mat2& t = i.frakT();
    return (t - t.adjoint()).max_norm() <= tol * (1.0 + t.max_norm());
}

} // namespace zrs
