#pragma once

#include <array>
#include <cmath>

#include "zrs/smatrix.hpp"

namespace zrs {

using Vec3 = std::array<double, 3>;

namespace detail {
inline double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
} // namespace detail

enum class Applicability { TwoImaginaryPoles, OneImaginaryPole, NotApplicable };

inline const char* to_string(Applicability a) {
    switch (a) {
    case Applicability::TwoImaginaryPoles: return "TwoImaginaryPoles";
    case Applicability::OneImaginaryPole: return "OneImaginaryPole";
    default: return "NotApplicable";
    }
}

/// Parameters of the metric e^{chi Q_alpha}, where Q_alpha acts on boundary data
/// as sigma_alpha = sum alpha_j sigma_j.
struct MetricSpec {
    Vec3 alpha{};
    double chi = 0.0;
    double kappa = 0.0; // Im g = kappa (Re g x alpha)
    Vec3 re_gamma{};
    Vec3 im_gamma{};

    /// Boundary-level metric E = cosh(chi) s0 + sinh(chi) sigma_alpha.
    Mat2 boundary_matrix() const {
        const PauliVector v{std::cosh(chi), std::sinh(chi) * alpha[0], std::sinh(chi) * alpha[1],
                            std::sinh(chi) * alpha[2]};
        return compose(v);
    }
};

/// Simple non-zero imaginary poles occur when det != 0 (two poles) or det = 0
/// (one pole), gamma0 is real and sum gamma_j^2 is real and positive.
inline Applicability check_applicability(const Interaction& i, const Tolerance& tol = {}) {
    if (is_hermitian(i, tol.base)) return Applicability::NotApplicable;
    const SMatrixFn s = SMatrixFn::build(i, tol);
    const PauliVector& g = i.gamma();
    const double eps = tol.applicability;
    if (std::abs(g.x0.imag()) > eps * (1.0 + std::abs(g.x0))) return Applicability::NotApplicable;
    const cplx xi2 = g.vector_square();
    const double scale = 1.0 + std::norm(g.x1) + std::norm(g.x2) + std::norm(g.x3);
    if (std::abs(xi2.imag()) > eps * scale || xi2.real() <= eps * scale)
        return Applicability::NotApplicable;
    return s.det() != 0.0 ? Applicability::TwoImaginaryPoles : Applicability::OneImaginaryPole;
}

/// Canonical metric: alpha orthogonal to Re g and Im g, oriented so that kappa >= 0,
/// kappa = |Im g| / |Re g| and tanh(chi) = kappa.
inline MetricSpec construct(const Interaction& i, const Tolerance& tol = {}) {
    if (check_applicability(i, tol) == Applicability::NotApplicable)
        throw NotApplicable("S-matrix poles are not simple non-zero imaginary");
    const PauliVector& g = i.gamma();
    MetricSpec m;
    m.re_gamma = {g.x1.real(), g.x2.real(), g.x3.real()};
    m.im_gamma = {g.x1.imag(), g.x2.imag(), g.x3.imag()};
    const double nr = detail::norm(m.re_gamma), ni = detail::norm(m.im_gamma);
    if (nr == 0.0 || ni == 0.0) throw DegenerateGamma("Re gamma or Im gamma vanishes");
    // Re x (Im x Re) = Im |Re|^2 when Re is orthogonal to Im, so alpha along Im x Re gives kappa > 0.
    const Vec3 c = detail::cross(m.im_gamma, m.re_gamma);
    const double nc = detail::norm(c);
    if (nc <= 1e-13 * nr * ni) throw DegenerateGamma("Re gamma and Im gamma are nearly collinear");
    m.alpha = {c[0] / nc, c[1] / nc, c[2] / nc};
    m.kappa = ni / nr;
    if (m.kappa >= 1.0) throw DegenerateGamma("|Im gamma| >= |Re gamma|");
    m.chi = std::atanh(m.kappa);
    return m;
}

struct IntertwiningReport {
    double residual = 0.0;         // max-norm of T^* E - E T
    bool positive_definite = false; // E Hermitian with both eigenvalues > 0
    double min_eigenvalue = 0.0;
};

inline IntertwiningReport verify_intertwining(const Interaction& i, const MetricSpec& m) {
    const Mat2 E = m.boundary_matrix();
    const Mat2& T = i.frakT();
    IntertwiningReport r;
    r.residual = (T.adjoint() * E - E * T).max_norm();
    const bool hermitian = (E - E.adjoint()).max_norm() <= 1e-14 * (1.0 + E.max_norm());
    const double half_tr = 0.5 * E.trace().real();
    const double disc = half_tr * half_tr - E.det().real();
    r.min_eigenvalue = half_tr - std::sqrt(std::max(disc, 0.0));
    r.positive_definite = hermitian && r.min_eigenvalue > 0.0;
    return r;
}

/// cosh(chi) = |Re g| / |(k- - k+) det T| from the two imaginary poles k+-.
inline double cosh_chi_from_poles(const Interaction& i, const Tolerance& tol = {}) {
    if (check_applicability(i, tol) != Applicability::TwoImaginaryPoles)
        throw NotApplicable("needs two simple imaginary poles (det T != 0)");
    const SMatrixFn s = SMatrixFn::build(i, tol);
    const cplx kp = k_of_theta(s.theta_plus().value());
    const cplx km = k_of_theta(s.theta_minus().value());
    const PauliVector& g = i.gamma();
    const double nr = std::sqrt(g.x1.real() * g.x1.real() + g.x2.real() * g.x2.real() +
                                g.x3.real() * g.x3.real());
    return nr / std::abs((km - kp) * s.det());
}

} // namespace zrs
