#pragma once

#include <array>
#include <cmath>
#include <optional>

#include "zrs/interaction.hpp"

namespace zrs {

/// A point of the extended complex plane C u {infinity}.
class Extended {
public:
    constexpr Extended(cplx v) : value_(v) {}
    static constexpr Extended infinity() { return Extended(); }

    constexpr bool is_infinite() const { return !value_.has_value(); }
    constexpr bool is_finite() const { return value_.has_value(); }

    /// Finite value; throws std::bad_optional_access at infinity.
    constexpr cplx value() const { return value_.value(); }

private:
    constexpr Extended() = default;
    std::optional<cplx> value_;
};

/// theta_k = 2(1 + ik): the spectral parameter as it enters the boundary condition.
inline cplx theta_of(cplx k) { return 2.0 * (1.0 + I * k); }

/// Inverse of theta_of: k = i(1 - theta/2).
inline cplx k_of_theta(cplx theta) { return I * (1.0 - 0.5 * theta); }

/// Traveling-wave amplitudes at a fixed k with Re k != 0.
struct ScatteringCoefficients {
    cplx r_right, t_right, r_left, t_left;
    cplx delta_k; // (R^r + e^{ia})(R^l + e^{ia}) - T^r T^l
    cplx phase;   // e^{ia} = (1 - i conj(k)) / (1 + ik)
};

/// The S-matrix S(k) = [s0 - 2(1-ik)T][s0 - 2(1+ik)T]^{-1} of an interaction,
/// kept through its defining data and evaluated in closed form.
///
/// The determinant is snapped to zero when it is negligible against the scale of
/// the Pauli coefficients; the same snapping is applied to p(0). Both decisions
/// fix the degree and the root structure of p once, at build time.
class SMatrixFn {
public:
    static SMatrixFn build(const Interaction& i, const Tolerance& tol = {}) {
        SMatrixFn s;
        s.interaction_ = i;
        s.tol_ = tol;
        const PauliVector& g = i.gamma();
        s.gamma_ = g;

        const double scale = std::max(g.norm_squared(), 0.0);
        s.is_zero_ = i.frakT().max_norm() <= tol.base;
        s.is_scalar_ = g.vector_max_abs() <= tol.base * std::max(std::abs(g.x0), tol.base);

        cplx det = i.det();
        if (std::abs(det) <= tol.base * scale) det = 0.0;
        s.det_ = det;

        // p(k) = 4(1+ik)^2 D - 4(1+ik) g0 + 1 = c2 k^2 + c1 k + c0
        cplx c0 = 4.0 * det - 4.0 * g.x0 + 1.0;
        const cplx c1 = 4.0 * I * (2.0 * det - g.x0);
        const cplx c2 = -4.0 * det;
        if (std::abs(c0) <= tol.base * (1.0 + 4.0 * std::abs(det) + 4.0 * std::abs(g.x0))) c0 = 0.0;
        s.p_ = {c0, c1, c2};

        const cplx xi2 = g.vector_square();
        const cplx xi = std::sqrt(xi2);
        s.xi_ = xi;
        if (det != 0.0) {
            // theta+- = 1/(g0 +- xi); the smaller denominator goes through D = (g0+xi)(g0-xi).
            const cplx sp = g.x0 + xi, sm = g.x0 - xi;
            if (std::abs(sp) >= std::abs(sm)) {
                s.theta_plus_ = 1.0 / sp;
                s.theta_minus_ = sp / det;
            } else {
                s.theta_minus_ = 1.0 / sm;
                s.theta_plus_ = sm / det;
            }
        } else {
            const cplx sp = g.x0 + xi, sm = g.x0 - xi;
            const double lim = tol.base * std::max(1.0, std::sqrt(scale));
            s.theta_plus_ = std::abs(sp) <= lim ? Extended::infinity() : Extended(1.0 / sp);
            s.theta_minus_ = std::abs(sm) <= lim ? Extended::infinity() : Extended(1.0 / sm);
            if (s.theta_plus_.is_finite() && s.theta_minus_.is_finite()) {
                // D = 0 forces one of g0 +- xi to vanish; pick the smaller.
                if (std::abs(sp) < std::abs(sm))
                    s.theta_plus_ = Extended::infinity();
                else
                    s.theta_minus_ = Extended::infinity();
            }
        }
        return s;
    }

    const Interaction& interaction() const { return interaction_; }
    const PauliVector& gamma() const { return gamma_; }
    const Tolerance& tolerance() const { return tol_; }

    /// det frakT after snapping (exactly zero when negligible).
    cplx det() const { return det_; }
    /// Principal square root of gamma1^2 + gamma2^2 + gamma3^2.
    cplx xi() const { return xi_; }
    Extended theta_plus() const { return theta_plus_; }
    Extended theta_minus() const { return theta_minus_; }

    /// Coefficients (c0, c1, c2) of p(k) in ascending powers of k.
    const std::array<cplx, 3>& p_coeffs() const { return p_; }

    /// Characteristic polynomial p(k) = det(s0 - theta_k T).
    cplx p(cplx k) const { return p_[0] + k * (p_[1] + k * p_[2]); }

    /// p(k) = det (theta_k - theta+)(theta_k - theta-) when det != 0; keeps
    /// relative accuracy next to the roots, where the monomial form cancels.
    cplx p_factored(cplx k) const {
        if (det_ == 0.0) return p(k);
        const cplx th = theta_of(k);
        return det_ * (th - theta_plus_.value()) * (th - theta_minus_.value());
    }

    bool is_zero() const { return is_zero_; }
    bool is_scalar() const { return is_scalar_; }

    /// S(k) = s0 + 4ik (T - theta_k D s0) / p(k), with the k-factor and the
    /// scalar-T factor cancelled structurally so that removable singularities
    /// evaluate to their limits.
    Mat2 eval(cplx k) const {
        const Mat2& T = interaction_.frakT();
        if (is_scalar_) {
            const cplx g0 = gamma_.x0;
            if (g0 == 0.0) return Mat2::identity();
            const cplx d0 = 1.0 - 2.0 * g0;
            cplx factor;
            if (std::abs(d0) <= tol_.base * (1.0 + std::abs(g0))) {
                factor = -2.0; // 4ik g0 / (-2ik g0)
            } else {
                const cplx den = d0 - 2.0 * I * g0 * k;
                if (std::abs(den) <= tol_.base * (1.0 + std::abs(k)) * std::max(1.0, std::abs(g0)))
                    throw AtPole("S(k) is singular at this k");
                factor = 4.0 * I * k * g0 / den;
            }
            return (1.0 + factor) * Mat2::identity();
        }
        const Mat2 M = T - theta_of(k) * det_ * Mat2::identity();
        if (p_[0] == 0.0) {
            const cplx q = p_[1] + p_[2] * k; // p(k) / k
            if (std::abs(q) <= pole_threshold(k) / (1.0 + std::abs(k)))
                throw AtPole("S(k) is singular at this k");
            return Mat2::identity() + (4.0 * I / q) * M;
        }
        const cplx pk = p(k);
        if (std::abs(pk) <= pole_threshold(k)) throw AtPole("S(k) is singular at this k");
        return Mat2::identity() + (4.0 * I * k / pk) * M;
    }

    /// Direct product form [s0 - 2(1-ik)T][s0 - 2(1+ik)T]^{-1}.
    Mat2 eval_direct(cplx k) const {
        const Mat2& T = interaction_.frakT();
        const Mat2 A = Mat2::identity() - 2.0 * (1.0 - I * k) * T;
        const Mat2 B = Mat2::identity() - theta_of(k) * T;
        try {
            return A * B.inverse(tol_.base);
        } catch (const SingularMatrix&) {
            throw AtPole("s0 - 2(1+ik)T is singular");
        }
    }

    /// Form through theta+- (det != 0) or through 4ik/(1 - 2 theta_k g0) (det = 0).
    Mat2 eval_theta(cplx k) const {
        const Mat2& T = interaction_.frakT();
        const cplx th = theta_of(k);
        if (det_ != 0.0) {
            const cplx tp = theta_plus_.value(), tm = theta_minus_.value();
            const cplx den = (th - tp) * (th - tm);
            if (std::abs(den) <= tol_.base * std::max({1.0, std::norm(th), std::abs(tp * tm)}))
                throw AtPole("theta_k coincides with theta+-");
            return Mat2::identity() + (4.0 * I * k / den) * (tm * tp * T - th * Mat2::identity());
        }
        const cplx den = 1.0 - 2.0 * th * gamma_.x0;
        if (std::abs(den) <= tol_.base * (1.0 + std::abs(th * gamma_.x0)))
            throw AtPole("1 - 2 theta_k gamma0 vanishes");
        return Mat2::identity() + (4.0 * I * k / den) * T;
    }

    /// s_j(k) of S(k) = sum s_j sigma_j. Falls back to decompose(eval(k)) where the
    /// closed-form denominators vanish but S(k) has a removable singularity.
    PauliVector pauli_components(cplx k) const {
        const cplx th = theta_of(k);
        const PauliVector& g = gamma_;
        if (det_ != 0.0) {
            const cplx tp = theta_plus_.value(), tm = theta_minus_.value();
            const cplx den = (th - tp) * (th - tm);
            if (std::abs(den) > tol_.base * std::max({1.0, std::norm(th), std::abs(tp * tm)})) {
                const cplx f = 4.0 * I * k / den;
                const cplx tt = tm * tp;
                return {1.0 + f * (tt * g.x0 - th), f * tt * g.x1, f * tt * g.x2, f * tt * g.x3};
            }
        } else {
            const cplx den = 1.0 - 2.0 * th * g.x0;
            if (std::abs(den) > tol_.base * (1.0 + std::abs(th * g.x0))) {
                const cplx f = 4.0 * I * k / den;
                return {1.0 + f * g.x0, f * g.x1, f * g.x2, f * g.x3};
            }
        }
        return decompose(eval(k));
    }

private:
    double pole_threshold(cplx k) const {
        return tol_.base * (1.0 + std::norm(k)) * std::max(1.0, std::abs(det_));
    }

    Interaction interaction_;
    PauliVector gamma_{};
    Tolerance tol_{};
    cplx det_{};
    cplx xi_{};
    Extended theta_plus_ = Extended::infinity();
    Extended theta_minus_ = Extended::infinity();
    std::array<cplx, 3> p_{};
    bool is_zero_ = true;
    bool is_scalar_ = true;
};

inline SMatrixFn build(const Interaction& i, const Tolerance& tol = {}) {
    return SMatrixFn::build(i, tol);
}

/// Outcome of the k-independence test.
struct ConstantS {
    bool constant = false;
    Mat2 value{};
};

/// S is constant on C exactly for frakT = 0, frakT = s0/2, or
/// frakT = s0/4 + sum g_j s_j with sum g_j^2 = 1/16.
inline ConstantS is_constant(const SMatrixFn& s) {
    const PauliVector& g = s.gamma();
    const double tol = s.tolerance().base;
    const bool vector_zero = g.vector_max_abs() <= tol;
    if (vector_zero && std::abs(g.x0) <= tol) return {true, Mat2::identity()};
    if (vector_zero && std::abs(g.x0 - 0.5) <= tol) return {true, -1.0 * Mat2::identity()};
    if (std::abs(g.x0 - 0.25) <= tol && std::abs(g.vector_square() - 1.0 / 16.0) <= tol) {
        const PauliVector v{0.0, -4.0 * g.x1, -4.0 * g.x2, -4.0 * g.x3};
        return {true, compose(v)};
    }
    return {false, {}};
}

/// Reflection/transmission amplitudes of the waves
///   f1 = e^{-i conj(k) x} + R^r e^{ikx} (x > 0),  T^r e^{-ikx} (x < 0)
///   f2 = T^l e^{ikx} (x > 0),  e^{i conj(k) x} + R^l e^{-ikx} (x < 0)
/// obtained by imposing the boundary condition on each wave.
inline ScatteringCoefficients scattering_coefficients(const Interaction& i, cplx k,
                                                      const Tolerance& tol = {}) {
    if (k.real() == 0.0) throw OnImaginaryAxis("scattering waves need Re k != 0");
    const Mat2& T = i.frakT();
    const cplx th = theta_of(k);
    // Both waves lead to (s0 - theta_k T) u = conj(theta_k) T e_j - e_j.
    const Mat2 A = Mat2::identity() - th * T;
    const cplx dA = A.det();
    if (std::abs(dA) <= tol.base * std::max(1.0, A.max_norm() * A.max_norm()))
        throw DegenerateSystem("boundary system is singular at this k");
    const cplx thc = std::conj(th);
    auto solve = [&](const std::array<cplx, 2>& rhs) -> std::array<cplx, 2> {
        return {(A(1, 1) * rhs[0] - A(0, 1) * rhs[1]) / dA, (A(0, 0) * rhs[1] - A(1, 0) * rhs[0]) / dA};
    };
    const auto u = solve({thc * T(0, 0) - 1.0, thc * T(1, 0)});
    const auto w = solve({thc * T(0, 1), thc * T(1, 1) - 1.0});

    ScatteringCoefficients c{};
    c.r_right = u[0];
    c.t_right = u[1];
    c.t_left = w[0];
    c.r_left = w[1];
    c.phase = (1.0 - I * std::conj(k)) / (1.0 + I * k);
    c.delta_k = (c.r_right + c.phase) * (c.r_left + c.phase) - c.t_right * c.t_left;
    return c;
}

/// S(k) = -(k / Re k) [[R^r + i Im k / k, T^l], [T^r, R^l + i Im k / k]].
inline Mat2 smatrix_from_coefficients(const ScatteringCoefficients& c, cplx k,
                                      const Tolerance& tol = {}) {
    if (k.real() == 0.0) throw OnImaginaryAxis("reflection form is undefined for Re k = 0");
    if (std::abs(c.delta_k) <= tol.base) throw DegenerateSystem("Delta_k vanishes");
    const cplx shift = I * k.imag() / k;
    const cplx f = -k / k.real();
    return {f * (c.r_right + shift), f * c.t_left, f * c.t_right, f * (c.r_left + shift)};
}

} // namespace zrs
