#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "zrs/smatrix.hpp"

namespace zrs {

struct FTransform {
    cplx plus{};  // int_0^inf e^{iks} g(s) ds
    cplx minus{}; // int_{-inf}^0 e^{-iks} g(s) ds
};

enum class TestKind { PlusExponential, MinusExponential, Custom };

/// A test function g in L2(R).
///
/// PlusExponential: g(x) = e^{-i conj(k) x} for x > 0, zero for x < 0.
/// MinusExponential: g(x) = e^{i conj(k) x} for x < 0, zero for x > 0.
/// Custom: any callable; an optional closed-form transform skips quadrature.
struct TestFunction {
    TestKind kind = TestKind::Custom;
    cplx k{};
    std::function<cplx(double)> fn;
    std::function<FTransform(cplx)> transform;
    std::optional<double> norm2;

    static TestFunction plus(cplx k) {
        if (!(k.imag() > 0.0)) throw std::invalid_argument("exponential test function needs Im k > 0");
        return {TestKind::PlusExponential, k, {}, {}, {}};
    }
    static TestFunction minus(cplx k) {
        if (!(k.imag() > 0.0)) throw std::invalid_argument("exponential test function needs Im k > 0");
        return {TestKind::MinusExponential, k, {}, {}, {}};
    }
    static TestFunction custom(std::function<cplx(double)> g,
                               std::function<FTransform(cplx)> closed_form = {},
                               std::optional<double> norm_squared = {}) {
        return {TestKind::Custom, {}, std::move(g), std::move(closed_form), norm_squared};
    }

    /// e^{-|x|}, with Fg = (1/(1-ik), 1/(1-ik)) and norm^2 = 1.
    static TestFunction symmetric_exponential() {
        return custom([](double x) { return cplx{std::exp(-std::abs(x))}; },
                      [](cplx k) {
                          const cplx v = 1.0 / (1.0 - I * k);
                          return FTransform{v, v};
                      },
                      1.0);
    }

    cplx operator()(double x) const {
        switch (kind) {
        case TestKind::PlusExponential: return x > 0.0 ? std::exp(-I * std::conj(k) * x) : cplx{};
        case TestKind::MinusExponential: return x < 0.0 ? std::exp(I * std::conj(k) * x) : cplx{};
        default: return fn(x);
        }
    }

    double norm_squared() const {
        if (kind != TestKind::Custom) return 1.0 / (2.0 * k.imag());
        if (norm2) return *norm2;
        using boost::math::quadrature::gauss_kronrod;
        const double inf = std::numeric_limits<double>::infinity();
        return gauss_kronrod<double, 15>::integrate([this](double x) { return std::norm(fn(x)); }, -inf,
                                                    inf, 25, 1e-12);
    }
};

namespace detail {

// Adaptive GK15 on [a, b]; `tol` is relative to the L1 norm of the integrand.
template <class F>
cplx gk_integrate(F f, double a, double b, double tol = 1e-12, unsigned depth = 25) {
    using boost::math::quadrature::gauss_kronrod;
    return gauss_kronrod<double, 15>::integrate(f, a, b, depth, tol);
}

} // namespace detail

/// Fg at k in C+. Exponentials are exact; custom functions are integrated on
/// [0, 40/Im k] (and its mirror) after checking that the tail is negligible.
inline FTransform f_transform(const TestFunction& g, cplx k) {
    if (!(k.imag() > 0.0)) throw std::invalid_argument("f_transform needs Im k > 0");
    switch (g.kind) {
    case TestKind::PlusExponential: return {I / (k - std::conj(g.k)), 0.0};
    case TestKind::MinusExponential: return {0.0, I / (k - std::conj(g.k))};
    default: break;
    }
    if (g.transform) return g.transform(k);
    const double L = 40.0 / k.imag();
    auto fp = [&](double s) { return std::exp(I * k * s) * g.fn(s); };
    auto fm = [&](double s) { return std::exp(-I * k * s) * g.fn(s); };
    FTransform out{detail::gk_integrate(fp, 0.0, L), detail::gk_integrate(fm, -L, 0.0)};
    const cplx tail_p = detail::gk_integrate(fp, L, 2.0 * L);
    const cplx tail_m = detail::gk_integrate(fm, -2.0 * L, -L);
    const double abs_tol = 1e-10;
    if (!std::isfinite(std::abs(out.plus)) || !std::isfinite(std::abs(out.minus)) ||
        std::abs(tail_p) > abs_tol || std::abs(tail_m) > abs_tol)
        throw NonConvergent("test function does not decay fast enough");
    return out;
}

/// || [(A_T - z)^{-1} - (A_F - z)^{-1}] g || for z = k^2, Im k > 0, computed as
/// (1/sqrt(Im k)) |(s0 + i s2)(T - theta_k det s0) / p(k) Fg|.
inline double resolvent_diff_norm(const SMatrixFn& s, cplx k, const TestFunction& g) {
    if (!(k.imag() > 0.0)) throw std::invalid_argument("resolvent_diff_norm needs Im k > 0");
    const cplx pk = s.p_factored(k);
    const double thr = s.tolerance().base * (1.0 + std::norm(k)) * std::max(1.0, std::abs(s.det()));
    if (std::abs(pk) <= thr) throw AtEigenvalue("z = k^2 is an eigenvalue");
    const Mat2 M = (s.interaction().frakT() - theta_of(k) * s.det() * Mat2::identity()) / pk;
    const FTransform F = f_transform(g, k);
    const auto v = M.apply({F.plus, F.minus});
    // (s0 + i s2) = [[1, 1], [-1, 1]]
    const cplx w0 = v[0] + v[1], w1 = v[1] - v[0];
    return std::sqrt((std::norm(w0) + std::norm(w1)) / k.imag());
}

inline double resolvent_diff_norm(const Interaction& i, cplx k, const TestFunction& g,
                                  const Tolerance& tol = {}) {
    return resolvent_diff_norm(SMatrixFn::build(i, tol), k, g);
}

/// Numerical evidence for the resolvent bound along Im z = epsilon:
///   epsilon * int_{xi_min}^{xi_max} || [(A_T - z)^{-1} - (A_F - z)^{-1}] g ||^2 dxi,
/// z = xi + i epsilon, k = sqrt(z) in the first quadrant, g = e^{-x} on x > 0
/// (the one-sided exponential with parameter i; it has both parities, so
/// interactions acting in only one parity sector are still seen).
/// The interval is cut into n panels, each integrated adaptively. Sampling a
/// few epsilons is evidence only; the bound concerns every epsilon and g.
inline double similarity_integral_probe(const Interaction& i, double epsilon, double xi_min,
                                        double xi_max, int n = 64, const Tolerance& tol = {}) {
    if (n < 16) throw std::invalid_argument("probe needs at least 16 panels");
    if (!(epsilon > 0.0)) throw std::invalid_argument("probe needs epsilon > 0");
    if (!(xi_max > xi_min)) throw std::invalid_argument("probe needs xi_min < xi_max");
    const SMatrixFn s = SMatrixFn::build(i, tol);
    if (s.is_zero()) return 0.0;
    const TestFunction g = TestFunction::plus(I);
    auto f = [&](double xi) {
        const double r = resolvent_diff_norm(s, std::sqrt(cplx{xi, epsilon}), g);
        return r * r;
    };
    using boost::math::quadrature::gauss_kronrod;
    const double h = (xi_max - xi_min) / n;
    double sum = 0.0;
    for (int j = 0; j < n; ++j) {
        const double a = xi_min + j * h;
        const double b = j + 1 == n ? xi_max : a + h;
        sum += gauss_kronrod<double, 15>::integrate(f, a, b, 20, 1e-9);
    }
    return epsilon * sum;
}

} // namespace zrs
