#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "zrs/metric.hpp"
#include "zrs/smatrix.hpp"

namespace zrs {

enum class Sheet { Physical, RealAxis, Nonphysical, Infinity };
enum class Similarity { SelfAdjoint, SimilarToSelfAdjoint, NotSimilar, Undetermined };
enum class Region { I, II, III, Undetermined };

inline const char* to_string(Sheet s) {
    switch (s) {
    case Sheet::Physical: return "Physical";
    case Sheet::RealAxis: return "RealAxis";
    case Sheet::Nonphysical: return "Nonphysical";
    default: return "Infinity";
    }
}

inline const char* to_string(Similarity s) {
    switch (s) {
    case Similarity::SelfAdjoint: return "SelfAdjoint";
    case Similarity::SimilarToSelfAdjoint: return "SimilarToSelfAdjoint";
    case Similarity::NotSimilar: return "NotSimilar";
    default: return "Undetermined";
    }
}

inline const char* to_string(Region r) {
    switch (r) {
    case Region::I: return "I";
    case Region::II: return "II";
    case Region::III: return "III";
    default: return "Undetermined";
    }
}

/// A pole of S. `order` is the effective order after numerator cancellation,
/// `multiplicity` the multiplicity of the underlying root of p.
struct PoleReport {
    Extended location = Extended::infinity();
    int order = 1;
    int multiplicity = 1;
    Sheet sheet = Sheet::Infinity;
    cplx z{}; // k0^2, meaningful for finite poles
};

struct SpectralSingularities {
    std::vector<double> values; // z = k0^2 >= 0
    bool at_infinity = false;
};

struct SpectralClassification {
    std::vector<PoleReport> poles;
    std::vector<cplx> eigenvalues;
    std::vector<double> spectral_singularities;
    bool singularity_at_infinity = false;
    std::vector<cplx> exceptional_points;
    Similarity similarity = Similarity::Undetermined;
    Region region = Region::Undetermined;
    bool has_negative_eigenvalues = false;
    bool constant_s = false;
};

namespace detail {

inline Sheet sheet_of(cplx k, const Tolerance& tol) {
    const double eps = tol.real_axis * (1.0 + std::abs(k));
    if (std::abs(k.imag()) <= eps) return Sheet::RealAxis;
    return k.imag() > 0.0 ? Sheet::Physical : Sheet::Nonphysical;
}

inline bool is_real_value(cplx z, const Tolerance& tol) {
    return std::abs(z.imag()) <= tol.real_axis * (1.0 + std::abs(z));
}

struct Root {
    cplx k;
    int multiplicity;
};

// Roots of p in closed form; an exact zero root is produced whenever p(0) was snapped.
inline std::vector<Root> roots_of_p(const SMatrixFn& s) {
    const auto& c = s.p_coeffs();
    const Tolerance& tol = s.tolerance();
    std::vector<Root> roots;
    if (c[2] != 0.0) {
        const double scale = std::max({std::abs(c[0]), std::abs(c[1]), std::abs(c[2])});
        const cplx xi2 = s.gamma().vector_square();
        // discriminant of p in k is -16 xi^2
        if (16.0 * std::abs(xi2) <= tol.double_root * scale * scale) {
            const cplx k0 = c[0] == 0.0 ? cplx{0.0} : k_of_theta(1.0 / s.gamma().x0);
            roots.push_back({k0, 2});
        } else {
            cplx kp = k_of_theta(s.theta_plus().value());
            cplx km = k_of_theta(s.theta_minus().value());
            if (c[0] == 0.0) (std::abs(kp) <= std::abs(km) ? kp : km) = 0.0;
            roots.push_back({kp, 1});
            roots.push_back({km, 1});
        }
    } else if (std::abs(c[1]) > tol.base * std::max(1.0, std::abs(c[0]))) {
        roots.push_back({c[0] == 0.0 ? cplx{0.0} : -c[0] / c[1], 1});
    }
    return roots;
}

} // namespace detail

/// Poles of S with effective order. A root k0 of p of multiplicity m gives order
/// m, capped at 1 for scalar frakT, reduced by one at k0 = 0 (the 4ik factor);
/// zero-order roots are dropped. A pole at infinity is reported iff p is
/// constant and frakT != 0.
inline std::vector<PoleReport> find_poles(const SMatrixFn& s) {
    const Tolerance& tol = s.tolerance();
    std::vector<PoleReport> poles;
    const auto roots = detail::roots_of_p(s);
    for (const auto& r : roots) {
        int order = s.is_scalar() ? std::min(r.multiplicity, 1) : r.multiplicity;
        if (r.k == 0.0) --order;
        if (order <= 0) continue;
        PoleReport pr;
        pr.location = r.k;
        pr.order = order;
        pr.multiplicity = r.multiplicity;
        pr.sheet = detail::sheet_of(r.k, tol);
        pr.z = r.k * r.k;
        poles.push_back(pr);
    }
    if (roots.empty() && s.p_coeffs()[2] == 0.0 && !s.is_zero()) {
        // constant p: S(k) = s0 + 4ik T / p grows linearly
        PoleReport pr;
        pr.order = 1;
        pr.multiplicity = 0;
        pr.sheet = Sheet::Infinity;
        poles.push_back(pr);
    }
    std::sort(poles.begin(), poles.end(), [](const PoleReport& a, const PoleReport& b) {
        if (a.location.is_infinite() != b.location.is_infinite()) return b.location.is_infinite();
        if (a.location.is_infinite()) return false;
        const cplx x = a.location.value(), y = b.location.value();
        if (x.imag() != y.imag()) return x.imag() > y.imag();
        return x.real() < y.real();
    });
    return poles;
}

/// z = k0^2 for every real-axis pole; infinity flag for a pole at infinity.
inline SpectralSingularities spectral_singularities(const SMatrixFn& s) {
    SpectralSingularities out;
    for (const auto& p : find_poles(s)) {
        if (p.sheet == Sheet::Infinity) out.at_infinity = true;
        if (p.sheet == Sheet::RealAxis) {
            const double kr = p.location.value().real();
            out.values.push_back(kr * kr);
        }
    }
    return out;
}

/// sigma0 - theta_{k0} frakT is nonzero and squares to zero.
inline bool nilpotent_certificate(const SMatrixFn& s, cplx k0) {
    const Mat2& T = s.interaction().frakT();
    const cplx th = theta_of(k0);
    const Mat2 N = Mat2::identity() - th * T;
    const double eps = s.tolerance().nilpotent;
    const double nN = N.max_norm();
    if (nN <= eps * std::max(1.0, std::abs(th) * T.max_norm())) return false;
    return (N * N).max_norm() <= eps * std::max(1.0, nN) * std::max(1.0, nN);
}

/// z = k0^2 for each physical-sheet pole of order 2, cross-checked against the
/// nilpotency certificate.
inline std::vector<cplx> exceptional_points(const SMatrixFn& s) {
    std::vector<cplx> out;
    for (const auto& p : find_poles(s)) {
        if (p.sheet != Sheet::Physical) continue;
        const bool by_order = p.order == 2;
        const bool by_matrix = nilpotent_certificate(s, p.location.value());
        if (by_order != by_matrix)
            throw InternalInconsistency("pole order and nilpotency certificate disagree");
        if (by_order) out.push_back(p.z);
    }
    return out;
}

namespace detail {

// Simple, non-zero, purely imaginary poles together with the gamma conditions
// that admit an explicit metric.
inline bool imaginary_simple_poles(const SMatrixFn& s, const std::vector<PoleReport>& poles) {
    if (check_applicability(s.interaction(), s.tolerance()) == Applicability::NotApplicable) return false;
    const Tolerance& tol = s.tolerance();
    for (const auto& p : poles) {
        if (p.location.is_infinite() || p.order != 1) return false;
        const cplx k = p.location.value();
        if (k == 0.0 || std::abs(k.real()) > tol.real_axis * (1.0 + std::abs(k))) return false;
    }
    return true;
}

} // namespace detail

/// Similarity verdict. Positive answers come only from the two sufficient
/// conditions (all poles non-physical; simple non-zero imaginary poles with an
/// explicit metric); negative answers from spectral singularities, exceptional
/// points or non-real eigenvalues. Anything else is Undetermined.
inline Similarity similarity_class(const SMatrixFn& s) {
    const Tolerance& tol = s.tolerance();
    if (is_hermitian(s.interaction(), tol.base)) return Similarity::SelfAdjoint;
    const auto poles = find_poles(s);
    bool obstruction = !exceptional_points(s).empty();
    bool all_nonphysical = true;
    for (const auto& p : poles) {
        if (p.sheet == Sheet::RealAxis || p.sheet == Sheet::Infinity) obstruction = true;
        if (p.sheet == Sheet::Physical && !detail::is_real_value(p.z, tol)) obstruction = true;
        if (p.sheet != Sheet::Nonphysical) all_nonphysical = false;
    }
    if (obstruction) return Similarity::NotSimilar;
    if (all_nonphysical) return Similarity::SimilarToSelfAdjoint;
    if (detail::imaginary_simple_poles(s, poles)) return Similarity::SimilarToSelfAdjoint;
    return Similarity::Undetermined;
}

/// I: a non-real eigenvalue; II: real spectrum with a spectral singularity or an
/// exceptional point; III: similar to self-adjoint. Checked in that order.
inline Region region(const SpectralClassification& c, const Tolerance& tol = {}) {
    for (const auto& z : c.eigenvalues)
        if (!detail::is_real_value(z, tol)) return Region::I;
    if (!c.spectral_singularities.empty() || c.singularity_at_infinity || !c.exceptional_points.empty())
        return Region::II;
    if (c.similarity == Similarity::SelfAdjoint || c.similarity == Similarity::SimilarToSelfAdjoint)
        return Region::III;
    return Region::Undetermined;
}

inline SpectralClassification classify(const SMatrixFn& s) {
    const Tolerance& tol = s.tolerance();
    SpectralClassification c;
    c.poles = find_poles(s);
    for (const auto& p : c.poles) {
        if (p.sheet != Sheet::Physical) continue;
        c.eigenvalues.push_back(p.z);
        if (detail::is_real_value(p.z, tol) && p.z.real() < 0.0) c.has_negative_eigenvalues = true;
    }
    const auto sing = spectral_singularities(s);
    c.spectral_singularities = sing.values;
    c.singularity_at_infinity = sing.at_infinity;
    c.exceptional_points = exceptional_points(s);
    c.similarity = similarity_class(s);
    c.region = region(c, tol);
    c.constant_s = is_constant(s).constant;
    return c;
}

/// Rectangle of sample points k in the upper half-plane.
struct ScanGrid {
    double re_min = 0.01, re_max = 10.0;
    double im_min = 0.001, im_max = 1.0;
    int n_re = 100, n_im = 100;
};

struct ScanReport {
    double max_norm = 0.0;
    cplx argmax{};
};

/// max over the grid of |Phi(k)|_max, Phi(k) = (Re k / p(k)) (frakT - theta_k det s0).
/// Bounded on C+ whenever the operator is similar to a self-adjoint one.
inline ScanReport boundedness_scan(const SMatrixFn& s, const ScanGrid& g) {
    if (g.n_re < 2 || g.n_im < 2) throw std::invalid_argument("scan grid needs at least 2x2 points");
    if (g.im_min <= 0.0) throw std::invalid_argument("scan grid must lie in the upper half-plane");
    const Mat2& T = s.interaction().frakT();
    ScanReport r;
    for (int a = 0; a < g.n_re; ++a) {
        const double x = g.re_min + (g.re_max - g.re_min) * a / (g.n_re - 1);
        for (int b = 0; b < g.n_im; ++b) {
            const double y = g.im_min + (g.im_max - g.im_min) * b / (g.n_im - 1);
            const cplx k{x, y};
            const cplx pk = s.p(k);
            double v;
            if (pk == 0.0) {
                v = std::numeric_limits<double>::infinity();
            } else {
                const Mat2 phi = (x / pk) * (T - theta_of(k) * s.det() * Mat2::identity());
                v = phi.max_norm();
            }
            if (v > r.max_norm) {
                r.max_norm = v;
                r.argmax = k;
            }
        }
    }
    return r;
}

} // namespace zrs
