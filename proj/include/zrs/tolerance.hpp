#pragma once

namespace zrs {

/// Numerical thresholds used across the library.
///
/// Every field scales linearly with `base`, so a single override (see
/// `Tolerance::with_base`) widens or narrows all classification margins
/// together.
struct Tolerance {
    double base = 1e-12;        // singularity, admissibility, Hermiticity, pole tests
    double real_axis = 1e-9;    // |Im k0| <= real_axis * (1 + |k0|) => real-axis pole
    double double_root = 1e-10; // discriminant test, relative to squared coefficient scale
    double nilpotent = 1e-10;   // entrywise bound on N^2 in the exceptional-point certificate
    double applicability = 1e-10;

    static constexpr double default_base = 1e-12;

    static Tolerance with_base(double base) {
        const double s = base / default_base;
        Tolerance t;
        t.base = base;
        t.real_axis *= s;
        t.double_root *= s;
        t.nilpotent *= s;
        t.applicability *= s;
        return t;
    }
};

} // namespace zrs
