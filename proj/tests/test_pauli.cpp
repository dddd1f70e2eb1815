#include <gtest/gtest.h>

#include <random>

#include "support/oracles.hpp"
#include "zrs/pauli.hpp"

using namespace zrs;

namespace {

void expect_near(cplx a, cplx b, double tol = 1e-15) { EXPECT_LE(std::abs(a - b), tol) << a << " vs " << b; }

void expect_near(const PauliVector& a, const PauliVector& b, double tol = 1e-15) {
    for (int j = 0; j < 4; ++j) expect_near(a[j], b[j], tol);
}

void expect_near(const Mat2& a, const Mat2& b, double tol = 1e-15) {
    for (int j = 0; j < 4; ++j) expect_near(a.m[j], b.m[j], tol);
}

} // namespace

TEST(Pauli, DecomposeBasisElements) {
    expect_near(decompose(pauli::sigma1), {0, 1, 0, 0});
    expect_near(decompose(Mat2::identity()), {1, 0, 0, 0});
    expect_near(decompose(pauli::sigma2), {0, 0, 1, 0});
    expect_near(decompose(pauli::sigma3), {0, 0, 0, 1});
}

TEST(Pauli, DecomposeRankOneMatrix) {
    const Mat2 t = (1.0 / 6.0) * Mat2{1, 1, 1, 1};
    expect_near(decompose(t), {1.0 / 6, 1.0 / 6, 0, 0});
}

TEST(Pauli, ComposeExamples) {
    expect_near(compose({1, 0, 0, 0}), Mat2::identity());
    expect_near(compose({0, 0, 1, 0}), Mat2{0, -I, I, 0});
    expect_near(compose({0.25, 0.25, 0, 0}), 0.125 * Mat2{2, 2, 2, 2});
}

TEST(Pauli, RoundTripOnRandomMatrices) {
    std::mt19937_64 rng(1);
    for (int n = 0; n < 1000; ++n) {
        const Mat2 m = oracle::random_matrix(rng);
        const Mat2 back = compose(decompose(m));
        // halving and re-adding is exact up to one rounding per entry
        for (int j = 0; j < 4; ++j) EXPECT_LE(std::abs(back.m[j] - m.m[j]), 4e-16 * (1.0 + std::abs(m.m[j])));
        const cplx d = m.det();
        EXPECT_LE(std::abs(det_pauli(decompose(m)) - d), 1e-13 * std::max(1.0, std::abs(d)) + 1e-15);
    }
}

TEST(Pauli, RoundTripExactOnDyadicEntries) {
    const Mat2 m{cplx{0.5, -0.25}, cplx{1, 2}, cplx{-3, 0.125}, cplx{4, -1}};
    EXPECT_EQ(compose(decompose(m)), m);
}

TEST(Pauli, DeterminantExamples) {
    expect_near(det_pauli({1, 0, 0, 0}), 1.0);
    expect_near(det_pauli({0, 1, 0, 0}), -1.0);
    expect_near(det_pauli({0.25, 0.25, 0.125 * I, 0}), 1.0 / 64.0);
}

TEST(Pauli, InverseExamples) {
    expect_near(inverse_pauli({1, 0, 0, 0}), {1, 0, 0, 0});
    expect_near(inverse_pauli({0, 0, 0, 2}), {0, 0, 0, 0.5}); // (2 s3)^{-1} = s3 / 2
    expect_near(inverse_pauli({2, 1, 0, 0}), {2.0 / 3, -1.0 / 3, 0, 0});
}

TEST(Pauli, InverseMatchesDirectInversion) {
    std::mt19937_64 rng(2);
    for (int n = 0; n < 500; ++n) {
        const Mat2 m = oracle::random_matrix(rng);
        if (std::abs(m.det()) < 1e-3) continue;
        const Mat2 inv = compose(inverse_pauli(decompose(m)));
        expect_near(inv * m, Mat2::identity(), 1e-12 * (1.0 + inv.max_norm() * m.max_norm()));
        expect_near(inv, m.inverse(), 1e-12 * (1.0 + inv.max_norm()));
    }
}

TEST(Pauli, SingularInputThrows) {
    EXPECT_THROW(inverse_pauli({1, 1, 0, 0}), SingularMatrix);
    EXPECT_THROW(inverse_pauli({}), SingularMatrix);
    EXPECT_THROW((Mat2{1, 2, 2, 4}.inverse()), SingularMatrix);
}

TEST(Pauli, MultiplicationTable) {
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            PauliVector x{}, y{};
            const PauliVector e[4] = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
            x = e[a];
            y = e[b];
            expect_near(compose(multiply(x, y)), pauli::basis[a] * pauli::basis[b]);
        }
    }
    // s1 s3 = -i s2
    expect_near(pauli::sigma1 * pauli::sigma3, -I * pauli::sigma2);
}

TEST(Pauli, ProductRuleOnRandomVectors) {
    std::mt19937_64 rng(3);
    for (int n = 0; n < 200; ++n) {
        const PauliVector a = decompose(oracle::random_matrix(rng));
        const PauliVector b = decompose(oracle::random_matrix(rng));
        expect_near(compose(multiply(a, b)), compose(a) * compose(b), 1e-14);
    }
}
