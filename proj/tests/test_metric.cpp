#include <gtest/gtest.h>

#include <random>

#include "support/oracles.hpp"
#include "zrs/metric.hpp"

using namespace zrs;

namespace {

constexpr double pi = 3.14159265358979323846;

const Interaction worked = Interaction::from_gamma({0.125, 0.25, 0.125 * I, 0.0});

// gamma0 real, Re g orthogonal to Im g with |Im g| < |Re g|
Interaction random_applicable(std::mt19937_64& rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    std::uniform_real_distribution<double> u(0.05, 0.95);
    for (;;) {
        Vec3 r{n(rng), n(rng), n(rng)};
        Vec3 w{n(rng), n(rng), n(rng)};
        const double rr = detail::dot(r, r);
        const double c = detail::dot(w, r) / rr;
        for (int j = 0; j < 3; ++j) w[j] -= c * r[j];
        const double scale = u(rng) * std::sqrt(rr) / detail::norm(w);
        const double g0 = n(rng);
        const PauliVector g{g0, {r[0], scale * w[0]}, {r[1], scale * w[1]}, {r[2], scale * w[2]}};
        if (std::abs(det_pauli(g)) < 1e-3) continue;
        return Interaction::from_gamma(g);
    }
}

} // namespace

TEST(Metric, Applicability) {
    EXPECT_EQ(check_applicability(worked), Applicability::TwoImaginaryPoles);
    EXPECT_NEAR(worked.det().real(), -1.0 / 32.0, 1e-16);
    for (double phi : {pi / 4, pi / 2, pi, 5.0}) {
        const cplx e = std::exp(I * phi);
        EXPECT_EQ(check_applicability(Interaction::from_abcd({-e, -1.0, 1.0, 1.0 / e})), Applicability::NotApplicable);
    }
    EXPECT_EQ(check_applicability(Interaction::krein()), Applicability::NotApplicable);
    // det = 0 with the same gamma conditions: g0^2 = sum g_j^2
    const double g0 = std::sqrt(3.0 / 64.0);
    EXPECT_EQ(check_applicability(Interaction::from_gamma({g0, 0.25, 0.125 * I, 0.0})),
              Applicability::OneImaginaryPole);
}

TEST(Metric, WorkedExample) {
    const MetricSpec m = construct(worked);
    EXPECT_NEAR(m.kappa, 0.5, 1e-15);
    EXPECT_NEAR(m.chi, std::atanh(0.5), 1e-15);
    EXPECT_NEAR(m.chi, 0.5493061443340549, 1e-15);
    EXPECT_EQ(m.alpha[0], 0.0);
    EXPECT_EQ(m.alpha[1], 0.0);
    EXPECT_EQ(std::abs(m.alpha[2]), 1.0);
    const IntertwiningReport r = verify_intertwining(worked, m);
    EXPECT_LE(r.residual, 1e-12);
    EXPECT_TRUE(r.positive_definite);
    EXPECT_NEAR(r.min_eigenvalue, std::exp(-m.chi), 1e-14);
    EXPECT_NEAR(cosh_chi_from_poles(worked), 2.0 / std::sqrt(3.0), 1e-12);
    EXPECT_NEAR(std::cosh(m.chi), 2.0 / std::sqrt(3.0), 1e-14);
}

TEST(Metric, WrongSignFailsIntertwining) {
    MetricSpec m = construct(worked);
    for (double& a : m.alpha) a = -a;
    const double r = verify_intertwining(worked, m).residual;
    EXPECT_GT(r, 0.1 * 0.125 * std::sinh(m.chi));
}

TEST(Metric, ScaledVectorKeepsKappa) {
    const Interaction s = Interaction::from_gamma({0.125, 0.5, 0.25 * I, 0.0});
    const MetricSpec a = construct(worked), b = construct(s);
    EXPECT_NEAR(b.kappa, 0.5, 1e-15);
    EXPECT_EQ(a.alpha, b.alpha);
}

TEST(Metric, NotApplicableInputsThrow) {
    const cplx e = std::exp(I * pi / 4.0);
    EXPECT_THROW(construct(Interaction::from_abcd({-e, -1.0, 1.0, 1.0 / e})), NotApplicable);
    EXPECT_THROW(construct(Interaction::krein()), NotApplicable);
    EXPECT_THROW(cosh_chi_from_poles(Interaction::krein()), NotApplicable);
    // gamma0 real and sum g_j^2 real positive but Im g = 0 makes frakT Hermitian
    EXPECT_THROW(construct(Interaction::from_gamma({0.1, 0.3, 0.0, 0.0})), NotApplicable);
}

TEST(Metric, HermitianIdentityMetric) {
    const Interaction h = Interaction::from_gamma({0.2, 0.3, -0.1, 0.05});
    MetricSpec m;
    m.alpha = {0.0, 0.0, 1.0};
    EXPECT_EQ(verify_intertwining(h, m).residual, 0.0);
}

TEST(Metric, RandomSamples) {
    std::mt19937_64 rng(51);
    for (int n = 0; n < 200; ++n) {
        const Interaction i = random_applicable(rng);
        ASSERT_EQ(check_applicability(i), Applicability::TwoImaginaryPoles);
        const MetricSpec m = construct(i);
        EXPECT_NEAR(detail::norm(m.alpha), 1.0, 1e-14);
        EXPECT_LE(std::abs(detail::dot(m.alpha, m.re_gamma)), 1e-12 * detail::norm(m.re_gamma));
        EXPECT_LE(std::abs(detail::dot(m.alpha, m.im_gamma)), 1e-12 * detail::norm(m.im_gamma));
        EXPECT_NEAR(std::tanh(m.chi), m.kappa, 1e-12);
        EXPECT_GE(m.kappa, 0.0);
        EXPECT_LT(m.kappa, 1.0);
        const Vec3 c = detail::cross(m.re_gamma, m.alpha);
        for (int j = 0; j < 3; ++j) EXPECT_NEAR(m.im_gamma[j], m.kappa * c[j], 1e-12 * (1 + detail::norm(m.im_gamma)));
        const IntertwiningReport r = verify_intertwining(i, m);
        EXPECT_LE(r.residual, 1e-12 * (1.0 + i.frakT().max_norm()) * std::cosh(m.chi));
        EXPECT_TRUE(r.positive_definite);
        EXPECT_NEAR(cosh_chi_from_poles(i), std::cosh(m.chi), 1e-10 * std::cosh(m.chi));
    }
}

TEST(Metric, ScalingInvariance) {
    std::mt19937_64 rng(52);
    for (int n = 0; n < 50; ++n) {
        const Interaction i = random_applicable(rng);
        const PauliVector g = i.gamma();
        const double c = 2.5;
        const Interaction j = Interaction::from_gamma({g.x0, c * g.x1, c * g.x2, c * g.x3});
        if (check_applicability(j) == Applicability::NotApplicable) continue;
        const MetricSpec a = construct(i), b = construct(j);
        EXPECT_NEAR(a.kappa, b.kappa, 1e-14);
        for (int k = 0; k < 3; ++k) EXPECT_NEAR(a.alpha[k], b.alpha[k], 1e-14);
    }
}

TEST(Metric, ApplicabilityImpliesOrthogonality) {
    std::mt19937_64 rng(53);
    std::uniform_real_distribution<double> u(-1, 1);
    int hits = 0;
    for (int n = 0; n < 2000; ++n) {
        // Re g orthogonal to Im g, |Im g| on either side of |Re g|
        const double a = u(rng), b = u(rng), s = 2.0 * u(rng);
        const PauliVector g{u(rng), {a, -s * b}, {b, s * a}, 0.0};
        const Interaction i = Interaction::from_gamma(g);
        if (check_applicability(i) == Applicability::NotApplicable) {
            EXPECT_GE(std::abs(s), 1.0 - 1e-9);
            continue;
        }
        ++hits;
        const MetricSpec m = construct(i);
        EXPECT_LE(std::abs(detail::dot(m.re_gamma, m.im_gamma)), 1e-15);
        EXPECT_GT(detail::norm(m.re_gamma), detail::norm(m.im_gamma));
    }
    EXPECT_GT(hits, 500);
    // generic complex vectors: sum g_j^2 is not real
    for (int n = 0; n < 200; ++n) {
        const PauliVector g{u(rng), {u(rng), u(rng)}, {u(rng), u(rng)}, {u(rng), u(rng)}};
        EXPECT_EQ(check_applicability(Interaction::from_gamma(g)), Applicability::NotApplicable);
    }
}
