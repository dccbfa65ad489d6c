#include <doctest.h>

#include <cmath>

#include "framelab/quadrature.hpp"
#include "framelab/relativistic.hpp"

using namespace framelab;

namespace {

struct NormRow {
    int s;
    double lambda, G, m_lambda;
};

// Generated by tests/oracles/bessel_oracle.py: G by direct momentum-space quadrature.
const NormRow kNorm[] = {
    {1, 0.01, 0.64114889716137009489, 12.400458468134294761},
    {1, 0.3, 0.1237464842897886098, 1.6756243370164459775},
    {1, 1.0, 0.018126772835967562906, 1.2280369298189079757},
    {1, 5.0, 2.829784806100015399e-6, 1.0488587228891769387},
    {1, 20.0, 1.3357653307645286744e-19, 1.0124237555605721416},
    {2, 0.01, 3.9000866017221986133, 50.999999999999998959},
    {2, 0.3, 0.072788403925595628558, 2.6666666666666667283},
    {2, 1.0, 0.0053848198254621574465, 1.5},
    {2, 5.0, 3.612811618862160937e-7, 1.1},
    {2, 20.0, 8.4518322466893029461e-21, 1.025},
    {3, 0.01, 63.268389220152860167, 100.080642179687928},
    {3, 0.3, 0.055001990911429951687, 3.9301258111631569348},
    {3, 1.0, 0.0017714220871036725132, 1.8143077587637894899},
    {3, 5.0, 4.7237894995485392188e-8, 1.1534172507479452201},
    {3, 20.0, 5.3808716701978240016e-22, 1.037728700070166575},
};

}  // namespace

TEST_CASE("||e_z||^2 and m_lambda against high-precision values") {
    for (const auto& r : kNorm) {
        const MassShellParams p{1.0, r.s, 1.0};
        CAPTURE(r.s);
        CAPTURE(r.lambda);
        CHECK(ez_norm_sq(p, r.lambda) == doctest::Approx(r.G).epsilon(1e-12));
        CHECK(ez_norm_sq(p, r.lambda, NormMethod::quadrature) == doctest::Approx(r.G).epsilon(1e-8));
        CHECK(effective_mass(p, r.lambda) == doctest::Approx(r.m_lambda).epsilon(1e-12));
    }
}

TEST_CASE("mass and light speed enter through mc") {
    const MassShellParams a{2.0, 3, 1.0}, b{1.0, 3, 2.0};
    CHECK(ez_norm_sq(a, 0.4) == doctest::Approx(ez_norm_sq(b, 0.4)).epsilon(1e-14));
    CHECK_THROWS_AS((MassShellParams{1.0, 0, 1.0}.validate()), DomainError);
    CHECK_THROWS_AS(ez_norm_sq(a, 0.0), DomainError);
}

TEST_CASE("small-lambda asymptotic") {
    for (int s : {2, 3}) {
        const MassShellParams p{1.0, s, 1.0};
        const double e1 = std::abs(ez_norm_sq(p, 1e-2) / ez_norm_sq_small(p, 1e-2) - 1);
        const double e2 = std::abs(ez_norm_sq(p, 1e-3) / ez_norm_sq_small(p, 1e-3) - 1);
        CHECK(e2 < e1);
        CHECK(e2 < 0.02);
    }
    CHECK_THROWS_AS(ez_norm_sq_small(MassShellParams{1.0, 1, 1.0}, 1e-3), DomainError);
}

TEST_CASE("tube geometry") {
    const TubePoint f({0, 0}, {1.0, 0.5}), b({0, 0}, {-1.0, 0.2}), o({0, 0}, {0.3, 0.5});
    CHECK(f.cone() == Cone::forward);
    CHECK(b.cone() == Cone::backward);
    CHECK(o.cone() == Cone::outside);
    CHECK(f.lambda() == doctest::Approx(std::sqrt(0.75)));
    CHECK(o.lambda() == 0.0);
}

TEST_CASE("reproducing kernel: closed form, quadrature, hermiticity, diagonal") {
    const MassShellParams p{1.0, 1, 1.0};
    const TubePoint a({0.3, 0.2}, {1.0, 0.4}), b({-0.5, 0.7}, {0.8, -0.3});
    const cplx k = kernel_eval(p, a, b);
    CHECK(std::abs(k - kernel_quadrature(p, a, b)) < 1e-10 * std::abs(k));
    CHECK(std::abs(k - std::conj(kernel_eval(p, b, a))) < 1e-15);
    CHECK(std::abs(kernel_eval(p, a, a) - ez_norm_sq(p, a.lambda())) < 1e-14);
    // Cauchy-Schwarz.
    CHECK(std::norm(k) <= ez_norm_sq(p, a.lambda()) * ez_norm_sq(p, b.lambda()));
    const TubePoint outside({0, 0}, {0.1, 0.5});
    CHECK_THROWS_AS(kernel_eval(p, a, outside), DomainError);
}

TEST_CASE("<P_mu> and C_{mu nu} are derivatives of ln G") {
    const MassShellParams p{1.0, 3, 1.0};
    const rvec y{1.3, 0.4, -0.2, 0.5};
    const rvec P = expected_momentum(p, y);
    const double h = 1e-5;
    for (int mu = 0; mu < 4; ++mu) {
        rvec yp = y, ym = y;
        yp[mu] += h;
        ym[mu] -= h;
        CHECK(P[mu] == doctest::Approx(-0.5 * (log_norm_sq(p, yp) - log_norm_sq(p, ym)) / (2 * h)).epsilon(1e-8));
    }
    const double l = std::sqrt(minkowski(y, y));
    const double P2 = P[0] * P[0] - P[1] * P[1] - P[2] * P[2] - P[3] * P[3];
    CHECK(P2 == doctest::Approx(std::pow(effective_mass(p, l), 2)).epsilon(1e-12));

    const Eigen::MatrixXd C = correlation_matrix(p, y);
    const double h2 = 2e-4;
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
            auto L = [&](double a, double b) {
                rvec q = y;
                q[mu] += a;
                q[nu] += b;
                return log_norm_sq(p, q);
            };
            const double fd = 0.25 * (L(h2, h2) - L(h2, -h2) - L(-h2, h2) + L(-h2, -h2)) / (4 * h2 * h2);
            CHECK(std::abs(C(mu, nu) - fd) < 1e-5);
        }
}

TEST_CASE("effective mass exceeds m and approaches it for large lambda") {
    const MassShellParams p{1.0, 2, 1.0};
    double prev = 1e300;
    for (double lam = 0.01; lam < 100; lam *= 1.7) {
        const double ml = effective_mass(p, lam);
        CHECK(ml > 1.0);
        CHECK(ml < prev);
        prev = ml;
    }
    CHECK(effective_mass(p, 50.0) == doctest::Approx(1.0).epsilon(0.011));
}

TEST_CASE("measure constant") {
    const MassShellParams p{1.0, 3, 1.0};
    CHECK(measure_constant(p, 0.7) ==
          doctest::Approx(std::pow(2 * pi * 0.7, 3) * effective_mass(p, 0.7) * ez_norm_sq(p, 0.7)).epsilon(1e-13));
    CHECK(measure_constant(p, 1e-5) == doctest::Approx(measure_constant(p, 0.0)).epsilon(1e-8));
    // s = 1: A_lambda = 2 omega int dy exp(-2 (y0 omega - y p)) for every p on the shell.
    const MassShellParams p1{1.0, 1, 1.0};
    const double lam = 0.8, q = 0.6, om = std::sqrt(1 + q * q);
    const auto J = integrate_line(
        [&](double y) { return std::exp(-2 * (std::sqrt(lam * lam + y * y) * om - y * q)); }, 0.0, 1e-15, 1e-13);
    CHECK(J.value / (2 * om * measure_constant(p1, lam)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("phase-space norm and conserved current for a Gaussian wavefunction") {
    const MassShellParams p{1.0, 1, 1.0};
    const MomentumWavefunction f{p, SampledSignal::from_function(
                                        [](double q) { return cplx(std::exp(-(q - 0.5) * (q - 0.5))); },
                                        -8, 0.05, 321)};
    const PhaseSpaceGrid g;
    const double kn = k_norm_sq(f);
    CHECK(phase_space_norm(f, 1.0, 0.0, g) == doctest::Approx(kn).epsilon(1e-6));
    CHECK(phase_space_norm(f, 0.5, 1.1, g) == doctest::Approx(kn).epsilon(1e-6));
    const CurrentReport c = current_density(f, 1.0, 0.4, g, 1e-3);
    CHECK(c.nonnegative);
    CHECK(c.flux == doctest::Approx(kn).epsilon(1e-6));
    CHECK(c.max_defect < 1e-6);
}

TEST_CASE("non-relativistic defect shrinks with c") {
    const SampledSignal fh = SampledSignal::from_function(
        [](double q) { return cplx(std::exp(-q * q / 2)); }, -8, 0.05, 321);
    PhaseSpaceGrid g;
    g.x0 = -15, g.dx = 0.25, g.nx = 121, g.y0 = -10, g.dy = 0.1, g.ny = 201;
    const rvec J = nonrel_limit_defect(fh, 1.0, 1.0, {2, 4, 8}, g);
    CHECK(J[1] < J[0]);
    CHECK(J[2] < J[1]);
    CHECK(J[2] < 0.01 * J[0]);
}
