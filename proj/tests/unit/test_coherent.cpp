#include <doctest.h>

#include <cmath>

#include "framelab/coherent.hpp"

using namespace framelab;

TEST_CASE("Hermite functions are orthonormal") {
    for (int m = 0; m < 6; ++m) {
        const SampledSignal a = hermite_vector(m, -15, 0.05, 600);
        for (int n = 0; n < 6; ++n) {
            const SampledSignal b = hermite_vector(n, -15, 0.05, 600);
            cplx s = 0.0;
            for (int k = 0; k < a.size(); ++k) s += std::conj(a.samples[k]) * b.samples[k] * a.dt;
            CHECK(std::abs(s - (m == n ? 1.0 : 0.0)) < 1e-12);
        }
    }
    CHECK(hermite_function(0, 0.0) == doctest::Approx(std::pow(pi, -0.25)));
    CHECK_THROWS_AS(hermite_function(-1, 0.0), DomainError);
}

TEST_CASE("canonical coherent states: norm, moments, minimal uncertainty") {
    const cplx z(1.3, -0.7);
    const SampledSignal c = canonical_cs_vector(z, -20, 0.05, 800);
    const Moments mo = grid_moments(c, 1.0);
    CHECK(mo.norm_sq == doctest::Approx(std::exp(std::norm(z) / 2)).epsilon(1e-12));
    CHECK(mo.mean_q == doctest::Approx(1.3).epsilon(1e-12));
    CHECK(mo.mean_d == doctest::Approx(0.7).epsilon(1e-12));
    CHECK(mo.delta_q == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
    CHECK(mo.delta_q * mo.delta_d == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("Bargmann transform of a coherent state is the overlap") {
    const cplx z(1.3, -0.7), w(-0.4, 0.9);
    const SampledSignal cw = canonical_cs_vector(w, -20, 0.05, 800);
    CHECK(std::abs(bargmann_transform(cw, z) - canonical_overlap(z, w)) < 1e-13);
    // Normalized overlaps have modulus exp(-|z - w|^2 / 4).
    const double nz = std::exp(std::norm(z) / 4), nw = std::exp(std::norm(w) / 4);
    CHECK(std::abs(canonical_overlap(z, w)) / (nz * nw) ==
          doctest::Approx(std::exp(-std::norm(z - w) / 4)).epsilon(1e-14));
}

TEST_CASE("resolution of unity, isometry and reconstruction") {
    const PhaseGrid g;
    std::vector<SampledSignal> H;
    for (int n = 0; n <= 3; ++n) H.push_back(hermite_vector(n, -15, 0.05, 600));
    CHECK(canonical_resolution_check(g, H) < 1e-12);
    PhaseGrid empty;
    empty.nx = 0;
    CHECK(canonical_resolution_check(empty, {H[0]}) == doctest::Approx(1.0));
    const cvec ft = bargmann_transform(H[2], g);
    CHECK(bargmann_norm_sq(ft, g) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(relative_l2_error(bargmann_reconstruct(ft, g, -15, 0.05, 600), H[2]) < 1e-12);
}

TEST_CASE("Bargmann transforms are holomorphic: dbar defect is O(h^2)") {
    const SampledSignal cw = canonical_cs_vector(cplx(0.8, -1.1), -20, 0.05, 800);
    const cplx z(0.5, 0.3);
    const double d1 = bargmann_dbar_defect(cw, z, 0.1);
    const double d2 = bargmann_dbar_defect(cw, z, 0.05);
    const double d3 = bargmann_dbar_defect(cw, z, 0.025);
    CHECK(d1 > 0.0);
    CHECK(d1 / d2 == doctest::Approx(4.0).epsilon(0.05));
    CHECK(d2 / d3 == doctest::Approx(4.0).epsilon(0.05));
}

TEST_CASE("Galilean coherent states: moments and spreading") {
    const double m = 1.0, u = 0.7;
    const cplx z(0.4, -0.9);
    const GalileanReport r0 = galilean_moments(m, u, 0.0, z, -30, 0.02, 3000);
    CHECK(r0.mean_x == doctest::Approx(0.4).epsilon(1e-12));
    CHECK(r0.mean_p == doctest::Approx(0.9 / u * m).epsilon(1e-12));
    CHECK(r0.delta_x == doctest::Approx(std::sqrt(u / (2 * m))).epsilon(1e-12));
    CHECK(r0.delta_x * r0.delta_p == doctest::Approx(0.5).epsilon(1e-12));
    const GalileanReport rt = galilean_moments(m, u, 1.3, z, -30, 0.02, 3000);
    CHECK(rt.mean_x == doctest::Approx(rt.closed_mean_x).epsilon(1e-12));
    CHECK(rt.delta_x == doctest::Approx(rt.closed_delta_x).epsilon(1e-12));
    CHECK(rt.delta_x > r0.delta_x);
    CHECK_THROWS_AS(galilean_cs(1.0, 0.0, z, 0.0), DomainError);
    CHECK_THROWS_AS(galilean_cs(-1.0, 0.5, z, 0.0), DomainError);
}

TEST_CASE("Galilean transform is holomorphic and resolves unity") {
    const SampledSignal fh = SampledSignal::from_function(
        [](double p) { return std::exp(-(p - 1) * (p - 1) / 2 + I * 0.5 * p); }, -12, 0.05, 480);
    // Cauchy-Riemann: the derivative along i z equals i times the derivative along z.
    const double h = 1e-4;
    const cplx z(0.3, -0.4);
    const cplx fx = (galilean_transform(fh, 1.0, 0.7, z + h) - galilean_transform(fh, 1.0, 0.7, z - h)) / (2 * h);
    const cplx fi = (galilean_transform(fh, 1.0, 0.7, z + I * h) - galilean_transform(fh, 1.0, 0.7, z - I * h)) / (2 * h);
    CHECK(std::abs(fx + I * fi) < 1e-6);

    PhaseGrid gg;
    gg.x0 = -12, gg.dx = 0.25, gg.nx = 97, gg.p0 = -6, gg.dp = 0.25, gg.np = 49;
    CHECK(galilean_resolution_check(1.0, 0.7, gg, {fh}) < 1e-10);
}
