#include <doctest.h>

#include <cmath>

#include "framelab/wft.hpp"

using namespace framelab;

namespace {

SampledSignal test_signal(double dt) {
    return SampledSignal::from_function(
        [](double t) { return cplx(std::exp(-t * t / 2) * std::cos(7 * t), 0.2 * std::exp(-t * t)); },
        -6.0, dt, static_cast<int>(std::round(12.0 / dt)) + 1);
}

}  // namespace

TEST_CASE("window sampling on [-tau, 0)") {
    const WindowSpec h = WindowSpec::smooth_bump(0.5, 0.01);
    CHECK(h.size() == 50);
    CHECK(h.t_start == doctest::Approx(-0.5));
    CHECK(h.value(0.1) == cplx(0.0));
    CHECK(h.value(-0.6) == cplx(0.0));
    CHECK_THROWS_AS(WindowSpec::smooth_bump(0.505, 0.01), DomainError);
}

TEST_CASE("lattice frame identity and exact reconstruction") {
    const double dt = 0.01, tau = 0.4;
    const SampledSignal f = test_signal(dt);
    for (const WindowSpec& h : {WindowSpec::smooth_bump(tau, dt), WindowSpec::rectangular(tau, dt)}) {
        for (double T : {tau / 2, tau / 4}) {
            const WFTLattice lat = full_lattice(f, h, T);
            CHECK(lat.F == doctest::Approx(1 / tau));
            const LatticeCoefficients c = wft_lattice_analyze(f, h, lat);
            const LatticeWeight g = lattice_weight(h, T, f.t0, f.dt, f.size());
            REQUIRE(g.valid());
            double lhs = 0.0, rhs = 0.0;
            for (const auto& v : c.values) lhs += std::norm(v);
            for (int k = 0; k < f.size(); ++k) rhs += g.g.samples[k].real() * std::norm(f.samples[k]) * dt;
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
            CHECK(relative_l2_error(wft_reconstruct(c, h, g), f) < 1e-12);
        }
    }
}

TEST_CASE("rectangular window with T = tau is a tight lattice") {
    const WindowSpec h = WindowSpec::rectangular(0.4, 0.01);
    const LatticeWeight g = lattice_weight(h, 0.4, -2.0, 0.01, 401);
    CHECK(g.A == doctest::Approx(0.4));
    CHECK(g.B == doctest::Approx(0.4));
}

TEST_CASE("sparse lattice is reported, not inverted") {
    const double dt = 0.01, tau = 0.4;
    const SampledSignal f = test_signal(dt);
    const WindowSpec h = WindowSpec::smooth_bump(tau, dt);
    const LatticeWeight g = lattice_weight(h, 1.5 * tau, f.t0, f.dt, f.size());
    CHECK(g.A == 0.0);
    CHECK_FALSE(g.valid());
    const LatticeCoefficients c = wft_lattice_analyze(f, h, full_lattice(f, h, 1.5 * tau));
    CHECK_THROWS_AS(wft_reconstruct(c, h, g), NotAFrameError);
}

TEST_CASE("wft_analyze agrees with lattice coefficients") {
    const double dt = 0.01, tau = 0.4;
    const SampledSignal f = test_signal(dt);
    const WindowSpec h = WindowSpec::smooth_bump(tau, dt);
    const WFTLattice lat = full_lattice(f, h, tau / 2);
    const LatticeCoefficients c = wft_lattice_analyze(f, h, lat);
    const WFTGrid g = wft_analyze(f, h, {3 * lat.F, -2 * lat.F}, {4 * lat.T, -7 * lat.T});
    CHECK(std::abs(g.at(0, 0) - c.at(3, 4)) < 1e-12);
    CHECK(std::abs(g.at(1, 1) - c.at(-2, -7)) < 1e-12);
}

TEST_CASE("band-limited approximation improves toward low frequency") {
    const double dt = 0.01, tau = 0.64;
    const WindowSpec h = WindowSpec::smooth_bump(tau, dt);
    double prev = 1e300;
    for (double nu : {3.0, 1.0, 0.3}) {
        const SampledSignal s = SampledSignal::from_function(
            [nu](double t) { return cplx(std::cos(2 * pi * nu * t) * std::exp(-t * t / 8)); }, -8.0,
            dt, 1601);
        const LatticeWeight g = lattice_weight(h, tau / 2, s.t0, s.dt, s.size());
        const LatticeCoefficients c = wft_lattice_analyze(s, h, full_lattice(s, h, tau / 2));
        const double e = *band_limited_approx(c, h, g, &s).error;
        CHECK(e < prev);
        prev = e;
    }
}
