#include <doctest.h>

#include <cmath>

#include "framelab/wavelet.hpp"

using namespace framelab;

TEST_CASE("admissibility constants") {
    CHECK(admissibility_constant(mexican_hat()).c_h == doctest::Approx(2 * pi).epsilon(1e-12));
    CHECK(admissibility_constant(gaussian_derivative()).c_h == doctest::Approx(2 * pi).epsilon(1e-12));
    CHECK_FALSE(admissibility_constant(gaussian_window()).admissible);
    for (double a : {1.5, 2.0, 3.0}) {
        const MeyerPair mp = build_meyer_pair(a, 1.0, 3);
        const Admissibility ad = admissibility_constant([&](double nu) { return cplx(mp.kplus(nu)); });
        CHECK(ad.c_h == doctest::Approx(std::log(a)).epsilon(1e-10));
    }
}

TEST_CASE("sampled admissibility matches the closed form") {
    const WaveletSpec mh = mexican_hat();
    const SampledSignal hhat = SampledSignal::from_function(mh.freq, -5.0, 0.001, 10001);
    CHECK(admissibility_constant_sampled(hhat).c_h == doctest::Approx(2 * pi).epsilon(1e-6));
}

TEST_CASE("time and frequency forms of the built-in wavelets agree") {
    for (const WaveletSpec& h : {mexican_hat(), gaussian_derivative()}) {
        const SampledSignal ht = SampledSignal::from_function(h.time, -12, 0.01, 2401);
        const SampledSignal hf = fourier_transform(ht, -1.0, 0.05, 41);
        for (int k = 0; k < hf.size(); ++k)
            CHECK(std::abs(hf.samples[k] - h.freq(hf.time(k))) < 1e-10);
    }
}

TEST_CASE("Meyer partition sums to one for every smoothness order") {
    rvec nus;
    for (int i = 0; i < 4000; ++i) nus.push_back(-6.0 + 12.0 * (i + 0.5) / 4000);
    for (int k : {0, 1, 3, 6, -1}) {
        const MeyerPair mp = build_meyer_pair(2.0, 1.0, k);
        CAPTURE(k);
        CHECK(chi_partition(mp, nus).max_deviation < 1e-13);
        CHECK(mp.eta(0.0) == doctest::Approx(0.0));
        CHECK(mp.eta(1.0) == doctest::Approx(pi / 2));
    }
}

TEST_CASE("discrete tight frame round trip and energy") {
    const MeyerPair mp = build_meyer_pair(2, 1, 3);
    const DyadicLattice dl{2, 1, -2, 4};
    const double dnu = dl.width(4) / 8;
    const int J = static_cast<int>(std::round(4.0 / dnu));
    const SampledSignal sig = SampledSignal::from_function(
        [](double t) { return cplx(std::exp(-t * t / 8) * std::cos(pi * t), 0.3 * std::exp(-t * t / 8) * std::sin(1.6 * pi * t)); },
        -30, 0.05, 1201);
    const SampledSignal fh = fourier_transform(sig, -J * dnu, dnu, 2 * J + 1);
    const DiscreteWaveletCoeffs dc = discrete_wavelet_analyze(fh, mp, dl);
    CHECK(relative_l2_error(discrete_wavelet_reconstruct(dc, mp, -J * dnu, 2 * J + 1), fh) < 1e-6);
    const double e = l2_norm(fh) * l2_norm(fh);
    CHECK(discrete_wavelet_energy(dc) == doctest::Approx(e).epsilon(1e-10));
}

TEST_CASE("discrete frame rejects incommensurate grids") {
    const MeyerPair mp = build_meyer_pair(2, 1, 3);
    const DyadicLattice dl{2, 1, -2, 4};
    const SampledSignal fh(cvec(101, 1.0), -1.0, dl.width(4) / 7.5);
    CHECK_THROWS_AS(discrete_wavelet_analyze(fh, mp, dl), DomainError);
}

TEST_CASE("CWT reconstruction converges as the scale range widens") {
    const WaveletSpec mh = mexican_hat();
    const double ch = admissibility_constant(mh).c_h;
    // Small scales must stay above dt or the sampled wavelet aliases.
    const SampledSignal f = SampledSignal::from_function(
        [](double t) { return cplx(std::cos(2 * t) * std::exp(-t * t / 8)); }, -10, 0.05, 401);
    rvec shifts;
    for (int k = -400; k <= 400; ++k) shifts.push_back(0.05 * k);
    double err[2];
    const double amin[2] = {0.2, 0.1};
    for (int i = 0; i < 2; ++i) {
        const ScaleGrid sc = log_scale_grid(amin[i], 16.0, 0.05, false);
        const CWTGrid c = cwt_analyze(f, mh, sc.a, shifts);
        err[i] = relative_l2_error(cwt_reconstruct(c, sc, 0.05, mh, ch, f.t0, f.dt, f.size()), f);
    }
    CHECK(err[1] < err[0] / 5);
    CHECK(err[1] < 2e-3);
}

TEST_CASE("only the a^-2 scale density gives a flat response") {
    const WaveletSpec mh = mexican_hat();
    const double r1 = scale_response(mh.freq, 2.0, 0.3), r2 = scale_response(mh.freq, 2.0, 1.7);
    CHECK(r1 == doctest::Approx(r2).epsilon(1e-8));
    CHECK(r1 == doctest::Approx(pi).epsilon(1e-8));
    const double q1 = scale_response(mh.freq, 1.0, 0.3), q2 = scale_response(mh.freq, 1.0, 1.7);
    CHECK(std::abs(q1 / q2 - 1.0) > 0.1);
}

TEST_CASE("fourier transform pair on a grid") {
    const SampledSignal g = SampledSignal::from_function(
        [](double t) { return cplx(std::exp(-pi * t * t)); }, -6, 0.02, 601);
    const SampledSignal gh = fourier_transform(g, -3, 0.02, 301);
    for (int k = 0; k < gh.size(); k += 37)
        CHECK(std::abs(gh.samples[k] - std::exp(-pi * gh.time(k) * gh.time(k))) < 1e-12);
    const SampledSignal back = inverse_fourier_transform(gh, -2, 0.02, 201);
    for (int k = 0; k < back.size(); k += 29)
        CHECK(std::abs(back.samples[k] - std::exp(-pi * back.time(k) * back.time(k))) < 1e-10);
}
