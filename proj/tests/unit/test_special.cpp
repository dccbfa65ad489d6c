#include <doctest.h>

#include <cmath>

#include "framelab/fourier.hpp"
#include "framelab/quadrature.hpp"
#include "framelab/special.hpp"

using namespace framelab;

namespace {

struct BesselRow {
    double nu, re_w, im_w, re_k, im_k;
};

// Generated by tests/oracles/bessel_oracle.py (mpmath, 30 digits).
const BesselRow kBessel[] = {
    {0, 0.001, 0.0, 7.0236888005623813228, 0.0},
    {0, 0.1, 0.0, 2.4270690247020165578, 0.0},
    {0, 1.7, 0.0, 0.16549631805699654866, 0.0},
    {0, 2.0, 0.0, 0.11389387274953343565, 0.0},
    {0, 9.5, 0.0, 0.000030057884957934335384, 0.0},
    {0, 40.0, 0.0, 8.3928611000995670337e-19, 0.0},
    {0.5, 0.001, 0.0, 39.593659513116643201, 0.0},
    {0.5, 0.1, 0.0, 3.5861668387972600251, 0.0},
    {0.5, 1.7, 0.0, 0.17560418370135831755, 0.0},
    {0.5, 2.0, 0.0, 0.11993777196806144737, 0.0},
    {0.5, 9.5, 0.0, 0.000030436909836687416058, 0.0},
    {0.5, 40.0, 0.0, 8.4188091949489054135e-19, 0.0},
    {1, 0.001, 0.0, 999.99623815608555346, 0.0},
    {1, 0.1, 0.0, 9.8538447808706055744, 0.0},
    {1, 1.7, 0.0, 0.20936248820408248749, 0.0},
    {1, 2.0, 0.0, 0.13986588181652242728, 0.0},
    {1, 9.5, 0.0, 0.000031602034110426745609, 0.0},
    {1, 40.0, 0.0, 8.4971319548610386508e-19, 0.0},
    {1.5, 0.001, 0.0, 39633.25317262975902, 0.0},
    {1.5, 0.1, 0.0, 39.447835226769858285, 0.0},
    {1.5, 1.7, 0.0, 0.2789007623492161541, 0.0},
    {1.5, 2.0, 0.0, 0.17990665795209217105, 0.0},
    {1.5, 9.5, 0.0, 0.000033640795082654512485, 0.0},
    {1.5, 40.0, 0.0, 8.6292794248226280488e-19, 0.0},
    {2, 0.001, 0.0, 1999999.5000009716277, 0.0},
    {2, 0.1, 0.0, 199.50396464211411711, 0.0},
    {2, 1.7, 0.0, 0.41180512770885830509, 0.0},
    {2, 2.0, 0.0, 0.25375975456605586294, 0.0},
    {2, 9.5, 0.0, 0.000036710944770655755512, 0.0},
    {2, 40.0, 0.0, 8.8177176978426189663e-19, 0.0},
    {3.25, 0.001, 0.0, 68191627678.617103413, 0.0},
    {3.25, 0.1, 0.0, 21540.15227558454885, 0.0},
    {3.25, 1.7, 0.0, 1.611182641457487035, 0.0},
    {3.25, 2.0, 0.0, 0.85720114902961433756, 0.0},
    {3.25, 9.5, 0.0, 0.000050838570855804485963, 0.0},
    {3.25, 40.0, 0.0, 9.5614356638082554261e-19, 0.0},
    {0, 1.2, 3.4, -0.13012856582154014208, 0.14657378318159025634},
    {0, 0.05, -2.0, -0.75749453237133648802, 0.34316047845473113254},
    {0, 7.0, 0.5, 0.00036510218229785033072, -0.00021614909126982088165},
    {0, -0.3, 2.0, -1.1162544091958874007, -0.39610542845627193824},
    {1, 1.2, 3.4, -0.11862831148231327352, 0.17028772979335559551},
    {1, 0.05, -2.0, -0.86241032104483657405, 0.17279678266506123504},
    {1, 7.0, 0.5, 0.00038920599705530513854, -0.00023277371153402631118},
    {1, -0.3, 2.0, -1.2012461753458634252, -0.12303538623905719956},
    {2.5, 1.2, 3.4, 0.0017585669771422886963, 0.28587772447766970166},
    {2.5, 0.05, -2.0, -0.69387198421310045317, -1.1203053996838096322},
    {2.5, 7.0, 0.5, 0.00054293530959581524151, -0.0003418754240427417116},
    {2.5, -0.3, 2.0, -0.5040212341326334217, 1.4044203746462074827},
};

}  // namespace

TEST_CASE("bessel_k matches high-precision values") {
    for (const auto& r : kBessel) {
        const cplx k = bessel_k(r.nu, cplx(r.re_w, r.im_w));
        const cplx ref(r.re_k, r.im_k);
        CAPTURE(r.nu);
        CAPTURE(r.re_w);
        CAPTURE(r.im_w);
        CHECK(std::abs(k - ref) <= 1e-12 * std::abs(ref));
    }
}

TEST_CASE("real bessel_k agrees with the complex route and std::cyl_bessel_k") {
    for (double nu : {0.0, 0.5, 1.0, 2.25, 4.0}) {
        for (double x : {0.02, 0.7, 1.9, 2.1, 15.0, 120.0}) {
            const double v = bessel_k(nu, x);
            CHECK(std::abs(v - bessel_k(nu, cplx(x, 0.0)).real()) <= 1e-13 * v);
            CHECK(std::abs(v - std::cyl_bessel_k(nu, x)) <= 1e-12 * v);
        }
    }
}

TEST_CASE("half-integer order has the elementary form") {
    for (double x : {0.3, 1.0, 6.0}) {
        const double k12 = std::sqrt(pi / (2 * x)) * std::exp(-x);
        CHECK(bessel_k(0.5, x) == doctest::Approx(k12).epsilon(1e-14));
        CHECK(bessel_k(1.5, x) == doctest::Approx(k12 * (1 + 1 / x)).epsilon(1e-14));
    }
}

TEST_CASE("bessel_k_seq satisfies the three-term recurrence") {
    const cplx w(1.3, -0.8);
    const cvec k = bessel_k_seq(0.25, w, 6);
    for (int j = 1; j + 1 < 6; ++j) {
        const double nu = 0.25 + j;
        CHECK(std::abs(k[j + 1] - (k[j - 1] + 2.0 * nu / w * k[j])) <= 1e-13 * std::abs(k[j + 1]));
    }
    for (int j = 0; j < 6; ++j)
        CHECK(std::abs(k[j] - bessel_k(0.25 + j, w)) <= 1e-13 * std::abs(k[j]));
}

TEST_CASE("scaled K matches e^x K and survives underflow") {
    for (double x : {0.7, 1.9, 2.1, 9.5}) {
        CHECK(bessel_k_scaled(0.3, cplx(x)).real() == doctest::Approx(std::exp(x) * bessel_k(0.3, x)).epsilon(1e-13));
        CHECK(bessel_k_scaled(2.5, cplx(x)).real() == doctest::Approx(std::exp(x) * bessel_k(2.5, x)).epsilon(1e-13));
    }
    const cplx w(3.0, 1.2);
    CHECK(std::abs(bessel_k_scaled(1.25, w) - std::exp(w) * bessel_k(1.25, w)) < 1e-13 * std::abs(bessel_k_scaled(1.25, w)));
    // sqrt(pi/2x) (1 + 3/(8x)) at x = 1000 to O(x^-2).
    CHECK(bessel_k_scaled(1.0, cplx(1000.0)).real() ==
          doctest::Approx(std::sqrt(pi / 2000.0) * (1 + 3.0 / 8000)).epsilon(1e-6));
}

TEST_CASE("bessel_k_ratio is stable where K underflows") {
    CHECK(bessel_k_ratio(1.0, 2.0) == doctest::Approx(bessel_k(2.0, 2.0) / bessel_k(1.0, 2.0)));
    // K_{nu+1}/K_nu -> 1 + (2 nu + 1)/(2x) for large x.
    const double x = 2000.0;
    CHECK(bessel_k_ratio(0.0, x) == doctest::Approx(1 + 1 / (2 * x)).epsilon(1e-6));
    CHECK(std::isfinite(bessel_k_ratio(3.0, 5000.0)));
}

TEST_CASE("bessel_k is even in the order and rejects the cut") {
    CHECK(bessel_k(-1.5, 0.8) == bessel_k(1.5, 0.8));
    CHECK_THROWS_AS(bessel_k(0.0, 0.0), DomainError);
    CHECK_THROWS_AS(bessel_k(0.0, -2.0), DomainError);
}

TEST_CASE("Gauss-Legendre is exact for degree 2n-1") {
    const GaussRule r = gauss_legendre(8, -1.0, 2.0);
    double s = 0.0;
    for (size_t i = 0; i < r.x.size(); ++i) s += r.w[i] * std::pow(r.x[i], 15);
    CHECK(s == doctest::Approx((std::pow(2.0, 16) - 1.0) / 16.0).epsilon(1e-14));
}

TEST_CASE("adaptive quadrature on smooth, peaked and infinite ranges") {
    auto r1 = integrate([](double x) { return std::exp(-x * x); }, -10, 10, 1e-14, 1e-14);
    CHECK(r1.converged);
    CHECK(r1.value == doctest::Approx(std::sqrt(pi)).epsilon(1e-13));
    auto r2 = integrate_line([](double x) { return 1.0 / (1.0 + x * x); }, 0.0, 1e-13, 1e-13);
    CHECK(r2.value == doctest::Approx(pi).epsilon(1e-11));
    auto r3 = integrate([](double x) { return cplx(std::cos(x), std::sin(x)); }, 0, pi);
    CHECK(std::abs(r3.value - cplx(0.0, 2.0)) < 1e-12);
}

TEST_CASE("dft matches the defining sum") {
    cvec in(12);
    for (int j = 0; j < 12; ++j) in[j] = cplx(std::sin(j * 0.7), std::cos(j * 1.3));
    for (int sign : {-1, 1}) {
        const cvec out = dft(in, sign);
        for (int k = 0; k < 12; ++k) {
            cplx ref = 0.0;
            for (int j = 0; j < 12; ++j) ref += in[j] * std::exp(sign * 2.0 * pi * I * double(j * k) / 12.0);
            CHECK(std::abs(out[k] - ref) < 1e-12);
        }
    }
    CHECK(dft_index(5, 12) == 5);
    CHECK(dft_index(6, 12) == -6);
    CHECK(dft_index(11, 12) == -1);
}
