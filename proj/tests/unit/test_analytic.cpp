#include <doctest.h>

#include <cmath>

#include "framelab/analytic.hpp"
#include "framelab/quadrature.hpp"
#include "framelab/xray.hpp"

using namespace framelab;

namespace {

FieldSample cos_field(double a, int periods, int n) {
    const double P = 2 * pi * periods / a;
    FieldSample f({n}, {-P / 2}, {P / n});
    for (size_t k = 0; k < f.count(); ++k) f.values[k] = std::cos(a * f.point(k)[0]);
    return f;
}

FieldSample gaussian_2d(double h, double half) {
    const int M = static_cast<int>(std::round(2 * half / h)) + 1;
    return FieldSample::from_function(
        [](const rvec& x) { return cplx(std::exp(-(x[0] * x[0] + x[1] * x[1]) / 2)); }, {M, M},
        {-half, -half}, {h, h});
}

// (1/2 pi i) int dtau f(x - tau y)/(tau - i) for the unit Gaussian in 2-D.
cplx gaussian_ast(const rvec& x, const rvec& y) {
    auto g = [&](double t) {
        const double a = x[0] - t * y[0], b = x[1] - t * y[1];
        return cplx(std::exp(-(a * a + b * b) / 2)) / cplx(t, -1.0);
    };
    return integrate(g, -300, 300, 1e-15, 1e-14, 5000).value / (2 * pi * I);
}

}  // namespace

TEST_CASE("cos splits into its analytic halves") {
    const FieldSample c = cos_field(3.0, 4, 256);
    for (cplx z : {cplx(0.3, -0.7), cplx(-2.0, -0.1)}) {
        CHECK(std::abs(analytic_signal_1d(c, z) - 0.5 * std::exp(-I * 3.0 * z)) < 1e-12);
        const cplx zb = std::conj(z);
        CHECK(std::abs(analytic_signal_1d(c, zb) - 0.5 * std::exp(I * 3.0 * zb)) < 1e-12);
    }
    CHECK(std::abs(analytic_signal_1d(c, cplx(0.4, 0.0)) - 0.5 * std::cos(1.2)) < 1e-12);
}

TEST_CASE("step_exp") {
    CHECK(std::abs(step_exp(cplx(-1.0, 2.0)) - std::exp(cplx(-1.0, 2.0))) < 1e-15);
    CHECK(step_exp(cplx(1.0, 0.0)) == cplx(0.0));
    CHECK(step(0.0) == 0.5);
}

TEST_CASE("Hilbert transform of cos and sin") {
    const FieldSample c = cos_field(2.0, 3, 256);
    HilbertOptions ho;
    ho.method = AstMethod::periodic;
    for (double x : {0.1, 1.3}) {
        CHECK(std::abs(directional_hilbert(c, {x}, {1.0}, 0.02, ho) - std::sin(2 * x)) < 1e-6);
        // Reversing y flips the sign.
        CHECK(std::abs(directional_hilbert(c, {x}, {-1.0}, 0.02, ho) + std::sin(2 * x)) < 1e-6);
    }
    CHECK_THROWS_AS(directional_hilbert(c, {0.0}, {0.0}, 0.02, ho), DomainError);
}

TEST_CASE("AST line route against an independent quadrature") {
    const FieldSample g = gaussian_2d(0.05, 7.0);
    for (const auto& [x, y] : std::vector<std::pair<rvec, rvec>>{{{0.2, -0.1}, {0.5, 0.3}},
                                                                 {{-0.5, 0.7}, {0.05, -0.1}}}) {
        const cplx ref = gaussian_ast(x, y);
        CHECK(std::abs(ast_eval(g, x, y, AstMethod::line) - ref) < 3e-4);
    }
}

TEST_CASE("AST is holomorphic along y") {
    const FieldSample g = gaussian_2d(0.05, 7.0);
    const ComplexField F = [&](const rvec& x, const rvec& y) {
        return ast_eval(g, x, y, AstMethod::line);
    };
    const DbarDefect d = dbar_defect(F, {0.3, -0.2}, {0.6, 0.4}, 1e-2);
    CHECK(d.directional < 1e-4);
}

TEST_CASE("line method refuses fields that do not decay") {
    FieldSample f({64, 64}, {-4, -4}, {0.125, 0.125});
    for (auto& v : f.values) v = 1.0;
    CHECK_THROWS_AS(ast_eval(f, {0, 0}, {0.3, 0.1}, AstMethod::line), DomainError);
}

TEST_CASE("windowed X-ray sign convention") {
    const FieldSample g = gaussian_2d(0.05, 7.0);
    const rvec x{0.3, -0.2}, y{0.4, 0.5};
    // conj(h) with h = 1/(2 pi (1 - it)) gives f(x + iy), i.e. the AST at -y.
    const auto h = [](double t) { return 1.0 / (2 * pi * cplx(1.0, -t)); };
    const cplx xr = windowed_xray(g, h, x, y, XrayOptions{1e-3});
    const cplx ref = gaussian_ast(x, {-y[0], -y[1]});
    CHECK(std::abs(xr - ref) < 1e-3);
}

TEST_CASE("line X-ray converges to the spectral coefficients under grid refinement") {
    const WaveletSpec mh = mexican_hat();
    const DirectionGrid dirs = polar_direction_grid(0.3, 0.3, 0.1, 8);
    cvec spec[2];
    double gap[2][3];
    for (int i = 0; i < 2; ++i) {
        const int n = 256 << i;
        const double h = 12.8 / n;
        const FieldSample f = FieldSample::from_function(
            [](const rvec& x) {
                return cplx(std::exp(-(x[0] * x[0] + x[1] * x[1]) / 2) * std::cos(4 * x[0] + 2 * x[1]));
            },
            {n, n}, {-6.4, -6.4}, {h, h});
        const std::vector<FieldSample> co = xray_coefficients(f, mh, dirs);
        const size_t k = static_cast<size_t>(n / 2) * n + (n / 2 - 8 * (n / 256));  // the point (0, -0.4)
        for (size_t q = 0; q < 3; ++q) {
            spec[i].push_back(co[q].values[k]);
            gap[i][q] = std::abs(co[q].values[k] - windowed_xray(f, mh.time, f.point(k), dirs.y[q]));
        }
    }
    for (size_t q = 0; q < 3; ++q) {
        CHECK(std::abs(spec[0][q] - spec[1][q]) < 1e-10);
        CHECK(gap[1][q] < gap[0][q] / 3);
        CHECK(gap[1][q] < 1e-3);
    }
}

TEST_CASE("X-ray normalization constant in two dimensions") {
    const WaveletSpec mh = mexican_hat();
    const XrayAdmissibility xa = xray_admissibility(mh.freq, 2);
    CHECK(xa.admissible);
    CHECK(xa.N == doctest::Approx(1.0 / (pi * 2 * pi)).epsilon(1e-10));
    for (const rvec& p : {rvec{0.5, 0.2}, rvec{-1.0, 3.0}})
        CHECK(xray_normalization_2d(mh.freq, xa.N, p, -20, 20, 256) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("n = 1 X-ray is the CWT up to |y|^{1/2}") {
    const WaveletSpec mh = mexican_hat();
    const FieldSample s = FieldSample::from_function(
        [](const rvec& x) { return cplx(std::exp(-x[0] * x[0] / 2) * std::sin(3 * x[0])); }, {801},
        {-20}, {0.05});
    const SampledSignal ss(s.values, -20, 0.05);
    for (double y : {0.5, 2.5, -1.0}) {
        const cplx xr = windowed_xray(s, mh.time, {1.0}, {y});
        const cplx cw = cwt_analyze(ss, mh, {y}, {1.0}).values[0];
        CHECK(std::abs(xr * std::sqrt(std::abs(y)) - cw) < 1e-12);
    }
}
