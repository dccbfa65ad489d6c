#include <cmath>

#include "framelab/analytic.hpp"
#include "framelab/xray.hpp"
#include "suites.hpp"

namespace framelab::tools {

namespace {

double relative_field_error(const FieldSample& a, const FieldSample& b) {
    double num = 0.0, den = 0.0;
    for (size_t k = 0; k < b.count(); ++k) {
        num += std::norm(a.values[k] - b.values[k]);
        den += std::norm(b.values[k]);
    }
    return std::sqrt(num / den);
}

}  // namespace

void suite_analytic(SuiteContext& ctx) {
    // cos(at) over four whole periods.
    const double a = 3.0;
    const int N = 256;
    const double P = 8.0 * pi / a;
    FieldSample c1({N}, {-P / 2}, {P / N});
    for (size_t k = 0; k < c1.count(); ++k) c1.values[k] = std::cos(a * c1.point(k)[0]);
    double cos_err = 0.0;
    for (cplx z : {cplx(0.3, -0.7), cplx(-1.1, -0.2), cplx(2.0, -1.5)}) {
        cos_err = std::max(cos_err, std::abs(analytic_signal_1d(c1, z) - 0.5 * std::exp(-I * a * z)));
        const cplx zc = std::conj(z);
        cos_err = std::max(cos_err, std::abs(analytic_signal_1d(c1, zc) - 0.5 * std::exp(I * a * zc)));
    }
    ctx.check("cos_analytic", 10, "cos(at) -> e^{-+iaz}/2 in both half-planes", cos_err,
              Compare::at_most, 1e-8);

    HilbertOptions ho;
    ho.method = AstMethod::periodic;
    const double hil = std::abs(directional_hilbert(c1, {0.3}, {1.0}, 0.02, ho) - std::sin(a * 0.3));
    ctx.check("hilbert_cos", 0, "Hilbert transform of cos is sin", hil, Compare::at_most, 1e-6);

    // 2-D Gaussian: spectral half-space integral against the line integral.
    const double h = 0.035;
    const int M = static_cast<int>(std::round(14 / h)) + 1;
    const FieldSample g2 = FieldSample::from_function(
        [](const rvec& x) { return cplx(std::exp(-(x[0] * x[0] + x[1] * x[1]) / 2)); }, {M, M},
        {-7, -7}, {h, h});
    double ast_diff = 0.0;
    for (const auto& [x, y] : std::vector<std::pair<rvec, rvec>>{{{0.2, -0.1}, {0.5, 0.3}},
                                                                 {{1.0, 0.5}, {-0.3, 0.8}}}) {
        ast_diff = std::max(ast_diff, std::abs(ast_eval(g2, x, y, AstMethod::fourier) -
                                               ast_eval(g2, x, y, AstMethod::line)));
    }
    ctx.check("ast_fourier_vs_line", 10, "AST Fourier route vs line route, 2-D Gaussian",
              ast_diff, Compare::at_most, 1e-4);

    // n = 1: CWT = |y|^{1/2} f_h on grid-aligned points.
    const WaveletSpec mh = mexican_hat();
    const FieldSample s1 = FieldSample::from_function(
        [](const rvec& x) { return cplx(std::exp(-x[0] * x[0] / 2) * std::cos(2 * x[0])); },
        {801}, {-20}, {0.05});
    const SampledSignal ss(s1.values, -20, 0.05);
    double xray_cwt = 0.0;
    for (const auto& [xv, yv] : std::vector<std::pair<double, double>>{
             {0.5, 1.5}, {-1.0, 0.5}, {2.0, 3.0}, {0.0, -2.0}}) {
        const cplx xr = windowed_xray(s1, mh.time, {xv}, {yv});
        const CWTGrid cw = cwt_analyze(ss, mh, {yv}, {xv});
        xray_cwt = std::max(xray_cwt, std::abs(xr * std::sqrt(std::abs(yv)) - cw.values[0]) /
                                          std::abs(cw.values[0]));
    }
    ctx.check("xray_vs_cwt", 10, "n = 1 windowed X-ray times |y|^{1/2} equals the CWT",
              xray_cwt, Compare::at_most, 1e-10);

    const WaveletSpec mw = meyer_wavelet(build_meyer_pair(2, 1, -1));
    const XrayAdmissibility xa = xray_admissibility(mw.freq, 2);
    double norm_err = 0.0;
    for (const rvec& p : {rvec{0.3, 0.1}, rvec{1.0, -2.0}, rvec{-0.7, 0.4}})
        norm_err = std::max(norm_err,
                            std::abs(xray_normalization_2d(mw.freq, xa.N, p, -20, 20, 256) - 1.0));
    ctx.check("xray_normalization", 10, "N int drho |hhat(p.y)|^2 = 1 in n = 2", norm_err,
              Compare::at_most, 1e-6);

    // n = 2 reconstruction under direction-grid refinement.
    const FieldSample fm = FieldSample::from_function(
        [](const rvec& x) {
            return cplx(std::exp(-(x[0] * x[0] + x[1] * x[1]) / 2) * std::cos(4 * x[0] + 2 * x[1]));
        },
        {64, 64}, {-8, -8}, {0.25, 0.25});
    const XrayAdmissibility xh = xray_admissibility(mh.freq, 2);
    rvec errs;
    for (const auto& [rmax, nphi, du] : std::vector<std::tuple<double, int, double>>{
             {4, 16, 0.2}, {8, 32, 0.1}, {16, 64, 0.05}}) {
        const DirectionGrid dirs = polar_direction_grid(0.01, rmax, du, nphi);
        const FieldSample rec = xray_reconstruct(xray_coefficients(fm, mh, dirs), mh, dirs, xh.N);
        errs.push_back(relative_field_error(rec, fm));
    }
    ctx.flag("xray_reconstruction_decreasing", 10, "n = 2 reconstruction error decreases",
             errs[1] < errs[0] && errs[2] < errs[1]);
    ctx.check("xray_reconstruction_finest", 0, "n = 2 reconstruction error, finest grid", errs[2],
              Compare::at_most, 0.05);
}

}  // namespace framelab::tools
