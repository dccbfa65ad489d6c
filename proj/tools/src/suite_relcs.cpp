#include <algorithm>
#include <cmath>

#include "framelab/relativistic.hpp"
#include "suites.hpp"

namespace framelab::tools {

namespace {

rvec log_spaced(double lo, double hi, int n) {
    rvec v(n);
    for (int i = 0; i < n; ++i) v[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1));
    return v;
}

}  // namespace

void suite_relcs(SuiteContext& ctx) {
    // Closed Bessel form against rest-frame quadrature.
    double norm_err = 0.0;
    for (int s : {1, 2, 3}) {
        const MassShellParams p{1.0, s, 1.0};
        for (double lam : log_spaced(0.01, 20.0, 8)) {
            const double cl = ez_norm_sq(p, lam);
            const double qu = ez_norm_sq(p, lam, NormMethod::quadrature);
            norm_err = std::max(norm_err, std::abs(cl - qu) / std::abs(qu));
        }
    }
    ctx.check("norm_closed_vs_quadrature", 4, "||e_z||^2 closed vs quadrature, s = 1..3",
              norm_err, Compare::at_most, 1e-6);

    // <P_mu> from the Bessel recurrence against -1/2 d ln G / dy^mu.
    Rng& rng = ctx.rng();
    double rec_err = 0.0;
    for (int s : {1, 2, 3}) {
        const MassShellParams p{1.0, s, 1.0};
        for (int trial = 0; trial < 3; ++trial) {
            rvec y(s + 1);
            double sp = 0.0;
            for (int k = 1; k <= s; ++k) {
                y[k] = rng.uniform(-0.8, 0.8);
                sp += y[k] * y[k];
            }
            y[0] = std::sqrt(sp + std::pow(rng.uniform(0.3, 2.0), 2));
            const rvec P = expected_momentum(p, y);
            const double h = 1e-5;
            for (int mu = 0; mu <= s; ++mu) {
                rvec yp = y, ym = y;
                yp[mu] += h;
                ym[mu] -= h;
                const double fd = -0.5 * (log_norm_sq(p, yp) - log_norm_sq(p, ym)) / (2 * h);
                rec_err = std::max(rec_err, std::abs(P[mu] - fd));
            }
        }
    }
    ctx.check("momentum_recurrence", 4, "<P_mu> via recurrence vs finite differences", rec_err,
              Compare::at_most, 1e-6);

    double small_err = 0.0;
    for (int s : {2, 3}) {
        const MassShellParams p{1.0, s, 1.0};
        small_err = std::max(small_err, std::abs(ez_norm_sq(p, 1e-3) / ez_norm_sq_small(p, 1e-3) - 1));
    }
    ctx.check("norm_small_lambda", 4, "small-lambda asymptotic at lambda m = 1e-3", small_err,
              Compare::at_most, 0.02);

    const MassShellParams p1{1.0, 1, 1.0};
    const TubePoint za({0.3, 0.2}, {1.0, 0.4}), zb({-0.5, 0.7}, {0.8, -0.3});
    const cplx kc = kernel_eval(p1, za, zb), kq = kernel_quadrature(p1, za, zb);
    ctx.check("kernel_closed_vs_quadrature", 0, "reproducing kernel closed vs quadrature",
              std::abs(kc - kq) / std::abs(kq), Compare::at_most, 1e-8);
    ctx.check("kernel_hermitian", 0, "K(z', zbar) = conj K(z, z'bar)",
              std::abs(kc - std::conj(kernel_eval(p1, zb, za))), Compare::at_most, 1e-14);

    // Phase-space norm and its time independence.
    const MomentumWavefunction f{
        p1, SampledSignal::from_function(
                [](double q) { return cplx(std::exp(-(q - 0.5) * (q - 0.5))); }, -8, 0.05, 321)};
    const PhaseSpaceGrid g;
    const double kn = k_norm_sq(f);
    const double n0 = phase_space_norm(f, 1.0, 0.0, g);
    const double n1 = phase_space_norm(f, 1.0, 0.7, g);
    ctx.check("phase_space_norm", 5, "||f||_sigma^2 vs ||f||_K^2, relative", std::abs(n0 - kn) / kn,
              Compare::at_most, 1e-3);
    ctx.check("phase_space_t_independence", 5, "||f||_sigma^2 at t = 0 vs t = 0.7, relative",
              std::abs(n1 - n0) / n0, Compare::at_most, 1e-3);

    // Conserved current.
    const CurrentReport c0 = current_density(f, 1.0, 0.0, g, 1e-3);
    const CurrentReport c1 = current_density(f, 1.0, 0.9, g, 1e-3);
    const double jmax = *std::max_element(c0.j0.begin(), c0.j0.end());
    ctx.check("current_continuity", 6, "max |d_t J^0 + d_x J^1| / max J^0",
              std::max(c0.max_defect, c1.max_defect) / jmax, Compare::at_most, 1e-3);
    ctx.flag("current_nonnegative", 6, "J^0 >= 0 on the grid", c0.nonnegative && c1.nonnegative);
    ctx.check("current_flux", 6, "int J^0 dx at t = 0 vs t = 0.9, relative",
              std::abs(c1.flux - c0.flux) / c0.flux, Compare::at_most, 1e-3);

    // Effective mass.
    bool heavier = true;
    double p2_err = 0.0;
    const MassShellParams p3{1.0, 3, 1.0};
    for (double lam : log_spaced(0.01, 20.0, 20)) {
        const double ml = effective_mass(p3, lam);
        heavier = heavier && ml > p3.m;
        const rvec y{lam * 1.25, lam * 0.6, -lam * 0.2, lam * 0.4};
        const double l = std::sqrt(minkowski(y, y));
        const rvec P = expected_momentum(p3, y);
        const double P2 = P[0] * P[0] - P[1] * P[1] - P[2] * P[2] - P[3] * P[3];
        const double mlc = effective_mass(p3, l) * p3.c;
        p2_err = std::max(p2_err, std::abs(P2 - mlc * mlc) / (mlc * mlc));
    }
    ctx.flag("effective_mass_exceeds_m", 7, "m_lambda > m at 20 lambda values", heavier);
    ctx.check("momentum_square", 7, "<P>^2 = (m_lambda c)^2, relative", p2_err, Compare::at_most,
              1e-10);

    {
        const double lam = 50.0;
        const rvec y{lam, 0.0};
        const double P0 = expected_momentum(p1, y)[0];
        ctx.check("large_lambda_regime", 7, "<P_0> vs (mc/lambda) y_0 at lambda mc = 50, s = 1",
                  std::abs(P0 / (p1.mc() / lam * y[0]) - 1), Compare::at_most, 0.01);
    }
    {
        const double lam = 1e-3;
        const rvec y{lam, 0.0, 0.0, 0.0};
        const double P0 = expected_momentum(p3, y)[0];
        ctx.check("small_lambda_regime", 7, "<P_0> vs (nu/lambda^2) y_0 at lambda mc = 1e-3, s = 3",
                  std::abs(P0 / (p3.nu() / (lam * lam) * y[0]) - 1), Compare::at_most, 0.02);
    }
    ctx.check("measure_constant_identity", 0, "A_lambda = (2 pi lambda/mc)^s (m_lambda/m) G",
              std::abs(measure_constant(p3, 0.7) /
                           (std::pow(2 * pi * 0.7, 3) * effective_mass(p3, 0.7) * ez_norm_sq(p3, 0.7)) -
                       1),
              Compare::at_most, 1e-10);

    // Non-relativistic limit.
    const SampledSignal fh = SampledSignal::from_function(
        [](double q) { return cplx(std::exp(-q * q / 2)); }, -8, 0.05, 321);
    PhaseSpaceGrid g2;
    g2.x0 = -15, g2.dx = 0.25, g2.nx = 121, g2.y0 = -10, g2.dy = 0.1, g2.ny = 201;
    const rvec J = nonrel_limit_defect(fh, 1.0, 1.0, {2, 4, 8, 16}, g2);
    bool decreasing = true;
    for (size_t i = 1; i < J.size(); ++i) decreasing = decreasing && J[i] < J[i - 1];
    ctx.flag("nonrel_decreasing", 8, "J(c) strictly decreasing over c = 2, 4, 8, 16", decreasing);
    ctx.check("nonrel_final_fraction", 8, "J(16) / J(2)", J.back() / J.front(), Compare::at_most,
              0.1);
}

}  // namespace framelab::tools
