#include <cmath>

#include "framelab/coherent.hpp"
#include "suites.hpp"

namespace framelab::tools {

void suite_coherent(SuiteContext& ctx) {
    Rng& rng = ctx.rng();
    double norm_err = 0.0, mean_err = 0.0, unc_err = 0.0, overlap_err = 0.0;
    for (int trial = 0; trial < 5; ++trial) {
        const cplx z(rng.uniform(-2, 2), rng.uniform(-2, 2));
        const cplx w(rng.uniform(-2, 2), rng.uniform(-2, 2));
        const SampledSignal cz = canonical_cs_vector(z, -20, 0.05, 800);
        const SampledSignal cw = canonical_cs_vector(w, -20, 0.05, 800);
        const Moments mo = grid_moments(cz, 1.0);
        const double expected_norm = std::exp(std::norm(z) / 2);
        norm_err = std::max(norm_err, std::abs(mo.norm_sq / expected_norm - 1.0));
        mean_err = std::max({mean_err, std::abs(mo.mean_q - z.real()),
                             std::abs(mo.mean_d + z.imag())});
        unc_err = std::max(unc_err, std::abs(mo.delta_q * mo.delta_d - 0.5));
        overlap_err = std::max(overlap_err, std::abs(bargmann_transform(cw, z) -
                                                     canonical_overlap(z, w)) /
                                                std::abs(canonical_overlap(z, w)));
    }
    ctx.check("cs_norm", 0, "||chi_z||^2 = e^{|z|^2/2}, relative", norm_err, Compare::at_most, 1e-12);
    ctx.check("cs_means", 0, "<X> = x, <P> = p", mean_err, Compare::at_most, 1e-10);
    ctx.check("cs_minimal_uncertainty", 0, "Delta X Delta P = 1/2", unc_err, Compare::at_most, 1e-10);
    ctx.check("cs_overlap", 0, "<chi_z|chi_w> = e^{z wbar/2}, relative", overlap_err,
              Compare::at_most, 1e-12);

    const PhaseGrid g;
    std::vector<SampledSignal> H;
    for (int n = 0; n <= 4; ++n) H.push_back(hermite_vector(n, -15, 0.05, 600));
    ctx.check("bargmann_resolution", 0, "resolution of unity on Hermite functions",
              canonical_resolution_check(g, H), Compare::at_most, 1e-10);
    const cvec ft = bargmann_transform(H[3], g);
    ctx.check("bargmann_isometry", 0, "||ftilde||^2 = ||f||^2", std::abs(bargmann_norm_sq(ft, g) - 1.0),
              Compare::at_most, 1e-10);
    ctx.check("bargmann_reconstruction", 0, "f from ftilde, relative L2",
              relative_l2_error(bargmann_reconstruct(ft, g, -15, 0.05, 600), H[3]),
              Compare::at_most, 1e-10);

    const GalileanReport g0 = galilean_moments(1.0, 0.7, 0.0, cplx(0.4, -0.9), -30, 0.02, 3000);
    const GalileanReport gt = galilean_moments(1.0, 0.7, 1.3, cplx(0.4, -0.9), -30, 0.02, 3000);
    const double gal_err = std::max({std::abs(g0.mean_x - 0.4), std::abs(g0.mean_p - 0.9 / 0.7),
                                     std::abs(g0.delta_x - g0.closed_delta_x),
                                     std::abs(g0.delta_p - std::sqrt(1 / 1.4)),
                                     std::abs(gt.mean_x - gt.closed_mean_x),
                                     std::abs(gt.delta_x - gt.closed_delta_x)});
    ctx.check("galilean_moments", 0, "Galilean packet moments at t = 0 and t = 1.3", gal_err,
              Compare::at_most, 1e-10);

    std::vector<SampledSignal> F;
    F.push_back(SampledSignal::from_function([](double p) { return cplx(std::exp(-p * p / 2)); },
                                             -12, 0.05, 480));
    F.push_back(SampledSignal::from_function(
        [](double p) { return std::exp(-(p - 1) * (p - 1) / 2 + I * 0.5 * p); }, -12, 0.05, 480));
    PhaseGrid gg;
    gg.x0 = -12, gg.dx = 0.25, gg.nx = 97, gg.p0 = -6, gg.dp = 0.25, gg.np = 49;
    ctx.check("galilean_resolution", 0, "Galilean resolution of unity",
              galilean_resolution_check(1.0, 0.7, gg, F), Compare::at_most, 1e-10);
}

}  // namespace framelab::tools
