#include <cmath>

#include "framelab/wft.hpp"
#include "suites.hpp"

namespace framelab::tools {

void suite_wft(SuiteContext& ctx) {
    const double dt = 0.01, tau = 0.64, T = tau / 2;
    const SampledSignal f = SampledSignal::from_function(
        [](double t) {
            return cplx(std::exp(-t * t / 2) * std::cos(7 * t) +
                        0.3 * std::sin(3 * t) * std::exp(-t * t));
        },
        -8.0, dt, 1601);
    const WindowSpec h = WindowSpec::smooth_bump(tau, dt);
    const WFTLattice lat = full_lattice(f, h, T);
    const LatticeCoefficients c = wft_lattice_analyze(f, h, lat);
    const LatticeWeight g = lattice_weight(h, T, f.t0, f.dt, f.size());

    double lhs = 0.0, rhs = 0.0;
    for (const auto& v : c.values) lhs += std::norm(v);
    for (int k = 0; k < f.size(); ++k) rhs += g.g.samples[k].real() * std::norm(f.samples[k]) * dt;
    ctx.check("frame_sum", 2, "sum |<h_mn|f>|^2 = int g |f|^2, relative", std::abs(lhs - rhs) / rhs,
              Compare::at_most, 1e-6);
    ctx.flag("lattice_valid", 0, "T = tau/2 gives A > 0", g.valid());

    const SampledSignal r = wft_reconstruct(c, h, g);
    ctx.check("reconstruction", 2, "full lattice reconstruction, relative L2",
              relative_l2_error(r, f), Compare::at_most, 1e-8);

    // Random trigonometric content on the same lattice.
    Rng& rng = ctx.rng();
    double worst = 0.0;
    for (int trial = 0; trial < 3; ++trial) {
        cplx amp[4];
        double freq[4];
        for (int j = 0; j < 4; ++j) {
            amp[j] = cplx(rng.normal(), rng.normal());
            freq[j] = rng.uniform(-20.0, 20.0);
        }
        const SampledSignal q = SampledSignal::from_function(
            [&](double t) {
                cplx s = 0.0;
                for (int j = 0; j < 4; ++j) s += amp[j] * std::exp(2.0 * pi * I * freq[j] * t);
                return s * std::exp(-t * t / 4);
            },
            -8.0, dt, 1601);
        const LatticeCoefficients cq = wft_lattice_analyze(q, h, full_lattice(q, h, T));
        worst = std::max(worst, relative_l2_error(wft_reconstruct(cq, h, g), q));
    }
    ctx.check("reconstruction_random", 2, "random trigonometric signals, relative L2", worst,
              Compare::at_most, 1e-8);

    const LatticeWeight sparse = lattice_weight(h, 1.2 * tau, f.t0, f.dt, f.size());
    ctx.flag("sparse_lattice", 2, "T > tau: A = 0 and frame failure detected",
             sparse.A == 0.0 && !sparse.valid());

    // Band-limited approximation improves as the content moves toward zero frequency.
    double prev = 1e300;
    bool monotone = true;
    for (double nu : {4.0, 2.0, 1.0, 0.5}) {
        const SampledSignal s = SampledSignal::from_function(
            [nu](double t) { return cplx(std::cos(2 * pi * nu * t) * std::exp(-t * t / 8)); },
            -8.0, dt, 1601);
        const LatticeCoefficients cs = wft_lattice_analyze(s, h, full_lattice(s, h, T));
        const double e = *band_limited_approx(cs, h, g, &s).error;
        monotone = monotone && e < prev;
        prev = e;
    }
    ctx.flag("band_limited_monotone", 0, "m = 0 approximation error decreases with bandwidth",
             monotone);
}

}  // namespace framelab::tools
