#include <cmath>

#include "framelab/wavelet.hpp"
#include "suites.hpp"

namespace framelab::tools {

void suite_wavelet(SuiteContext& ctx) {
    const MeyerPair mp = build_meyer_pair(2, 1, 3);
    rvec nus(10000);
    for (int i = 0; i < 10000; ++i) nus[i] = -10 * mp.F + 20 * mp.F * (i + 0.5) / 10000;
    ctx.check("chi_partition", 3, "chi+ + chi- = 1 on a 1e4-point sweep",
              chi_partition(mp, nus).max_deviation, Compare::at_most, 1e-12);

    const MeyerPair smooth = build_meyer_pair(2, 1, -1);
    ctx.check("chi_partition_smooth", 0, "C-infinity profile, same sweep",
              chi_partition(smooth, nus).max_deviation, Compare::at_most, 1e-12);

    const Admissibility am = admissibility_constant([&](double nu) { return cplx(mp.kplus(nu)); });
    ctx.check("meyer_admissibility", 0, "c_h of k+ equals ln a", std::abs(am.c_h - std::log(2.0)),
              Compare::at_most, 1e-8);
    const Admissibility ah = admissibility_constant(mexican_hat());
    ctx.check("mexican_hat_admissibility", 0, "Mexican hat c_h = 2 pi",
              std::abs(ah.c_h - 2 * pi) / (2 * pi), Compare::at_most, 1e-10);

    const DyadicLattice dl{2, 1, -2, 4};
    const double dnu = dl.width(4) / 8;
    const int J = static_cast<int>(std::round(4.0 / dnu));
    const SampledSignal sig = SampledSignal::from_function(
        [](double t) { return cplx(std::exp(-t * t / 8) * std::cos(pi * t)); }, -30, 0.05, 1201);
    const SampledSignal fh = fourier_transform(sig, -J * dnu, dnu, 2 * J + 1);
    const DiscreteWaveletCoeffs dc = discrete_wavelet_analyze(fh, mp, dl);
    const SampledSignal rec = discrete_wavelet_reconstruct(dc, mp, -J * dnu, 2 * J + 1);
    ctx.check("discrete_round_trip", 3, "discrete tight frame round trip, relative L2",
              relative_l2_error(rec, fh), Compare::at_most, 1e-6);
    const double fe = l2_norm(fh) * l2_norm(fh);
    ctx.check("discrete_energy", 0, "b sum |f_mn|^2 = ||fhat||^2, relative",
              std::abs(discrete_wavelet_energy(dc) - fe) / fe, Compare::at_most, 1e-6);

    // CWT Parseval with the small-scale cutoff refined twice.
    const WaveletSpec mh = mexican_hat();
    const SampledSignal f = SampledSignal::from_function(
        [](double t) { return cplx(std::cos(5 * t) * std::exp(-t * t / 2)); }, -45, 0.02, 4501);
    const double E = l2_norm(f) * l2_norm(f);
    rvec shifts;
    for (int k = -100; k <= 100; ++k) shifts.push_back(0.1 * k);
    rvec errs;
    for (double a_min : {0.1, 0.05, 0.025}) {
        const ScaleGrid sc = log_scale_grid(a_min, 4.0, 0.1, false);
        const CWTGrid c = cwt_analyze(f, mh, sc.a, shifts);
        errs.push_back(std::abs(cwt_energy(c, sc, 0.1, ah.c_h, true) - E) / E);
    }
    const double ratio = std::min(errs[0] / errs[1], errs[1] / errs[2]);
    ctx.check("cwt_parseval_refined", 3, "CWT Parseval error on the finest grid", errs[2],
              Compare::at_most, 1e-3);
    ctx.check("cwt_parseval_halving", 3, "error ratio per refinement step (two steps)", ratio,
              Compare::at_least, 2.0);
}

}  // namespace framelab::tools
