#include <cmath>

#include "framelab/spin.hpp"
#include "suites.hpp"

namespace framelab::tools {

void suite_spincs(SuiteContext& ctx) {
    Rng& rng = ctx.rng();
    double alg = 0.0;
    for (double s : {0.5, 1.0, 2.5, 12.5}) {
        const AlgebraDefect d = algebra_defect(build_rep(s));
        alg = std::max({alg, d.raising, d.ladder, d.casimir});
    }
    ctx.check("su2_algebra", 0, "commutators and Casimir", alg, Compare::at_most, 1e-10);

    double law = 0.0;
    for (double s : {0.5, 1.5, 2.5}) {
        const SpinRep r = build_rep(s);
        for (int i = 0; i < 40; ++i) {
            const double t1 = std::acos(rng.uniform(-1, 1)), p1 = rng.uniform(0, 2 * pi);
            const double t2 = std::acos(rng.uniform(-1, 1)), p2 = rng.uniform(0, 2 * pi);
            const Eigen::VectorXcd a = spin_cs_vector(r, t1, p1), b = spin_cs_vector(r, t2, p2);
            const double expect =
                std::pow((1 + sphere_point(t1, p1).dot(sphere_point(t2, p2))) / 2, 2 * s);
            law = std::max(law, std::abs(std::norm(a.dot(b)) - expect));
        }
    }
    ctx.check("overlap_law", 9, "|<h_n|h_n'>|^2 = ((1 + n.n')/2)^{2s}", law, Compare::at_most, 1e-10);

    double sph = 0.0, holo = 0.0;
    for (double s : {0.5, 1.0, 1.5, 2.0, 2.5}) {
        const SpinRep r = build_rep(s);
        sph = std::max(sph, sphere_resolution_check(r, 16).defect);
        holo = std::max(holo, holo_resolution_check(r, 32, 16).defect);
    }
    ctx.check("sphere_resolution", 9, "sphere resolution of unity, s <= 5/2", sph, Compare::at_most,
              1e-10);
    ctx.check("holomorphic_resolution", 9, "stereographic resolution of unity, s <= 5/2", holo,
              Compare::at_most, 1e-10);

    double expect_err = 0.0;
    const SpinRep r25 = build_rep(2.5);
    for (int i = 0; i < 5; ++i) {
        const cplx z(rng.uniform(-2, 2), rng.uniform(-2, 2));
        const SpinExpectations e = spin_expectations(r25, z), c = spin_expectations_closed(2.5, z);
        expect_err = std::max({expect_err, std::abs(e.s_plus - c.s_plus), std::abs(e.s3 - c.s3),
                               std::abs(e.length_sq - c.length_sq)});
    }
    ctx.check("expectations", 0, "<S+>, <S3>, |<S>|^2 closed forms", expect_err, Compare::at_most,
              1e-10);

    double osc = 0.0;
    for (double s : {0.5, 1.5, 4.0}) {
        const cplx z(rng.uniform(-1, 1), rng.uniform(-1, 1));
        const double t = rng.uniform(0, 2 * pi);
        const OscillatorResult o = oscillator_evolve(build_rep(s), z, t);
        osc = std::max({osc, o.mismatch, std::abs(o.zeta_t - std::exp(I * t) * z)});
    }
    ctx.check("oscillator_evolution", 9, "e^{-itN} h_zeta stays coherent with zeta -> e^{it} zeta",
              osc, Compare::at_most, 1e-8);

    const ContractionDefect c200 = contraction_defect(200, 3), c400 = contraction_defect(400, 3);
    ctx.check("contraction_defect", 9, "max contraction defect at s = 200, n <= 3", c200.max(),
              Compare::at_most, 1e-2);
    const double ratio = c200.max() / c400.max();
    ctx.check("contraction_halving", 9, "defect ratio s = 200 vs s = 400 (2 +- 10%)",
              std::abs(ratio - 2.0), Compare::at_most, 0.2);
    ctx.check("number_operator_limit", 0, "|<w_k|N w_n> - n delta_kn| at s = 200",
              nminus_limit(200, 3).cwiseAbs().maxCoeff(), Compare::at_most, 1e-12);
}

}  // namespace framelab::tools
