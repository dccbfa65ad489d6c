#include <Eigen/Dense>

#include "framelab/frame.hpp"
#include "suites.hpp"

namespace framelab::tools {

namespace {

// Stack of k random unitary bases; tight with A = k.
FrameSystem stacked_unitaries(Rng& rng, int d, int k) {
    Eigen::MatrixXcd cols(d, d * k);
    for (int b = 0; b < k; ++b) {
        Eigen::MatrixXcd g(d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) g(i, j) = cplx(rng.normal(), rng.normal());
        Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
        cols.middleCols(b * d, d) = qr.householderQ() * Eigen::MatrixXcd::Identity(d, d);
    }
    return FrameSystem(cols, rvec(static_cast<size_t>(d * k), 1.0));
}

}  // namespace

void suite_frames(SuiteContext& ctx) {
    Rng& rng = ctx.rng();
    double neumann_err = 0.0, dual_err = 0.0, recon_err = 0.0, kernel_err = 0.0;
    int max_terms = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const int d = rng.uniform_int(2, 32);
        const int m = rng.uniform_int(2 * d, std::min(128, 4 * d));
        const FrameSystem fr = random_frame(rng, d, m, true, trial % 2 == 1);
        const NeumannResult nr = neumann_inverse(fr);
        max_terms = std::max(max_terms, nr.terms_used);
        const Eigen::MatrixXcd& direct = fr.inverse();
        neumann_err = std::max(neumann_err, (nr.inverse - direct).norm() / direct.norm());

        const FrameSystem rec = reciprocal_frame(fr);
        const Eigen::MatrixXcd W = fr.weight_vector().cast<cplx>().asDiagonal();
        const Eigen::MatrixXcd I_d = Eigen::MatrixXcd::Identity(d, d);
        const Eigen::MatrixXcd left = fr.vectors() * W * rec.vectors().adjoint();
        const Eigen::MatrixXcd right = rec.vectors() * W * fr.vectors().adjoint();
        dual_err = std::max({dual_err, (left - I_d).cwiseAbs().maxCoeff(),
                             (right - I_d).cwiseAbs().maxCoeff()});

        Eigen::VectorXcd f(d);
        for (int i = 0; i < d; ++i) f(i) = cplx(rng.normal(), rng.normal());
        recon_err = std::max(recon_err, (reconstruct(fr, analyze(fr, f)) - f).norm() / f.norm());

        const Eigen::MatrixXcd P = reproducing_kernel(fr) * W;
        kernel_err = std::max(kernel_err, (P * P - P).cwiseAbs().maxCoeff());
    }
    ctx.check("neumann_vs_direct", 1, "Neumann inverse vs direct, 50 random frames", neumann_err,
              Compare::at_most, 1e-8);
    ctx.check("dual_resolution", 1, "sum w |h><h~| = sum w |h~><h| = I", dual_err,
              Compare::at_most, 1e-10);
    ctx.check("reconstruction", 0, "f = sum w h~ <h|f> relative error", recon_err,
              Compare::at_most, 1e-10);
    ctx.check("kernel_projection", 0, "weighted reproducing kernel is idempotent", kernel_err,
              Compare::at_most, 1e-10);

    double tight_dev = 0.0;
    bool single_term = true;
    std::vector<FrameSystem> tight = {orthonormal_basis(5), mercedes_benz()};
    tight.push_back(stacked_unitaries(rng, 6, 2));
    tight.push_back(stacked_unitaries(rng, 16, 3));
    for (const auto& fr : tight) {
        const FrameBounds b = frame_bounds(fr);
        const NeumannResult nr = neumann_inverse(fr);
        single_term = single_term && nr.terms_used == 1;
        const Eigen::MatrixXcd target = Eigen::MatrixXcd::Identity(fr.dim(), fr.dim()) / b.A;
        tight_dev = std::max(tight_dev, (nr.inverse - target).cwiseAbs().maxCoeff());
    }
    ctx.flag("tight_single_term", 1, "tight frames: Neumann series stops after one term",
             single_term);
    ctx.check("tight_inverse", 1, "tight frames: G^{-1} = I/A", tight_dev, Compare::at_most,
              1e-14);

    const FrameBounds mb = frame_bounds(mercedes_benz());
    ctx.check("mercedes_benz_bounds", 0, "Mercedes-Benz frame A = B = 3/2",
              std::max(std::abs(mb.A - 1.5), std::abs(mb.B - 1.5)), Compare::at_most, 1e-14);

    // Rank-deficient family: not a frame.
    Eigen::MatrixXcd cols = Eigen::MatrixXcd::Zero(3, 4);
    cols(0, 0) = cols(1, 1) = cols(0, 2) = cols(1, 3) = 1.0;
    const FrameSystem deficient(cols, rvec(4, 1.0));
    bool rejected = !deficient.is_frame();
    try {
        neumann_inverse(deficient);
        rejected = false;
    } catch (const NotAFrameError&) {
    }
    ctx.flag("not_a_frame", 0, "rank-deficient family rejected", rejected);
    (void)max_terms;
}

}  // namespace framelab::tools
