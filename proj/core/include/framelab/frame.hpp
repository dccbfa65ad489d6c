#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "framelab/rng.hpp"
#include "framelab/types.hpp"

namespace framelab {

struct FrameBounds {
    double A = 0.0;
    double B = 0.0;
};

// Finite weighted family {h_m} in C^d. Immutable; G, its bounds and (for frames) its
// inverse are computed once at construction.
class FrameSystem {
public:
    // Column m of `vectors` is h_m.
    FrameSystem(Eigen::MatrixXcd vectors, rvec weights);
    FrameSystem(const std::vector<Eigen::VectorXcd>& vectors, rvec weights);

    int dim() const { return static_cast<int>(h_.rows()); }
    int size() const { return static_cast<int>(h_.cols()); }
    const Eigen::MatrixXcd& vectors() const { return h_; }
    const rvec& weights() const { return w_; }
    Eigen::VectorXd weight_vector() const;

    // G = sum_m w_m |h_m><h_m|.
    const Eigen::MatrixXcd& frame_operator() const { return g_; }
    // Extreme eigenvalues of G, no validity check.
    FrameBounds raw_bounds() const { return bounds_; }
    bool is_frame() const { return bounds_.A > 1e-12 * bounds_.B && bounds_.B > 0.0; }
    // Direct G^{-1}; throws NotAFrameError when the system is not a frame.
    const Eigen::MatrixXcd& inverse() const;

    std::string to_text() const;
    static FrameSystem from_text(const std::string& text);

private:
    void init();

    Eigen::MatrixXcd h_;
    rvec w_;
    Eigen::MatrixXcd g_;
    Eigen::MatrixXcd ginv_;
    FrameBounds bounds_;
};

using CoefficientVector = Eigen::VectorXcd;

struct NeumannResult {
    Eigen::MatrixXcd inverse;
    int terms_used = 0;
    double residual = 0.0;  // ||R^{K+1}||_F = ||Ginv G - I||_F
};

CoefficientVector analyze(const FrameSystem& frame, const Eigen::VectorXcd& f);
FrameBounds frame_bounds(const FrameSystem& frame);
NeumannResult neumann_inverse(const FrameSystem& frame, double tol = 1e-12, int max_terms = 10000);
FrameSystem reciprocal_frame(const FrameSystem& frame);
Eigen::MatrixXcd reproducing_kernel(const FrameSystem& frame);
Eigen::VectorXcd reconstruct(const FrameSystem& frame, const CoefficientVector& coeffs);
double consistency_residual(const FrameSystem& frame, const CoefficientVector& g);
// `values[k]` is the coefficient at index `subset[k]`; the rest are taken as zero.
Eigen::VectorXcd least_squares_reconstruct(const FrameSystem& frame, const std::vector<int>& subset,
                                           const Eigen::VectorXcd& values);

// sum_m w_m |<h_m|f>|^2
double frame_energy(const FrameSystem& frame, const Eigen::VectorXcd& f);
// sqrt(sum_m w_m |g_m|^2)
double weighted_norm(const FrameSystem& frame, const CoefficientVector& g);

FrameSystem orthonormal_basis(int d);
// Three unit vectors at 120 degrees in R^2.
FrameSystem mercedes_benz();
// Gaussian entries, unit weights unless `random_weights`.
FrameSystem random_frame(Rng& rng, int d, int m, bool complex_entries = true,
                         bool random_weights = false);

}  // namespace framelab
