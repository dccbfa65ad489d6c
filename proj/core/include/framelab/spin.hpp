#pragma once

#include <Eigen/Dense>

#include "framelab/types.hpp"

namespace framelab {

// Spin-s representation in the basis v_s, v_{s-1}, ..., v_{-s} (index k <-> m = s - k).
struct SpinRep {
    int two_s = 1;
    Eigen::MatrixXd S3;
    Eigen::MatrixXd Sp;
    Eigen::MatrixXd Sm;

    double s() const { return 0.5 * two_s; }
    int dim() const { return two_s + 1; }
    int index_of(double m) const;  // basis index of v_m
    Eigen::MatrixXcd S1() const;
    Eigen::MatrixXcd S2() const;
};

// 2s must be a positive integer.
SpinRep build_rep(double s);

// max |[S3,S+] - S+|, max |[S+,S-] - 2 S3|, max |S^2 - s(s+1) I|
struct AlgebraDefect {
    double raising = 0.0;
    double ladder = 0.0;
    double casimir = 0.0;
};
AlgebraDefect algebra_defect(const SpinRep& rep);

// Unit vector n = (sin t cos p, sin t sin p, cos t).
Eigen::Vector3d sphere_point(double theta, double phi);

// h_n = exp(-i phi S3) exp(-i theta S2) v_{-s}; theta = 0 returns v_{-s} and <S> = -s n.
Eigen::VectorXcd spin_cs_vector(const SpinRep& rep, double theta, double phi);

struct ResolutionReport {
    double defect = 0.0;        // max entrywise |integral - I|
    double offdiag = 0.0;       // max off-diagonal magnitude
    double measure = 0.0;       // integral of the measure (4 pi on the sphere)
    double frame_constant = 0.0;  // c from the trace identity
};
// (2s+1)/(4 pi) int dn |h_n><h_n| with Gauss-Legendre in cos(theta) x uniform phi.
ResolutionReport sphere_resolution_check(const SpinRep& rep, int order);

// h_zeta = sum_n conj(zeta)^n (-S+)^n v_{-s} / n!
Eigen::VectorXcd holo_cs_vector(const SpinRep& rep, cplx zeta);
// ((2s+1)/pi) int d^2 zeta (1+|zeta|^2)^{-2s-2} |h_zeta><h_zeta| with r = rho/(1-rho),
// Gauss-Legendre in rho x uniform angle. frame_constant reports 8 pi s int r dr/(1+r^2)^2 / (2s+1).
ResolutionReport holo_resolution_check(const SpinRep& rep, int n_radial, int n_angular);

struct SpinExpectations {
    cplx s_plus;
    double s3 = 0.0;
    double length_sq = 0.0;
};
// Matrix-element values of <S+>, <S3>, |<S>|^2 in h_zeta.
SpinExpectations spin_expectations(const SpinRep& rep, cplx zeta);
// -2 s zeta/(1+|zeta|^2), s(|zeta|^2-1)/(|zeta|^2+1), s^2
SpinExpectations spin_expectations_closed(double s, cplx zeta);

struct OscillatorResult {
    cplx zeta_t;
    cplx phase;
    double mismatch = 0.0;  // ||e^{-itN} h_zeta - phase h_{zeta_t}|| / ||h_zeta||
};
// Evolves h_zeta under N = S3 + s with a matrix exponential; throws if it leaves the family.
OscillatorResult oscillator_evolve(const SpinRep& rep, cplx zeta, double t);

// Contraction w_n <-> v_{n-s}, K+- = S+- / sqrt(s+1), K3 = S3/(s+1) against
// A w_n = sqrt(2n) w_{n-1}, A* w_n = sqrt(2n+2) w_{n+1}, K3 -> -1. Entry (k, n).
struct ContractionDefect {
    Eigen::MatrixXd minus;
    Eigen::MatrixXd plus;
    Eigen::MatrixXd k3;
    double max() const;
};
ContractionDefect contraction_defect(double s, int n_max);

// |<w_k|N w_n> - n delta_kn| with N = S3 + s, n <= n_max <= 2s.
Eigen::MatrixXd nminus_limit(double s, int n_max);

}  // namespace framelab
