#pragma once

#include <Eigen/Dense>

#include "framelab/signal.hpp"

namespace framelab {

// Scalar particle of mass m in s space dimensions. Geometry uses c = 1 with the mass
// entering the Bessel arguments as m c.
struct MassShellParams {
    double m = 1.0;
    int s = 1;
    double c = 1.0;

    double nu() const { return 0.5 * (s - 1); }
    double mc() const { return m * c; }
    void validate() const;
};

enum class Cone { forward, backward, outside };

// z = x - iy in complexified spacetime, components (0, 1, ..., s), metric (+, -, ..., -).
struct TubePoint {
    rvec x;
    rvec y;

    TubePoint() = default;
    TubePoint(rvec x_, rvec y_);

    int dim() const { return static_cast<int>(x.size()); }
    Cone cone() const;
    // sqrt(y.y) for timelike y, 0 otherwise.
    double lambda() const;
};

double minkowski(const rvec& a, const rvec& b);
cplx minkowski(const std::vector<cplx>& a, const std::vector<cplx>& b);

enum class NormMethod { closed, quadrature };

// ||e_z||^2 = G(lambda) = (2 pi)^{-1} (mc / 4 pi lambda)^nu K_nu(2 lambda mc).
// The quadrature route integrates dp~ e^{-2 lambda omega} radially in the rest frame.
double ez_norm_sq(const MassShellParams& p, double lambda, NormMethod method = NormMethod::closed);
// Small-lambda form Gamma(nu) (4 pi)^{-nu-1} lambda^{-2 nu}, nu > 0.
double ez_norm_sq_small(const MassShellParams& p, double lambda);

// eta = sqrt(-(z' - conj z)^2), principal branch.
cplx kernel_eta(const TubePoint& zp, const TubePoint& z);
// K(z', conj z) = (2 pi)^{-1} (mc / 2 pi eta)^nu K_nu(eta mc)
cplx kernel_eval(const MassShellParams& p, const TubePoint& zp, const TubePoint& z);
// Direct quadrature of int dp~ exp(-i (z' - conj z) p), s = 1.
cplx kernel_quadrature(const MassShellParams& p, const TubePoint& zp, const TubePoint& z);

// Covariant <P_mu> = [K_{nu+1}/K_nu](2 lambda mc) (mc / lambda) y_mu.
rvec expected_momentum(const MassShellParams& p, const rvec& y);
// ln G as a function of the full vector y (for difference checks).
double log_norm_sq(const MassShellParams& p, const rvec& y);
// m_lambda = m K_{nu+1}(2 lambda mc) / K_nu(2 lambda mc)
double effective_mass(const MassShellParams& p, double lambda);
// A_lambda = pi^{-1} (pi lambda / mc)^{nu+1} K_{nu+1}(2 lambda mc); A_0 at lambda = 0.
double measure_constant(const MassShellParams& p, double lambda);
// Covariant C_{mu nu}.
Eigen::MatrixXd correlation_matrix(const MassShellParams& p, const rvec& y);

// Positive-energy wavefunction a(p) sampled on a 1-D momentum grid (s = 1).
struct MomentumWavefunction {
    MassShellParams params;
    SampledSignal a;
};

// f(z) = int dp~ e^{-izp} a(p) at z = (t - i y0, x - i y1).
cplx field_value(const MomentumWavefunction& f, double t, double x, double y0, double y1);
// ||f||_K^2 = int dp~ |a|^2
double k_norm_sq(const MomentumWavefunction& f);

// Tensor grid over (x, y) with y the spatial part of y on the hyperboloid y^2 = lambda^2.
struct PhaseSpaceGrid {
    double x0 = -12.0, dx = 0.2;
    int nx = 121;
    double y0 = -30.0, dy = 0.25;
    int ny = 241;
};

// A_lambda^{-1} int dx dy |f(x - iy)|^2 over sigma_{t, lambda}.
double phase_space_norm(const MomentumWavefunction& f, double lambda, double t,
                        const PhaseSpaceGrid& grid);

struct CurrentReport {
    rvec x;
    rvec j0;
    rvec j1;
    rvec defect;  // |d_t J^0 + d_x J^1| by central differences
    double max_defect = 0.0;
    double flux = 0.0;  // trapezoid of J^0 over x
    bool nonnegative = true;
};
CurrentReport current_density(const MomentumWavefunction& f, double lambda, double t,
                              const PhaseSpaceGrid& grid, double fd_step);

// J(c) = || 2mc e^{i tau m c^2} f_c - e^{-m y^2/2u} f_NR ||^2 over the (x, y) grid, t = 0,
// fhat sampled on a momentum grid, one value per entry of cs.
rvec nonrel_limit_defect(const SampledSignal& fhat, double u, double m, const rvec& cs,
                         const PhaseSpaceGrid& grid);

}  // namespace framelab
