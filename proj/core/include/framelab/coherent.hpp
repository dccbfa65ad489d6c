#pragma once

#include <vector>

#include "framelab/signal.hpp"

namespace framelab {

// chi_z(x') = pi^{-1/4} exp(-zbar^2/4 + zbar x' - x'^2/2) with z = x - ip.
cplx canonical_cs_eval(cplx z, double xp);
SampledSignal canonical_cs_vector(cplx z, double t0, double dt, int n);
// <chi_z|chi_w> = exp(z wbar / 2)
cplx canonical_overlap(cplx z, cplx w);

// Hermite function of order n (unit norm).
double hermite_function(int n, double x);
SampledSignal hermite_vector(int n, double t0, double dt, int n_samples);

// Moments of psi with Q = multiplication and D = sign * (-i d/dt), D by spectral
// differentiation. Canonical position wavefunctions use sign = +1 (D = P); momentum
// wavefunctions use sign = -1 (D = X = i d/dp).
struct Moments {
    double norm_sq = 0.0;
    double mean_q = 0.0;
    double mean_d = 0.0;
    double delta_q = 0.0;
    double delta_d = 0.0;
};
Moments grid_moments(const SampledSignal& psi, double sign);

// Label grid z = x - ip, x-major.
struct PhaseGrid {
    double x0 = -10.0, dx = 0.5;
    int nx = 41;
    double p0 = -10.0, dp = 0.5;
    int np = 41;

    size_t size() const { return static_cast<size_t>(nx) * static_cast<size_t>(np); }
    cplx label(size_t k) const;
    double cell() const { return dx * dp; }
};

// ftilde(z) = <chi_z|f> by trapezoid quadrature.
cplx bargmann_transform(const SampledSignal& f, cplx z);
cvec bargmann_transform(const SampledSignal& f, const PhaseGrid& grid);
// dmu(z) = (2 pi)^{-1} e^{-|z|^2/2} dx dp
double canonical_measure_density(cplx z);
// sum dmu |ftilde|^2 over the grid
double bargmann_norm_sq(const cvec& ftilde, const PhaseGrid& grid);
// f(x') = int dmu(z) chi_z(x') ftilde(z)
SampledSignal bargmann_reconstruct(const cvec& ftilde, const PhaseGrid& grid, double t0,
                                   double dt, int n);
// |dbar ftilde| at z by central differences, dbar = (d_x - i d_p)/2.
double bargmann_dbar_defect(const SampledSignal& f, cplx z, double h);

// max over pairs |<f|g> - int dmu <f|chi_z><chi_z|g>|; an empty grid gives max |<f|g>|.
double canonical_resolution_check(const PhaseGrid& grid, const std::vector<SampledSignal>& tests);

// e^u_z(p) = (2 pi)^{-1} exp(-u p^2/2m - i p zbar), z = x - iy, s = 1.
cplx galilean_cs(double m, double u, cplx z, double p);
SampledSignal galilean_cs_vector(double m, double u, cplx z, double p0, double dp, int n);
// Evolved packet exp((it - u) p^2/2m - i p zbar) (2 pi)^{-1}, i.e. tau = t - iu.
cplx galilean_evolved(double m, double u, double t, cplx z, double p);

struct GalileanReport {
    double mean_x = 0.0, mean_p = 0.0;
    double delta_x = 0.0, delta_p = 0.0;
    double closed_delta_x = 0.0;  // sqrt((u/2m)(1 + t^2/u^2))
    double closed_mean_x = 0.0;   // x - (t/m) <P>
};
GalileanReport galilean_moments(double m, double u, double t, cplx z, double p0, double dp, int n);

// f_u(z) = (2 pi)^{-1} int dp e^{-u p^2/2m + i p z} fhat(p) for a momentum wavefunction.
cplx galilean_transform(const SampledSignal& fhat, double m, double u, cplx z);
// max over pairs |<f|g> - int dmu_u conj(f_u) g_u|, dmu_u = (m/pi u)^{1/2} e^{-m y^2/u} dx dy,
// <f|g> = (2 pi)^{-1} int conj(fhat) ghat dp.
double galilean_resolution_check(double m, double u, const PhaseGrid& grid,
                                 const std::vector<SampledSignal>& fhats);

}  // namespace framelab
