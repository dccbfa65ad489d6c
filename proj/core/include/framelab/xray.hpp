#pragma once

#include <functional>
#include <vector>

#include "framelab/signal.hpp"
#include "framelab/wavelet.hpp"

namespace framelab {

struct XrayOptions {
    double tail_tol = 1e-6;  // max boundary |f| / max |f|
};

// f_h(x, y) = int dt conj(h(t)) f(x + t y), trapezoid in t with step min_i(h_i/|y_i|)
// anchored at t = 0 and multilinear interpolation of f.
cplx windowed_xray(const FieldSample& f, const std::function<cplx(double)>& h, const rvec& x,
                   const rvec& y, const XrayOptions& opt = {});

struct XrayAdmissibility {
    bool admissible = false;
    double c_h = 0.0;
    double N = 0.0;  // Gamma(n/2) / (pi^{n/2} c_h)
};

XrayAdmissibility xray_admissibility(const std::function<cplx(double)>& hhat, int n);

// N int d^2y |y|^{-2} |hhat(p.y)|^2 in polar form: u = ln r over [u_min, u_max]
// (adaptive), phi trapezoid with n_phi nodes.
double xray_normalization_2d(const std::function<cplx(double)>& hhat, double N, const rvec& p,
                             double u_min, double u_max, int n_phi);

// y-quadrature for n = 2: r = e^u on a uniform u-grid, phi uniform; weight includes |y|^{-2}.
struct DirectionGrid {
    std::vector<rvec> y;
    rvec w;
};
DirectionGrid polar_direction_grid(double r_min, double r_max, double du, int n_phi);

// Coefficients f_h(., y_q) on f's grid, computed spectrally with f periodic on the grid.
std::vector<FieldSample> xray_coefficients(const FieldSample& f, const WaveletSpec& h,
                                           const DirectionGrid& dirs);

// f(x') = N sum_q w_q int dx h_{x,y_q}(x') f_h(x, y_q), h_{x,y}(x') = int dt h(t) delta(x' - x - t y).
FieldSample xray_reconstruct(const std::vector<FieldSample>& coeffs, const WaveletSpec& h,
                             const DirectionGrid& dirs, double N);

// Real Meyer-type wavelet with hhat(nu) = k+(|nu|); h(t) by quadrature over the band.
WaveletSpec meyer_wavelet(const MeyerPair& pair);

}  // namespace framelab
