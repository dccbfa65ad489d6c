#pragma once

#include <functional>
#include <string>
#include <vector>

#include "framelab/signal.hpp"

namespace framelab {

// Mother wavelet in closed form on both sides of the Fourier transform,
// hhat(nu) = int e^{2 pi i nu t} h(t) dt.
struct WaveletSpec {
    std::function<cplx(double)> time;
    std::function<cplx(double)> freq;
    double support = 8.0;  // |h(t)| negligible for |t| > support
    bool real = true;
    std::string name;
};

// h(t) = (1 - t^2) e^{-t^2/2}
WaveletSpec mexican_hat();
// h(t) = t e^{-t^2/2}
WaveletSpec gaussian_derivative();
// h(t) = e^{-t^2/2}; not admissible.
WaveletSpec gaussian_window();

struct CWTGrid {
    rvec scales;
    rvec shifts;
    cvec values;  // scale-major
    cplx at(size_t i, size_t j) const { return values[i * shifts.size() + j]; }
};

// ftilde(a, s) = sum_t dt |a|^{-1/2} conj(h((t - s)/a)) f(t)
CWTGrid cwt_analyze(const SampledSignal& f, const WaveletSpec& h, const rvec& scales,
                    const rvec& shifts);

struct Admissibility {
    bool admissible = false;
    double c_h = 0.0;  // int |hhat(xi)|^2 / |xi| d xi over the line when admissible
};

Admissibility admissibility_constant(const std::function<cplx(double)>& hhat,
                                     double rel_tol = 1e-12);
inline Admissibility admissibility_constant(const WaveletSpec& h) {
    return admissibility_constant(h.freq);
}
// Same integral from samples on a uniform nu-grid (trapezoid, removable singularity at 0).
Admissibility admissibility_constant_sampled(const SampledSignal& hhat);

// Quadrature nodes in |a|: log-spaced, weight = d|a| (so da/a^2 -> w/a^2).
struct ScaleGrid {
    rvec a;
    rvec w;
};
ScaleGrid log_scale_grid(double a_min, double a_max, double dln_a, bool both_signs);

// f(t) = C^{-1} sum_{a,s} (w_a ds / a^2) h_{a,s}(t) ftilde(a,s); C = c_h, or c_h/2 when
// only positive scales are present (real wavelets).
SampledSignal cwt_reconstruct(const CWTGrid& coeffs, const ScaleGrid& scales, double ds,
                              const WaveletSpec& h, double c_h, double t0, double dt, int n);

// c_h^{-1} sum (w_a ds / a^2) |ftilde|^2, the continuous-frame energy.
double cwt_energy(const CWTGrid& coeffs, const ScaleGrid& scales, double ds, double c_h,
                  bool positive_only);

// int_0^inf da a^{1-p} |hhat(a nu)|^2 for the scale density a^{-p}; constant in nu only for p = 2.
double scale_response(const std::function<cplx(double)>& hhat, double p, double nu);

// Frequency profiles for the discrete tight frame.
struct MeyerPair {
    double a = 2.0;
    double b = 1.0;
    double F = 2.0 / 3.0;
    int k = 3;  // smoothness order, < 0 for C-infinity

    double eta(double x) const;
    double kplus(double nu) const;
    double kminus(double nu) const { return kplus(-nu); }
    double band_width() const { return (a - 1.0 / a) * F; }
};

MeyerPair build_meyer_pair(double a, double b, int k);

struct ChiPartition {
    rvec chi_plus;
    rvec chi_minus;
    double max_deviation = 0.0;  // max |chi+ + chi- - 1| over nonzero nu
};

double chi_value(const MeyerPair& p, double nu, int eps);
ChiPartition chi_partition(const MeyerPair& p, const rvec& nus);

struct DyadicLattice {
    double a = 2.0;
    double b = 1.0;
    int m_lo = 0, m_hi = 0;

    double F() const { return a / ((a * a - 1.0) * b); }
    // Band width W_m = a^{-m}/b of row m.
    double width(int m) const;
    // Positive-frequency band of row m: [F a^{-m-1}, F a^{-m+1}].
    std::pair<double, double> band(int m) const;
};

struct WaveletRow {
    int eps = 1;
    int m = 0;
    int n_lo = 0;
    cvec values;  // n = n_lo .. n_lo + L_m - 1
};

struct DiscreteWaveletCoeffs {
    DyadicLattice lattice;
    double dnu = 0.0;
    std::vector<WaveletRow> rows;
};

// Spectra are SampledSignal over nu (t0 = nu_0, dt = dnu). Requires W_m / dnu to be an
// integer >= 8 for every row; n then runs over W_m / dnu consecutive values.
DiscreteWaveletCoeffs discrete_wavelet_analyze(const SampledSignal& fhat, const MeyerPair& pair,
                                               const DyadicLattice& lattice);
SampledSignal discrete_wavelet_reconstruct(const DiscreteWaveletCoeffs& coeffs,
                                           const MeyerPair& pair, double nu0, int count,
                                           double metric_tol = 1e-8);
// b sum |f_mn|^2
double discrete_wavelet_energy(const DiscreteWaveletCoeffs& coeffs);

// fhat(nu_j) = sum_t dt e^{2 pi i nu_j t} f(t) and its inverse on a given grid.
SampledSignal fourier_transform(const SampledSignal& f, double nu0, double dnu, int count);
SampledSignal inverse_fourier_transform(const SampledSignal& fhat, double t0, double dt, int count);

}  // namespace framelab
