#pragma once

#include <functional>
#include <optional>

#include "framelab/signal.hpp"

namespace framelab {

// Window h sampled at t_start + k dt, k = 0..L-1. Zero outside the sampled span.
// The lattice frame uses windows on [-tau, 0) with L = tau/dt samples.
struct WindowSpec {
    cvec samples;
    double t_start = 0.0;
    double dt = 1.0;
    double tau = 0.0;

    int size() const { return static_cast<int>(samples.size()); }
    // Exact at sample points, linear in between.
    cplx value(double t) const;
    double l2_norm_sq() const;

    // Samples h on [-tau, 0); tau/dt must be an integer.
    static WindowSpec on_support(const std::function<cplx(double)>& h, double tau, double dt);
    static WindowSpec rectangular(double tau, double dt, double height = 1.0);
    // sin^2 bump on [-tau, 0).
    static WindowSpec smooth_bump(double tau, double dt);
};

// Values on a (frequency, shift) grid, frequency-major.
struct WFTGrid {
    rvec freqs;
    rvec shifts;
    cvec values;
    cplx at(size_t i, size_t j) const { return values[i * shifts.size() + j]; }
};

// ftilde(nu, s) = sum_t dt e^{2 pi i nu t} conj(h(t - s)) f(t)
WFTGrid wft_analyze(const SampledSignal& f, const WindowSpec& h, const rvec& freqs,
                    const rvec& shifts);

struct WFTLattice {
    double T = 1.0;
    double F = 1.0;
    int m_lo = 0, m_hi = -1;  // inclusive
    int n_lo = 0, n_hi = -1;

    int m_count() const { return m_hi - m_lo + 1; }
    int n_count() const { return n_hi - n_lo + 1; }
};

// L frequencies centred on 0 with F = 1/tau, and every shift nT whose window meets the signal.
WFTLattice full_lattice(const SampledSignal& f, const WindowSpec& h, double T);

struct LatticeCoefficients {
    WFTLattice lattice;
    cvec values;  // m-major: index (m - m_lo) * n_count + (n - n_lo)
    cplx at(int m, int n) const {
        return values[static_cast<size_t>((m - lattice.m_lo) * lattice.n_count() + (n - lattice.n_lo))];
    }
};

LatticeCoefficients wft_lattice_analyze(const SampledSignal& f, const WindowSpec& h,
                                        const WFTLattice& lattice);

struct LatticeWeight {
    SampledSignal g;  // g(t) = tau sum_n |h(t - nT)|^2 on the requested grid
    double A = 0.0;   // min and max of g over one period
    double B = 0.0;
    bool valid() const { return B > 0.0 && A > 1e-12 * B; }
};

// Never throws on a sparse lattice; check valid().
LatticeWeight lattice_weight(const WindowSpec& h, double T, double t0, double dt, int n);

// f(t) = g(t)^{-1} sum_{n,m} e^{-2 pi i m F t} h(t - nT) ftilde(mF, nT) on the grid (t0, dt, n).
SampledSignal wft_reconstruct(const LatticeCoefficients& coeffs, const WindowSpec& h,
                              const LatticeWeight& g);

struct BandLimitedResult {
    SampledSignal approx;
    std::optional<double> error;  // relative L2 error against the reference
};

// f(t) ~ g(t)^{-1} sum_n h(t - nT) ftilde(0, nT), using only the m = 0 row.
BandLimitedResult band_limited_approx(const LatticeCoefficients& coeffs, const WindowSpec& h,
                                      const LatticeWeight& g,
                                      const SampledSignal* reference = nullptr);

}  // namespace framelab
