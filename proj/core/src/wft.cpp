#include "framelab/wft.hpp"

#include <algorithm>
#include <cmath>

namespace framelab {

namespace {

int checked_ratio(double num, double den, const char* what) {
    const double r = num / den;
    const long k = std::lround(r);
    if (k < 1 || std::abs(r - static_cast<double>(k)) > 1e-9 * std::max(1.0, r))
        throw DomainError(std::string(what) + " must be a positive multiple of dt");
    return static_cast<int>(k);
}

}  // namespace

cplx WindowSpec::value(double t) const {
    const double u = (t - t_start) / dt;
    const int n = size();
    if (u < -1e-9 || u > (n - 1) + 1e-9) return cplx(0.0);
    const long k = std::lround(u);
    if (std::abs(u - static_cast<double>(k)) < 1e-9) return samples[static_cast<size_t>(k)];
    const int b = static_cast<int>(std::floor(u));
    const double fr = u - b;
    return (1.0 - fr) * samples[static_cast<size_t>(b)] + fr * samples[static_cast<size_t>(b + 1)];
}

double WindowSpec::l2_norm_sq() const {
    double s = 0.0;
    for (const cplx& v : samples) s += std::norm(v);
    return s * dt;
}

WindowSpec WindowSpec::on_support(const std::function<cplx(double)>& h, double tau, double dt) {
    if (!(tau > 0.0) || !(dt > 0.0)) throw DomainError("window: tau and dt must be positive");
    const int l = checked_ratio(tau, dt, "window support tau");
    WindowSpec w;
    w.tau = tau;
    w.dt = dt;
    w.t_start = -tau;
    w.samples.resize(static_cast<size_t>(l));
    for (int k = 0; k < l; ++k) w.samples[static_cast<size_t>(k)] = h(-tau + k * dt);
    return w;
}

WindowSpec WindowSpec::rectangular(double tau, double dt, double height) {
    return on_support([height](double) { return cplx(height); }, tau, dt);
}

WindowSpec WindowSpec::smooth_bump(double tau, double dt) {
    return on_support(
        [tau](double t) {
            const double s = std::sin(pi * (t + tau) / tau);
            return cplx(s * s);
        },
        tau, dt);
}

WFTGrid wft_analyze(const SampledSignal& f, const WindowSpec& h, const rvec& freqs,
                    const rvec& shifts) {
    if (freqs.empty() || shifts.empty()) throw DomainError("wft_analyze: empty frequency or shift list");
    WFTGrid out{freqs, shifts, cvec(freqs.size() * shifts.size())};
    cvec prod(static_cast<size_t>(f.size()));
    for (size_t j = 0; j < shifts.size(); ++j) {
        int lo = f.size(), hi = -1;
        for (int k = 0; k < f.size(); ++k) {
            prod[static_cast<size_t>(k)] = std::conj(h.value(f.time(k) - shifts[j])) * f.samples[static_cast<size_t>(k)];
            if (prod[static_cast<size_t>(k)] != cplx(0.0)) {
                lo = std::min(lo, k);
                hi = std::max(hi, k);
            }
        }
        for (size_t i = 0; i < freqs.size(); ++i) {
            cplx acc = 0.0;
            const double w = 2.0 * pi * freqs[i];
            for (int k = lo; k <= hi; ++k)
                acc += std::polar(1.0, w * f.time(k)) * prod[static_cast<size_t>(k)];
            out.values[i * shifts.size() + j] = acc * f.dt;
        }
    }
    return out;
}

WFTLattice full_lattice(const SampledSignal& f, const WindowSpec& h, double T) {
    if (!(T > 0.0)) throw DomainError("lattice: T must be positive");
    WFTLattice lat;
    lat.T = T;
    lat.F = 1.0 / h.tau;
    const int l = h.size();
    lat.m_lo = -(l / 2);
    lat.m_hi = lat.m_lo + l - 1;
    // window support of shift nT is [nT + t_start, nT + t_start + tau)
    const double span_lo = h.t_start, span_hi = h.t_start + h.tau;
    lat.n_lo = static_cast<int>(std::floor((f.t0 - span_hi) / T)) + 1;
    lat.n_hi = static_cast<int>(std::ceil((f.t_end() - span_lo) / T));
    return lat;
}

LatticeCoefficients wft_lattice_analyze(const SampledSignal& f, const WindowSpec& h,
                                        const WFTLattice& lattice) {
    if (lattice.m_count() < 1 || lattice.n_count() < 1) throw DomainError("lattice: empty index range");
    rvec freqs, shifts;
    for (int m = lattice.m_lo; m <= lattice.m_hi; ++m) freqs.push_back(m * lattice.F);
    for (int n = lattice.n_lo; n <= lattice.n_hi; ++n) shifts.push_back(n * lattice.T);
    WFTGrid g = wft_analyze(f, h, freqs, shifts);
    return {lattice, std::move(g.values)};
}

LatticeWeight lattice_weight(const WindowSpec& h, double T, double t0, double dt, int n) {
    if (!(T > 0.0)) throw DomainError("lattice_weight: T must be positive");
    if (n < 1) throw DomainError("lattice_weight: empty grid");
    const double span_lo = h.t_start, span_hi = h.t_start + h.tau;
    auto g_at = [&](double t) {
        // n with t - nT inside the window span
        const int a = static_cast<int>(std::floor((t - span_hi) / T));
        const int b = static_cast<int>(std::ceil((t - span_lo) / T));
        double s = 0.0;
        for (int k = a; k <= b; ++k) s += std::norm(h.value(t - k * T));
        return h.tau * s;
    };
    LatticeWeight out;
    out.g.samples.resize(static_cast<size_t>(n));
    out.g.t0 = t0;
    out.g.dt = dt;
    for (int k = 0; k < n; ++k) out.g.samples[static_cast<size_t>(k)] = g_at(t0 + k * dt);
    // one period sampled on the same grid phase
    const int per = std::max(1, static_cast<int>(std::ceil(T / dt - 1e-9)));
    out.A = INFINITY;
    out.B = 0.0;
    for (int k = 0; k < per; ++k) {
        const double v = g_at(t0 + k * dt);
        out.A = std::min(out.A, v);
        out.B = std::max(out.B, v);
    }
    return out;
}

SampledSignal wft_reconstruct(const LatticeCoefficients& coeffs, const WindowSpec& h,
                              const LatticeWeight& g) {
    if (!g.valid()) throw NotAFrameError("lattice too sparse (T > tau)");
    const WFTLattice& lat = coeffs.lattice;
    const SampledSignal& grid = g.g;
    SampledSignal out(cvec(grid.samples.size()), grid.t0, grid.dt);
    for (int k = 0; k < grid.size(); ++k) {
        const double t = grid.time(k);
        const double gt = grid.samples[static_cast<size_t>(k)].real();
        if (gt < 1e-10 * g.B) throw DomainError("wft_reconstruct: g(t) below tolerance");
        cplx acc = 0.0;
        for (int n = lat.n_lo; n <= lat.n_hi; ++n) {
            const cplx hv = h.value(t - n * lat.T);
            if (hv == cplx(0.0)) continue;
            cplx row = 0.0;
            for (int m = lat.m_lo; m <= lat.m_hi; ++m)
                row += std::polar(1.0, -2.0 * pi * m * lat.F * t) * coeffs.at(m, n);
            acc += hv * row;
        }
        out.samples[static_cast<size_t>(k)] = acc / gt;
    }
    return out;
}

BandLimitedResult band_limited_approx(const LatticeCoefficients& coeffs, const WindowSpec& h,
                                      const LatticeWeight& g, const SampledSignal* reference) {
    const WFTLattice& lat = coeffs.lattice;
    if (lat.m_lo > 0 || lat.m_hi < 0) throw DomainError("band_limited_approx: lattice has no m = 0 row");
    const SampledSignal& grid = g.g;
    BandLimitedResult out{SampledSignal(cvec(grid.samples.size()), grid.t0, grid.dt), std::nullopt};
    for (int k = 0; k < grid.size(); ++k) {
        const double t = grid.time(k);
        const double gt = grid.samples[static_cast<size_t>(k)].real();
        if (gt <= 0.0) continue;
        cplx acc = 0.0;
        for (int n = lat.n_lo; n <= lat.n_hi; ++n) acc += h.value(t - n * lat.T) * coeffs.at(0, n);
        out.approx.samples[static_cast<size_t>(k)] = acc / gt;
    }
    if (reference) out.error = relative_l2_error(out.approx, *reference);
    return out;
}

}  // namespace framelab
