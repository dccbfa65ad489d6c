#include "framelab/xray.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "framelab/fourier.hpp"
#include "framelab/quadrature.hpp"

namespace framelab {

namespace {

// Frequency vector of every DFT bin on the field grid.
std::vector<std::array<double, 3>> bin_frequencies(const FieldSample& f) {
    std::vector<std::array<double, 3>> out(f.count(), {0.0, 0.0, 0.0});
    for (size_t k = 0; k < f.count(); ++k) {
        const auto idx = f.unflat(k);
        for (int d = 0; d < f.ndim(); ++d) {
            const int m = f.shape[static_cast<size_t>(d)];
            out[k][static_cast<size_t>(d)] = dft_index(idx[static_cast<size_t>(d)], m) / (m * f.spacing[static_cast<size_t>(d)]);
        }
    }
    return out;
}

double dot(const std::array<double, 3>& a, const rvec& b) {
    double s = 0.0;
    for (size_t i = 0; i < b.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace

cplx windowed_xray(const FieldSample& f, const std::function<cplx(double)>& h, const rvec& x,
                   const rvec& y, const XrayOptions& opt) {
    const int n = f.ndim();
    if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n)
        throw DomainError("windowed_xray: point dimension does not match the field");
    if (boundary_ratio(f) > opt.tail_tol)
        throw DomainError("windowed_xray: significant line mass outside the grid");
    double dt = INFINITY, ta = -INFINITY, tb = INFINITY;
    for (int d = 0; d < n; ++d) {
        const double yd = y[static_cast<size_t>(d)], xd = x[static_cast<size_t>(d)];
        const double lo = f.origin[static_cast<size_t>(d)];
        const double hi = lo + (f.shape[static_cast<size_t>(d)] - 1) * f.spacing[static_cast<size_t>(d)];
        if (yd == 0.0) {
            if (xd < lo || xd > hi) return 0.0;
            continue;
        }
        dt = std::min(dt, f.spacing[static_cast<size_t>(d)] / std::abs(yd));
        double t1 = (lo - xd) / yd, t2 = (hi - xd) / yd;
        if (t1 > t2) std::swap(t1, t2);
        ta = std::max(ta, t1);
        tb = std::min(tb, t2);
    }
    if (!std::isfinite(dt)) throw DomainError("windowed_xray: y must be nonzero");
    if (!(ta <= tb)) return 0.0;
    const long k0 = static_cast<long>(std::ceil(ta / dt - 1e-9));
    const long k1 = static_cast<long>(std::floor(tb / dt + 1e-9));
    rvec pt(static_cast<size_t>(n));
    cplx acc = 0.0;
    for (long k = k0; k <= k1; ++k) {
        const double t = k * dt;
        for (int d = 0; d < n; ++d) pt[static_cast<size_t>(d)] = x[static_cast<size_t>(d)] + t * y[static_cast<size_t>(d)];
        const cplx fv = f.interpolate(pt);
        if (fv != cplx(0.0)) acc += std::conj(h(t)) * fv;
    }
    return acc * dt;
}

XrayAdmissibility xray_admissibility(const std::function<cplx(double)>& hhat, int n) {
    if (n < 1) throw DomainError("xray_admissibility: n must be >= 1");
    const Admissibility a = admissibility_constant(hhat);
    XrayAdmissibility out;
    out.admissible = a.admissible;
    if (!a.admissible) return out;
    out.c_h = a.c_h;
    out.N = std::tgamma(0.5 * n) / (std::pow(pi, 0.5 * n) * a.c_h);
    return out;
}

double xray_normalization_2d(const std::function<cplx(double)>& hhat, double N, const rvec& p,
                             double u_min, double u_max, int n_phi) {
    if (p.size() != 2) throw DomainError("xray_normalization_2d: p must be 2-D");
    if (n_phi < 1 || !(u_max > u_min)) throw DomainError("xray_normalization_2d: bad grid");
    const double dphi = 2.0 * pi / n_phi;
    const int pieces = std::max(1, static_cast<int>(std::ceil(u_max - u_min)));
    const double du = (u_max - u_min) / pieces;
    double total = 0.0;
    for (int j = 0; j < n_phi; ++j) {
        const double phi = (j + 0.5) * dphi;
        const double xi = p[0] * std::cos(phi) + p[1] * std::sin(phi);
        auto g = [&](double u) { return std::norm(hhat(std::exp(u) * xi)); };
        double line = 0.0;
        for (int k = 0; k < pieces; ++k)
            line += integrate(g, u_min + k * du, u_min + (k + 1) * du, 1e-16, 1e-13, 400).value;
        total += line * dphi;
    }
    return N * total;
}

DirectionGrid polar_direction_grid(double r_min, double r_max, double du, int n_phi) {
    if (!(r_min > 0.0) || !(r_max >= r_min) || !(du > 0.0) || n_phi < 1)
        throw DomainError("polar_direction_grid: bad parameters");
    DirectionGrid g;
    const int nu = static_cast<int>(std::floor(std::log(r_max / r_min) / du + 1e-9)) + 1;
    const double dphi = 2.0 * pi / n_phi;
    for (int i = 0; i < nu; ++i) {
        const double r = r_min * std::exp(i * du);
        for (int j = 0; j < n_phi; ++j) {
            const double phi = (j + 0.5) * dphi;
            g.y.push_back({r * std::cos(phi), r * std::sin(phi)});
            g.w.push_back(du * dphi);
        }
    }
    return g;
}

std::vector<FieldSample> xray_coefficients(const FieldSample& f, const WaveletSpec& h,
                                           const DirectionGrid& dirs) {
    const size_t total = f.count();
    cvec c = dftn(f.values, f.shape, +1);
    for (cplx& v : c) v /= static_cast<double>(total);
    std::vector<FieldSample> out;
    out.reserve(dirs.y.size());
    const auto freqs = bin_frequencies(f);
    cvec work(total);
    for (const rvec& y : dirs.y) {
        if (static_cast<int>(y.size()) != f.ndim()) throw DomainError("xray_coefficients: direction dimension mismatch");
        for (size_t k = 0; k < total; ++k) work[k] = c[k] * std::conj(h.freq(dot(freqs[k], y)));
        FieldSample fh(f.shape, f.origin, f.spacing);
        fh.values = dftn(work, f.shape, -1);
        out.push_back(std::move(fh));
    }
    return out;
}

FieldSample xray_reconstruct(const std::vector<FieldSample>& coeffs, const WaveletSpec& h,
                             const DirectionGrid& dirs, double N) {
    if (coeffs.empty()) throw DomainError("xray_reconstruct: no coefficients");
    if (coeffs.size() != dirs.y.size()) throw DomainError("xray_reconstruct: direction count mismatch");
    if (!(N > 0.0) || !std::isfinite(N)) throw DomainError("xray_reconstruct: inadmissible window");
    const FieldSample& g0 = coeffs.front();
    const size_t total = g0.count();
    cvec acc(total, cplx(0.0));
    const auto freqs = bin_frequencies(g0);
    for (size_t q = 0; q < coeffs.size(); ++q) {
        const cvec c = dftn(coeffs[q].values, coeffs[q].shape, +1);
        const double w = N * dirs.w[q] / static_cast<double>(total);
        for (size_t k = 0; k < total; ++k) acc[k] += w * h.freq(dot(freqs[k], dirs.y[q])) * c[k];
    }
    FieldSample out(g0.shape, g0.origin, g0.spacing);
    out.values = dftn(acc, g0.shape, -1);
    return out;
}

WaveletSpec meyer_wavelet(const MeyerPair& pair) {
    WaveletSpec w;
    w.freq = [pair](double nu) { return cplx(pair.kplus(std::abs(nu))); };
    const GaussRule lo = gauss_legendre(64, pair.F / pair.a, pair.F);
    const GaussRule hi = gauss_legendre(64, pair.F, pair.a * pair.F);
    w.time = [pair, lo, hi](double t) {
        double s = 0.0;
        for (const GaussRule* r : {&lo, &hi})
            for (size_t i = 0; i < r->x.size(); ++i) s += r->w[i] * std::cos(2.0 * pi * r->x[i] * t) * pair.kplus(r->x[i]);
        return cplx(2.0 * s);
    };
    w.support = 40.0 / pair.F;
    w.real = true;
    w.name = "meyer";
    return w;
}

}  // namespace framelab
