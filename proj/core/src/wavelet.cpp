#include "framelab/wavelet.hpp"

#include <algorithm>
#include <cmath>

#include "framelab/quadrature.hpp"

namespace framelab {

namespace {

bool aligned(double x, double origin, double step, long& k) {
    const double u = (x - origin) / step;
    k = std::lround(u);
    return std::abs(u - static_cast<double>(k)) < 1e-9;
}

bool uniform_shifts(const rvec& s, double& ds) {
    if (s.size() < 2) {
        ds = 1.0;
        return true;
    }
    ds = s[1] - s[0];
    if (!(ds > 0.0)) return false;
    for (size_t j = 1; j < s.size(); ++j)
        if (std::abs(s[j] - s[0] - j * ds) > 1e-9 * std::max(1.0, std::abs(s[j]))) return false;
    return true;
}

double binomial(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

WaveletSpec mexican_hat() {
    WaveletSpec w;
    w.time = [](double t) { return cplx((1.0 - t * t) * std::exp(-0.5 * t * t)); };
    w.freq = [](double nu) {
        const double x = 2.0 * pi * nu;
        return cplx(std::sqrt(2.0 * pi) * x * x * std::exp(-0.5 * x * x));
    };
    w.support = 8.5;
    w.real = true;
    w.name = "mexican_hat";
    return w;
}

WaveletSpec gaussian_derivative() {
    WaveletSpec w;
    w.time = [](double t) { return cplx(t * std::exp(-0.5 * t * t)); };
    w.freq = [](double nu) {
        const double x = 2.0 * pi * nu;
        return cplx(0.0, std::sqrt(2.0 * pi) * x * std::exp(-0.5 * x * x));
    };
    w.support = 8.5;
    w.real = true;
    w.name = "gaussian_derivative";
    return w;
}

WaveletSpec gaussian_window() {
    WaveletSpec w;
    w.time = [](double t) { return cplx(std::exp(-0.5 * t * t)); };
    w.freq = [](double nu) {
        const double x = 2.0 * pi * nu;
        return cplx(std::sqrt(2.0 * pi) * std::exp(-0.5 * x * x));
    };
    w.support = 8.5;
    w.real = true;
    w.name = "gaussian";
    return w;
}

CWTGrid cwt_analyze(const SampledSignal& f, const WaveletSpec& h, const rvec& scales,
                    const rvec& shifts) {
    if (scales.empty() || shifts.empty()) throw DomainError("cwt_analyze: empty scale or shift list");
    for (double a : scales)
        if (a == 0.0) throw DomainError("cwt_analyze: scale a = 0");
    CWTGrid out{scales, shifts, cvec(scales.size() * shifts.size())};
    const int n = f.size();
    for (size_t i = 0; i < scales.size(); ++i) {
        const double a = scales[i];
        const double norm = 1.0 / std::sqrt(std::abs(a));
        const double reach = h.support * std::abs(a);
        const int half = static_cast<int>(std::ceil(reach / f.dt));
        cvec kern(static_cast<size_t>(2 * half + 1));
        for (int d = -half; d <= half; ++d)
            kern[static_cast<size_t>(d + half)] = norm * std::conj(h.time(d * f.dt / a));
        for (size_t j = 0; j < shifts.size(); ++j) {
            const double s = shifts[j];
            long ks;
            cplx acc = 0.0;
            if (aligned(s, f.t0, f.dt, ks)) {
                const long lo = std::max<long>(0, ks - half), hi = std::min<long>(n - 1, ks + half);
                for (long k = lo; k <= hi; ++k)
                    acc += kern[static_cast<size_t>(k - ks + half)] * f.samples[static_cast<size_t>(k)];
            } else {
                const long lo = std::max<long>(0, static_cast<long>(std::floor((s - reach - f.t0) / f.dt)));
                const long hi = std::min<long>(n - 1, static_cast<long>(std::ceil((s + reach - f.t0) / f.dt)));
                for (long k = lo; k <= hi; ++k)
                    acc += norm * std::conj(h.time((f.time(static_cast<int>(k)) - s) / a)) *
                           f.samples[static_cast<size_t>(k)];
            }
            out.values[i * shifts.size() + j] = acc * f.dt;
        }
    }
    return out;
}

Admissibility admissibility_constant(const std::function<cplx(double)>& hhat, double rel_tol) {
    double peak = 0.0;
    for (int i = -60; i <= 60; ++i) {
        const double x = std::pow(10.0, i / 20.0);
        peak = std::max({peak, std::abs(hhat(x)), std::abs(hhat(-x))});
    }
    Admissibility out;
    if (peak == 0.0 || std::abs(hhat(0.0)) > 1e-10 * peak) return out;
    auto integrand = [&](double xi) { return xi > 0.0 ? std::norm(hhat(xi)) / xi : 0.0; };
    auto neg = [&](double xi) { return xi > 0.0 ? std::norm(hhat(-xi)) / xi : 0.0; };
    const auto rp = integrate_upper(integrand, 0.0, 1e-300, rel_tol, 20000);
    const auto rn = integrate_upper(neg, 0.0, 1e-300, rel_tol, 20000);
    out.c_h = rp.value + rn.value;
    out.admissible = std::isfinite(out.c_h) && out.c_h > 0.0;
    return out;
}

Admissibility admissibility_constant_sampled(const SampledSignal& hhat) {
    double peak = 0.0;
    for (const cplx& v : hhat.samples) peak = std::max(peak, std::abs(v));
    Admissibility out;
    if (peak == 0.0) return out;
    double sum = 0.0;
    const int n = hhat.size();
    for (int k = 0; k < n; ++k) {
        const double nu = hhat.time(k);
        const double mag = std::abs(hhat.samples[static_cast<size_t>(k)]);
        double v;
        if (std::abs(nu) < 0.5 * hhat.dt) {
            if (mag > 1e-10 * peak) return out;
            v = 0.0;  // removable: |hhat|^2/|nu| -> 0 when hhat(0) = 0
        } else {
            v = mag * mag / std::abs(nu);
        }
        sum += (k == 0 || k == n - 1 ? 0.5 : 1.0) * v;
    }
    out.c_h = sum * hhat.dt;
    out.admissible = out.c_h > 0.0;
    return out;
}

ScaleGrid log_scale_grid(double a_min, double a_max, double dln_a, bool both_signs) {
    if (!(a_min > 0.0) || !(a_max > a_min) || !(dln_a > 0.0))
        throw DomainError("log_scale_grid: need 0 < a_min < a_max and dln_a > 0");
    const int count = static_cast<int>(std::floor(std::log(a_max / a_min) / dln_a + 1e-9)) + 1;
    ScaleGrid g;
    for (int i = 0; i < count; ++i) {
        const double a = a_min * std::exp(i * dln_a);
        g.a.push_back(a);
        g.w.push_back(a * dln_a);
        if (both_signs) {
            g.a.push_back(-a);
            g.w.push_back(a * dln_a);
        }
    }
    return g;
}

SampledSignal cwt_reconstruct(const CWTGrid& coeffs, const ScaleGrid& scales, double ds,
                              const WaveletSpec& h, double c_h, double t0, double dt, int n) {
    if (!(c_h > 0.0) || !std::isfinite(c_h)) throw DomainError("cwt_reconstruct: inadmissible wavelet");
    if (scales.a.size() != coeffs.scales.size()) throw DomainError("cwt_reconstruct: scale grid mismatch");
    double grid_ds;
    if (!uniform_shifts(coeffs.shifts, grid_ds)) throw DomainError("cwt_reconstruct: shifts must be uniform");
    bool negative = false;
    for (double a : coeffs.scales) negative = negative || a < 0.0;
    const double C = negative ? c_h : 0.5 * c_h;
    SampledSignal out(cvec(static_cast<size_t>(n)), t0, dt);
    const double s0 = coeffs.shifts.front();
    const long ns = static_cast<long>(coeffs.shifts.size());
    long step;
    const bool on_grid = aligned(grid_ds, 0.0, dt, step) && step >= 1 && [&] {
        long k0;
        return aligned(s0, t0, dt, k0);
    }();
    for (size_t i = 0; i < coeffs.scales.size(); ++i) {
        const double a = coeffs.scales[i];
        const double wgt = scales.w[i] * ds / (a * a) / C / std::sqrt(std::abs(a));
        const double reach = h.support * std::abs(a);
        const cplx* row = &coeffs.values[i * coeffs.shifts.size()];
        if (on_grid) {
            const int half = static_cast<int>(std::ceil(reach / dt));
            cvec kern(static_cast<size_t>(2 * half + 1));
            for (int d = -half; d <= half; ++d) kern[static_cast<size_t>(d + half)] = h.time(d * dt / a);
            long k0;
            aligned(s0, t0, dt, k0);
            for (long j = 0; j < ns; ++j) {
                const long ks = k0 + j * step;  // sample index of shift j
                const cplx c = wgt * row[j];
                if (c == cplx(0.0)) continue;
                const long lo = std::max<long>(0, ks - half), hi = std::min<long>(n - 1, ks + half);
                for (long k = lo; k <= hi; ++k)
                    out.samples[static_cast<size_t>(k)] += kern[static_cast<size_t>(k - ks + half)] * c;
            }
        } else {
            for (int k = 0; k < n; ++k) {
                const double t = t0 + k * dt;
                const long lo = std::max<long>(0, static_cast<long>(std::floor((t - reach - s0) / grid_ds)));
                const long hi = std::min<long>(ns - 1, static_cast<long>(std::ceil((t + reach - s0) / grid_ds)));
                cplx acc = 0.0;
                for (long j = lo; j <= hi; ++j) acc += h.time((t - coeffs.shifts[static_cast<size_t>(j)]) / a) * row[j];
                out.samples[static_cast<size_t>(k)] += wgt * acc;
            }
        }
    }
    return out;
}

double cwt_energy(const CWTGrid& coeffs, const ScaleGrid& scales, double ds, double c_h,
                  bool positive_only) {
    const double C = positive_only ? 0.5 * c_h : c_h;
    double sum = 0.0;
    for (size_t i = 0; i < coeffs.scales.size(); ++i) {
        double row = 0.0;
        for (size_t j = 0; j < coeffs.shifts.size(); ++j) row += std::norm(coeffs.at(i, j));
        const double a = coeffs.scales[i];
        sum += row * scales.w[i] / (a * a);
    }
    return sum * ds / C;
}

double scale_response(const std::function<cplx(double)>& hhat, double p, double nu) {
    auto g = [&](double a) { return a > 0.0 ? std::pow(a, 1.0 - p) * std::norm(hhat(a * nu)) : 0.0; };
    return integrate_upper(g, 0.0, 1e-300, 1e-13, 20000).value;
}

double MeyerPair::eta(double x) const {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 0.5 * pi;
    if (k < 0) {
        const double p = std::exp(-1.0 / x), q = std::exp(-1.0 / (1.0 - x));
        return 0.5 * pi * p / (p + q);
    }
    double s = 0.0, pw = 1.0;
    for (int j = 0; j <= k; ++j) {
        s += binomial(k + j, j) * pw;
        pw *= (1.0 - x);
    }
    return 0.5 * pi * std::pow(x, k + 1) * s;
}

double MeyerPair::kplus(double nu) const {
    const double lo = F / a, hi = a * F;
    if (nu <= lo || nu >= hi) return 0.0;
    if (nu <= F) return std::sin(eta((nu - lo) / (F - lo)));
    return std::cos(eta((nu - F) / (hi - F)));
}

MeyerPair build_meyer_pair(double a, double b, int k) {
    if (!(a > 1.0)) throw DomainError("build_meyer_pair: need a > 1");
    if (!(b > 0.0)) throw DomainError("build_meyer_pair: need b > 0");
    MeyerPair p;
    p.a = a;
    p.b = b;
    p.k = k;
    p.F = a / ((a * a - 1.0) * b);
    return p;
}

double chi_value(const MeyerPair& p, double nu, int eps) {
    const double v = eps > 0 ? nu : -nu;
    if (v <= 0.0) return 0.0;
    const double la = std::log(p.a);
    const int m_lo = static_cast<int>(std::floor(std::log(p.F / (p.a * v)) / la)) - 1;
    const int m_hi = static_cast<int>(std::ceil(std::log(p.a * p.F / v) / la)) + 1;
    double s = 0.0;
    for (int m = m_lo; m <= m_hi; ++m) {
        const double k = p.kplus(std::pow(p.a, m) * v);
        s += k * k;
    }
    return s;
}

ChiPartition chi_partition(const MeyerPair& p, const rvec& nus) {
    ChiPartition out;
    out.chi_plus.resize(nus.size());
    out.chi_minus.resize(nus.size());
    for (size_t i = 0; i < nus.size(); ++i) {
        out.chi_plus[i] = chi_value(p, nus[i], +1);
        out.chi_minus[i] = chi_value(p, nus[i], -1);
        if (nus[i] != 0.0)
            out.max_deviation = std::max(out.max_deviation, std::abs(out.chi_plus[i] + out.chi_minus[i] - 1.0));
    }
    return out;
}

double DyadicLattice::width(int m) const { return std::pow(a, -m) / b; }

std::pair<double, double> DyadicLattice::band(int m) const {
    const double f = F();
    return {f * std::pow(a, -m - 1), f * std::pow(a, -m + 1)};
}

namespace {

int row_length(const DyadicLattice& lat, int m, double dnu) {
    const double r = lat.width(m) / dnu;
    const long l = std::lround(r);
    if (std::abs(r - static_cast<double>(l)) > 1e-9 * r || l < 8)
        throw DomainError("discrete wavelet: W_m / dnu must be an integer >= 8 (row m = " +
                          std::to_string(m) + ")");
    return static_cast<int>(l);
}

}  // namespace

DiscreteWaveletCoeffs discrete_wavelet_analyze(const SampledSignal& fhat, const MeyerPair& pair,
                                               const DyadicLattice& lattice) {
    if (std::abs(lattice.a - pair.a) > 1e-14 || std::abs(lattice.b - pair.b) > 1e-14)
        throw DomainError("discrete wavelet: lattice and profile parameters differ");
    DiscreteWaveletCoeffs out;
    out.lattice = lattice;
    out.dnu = fhat.dt;
    for (int eps : {1, -1}) {
        for (int m = lattice.m_lo; m <= lattice.m_hi; ++m) {
            const int l = row_length(lattice, m, fhat.dt);
            const double am = std::pow(lattice.a, m);
            const double amp = std::sqrt(am);
            WaveletRow row;
            row.eps = eps;
            row.m = m;
            row.n_lo = -(l / 2);
            row.values.assign(static_cast<size_t>(l), cplx(0.0));
            // collect the support of k^eps(a^m nu) on the grid
            std::vector<std::pair<double, cplx>> sup;
            for (int j = 0; j < fhat.size(); ++j) {
                const double nu = fhat.time(j);
                const double k = eps > 0 ? pair.kplus(am * nu) : pair.kminus(am * nu);
                if (k != 0.0) sup.emplace_back(nu, k * fhat.samples[static_cast<size_t>(j)]);
            }
            for (int i = 0; i < l; ++i) {
                const int n = row.n_lo + i;
                const double w = -2.0 * pi * n * am * lattice.b;
                cplx acc = 0.0;
                for (const auto& [nu, v] : sup) acc += std::polar(1.0, w * nu) * v;
                row.values[static_cast<size_t>(i)] = amp * acc * fhat.dt;
            }
            out.rows.push_back(std::move(row));
        }
    }
    return out;
}

SampledSignal discrete_wavelet_reconstruct(const DiscreteWaveletCoeffs& coeffs,
                                           const MeyerPair& pair, double nu0, int count,
                                           double metric_tol) {
    const DyadicLattice& lat = coeffs.lattice;
    SampledSignal out(cvec(static_cast<size_t>(count)), nu0, coeffs.dnu);
    for (const WaveletRow& row : coeffs.rows) {
        const double am = std::pow(lat.a, row.m);
        const double amp = std::sqrt(am);
        for (int j = 0; j < count; ++j) {
            const double nu = out.time(j);
            const double k = row.eps > 0 ? pair.kplus(am * nu) : pair.kminus(am * nu);
            if (k == 0.0) continue;
            cplx acc = 0.0;
            const double w = 2.0 * pi * am * lat.b * nu;
            for (size_t i = 0; i < row.values.size(); ++i)
                acc += std::polar(1.0, w * (row.n_lo + static_cast<int>(i))) * row.values[i];
            out.samples[static_cast<size_t>(j)] += lat.b * amp * k * acc;
        }
    }
    for (int j = 0; j < count; ++j) {
        cplx& v = out.samples[static_cast<size_t>(j)];
        if (v == cplx(0.0)) continue;
        const double nu = out.time(j);
        const double chi = chi_value(pair, nu, 1) + chi_value(pair, nu, -1);
        if (chi < metric_tol) throw DomainError("discrete wavelet: metric chi+ + chi- below tolerance");
        v /= chi;
    }
    return out;
}

double discrete_wavelet_energy(const DiscreteWaveletCoeffs& coeffs) {
    double s = 0.0;
    for (const WaveletRow& row : coeffs.rows)
        for (const cplx& v : row.values) s += std::norm(v);
    return s * coeffs.lattice.b;
}

SampledSignal fourier_transform(const SampledSignal& f, double nu0, double dnu, int count) {
    SampledSignal out(cvec(static_cast<size_t>(count)), nu0, dnu);
    for (int j = 0; j < count; ++j) {
        const double w = 2.0 * pi * out.time(j);
        cplx acc = 0.0;
        for (int k = 0; k < f.size(); ++k) acc += std::polar(1.0, w * f.time(k)) * f.samples[static_cast<size_t>(k)];
        out.samples[static_cast<size_t>(j)] = acc * f.dt;
    }
    return out;
}

SampledSignal inverse_fourier_transform(const SampledSignal& fhat, double t0, double dt, int count) {
    SampledSignal out(cvec(static_cast<size_t>(count)), t0, dt);
    for (int k = 0; k < count; ++k) {
        const double w = -2.0 * pi * out.time(k);
        cplx acc = 0.0;
        for (int j = 0; j < fhat.size(); ++j) acc += std::polar(1.0, w * fhat.time(j)) * fhat.samples[static_cast<size_t>(j)];
        out.samples[static_cast<size_t>(k)] = acc * fhat.dt;
    }
    return out;
}

}  // namespace framelab
