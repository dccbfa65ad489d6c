#include "framelab/coherent.hpp"

#include <cmath>

#include "framelab/fourier.hpp"

namespace framelab {

namespace {

const double quarter_root_pi = std::pow(pi, -0.25);

void require_positive(double m, double u) {
    if (!(m > 0.0)) throw DomainError("mass must be positive");
    if (!(u > 0.0)) throw DomainError("imaginary time u must be positive");
}

// conj(chi_z(x')) = pi^{-1/4} exp(-z^2/4 + z x' - x'^2/2)
cplx chi_conj(cplx z, double xp) {
    return quarter_root_pi * std::exp(-z * z / 4.0 + z * xp - xp * xp / 2.0);
}

cvec spectral_derivative(const SampledSignal& psi) {
    const int n = psi.size();
    cvec spec = dft(psi.samples, -1);
    const double scale = 2.0 * pi / (n * psi.dt);
    for (int k = 0; k < n; ++k) {
        if (n % 2 == 0 && k == n / 2) {
            spec[k] = 0.0;
            continue;
        }
        spec[k] *= I * (scale * dft_index(k, n));
    }
    cvec out = dft(spec, +1);
    for (auto& v : out) v /= static_cast<double>(n);
    return out;
}

cplx grid_inner(const SampledSignal& f, const SampledSignal& g) {
    if (f.size() != g.size()) throw DomainError("test vectors must share a grid");
    cplx acc = 0.0;
    for (int k = 0; k < f.size(); ++k) acc += std::conj(f.samples[k]) * g.samples[k];
    return acc * f.dt;
}

}  // namespace

cplx canonical_cs_eval(cplx z, double xp) {
    const cplx zb = std::conj(z);
    return quarter_root_pi * std::exp(-zb * zb / 4.0 + zb * xp - xp * xp / 2.0);
}

SampledSignal canonical_cs_vector(cplx z, double t0, double dt, int n) {
    return SampledSignal::from_function([z](double x) { return canonical_cs_eval(z, x); }, t0, dt,
                                        n);
}

cplx canonical_overlap(cplx z, cplx w) { return std::exp(z * std::conj(w) / 2.0); }

double hermite_function(int n, double x) {
    if (n < 0) throw DomainError("hermite order must be non-negative");
    double prev = 0.0;
    double cur = quarter_root_pi * std::exp(-x * x / 2.0);
    for (int k = 0; k < n; ++k) {
        const double next =
            std::sqrt(2.0 / (k + 1)) * x * cur - std::sqrt(static_cast<double>(k) / (k + 1)) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

SampledSignal hermite_vector(int n, double t0, double dt, int n_samples) {
    return SampledSignal::from_function([n](double x) { return cplx(hermite_function(n, x)); }, t0,
                                        dt, n_samples);
}

Moments grid_moments(const SampledSignal& psi, double sign) {
    if (psi.size() < 2) throw DomainError("no samples");
    const cvec d = spectral_derivative(psi);
    double n2 = 0.0, q1 = 0.0, q2 = 0.0, dd2 = 0.0;
    cplx d1 = 0.0;
    for (int k = 0; k < psi.size(); ++k) {
        const double w = std::norm(psi.samples[k]);
        const double t = psi.time(k);
        n2 += w;
        q1 += w * t;
        q2 += w * t * t;
        d1 += std::conj(psi.samples[k]) * (-I) * d[k];
        dd2 += std::norm(d[k]);
    }
    Moments m;
    m.norm_sq = n2 * psi.dt;
    if (n2 == 0.0) return m;
    m.mean_q = q1 / n2;
    m.mean_d = sign * d1.real() / n2;
    m.delta_q = std::sqrt(std::max(0.0, q2 / n2 - m.mean_q * m.mean_q));
    m.delta_d = std::sqrt(std::max(0.0, dd2 / n2 - m.mean_d * m.mean_d));
    return m;
}

cplx PhaseGrid::label(size_t k) const {
    const int ix = static_cast<int>(k / static_cast<size_t>(np));
    const int ip = static_cast<int>(k % static_cast<size_t>(np));
    return {x0 + ix * dx, -(p0 + ip * dp)};
}

cplx bargmann_transform(const SampledSignal& f, cplx z) {
    cplx acc = 0.0;
    for (int k = 0; k < f.size(); ++k) acc += chi_conj(z, f.time(k)) * f.samples[k];
    return acc * f.dt;
}

cvec bargmann_transform(const SampledSignal& f, const PhaseGrid& grid) {
    cvec out(grid.size());
    for (size_t k = 0; k < out.size(); ++k) out[k] = bargmann_transform(f, grid.label(k));
    return out;
}

double canonical_measure_density(cplx z) { return std::exp(-std::norm(z) / 2.0) / (2.0 * pi); }

double bargmann_norm_sq(const cvec& ftilde, const PhaseGrid& grid) {
    if (ftilde.size() != grid.size()) throw DomainError("coefficient count does not match grid");
    double acc = 0.0;
    for (size_t k = 0; k < ftilde.size(); ++k)
        acc += canonical_measure_density(grid.label(k)) * std::norm(ftilde[k]);
    return acc * grid.cell();
}

SampledSignal bargmann_reconstruct(const cvec& ftilde, const PhaseGrid& grid, double t0,
                                   double dt, int n) {
    if (ftilde.size() != grid.size()) throw DomainError("coefficient count does not match grid");
    SampledSignal out(cvec(static_cast<size_t>(n), 0.0), t0, dt);
    for (size_t k = 0; k < ftilde.size(); ++k) {
        const cplx z = grid.label(k);
        const cplx c = grid.cell() * canonical_measure_density(z) * ftilde[k];
        if (c == 0.0) continue;
        for (int j = 0; j < n; ++j) out.samples[j] += c * canonical_cs_eval(z, out.time(j));
    }
    return out;
}

double bargmann_dbar_defect(const SampledSignal& f, cplx z, double h) {
    if (!(h > 0.0)) throw DomainError("step must be positive");
    // z = x - ip: moving p by +h moves z by -ih.
    const cplx dx = (bargmann_transform(f, z + h) - bargmann_transform(f, z - h)) / (2.0 * h);
    const cplx dp =
        (bargmann_transform(f, z - I * h) - bargmann_transform(f, z + I * h)) / (2.0 * h);
    return std::abs(0.5 * (dx - I * dp));
}

double canonical_resolution_check(const PhaseGrid& grid, const std::vector<SampledSignal>& tests) {
    std::vector<cvec> tilde;
    tilde.reserve(tests.size());
    for (const auto& t : tests) tilde.push_back(bargmann_transform(t, grid));
    rvec dens(grid.size());
    for (size_t k = 0; k < grid.size(); ++k)
        dens[k] = grid.cell() * canonical_measure_density(grid.label(k));

    double worst = 0.0;
    for (size_t a = 0; a < tests.size(); ++a) {
        for (size_t b = a; b < tests.size(); ++b) {
            cplx acc = 0.0;
            for (size_t k = 0; k < grid.size(); ++k)
                acc += dens[k] * std::conj(tilde[a][k]) * tilde[b][k];
            worst = std::max(worst, std::abs(grid_inner(tests[a], tests[b]) - acc));
        }
    }
    return worst;
}

cplx galilean_cs(double m, double u, cplx z, double p) {
    require_positive(m, u);
    return std::exp(-u * p * p / (2.0 * m) - I * p * std::conj(z)) / (2.0 * pi);
}

SampledSignal galilean_cs_vector(double m, double u, cplx z, double p0, double dp, int n) {
    require_positive(m, u);
    return SampledSignal::from_function([&](double p) { return galilean_cs(m, u, z, p); }, p0, dp,
                                        n);
}

cplx galilean_evolved(double m, double u, double t, cplx z, double p) {
    require_positive(m, u);
    return std::exp(cplx(-u, t) * (p * p / (2.0 * m)) - I * p * std::conj(z)) / (2.0 * pi);
}

GalileanReport galilean_moments(double m, double u, double t, cplx z, double p0, double dp, int n) {
    const auto psi = SampledSignal::from_function(
        [&](double p) { return galilean_evolved(m, u, t, z, p); }, p0, dp, n);
    // Momentum representation: Q = P, D = X = i d/dp.
    const Moments mo = grid_moments(psi, -1.0);
    GalileanReport r;
    r.mean_p = mo.mean_q;
    r.delta_p = mo.delta_q;
    r.mean_x = mo.mean_d;
    r.delta_x = mo.delta_d;
    r.closed_delta_x = std::sqrt(u / (2.0 * m) * (1.0 + t * t / (u * u)));
    r.closed_mean_x = z.real() - t / m * r.mean_p;
    return r;
}

cplx galilean_transform(const SampledSignal& fhat, double m, double u, cplx z) {
    require_positive(m, u);
    cplx acc = 0.0;
    for (int k = 0; k < fhat.size(); ++k) {
        const double p = fhat.time(k);
        acc += std::exp(-u * p * p / (2.0 * m) + I * p * z) * fhat.samples[k];
    }
    return acc * fhat.dt / (2.0 * pi);
}

double galilean_resolution_check(double m, double u, const PhaseGrid& grid,
                                 const std::vector<SampledSignal>& fhats) {
    require_positive(m, u);
    std::vector<cvec> fu(fhats.size(), cvec(grid.size()));
    for (size_t a = 0; a < fhats.size(); ++a)
        for (size_t k = 0; k < grid.size(); ++k)
            fu[a][k] = galilean_transform(fhats[a], m, u, grid.label(k));
    rvec dens(grid.size());
    const double norm = std::sqrt(m / (pi * u));
    for (size_t k = 0; k < grid.size(); ++k) {
        const double y = -grid.label(k).imag();
        dens[k] = grid.cell() * norm * std::exp(-m * y * y / u);
    }
    double worst = 0.0;
    for (size_t a = 0; a < fhats.size(); ++a) {
        for (size_t b = a; b < fhats.size(); ++b) {
            cplx acc = 0.0;
            for (size_t k = 0; k < grid.size(); ++k)
                acc += dens[k] * std::conj(fu[a][k]) * fu[b][k];
            const cplx ref = grid_inner(fhats[a], fhats[b]) / (2.0 * pi);
            worst = std::max(worst, std::abs(ref - acc));
        }
    }
    return worst;
}

}  // namespace framelab
