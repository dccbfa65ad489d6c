#include "framelab/signal.hpp"

#include <algorithm>
#include <cmath>

namespace framelab {

SampledSignal::SampledSignal(cvec s, double t0_, double dt_) : samples(std::move(s)), t0(t0_), dt(dt_) {
    if (!(dt > 0.0)) throw DomainError("signal: dt must be positive");
    if (samples.empty()) throw DomainError("signal: no samples");
}

SampledSignal SampledSignal::from_function(const std::function<cplx(double)>& f, double t0,
                                           double dt, int n) {
    if (n < 1) throw DomainError("signal: no samples");
    cvec s(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) s[static_cast<size_t>(k)] = f(t0 + k * dt);
    return SampledSignal(std::move(s), t0, dt);
}

double l2_norm(const SampledSignal& f) {
    double s = 0.0;
    for (const cplx& v : f.samples) s += std::norm(v);
    return std::sqrt(s * f.dt);
}

double relative_l2_error(const SampledSignal& a, const SampledSignal& b) {
    if (a.size() != b.size()) throw DomainError("relative_l2_error: size mismatch");
    double num = 0.0, den = 0.0;
    for (int k = 0; k < a.size(); ++k) {
        num += std::norm(a.samples[static_cast<size_t>(k)] - b.samples[static_cast<size_t>(k)]);
        den += std::norm(b.samples[static_cast<size_t>(k)]);
    }
    if (den == 0.0) return std::sqrt(num);
    return std::sqrt(num / den);
}

FieldSample::FieldSample(std::vector<int> shape_, rvec origin_, rvec spacing_)
    : shape(std::move(shape_)), origin(std::move(origin_)), spacing(std::move(spacing_)) {
    const size_t n = shape.size();
    if (n < 1 || n > 3) throw DomainError("field: dimension must be 1, 2 or 3");
    if (origin.size() != n || spacing.size() != n)
        throw DomainError("field: origin/spacing size mismatch");
    size_t total = 1;
    for (size_t i = 0; i < n; ++i) {
        if (shape[i] < 1) throw DomainError("field: empty axis");
        if (!(spacing[i] > 0.0)) throw DomainError("field: spacings must be positive");
        total *= static_cast<size_t>(shape[i]);
    }
    values.assign(total, cplx(0.0));
}

size_t FieldSample::flat(const std::vector<int>& idx) const {
    size_t k = 0;
    for (size_t i = 0; i < shape.size(); ++i) k = k * static_cast<size_t>(shape[i]) + static_cast<size_t>(idx[i]);
    return k;
}

std::vector<int> FieldSample::unflat(size_t k) const {
    std::vector<int> idx(shape.size());
    for (size_t i = shape.size(); i-- > 0;) {
        idx[i] = static_cast<int>(k % static_cast<size_t>(shape[i]));
        k /= static_cast<size_t>(shape[i]);
    }
    return idx;
}

rvec FieldSample::point(size_t k) const {
    const auto idx = unflat(k);
    rvec x(shape.size());
    for (size_t i = 0; i < shape.size(); ++i) x[i] = origin[i] + idx[i] * spacing[i];
    return x;
}

double FieldSample::cell_volume() const {
    double v = 1.0;
    for (double h : spacing) v *= h;
    return v;
}

cplx FieldSample::interpolate(const double* x) const {
    const int n = ndim();
    int base[3];
    double frac[3];
    for (int i = 0; i < n; ++i) {
        const double u = (x[i] - origin[static_cast<size_t>(i)]) / spacing[static_cast<size_t>(i)];
        if (!(u >= 0.0) || u > shape[static_cast<size_t>(i)] - 1) return cplx(0.0);
        int b = static_cast<int>(std::floor(u));
        if (b >= shape[static_cast<size_t>(i)] - 1) b = shape[static_cast<size_t>(i)] - 2;
        if (b < 0) b = 0;
        base[i] = b;
        frac[i] = shape[static_cast<size_t>(i)] == 1 ? 0.0 : u - b;
    }
    cplx acc = 0.0;
    const int corners = 1 << n;
    for (int c = 0; c < corners; ++c) {
        double w = 1.0;
        size_t k = 0;
        bool skip = false;
        for (int i = 0; i < n; ++i) {
            const int bit = (c >> i) & 1;
            const double wi = bit ? frac[i] : 1.0 - frac[i];
            if (wi == 0.0) {
                skip = true;
                break;
            }
            w *= wi;
            k = k * static_cast<size_t>(shape[static_cast<size_t>(i)]) + static_cast<size_t>(base[i] + bit);
        }
        if (!skip) acc += w * values[k];
    }
    return acc;
}

FieldSample FieldSample::from_function(const std::function<cplx(const rvec&)>& f,
                                       std::vector<int> shape, rvec origin, rvec spacing) {
    FieldSample out(std::move(shape), std::move(origin), std::move(spacing));
    for (size_t k = 0; k < out.count(); ++k) out.values[k] = f(out.point(k));
    return out;
}

double boundary_ratio(const FieldSample& f) {
    double peak = 0.0, edge = 0.0;
    for (size_t k = 0; k < f.count(); ++k) {
        const double a = std::abs(f.values[k]);
        peak = std::max(peak, a);
        if (a <= edge) continue;
        const auto idx = f.unflat(k);
        for (int d = 0; d < f.ndim(); ++d) {
            const int i = idx[static_cast<size_t>(d)];
            if (i == 0 || i == f.shape[static_cast<size_t>(d)] - 1) {
                edge = a;
                break;
            }
        }
    }
    return peak == 0.0 ? 0.0 : edge / peak;
}

}  // namespace framelab
