#pragma once

#include <functional>
#include <vector>

#include "framelab/types.hpp"

namespace framelab {

// Uniform 1-D samples f(t0 + k dt), k = 0..N-1.
struct SampledSignal {
    cvec samples;
    double t0 = 0.0;
    double dt = 1.0;

    SampledSignal() = default;
    SampledSignal(cvec s, double t0_, double dt_);

    int size() const { return static_cast<int>(samples.size()); }
    double time(int k) const { return t0 + k * dt; }
    double t_end() const { return time(size() - 1); }

    static SampledSignal from_function(const std::function<cplx(double)>& f, double t0, double dt,
                                       int n);
};

// sqrt(dt * sum |f|^2)
double l2_norm(const SampledSignal& f);
// ||a - b|| / ||b|| on a common grid.
double relative_l2_error(const SampledSignal& a, const SampledSignal& b);

// Complex samples on a uniform n-D grid (n = 1, 2, 3), row-major with the last axis fastest.
struct FieldSample {
    std::vector<int> shape;
    rvec origin;
    rvec spacing;
    cvec values;

    FieldSample() = default;
    FieldSample(std::vector<int> shape_, rvec origin_, rvec spacing_);

    int ndim() const { return static_cast<int>(shape.size()); }
    size_t count() const { return values.size(); }
    size_t flat(const std::vector<int>& idx) const;
    std::vector<int> unflat(size_t k) const;
    rvec point(size_t k) const;
    double cell_volume() const;

    // Multilinear interpolation; zero outside the grid.
    cplx interpolate(const double* x) const;
    cplx interpolate(const rvec& x) const { return interpolate(x.data()); }

    static FieldSample from_function(const std::function<cplx(const rvec&)>& f,
                                     std::vector<int> shape, rvec origin, rvec spacing);
};

// max |f| on the grid faces divided by max |f| (0 for a zero field).
double boundary_ratio(const FieldSample& f);

}  // namespace framelab
