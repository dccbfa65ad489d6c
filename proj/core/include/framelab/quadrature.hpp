#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <type_traits>
#include <vector>

#include "framelab/types.hpp"

namespace framelab {

struct GaussRule {
    rvec x;
    rvec w;
};

// n-point Gauss-Legendre rule on [a, b].
GaussRule gauss_legendre(int n, double a = -1.0, double b = 1.0);

template <class T>
struct QuadResult {
    T value{};
    double error = 0.0;
    int evaluations = 0;
    bool converged = false;
};

namespace detail {

inline constexpr double gk_x[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double gk_wk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double gk_wg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

inline double magnitude(double v) { return std::abs(v); }
inline double magnitude(const cplx& v) { return std::abs(v); }

template <class F>
auto gk15(F& f, double a, double b, double& err) {
    using T = std::decay_t<decltype(f(a))>;
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const T fc = f(c);
    T kron = fc * gk_wk[7];
    T gauss = fc * gk_wg[3];
    for (int j = 0; j < 7; ++j) {
        const double dx = h * gk_x[j];
        const T f1 = f(c - dx);
        const T f2 = f(c + dx);
        kron += (f1 + f2) * gk_wk[j];
        if (j % 2 == 1) gauss += (f1 + f2) * gk_wg[j / 2];
    }
    err = magnitude((kron - gauss) * h);
    return T(kron * h);
}

}  // namespace detail

// Adaptive Gauss-Kronrod 7/15 with a global priority queue on interval error.
template <class F>
auto integrate(F f, double a, double b, double abs_tol = 1e-12, double rel_tol = 1e-10,
               int max_intervals = 2000) {
    using T = std::decay_t<decltype(f(a))>;
    struct Piece {
        double a, b, err;
        T val;
        bool operator<(const Piece& o) const { return err < o.err; }
    };
    QuadResult<T> out;
    std::priority_queue<Piece> heap;
    double e0 = 0.0;
    T v0 = detail::gk15(f, a, b, e0);
    heap.push({a, b, e0, v0});
    T total = v0;
    double err_total = e0;
    out.evaluations = 15;
    while (static_cast<int>(heap.size()) < max_intervals) {
        if (err_total <= std::max(abs_tol, rel_tol * detail::magnitude(total))) {
            out.converged = true;
            break;
        }
        Piece p = heap.top();
        heap.pop();
        const double m = 0.5 * (p.a + p.b);
        if (!(m > p.a && m < p.b)) {  // interval exhausted in floating point
            heap.push(p);
            break;
        }
        double e1 = 0.0, e2 = 0.0;
        T v1 = detail::gk15(f, p.a, m, e1);
        T v2 = detail::gk15(f, m, p.b, e2);
        out.evaluations += 30;
        total += v1 + v2 - p.val;
        err_total += e1 + e2 - p.err;
        heap.push({p.a, m, e1, v1});
        heap.push({m, p.b, e2, v2});
    }
    // Re-sum to limit drift from incremental updates.
    T sum{};
    double esum = 0.0;
    while (!heap.empty()) {
        sum += heap.top().val;
        esum += heap.top().err;
        heap.pop();
    }
    out.value = sum;
    out.error = esum;
    if (!out.converged) out.converged = esum <= std::max(abs_tol, rel_tol * detail::magnitude(sum));
    return out;
}

// Integral over [a, inf) through t = a + u/(1-u).
template <class F>
auto integrate_upper(F f, double a, double abs_tol = 1e-12, double rel_tol = 1e-10,
                     int max_intervals = 2000) {
    using T = std::decay_t<decltype(f(a))>;
    auto g = [&](double u) -> T {
        if (u >= 1.0) return T{};
        const double v = 1.0 - u;
        return f(a + u / v) * (1.0 / (v * v));
    };
    return integrate(g, 0.0, 1.0, abs_tol, rel_tol, max_intervals);
}

// Integral over the real line, split at `center`.
template <class F>
auto integrate_line(F f, double center = 0.0, double abs_tol = 1e-12, double rel_tol = 1e-10,
                    int max_intervals = 2000) {
    auto r = integrate_upper(f, center, abs_tol, rel_tol, max_intervals);
    auto l = integrate_upper([&](double t) { return f(2.0 * center - t); }, center, abs_tol,
                             rel_tol, max_intervals);
    r.value += l.value;
    r.error += l.error;
    r.evaluations += l.evaluations;
    r.converged = r.converged && l.converged;
    return r;
}

// Composite trapezoid weights for n points spacing h (endpoints halved).
inline rvec trapezoid_weights(int n, double h) {
    rvec w(static_cast<size_t>(n), h);
    if (n >= 2) {
        w.front() *= 0.5;
        w.back() *= 0.5;
    }
    return w;
}

}  // namespace framelab
