#include "framelab/analytic.hpp"

#include <algorithm>
#include <cmath>

#include "framelab/fourier.hpp"
#include "framelab/quadrature.hpp"

namespace framelab {

namespace {

double norm2(const rvec& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

void check_point(const FieldSample& f, const rvec& x, const rvec& y) {
    if (static_cast<int>(x.size()) != f.ndim() || static_cast<int>(y.size()) != f.ndim())
        throw DomainError("ast: point dimension does not match the field");
}

// Orthonormal basis with first vector along y.
std::vector<rvec> adapted_basis(const rvec& y) {
    const size_t n = y.size();
    const double yn = norm2(y);
    std::vector<rvec> basis;
    rvec e(n);
    for (size_t i = 0; i < n; ++i) e[i] = y[i] / yn;
    basis.push_back(e);
    for (size_t k = 0; k < n && basis.size() < n; ++k) {
        rvec v(n, 0.0);
        v[k] = 1.0;
        for (const rvec& b : basis) {
            double d = 0.0;
            for (size_t i = 0; i < n; ++i) d += v[i] * b[i];
            for (size_t i = 0; i < n; ++i) v[i] -= d * b[i];
        }
        const double vn = norm2(v);
        if (vn < 1e-8) continue;
        for (double& c : v) c /= vn;
        basis.push_back(v);
    }
    return basis;
}

// fhat(nu) = cell * sum_x e^{2 pi i nu.x} f(x), separable phases.
cplx grid_transform(const FieldSample& f, const double* nu, std::vector<cvec>& phase) {
    const int n = f.ndim();
    for (int d = 0; d < n; ++d) {
        const int m = f.shape[static_cast<size_t>(d)];
        phase[static_cast<size_t>(d)].resize(static_cast<size_t>(m));
        const cplx step = std::polar(1.0, 2.0 * pi * nu[d] * f.spacing[static_cast<size_t>(d)]);
        cplx cur = std::polar(1.0, 2.0 * pi * nu[d] * f.origin[static_cast<size_t>(d)]);
        for (int j = 0; j < m; ++j) {
            if (j % 64 == 0)
                cur = std::polar(1.0, 2.0 * pi * nu[d] * (f.origin[static_cast<size_t>(d)] + j * f.spacing[static_cast<size_t>(d)]));
            phase[static_cast<size_t>(d)][static_cast<size_t>(j)] = cur;
            cur *= step;
        }
    }
    const cplx* v = f.values.data();
    cplx total = 0.0;
    if (n == 1) {
        for (int j = 0; j < f.shape[0]; ++j) total += phase[0][static_cast<size_t>(j)] * v[j];
    } else if (n == 2) {
        const int n1 = f.shape[1];
        for (int i = 0; i < f.shape[0]; ++i) {
            cplx row = 0.0;
            const cplx* r = v + static_cast<size_t>(i) * n1;
            for (int j = 0; j < n1; ++j) row += phase[1][static_cast<size_t>(j)] * r[j];
            total += phase[0][static_cast<size_t>(i)] * row;
        }
    } else {
        const int n1 = f.shape[1], n2 = f.shape[2];
        for (int i = 0; i < f.shape[0]; ++i) {
            cplx plane = 0.0;
            for (int j = 0; j < n1; ++j) {
                cplx row = 0.0;
                const cplx* r = v + (static_cast<size_t>(i) * n1 + j) * n2;
                for (int k = 0; k < n2; ++k) row += phase[2][static_cast<size_t>(k)] * r[k];
                plane += phase[1][static_cast<size_t>(j)] * row;
            }
            total += phase[0][static_cast<size_t>(i)] * plane;
        }
    }
    return total * f.cell_volume();
}

cplx ast_fourier(const FieldSample& f, const rvec& x, const rvec& y, const AstOptions& opt) {
    const int n = f.ndim();
    const double yn = norm2(y);
    const double R = opt.band > 0.0 ? opt.band : effective_band(f);
    const auto basis = adapted_basis(y);
    const GaussRule gk = gauss_legendre(opt.nodes_parallel, 0.0, R);
    const GaussRule gt = gauss_legendre(opt.nodes_transverse, -R, R);
    std::vector<cvec> phase(static_cast<size_t>(n));
    const int nt = n - 1;
    int combos = 1;
    for (int d = 0; d < nt; ++d) combos *= opt.nodes_transverse;
    cplx total = 0.0;
    double nu[3];
    for (size_t i = 0; i < gk.x.size(); ++i) {
        const double kappa = gk.x[i];
        const double damp = std::exp(-2.0 * pi * kappa * yn);
        if (damp == 0.0) continue;
        for (int c = 0; c < combos; ++c) {
            double w = gk.w[i];
            for (int d = 0; d < n; ++d) nu[d] = kappa * basis[0][static_cast<size_t>(d)];
            int rem = c;
            for (int t = 0; t < nt; ++t) {
                const int j = rem % opt.nodes_transverse;
                rem /= opt.nodes_transverse;
                w *= gt.w[static_cast<size_t>(j)];
                for (int d = 0; d < n; ++d) nu[d] += gt.x[static_cast<size_t>(j)] * basis[static_cast<size_t>(t + 1)][static_cast<size_t>(d)];
            }
            double nx = 0.0;
            for (int d = 0; d < n; ++d) nx += nu[d] * x[static_cast<size_t>(d)];
            total += w * damp * std::polar(1.0, -2.0 * pi * nx) * grid_transform(f, nu, phase);
        }
    }
    return total;
}

cplx ast_line(const FieldSample& f, const rvec& x, const rvec& y, const AstOptions& opt) {
    const int n = f.ndim();
    if (boundary_ratio(f) > opt.decay_tol)
        throw DomainError("ast line method: insufficient decay at the grid boundary");
    double ta = -INFINITY, tb = INFINITY;
    for (int d = 0; d < n; ++d) {
        const double lo = f.origin[static_cast<size_t>(d)];
        const double hi = lo + (f.shape[static_cast<size_t>(d)] - 1) * f.spacing[static_cast<size_t>(d)];
        const double xd = x[static_cast<size_t>(d)], yd = y[static_cast<size_t>(d)];
        if (yd == 0.0) {
            if (xd < lo || xd > hi) return 0.0;
            continue;
        }
        // x - tau y in [lo, hi]
        double t1 = (xd - lo) / yd, t2 = (xd - hi) / yd;
        if (t1 > t2) std::swap(t1, t2);
        ta = std::max(ta, t1);
        tb = std::min(tb, t2);
    }
    if (!(ta < tb)) return 0.0;
    rvec br{ta, tb};
    for (int d = 0; d < n; ++d) {
        const double yd = y[static_cast<size_t>(d)];
        if (yd == 0.0) continue;
        const double lo = f.origin[static_cast<size_t>(d)], h = f.spacing[static_cast<size_t>(d)];
        for (int k = 0; k < f.shape[static_cast<size_t>(d)]; ++k) {
            const double t = (x[static_cast<size_t>(d)] - (lo + k * h)) / yd;
            if (t > ta && t < tb) br.push_back(t);
        }
    }
    // also split at the pole's real part so the 1/(tau - i) peak is resolved
    if (0.0 > ta && 0.0 < tb) br.push_back(0.0);
    std::sort(br.begin(), br.end());
    br.erase(std::unique(br.begin(), br.end()), br.end());
    rvec pt(static_cast<size_t>(n));
    auto g = [&](double tau) {
        for (int d = 0; d < n; ++d) pt[static_cast<size_t>(d)] = x[static_cast<size_t>(d)] - tau * y[static_cast<size_t>(d)];
        return f.interpolate(pt) / cplx(tau, -1.0);
    };
    cplx total = 0.0;
    for (size_t k = 0; k + 1 < br.size(); ++k) {
        if (br[k + 1] - br[k] < 1e-14 * std::max(1.0, std::abs(br[k]))) continue;
        total += integrate(g, br[k], br[k + 1], opt.line_tol * 1e-3, opt.line_tol, 200).value;
    }
    return total / (2.0 * pi * I);
}

}  // namespace

cplx step_exp(cplx zeta) { return step(-zeta.real()) * std::exp(zeta); }

cplx analytic_signal_1d(const FieldSample& f, cplx z) {
    if (f.ndim() != 1) throw DomainError("analytic_signal_1d: field must be 1-D");
    const int n = f.shape[0];
    const double period = n * f.spacing[0];
    const double x0 = f.origin[0];
    const double y = -z.imag();
    const cvec c = dft(f.values, +1);
    cplx total = 0.0;
    auto term = [&](double nu, cplx coef) {
        const double th = step(y * nu);
        if (th == 0.0) return;
        total += th * coef * std::polar(1.0, 2.0 * pi * nu * x0) * std::exp(-2.0 * pi * I * nu * z);
    };
    for (int k = 0; k < n; ++k) {
        const cplx coef = c[static_cast<size_t>(k)] / double(n);
        if (n % 2 == 0 && k == n / 2) {
            const double nu = 0.5 * n / period;
            term(nu, 0.5 * coef);
            term(-nu, 0.5 * coef);
        } else {
            term(dft_index(k, n) / period, coef);
        }
    }
    return total;
}

double effective_band(const FieldSample& f, double rel) {
    const cvec spec = dftn(f.values, f.shape, +1);
    double peak = 0.0;
    for (const cplx& v : spec) peak = std::max(peak, std::abs(v));
    if (peak == 0.0) return 0.0;
    double band = 0.0, bin = 0.0;
    for (int d = 0; d < f.ndim(); ++d)
        bin = std::max(bin, 1.0 / (f.shape[static_cast<size_t>(d)] * f.spacing[static_cast<size_t>(d)]));
    for (size_t k = 0; k < spec.size(); ++k) {
        if (std::abs(spec[k]) <= rel * peak) continue;
        const auto idx = f.unflat(k);
        double s = 0.0;
        for (int d = 0; d < f.ndim(); ++d) {
            const int m = f.shape[static_cast<size_t>(d)];
            const double nu = dft_index(idx[static_cast<size_t>(d)], m) / (m * f.spacing[static_cast<size_t>(d)]);
            s += nu * nu;
        }
        band = std::max(band, std::sqrt(s));
    }
    return band + bin;
}

cplx ast_eval(const FieldSample& f, const rvec& x, const rvec& y, AstMethod method,
              const AstOptions& opt) {
    check_point(f, x, y);
    if (norm2(y) == 0.0) return 0.5 * f.interpolate(x);
    switch (method) {
        case AstMethod::fourier:
            return ast_fourier(f, x, y, opt);
        case AstMethod::line:
            return ast_line(f, x, y, opt);
        case AstMethod::periodic:
            if (f.ndim() != 1) throw DomainError("ast periodic method: field must be 1-D");
            return analytic_signal_1d(f, cplx(x[0], -y[0]));
    }
    throw DomainError("ast_eval: unknown method");
}

cplx directional_hilbert(const FieldSample& f, const rvec& x, const rvec& y, double eps,
                         const HilbertOptions& opt) {
    check_point(f, x, y);
    if (norm2(y) == 0.0) throw DomainError("directional_hilbert: y must be nonzero");
    if (!(eps > 0.0)) throw DomainError("directional_hilbert: eps must be positive");
    constexpr int K = 4;
    double e[K];
    cplx p[K];
    for (int k = 0; k < K; ++k) {
        e[k] = eps / std::pow(2.0, k);
        rvec yp(y.size()), ym(y.size());
        for (size_t i = 0; i < y.size(); ++i) {
            yp[i] = e[k] * y[i];
            ym[i] = -e[k] * y[i];
        }
        // f(x + i e y) = ast(x, -e y), f(x - i e y) = ast(x, e y)
        p[k] = -I * (ast_eval(f, x, ym, opt.method, opt.ast) - ast_eval(f, x, yp, opt.method, opt.ast));
    }
    // Neville tableau at 0; t[k] holds P_{k..k+level}(0).
    auto neville = [&](int first, int count) {
        cplx t[K];
        for (int k = 0; k < count; ++k) t[k] = p[first + k];
        for (int level = 1; level < count; ++level)
            for (int k = 0; k + level < count; ++k) {
                const double a = e[first + k], b = e[first + k + level];
                t[k] = (b * t[k] - a * t[k + 1]) / (b - a);
            }
        return t[0];
    };
    const cplx early = neville(0, K - 1);
    const cplx late = neville(1, K - 1);
    const cplx full = neville(0, K);
    const double diff = std::abs(early - late);
    if (diff > opt.conv_tol * std::max(1.0, std::abs(full)))
        throw ConvergenceError("directional_hilbert: eps-extrapolation did not converge", diff);
    return full;
}

DbarDefect dbar_defect(const ComplexField& F, const rvec& x, const rvec& y, double h) {
    if (x.size() != y.size() || x.empty()) throw DomainError("dbar_defect: bad point");
    if (!(h > 0.0)) throw DomainError("dbar_defect: step must be positive");
    DbarDefect out;
    cplx dir = 0.0;
    for (size_t mu = 0; mu < x.size(); ++mu) {
        rvec xp = x, xm = x, yp = y, ym = y;
        xp[mu] += h;
        xm[mu] -= h;
        yp[mu] += h;
        ym[mu] -= h;
        const cplx dx = (F(xp, y) - F(xm, y)) / (2.0 * h);
        const cplx dy = (F(x, yp) - F(x, ym)) / (2.0 * h);
        const cplx db = 0.5 * (dx - I * dy);
        out.components.push_back(std::abs(db));
        dir += y[mu] * db;
    }
    out.directional = std::abs(dir);
    return out;
}

}  // namespace framelab
