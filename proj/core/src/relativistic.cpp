#include "framelab/relativistic.hpp"

#include <cmath>

#include "framelab/quadrature.hpp"
#include "framelab/special.hpp"

namespace framelab {

namespace {

void require_lambda(double lambda) {
    if (!(lambda > 0.0))
        throw DomainError("lambda must be positive (evaluation map is unbounded at lambda = 0)");
}

double spatial_norm_sq(const rvec& v) {
    double acc = 0.0;
    for (size_t k = 1; k < v.size(); ++k) acc += v[k] * v[k];
    return acc;
}

double forward_lambda(const rvec& y) {
    if (y.size() < 2) throw DomainError("y needs a time and at least one space component");
    const double l2 = y[0] * y[0] - spatial_norm_sq(y);
    if (!(y[0] > 0.0) || !(l2 > 0.0)) throw DomainError("y is not in the forward cone");
    return std::sqrt(l2);
}

void require_s1(const MassShellParams& p) {
    p.validate();
    if (p.s != 1) throw DomainError("only s = 1 is supported here");
}

// J^0 and J^1 over x-grid shifted by dx_shift at time t.
struct CurrentSlice {
    rvec j0, j1;
};

CurrentSlice current_slice(const MomentumWavefunction& f, double lambda, double t,
                           const PhaseSpaceGrid& g, double dx_shift) {
    const double mc = f.params.mc();
    const int np = f.a.size();
    const int nx = g.nx, ny = g.ny;
    Eigen::MatrixXcd ex(nx, np);
    for (int i = 0; i < nx; ++i) {
        const double x = g.x0 + i * g.dx + dx_shift;
        for (int k = 0; k < np; ++k) ex(i, k) = std::exp(I * (x * f.a.time(k)));
    }
    Eigen::MatrixXcd w(np, ny);
    rvec y0s(static_cast<size_t>(ny));
    for (int j = 0; j < ny; ++j) {
        const double y = g.y0 + j * g.dy;
        const double y0 = std::sqrt(lambda * lambda + y * y);
        y0s[j] = y0;
        for (int k = 0; k < np; ++k) {
            const double p = f.a.time(k);
            const double om = std::sqrt(mc * mc + p * p);
            w(k, j) = f.a.dt / (4.0 * pi * om) * std::exp(cplx(-y0 * om + y * p, -t * om)) *
                      f.a.samples[k];
        }
    }
    const Eigen::MatrixXcd field = ex * w;
    const double a_inv = 1.0 / measure_constant(f.params, lambda);
    CurrentSlice out{rvec(static_cast<size_t>(nx), 0.0), rvec(static_cast<size_t>(nx), 0.0)};
    for (int i = 0; i < nx; ++i) {
        double s0 = 0.0, s1 = 0.0;
        for (int j = 0; j < ny; ++j) {
            const double d = std::norm(field(i, j));
            s0 += d;
            s1 += d * (g.y0 + j * g.dy) / y0s[j];
        }
        out.j0[i] = a_inv * g.dy * s0;
        out.j1[i] = a_inv * g.dy * s1;
    }
    return out;
}

}  // namespace

void MassShellParams::validate() const {
    if (!(m > 0.0)) throw DomainError("mass must be positive");
    if (s < 1) throw DomainError("space dimension must be at least 1");
    if (!(c > 0.0)) throw DomainError("speed of light must be positive");
}

TubePoint::TubePoint(rvec x_, rvec y_) : x(std::move(x_)), y(std::move(y_)) {
    if (x.size() != y.size() || x.size() < 2)
        throw DomainError("tube point needs matching x and y with s + 1 >= 2 components");
}

Cone TubePoint::cone() const {
    const double r = std::sqrt(spatial_norm_sq(y));
    if (y[0] > r) return Cone::forward;
    if (-y[0] > r) return Cone::backward;
    return Cone::outside;
}

double TubePoint::lambda() const {
    const double l2 = y[0] * y[0] - spatial_norm_sq(y);
    return l2 > 0.0 ? std::sqrt(l2) : 0.0;
}

double minkowski(const rvec& a, const rvec& b) {
    double acc = a[0] * b[0];
    for (size_t k = 1; k < a.size(); ++k) acc -= a[k] * b[k];
    return acc;
}

cplx minkowski(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    cplx acc = a[0] * b[0];
    for (size_t k = 1; k < a.size(); ++k) acc -= a[k] * b[k];
    return acc;
}

double ez_norm_sq(const MassShellParams& p, double lambda, NormMethod method) {
    p.validate();
    require_lambda(lambda);
    const double mc = p.mc();
    const double nu = p.nu();
    if (method == NormMethod::closed)
        return std::pow(mc / (4.0 * pi * lambda), nu) * bessel_k(nu, 2.0 * lambda * mc) /
               (2.0 * pi);

    // (2 pi)^{-s} |S^{s-1}| int_0^inf r^{s-1} e^{-2 lambda omega} / (2 omega) dr
    const double sphere = 2.0 * std::pow(pi, 0.5 * p.s) / std::tgamma(0.5 * p.s);
    auto integrand = [&](double r) {
        const double om = std::sqrt(mc * mc + r * r);
        return std::pow(r, p.s - 1) * std::exp(-2.0 * lambda * om) / (2.0 * om);
    };
    const auto q = integrate_upper(integrand, 0.0, 0.0, 1e-13, 4000);
    if (!q.converged) throw ConvergenceError("norm quadrature did not converge", q.error);
    return std::pow(2.0 * pi, -p.s) * sphere * q.value;
}

double ez_norm_sq_small(const MassShellParams& p, double lambda) {
    p.validate();
    require_lambda(lambda);
    const double nu = p.nu();
    if (!(nu > 0.0)) throw DomainError("small-lambda form needs s >= 2");
    return std::tgamma(nu) * std::pow(4.0 * pi, -nu - 1.0) * std::pow(lambda, -2.0 * nu);
}

cplx kernel_eta(const TubePoint& zp, const TubePoint& z) {
    if (zp.dim() != z.dim()) throw DomainError("tube points have different dimensions");
    if (zp.cone() != Cone::forward || z.cone() != Cone::forward)
        throw DomainError("points must lie in the forward tube");
    std::vector<cplx> w(static_cast<size_t>(z.dim()));
    for (int k = 0; k < z.dim(); ++k) w[k] = cplx(zp.x[k] - z.x[k], -(zp.y[k] + z.y[k]));
    const cplx arg = -minkowski(w, w);
    if (arg.real() < 0.0 && std::abs(arg.imag()) <= 1e-12 * std::abs(arg))
        throw DomainError("kernel argument on the branch cut");
    return std::sqrt(arg);
}

cplx kernel_eval(const MassShellParams& p, const TubePoint& zp, const TubePoint& z) {
    p.validate();
    if (zp.dim() != p.s + 1) throw DomainError("tube point dimension does not match s");
    const cplx eta = kernel_eta(zp, z);
    const double mc = p.mc();
    const double nu = p.nu();
    const cplx pre = nu == 0.0 ? cplx(1.0) : std::pow(mc / (2.0 * pi * eta), nu);
    return pre * bessel_k(nu, eta * mc) / (2.0 * pi);
}

cplx kernel_quadrature(const MassShellParams& p, const TubePoint& zp, const TubePoint& z) {
    require_s1(p);
    kernel_eta(zp, z);
    const cplx w0(zp.x[0] - z.x[0], -(zp.y[0] + z.y[0]));
    const cplx w1(zp.x[1] - z.x[1], -(zp.y[1] + z.y[1]));
    const double mc = p.mc();
    auto integrand = [&](double q) {
        const double om = std::sqrt(mc * mc + q * q);
        return std::exp(-I * (w0 * om - w1 * q)) / (4.0 * pi * om);
    };
    const auto r = integrate_line(integrand, 0.0, 1e-15, 1e-12, 4000);
    if (!r.converged) throw ConvergenceError("kernel quadrature did not converge", r.error);
    return r.value;
}

rvec expected_momentum(const MassShellParams& p, const rvec& y) {
    p.validate();
    if (static_cast<int>(y.size()) != p.s + 1) throw DomainError("y dimension does not match s");
    const double lambda = forward_lambda(y);
    const double mc = p.mc();
    const double scale = bessel_k_ratio(p.nu(), 2.0 * lambda * mc) * mc / lambda;
    rvec out(y.size());
    out[0] = scale * y[0];
    for (size_t k = 1; k < y.size(); ++k) out[k] = -scale * y[k];
    return out;
}

double log_norm_sq(const MassShellParams& p, const rvec& y) {
    return std::log(ez_norm_sq(p, forward_lambda(y)));
}

double effective_mass(const MassShellParams& p, double lambda) {
    p.validate();
    require_lambda(lambda);
    return p.m * bessel_k_ratio(p.nu(), 2.0 * lambda * p.mc());
}

double measure_constant(const MassShellParams& p, double lambda) {
    p.validate();
    if (lambda < 0.0) throw DomainError("lambda must be non-negative");
    const double nu = p.nu();
    const double mc = p.mc();
    if (lambda == 0.0) return std::pow(pi, nu) * std::tgamma(nu + 1.0) / (2.0 * std::pow(mc, p.s + 1));
    return std::pow(pi * lambda / mc, nu + 1.0) * bessel_k(nu + 1.0, 2.0 * lambda * mc) / pi;
}

Eigen::MatrixXd correlation_matrix(const MassShellParams& p, const rvec& y) {
    p.validate();
    if (static_cast<int>(y.size()) != p.s + 1) throw DomainError("y dimension does not match s");
    const double lambda = forward_lambda(y);
    const double mc = p.mc();
    const cvec k = bessel_k_seq(p.nu(), cplx(2.0 * lambda * mc), 3);
    const double r1 = k[1].real() / k[0].real();
    const double r2 = k[2].real() / k[0].real();
    const int d = p.s + 1;
    rvec ylow(y.size());
    ylow[0] = y[0];
    for (int i = 1; i < d; ++i) ylow[i] = -y[i];
    Eigen::MatrixXd out(d, d);
    const double a = mc * mc / (lambda * lambda) * (r2 - r1 * r1);
    const double b = mc * r1 / (2.0 * lambda);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            const double g = i == j ? (i == 0 ? 1.0 : -1.0) : 0.0;
            out(i, j) = ylow[i] * ylow[j] * a - g * b;
        }
    }
    return out;
}

cplx field_value(const MomentumWavefunction& f, double t, double x, double y0, double y1) {
    require_s1(f.params);
    const double mc = f.params.mc();
    cplx acc = 0.0;
    for (int k = 0; k < f.a.size(); ++k) {
        const double p = f.a.time(k);
        const double om = std::sqrt(mc * mc + p * p);
        acc += std::exp(cplx(-y0 * om + y1 * p, -t * om + x * p)) / om * f.a.samples[k];
    }
    return acc * f.a.dt / (4.0 * pi);
}

double k_norm_sq(const MomentumWavefunction& f) {
    require_s1(f.params);
    const double mc = f.params.mc();
    double acc = 0.0;
    for (int k = 0; k < f.a.size(); ++k) {
        const double p = f.a.time(k);
        acc += std::norm(f.a.samples[k]) / std::sqrt(mc * mc + p * p);
    }
    return acc * f.a.dt / (4.0 * pi);
}

double phase_space_norm(const MomentumWavefunction& f, double lambda, double t,
                        const PhaseSpaceGrid& grid) {
    require_s1(f.params);
    require_lambda(lambda);
    const auto slice = current_slice(f, lambda, t, grid, 0.0);
    double acc = 0.0;
    for (double v : slice.j0) acc += v;
    return acc * grid.dx;
}

CurrentReport current_density(const MomentumWavefunction& f, double lambda, double t,
                              const PhaseSpaceGrid& grid, double fd_step) {
    require_s1(f.params);
    require_lambda(lambda);
    if (!(fd_step > 0.0)) throw DomainError("difference step must be positive");
    const auto mid = current_slice(f, lambda, t, grid, 0.0);
    const auto later = current_slice(f, lambda, t + fd_step, grid, 0.0);
    const auto earlier = current_slice(f, lambda, t - fd_step, grid, 0.0);
    const auto right = current_slice(f, lambda, t, grid, fd_step);
    const auto left = current_slice(f, lambda, t, grid, -fd_step);

    CurrentReport r;
    r.j0 = mid.j0;
    r.j1 = mid.j1;
    const size_t nx = static_cast<size_t>(grid.nx);
    r.x.resize(nx);
    r.defect.resize(nx);
    for (size_t i = 0; i < nx; ++i) {
        r.x[i] = grid.x0 + static_cast<double>(i) * grid.dx;
        const double dt0 = (later.j0[i] - earlier.j0[i]) / (2.0 * fd_step);
        const double dx1 = (right.j1[i] - left.j1[i]) / (2.0 * fd_step);
        r.defect[i] = std::abs(dt0 + dx1);
        r.max_defect = std::max(r.max_defect, r.defect[i]);
        r.flux += r.j0[i] * grid.dx;
        if (r.j0[i] < 0.0) r.nonnegative = false;
    }
    return r;
}

rvec nonrel_limit_defect(const SampledSignal& fhat, double u, double m, const rvec& cs,
                         const PhaseSpaceGrid& grid) {
    if (!(u > 0.0) || !(m > 0.0)) throw DomainError("u and m must be positive");
    const int np = fhat.size(), nx = grid.nx, ny = grid.ny;
    Eigen::MatrixXcd ex(nx, np);
    for (int i = 0; i < nx; ++i)
        for (int k = 0; k < np; ++k)
            ex(i, k) = std::exp(I * ((grid.x0 + i * grid.dx) * fhat.time(k)));

    const double a = std::sqrt(u / (2.0 * m)), b = std::sqrt(m / (2.0 * u));
    rvec out;
    out.reserve(cs.size());
    for (double c : cs) {
        if (!(c > 0.0)) throw DomainError("c must be positive");
        const double mc = m * c, uc = u * c;
        Eigen::MatrixXcd w(np, ny);
        for (int j = 0; j < ny; ++j) {
            const double y = grid.y0 + j * grid.dy;
            const double y0 = std::sqrt(uc * uc + y * y);
            for (int k = 0; k < np; ++k) {
                const double p = fhat.time(k);
                const double om = std::sqrt(mc * mc + p * p);
                // y0 om - u m c^2 split so the large terms cancel exactly
                const double expo = (y * y / (y0 + uc)) * om + uc * (p * p / (om + mc)) - y * p;
                const double rel = mc / om * std::exp(-expo);
                const double t = a * p - b * y;
                const double nr = std::exp(-t * t);
                w(k, j) = (rel - nr) * fhat.samples[k] * (fhat.dt / (2.0 * pi));
            }
        }
        const Eigen::MatrixXcd diff = ex * w;
        out.push_back(diff.squaredNorm() * grid.dx * grid.dy);
    }
    return out;
}

}  // namespace framelab
