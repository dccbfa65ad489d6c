#include "framelab/spin.hpp"

#include <cmath>
#include <unsupported/Eigen/MatrixFunctions>

#include "framelab/quadrature.hpp"

namespace framelab {

namespace {

int checked_two_s(double s) {
    const double t = 2.0 * s;
    const double r = std::round(t);
    if (!(r >= 1.0) || std::abs(t - r) > 1e-12 || r > 1e6)
        throw DomainError("spin must be a positive half-integer");
    return static_cast<int>(r);
}

// sqrt((s - m)(s + m + 1)), the S+ coefficient on v_m.
double raise_coeff(double s, double m) { return std::sqrt((s - m) * (s + m + 1.0)); }

double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

int SpinRep::index_of(double m) const {
    const double k = s() - m;
    const double r = std::round(k);
    if (std::abs(k - r) > 1e-12 || r < 0 || r > two_s) throw DomainError("m out of range");
    return static_cast<int>(r);
}

Eigen::MatrixXcd SpinRep::S1() const {
    return 0.5 * (Sp + Sm).cast<cplx>();
}

Eigen::MatrixXcd SpinRep::S2() const {
    return (Sp - Sm).cast<cplx>() / (2.0 * I);
}

SpinRep build_rep(double s_in) {
    SpinRep rep;
    rep.two_s = checked_two_s(s_in);
    const int d = rep.dim();
    const double s = rep.s();
    rep.S3 = Eigen::MatrixXd::Zero(d, d);
    rep.Sp = Eigen::MatrixXd::Zero(d, d);
    for (int k = 0; k < d; ++k) {
        const double m = s - k;
        rep.S3(k, k) = m;
        if (k > 0) rep.Sp(k - 1, k) = raise_coeff(s, m);
    }
    rep.Sm = rep.Sp.transpose();
    return rep;
}

AlgebraDefect algebra_defect(const SpinRep& rep) {
    const Eigen::MatrixXd& S3 = rep.S3;
    const Eigen::MatrixXd& Sp = rep.Sp;
    const Eigen::MatrixXd& Sm = rep.Sm;
    AlgebraDefect d;
    d.raising = (S3 * Sp - Sp * S3 - Sp).cwiseAbs().maxCoeff();
    d.ladder = (Sp * Sm - Sm * Sp - 2.0 * S3).cwiseAbs().maxCoeff();
    const Eigen::MatrixXd cas = 0.5 * (Sp * Sm + Sm * Sp) + S3 * S3;
    const double s = rep.s();
    d.casimir =
        (cas - s * (s + 1.0) * Eigen::MatrixXd::Identity(rep.dim(), rep.dim())).cwiseAbs().maxCoeff();
    return d;
}

Eigen::Vector3d sphere_point(double theta, double phi) {
    return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

Eigen::VectorXcd spin_cs_vector(const SpinRep& rep, double theta, double phi) {
    const int d = rep.dim();
    Eigen::VectorXcd base = Eigen::VectorXcd::Zero(d);
    base(d - 1) = 1.0;
    const Eigen::MatrixXcd rot_y = (-I * theta * rep.S2()).exp();
    Eigen::VectorXcd h = rot_y * base;
    // S3 is diagonal, so its exponential is applied entrywise.
    for (int k = 0; k < d; ++k) h(k) *= std::exp(-I * (phi * rep.S3(k, k)));
    return h;
}

ResolutionReport sphere_resolution_check(const SpinRep& rep, int order) {
    if (order < 1) throw DomainError("quadrature order must be positive");
    const int d = rep.dim();
    const auto gl = gauss_legendre(order, -1.0, 1.0);
    const int nphi = 2 * order;
    const double dphi = 2.0 * pi / nphi;
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(d, d);
    double measure = 0.0;
    double trace = 0.0;
    for (int i = 0; i < order; ++i) {
        const double theta = std::acos(gl.x[i]);
        for (int j = 0; j < nphi; ++j) {
            const Eigen::VectorXcd h = spin_cs_vector(rep, theta, j * dphi);
            const double w = gl.w[i] * dphi;
            acc += w * h * h.adjoint();
            measure += w;
            trace += w * h.squaredNorm();
        }
    }
    ResolutionReport r;
    const double scale = (rep.two_s + 1.0) / (4.0 * pi);
    const Eigen::MatrixXcd res = scale * acc;
    r.defect = max_abs(res - Eigen::MatrixXcd::Identity(d, d));
    r.offdiag = max_abs(res - Eigen::MatrixXcd(res.diagonal().asDiagonal()));
    r.measure = measure;
    r.frame_constant = trace / d;
    return r;
}

Eigen::VectorXcd holo_cs_vector(const SpinRep& rep, cplx zeta) {
    if (!std::isfinite(zeta.real()) || !std::isfinite(zeta.imag()))
        throw DomainError("zeta must be finite");
    const int d = rep.dim();
    Eigen::VectorXcd u = Eigen::VectorXcd::Zero(d);
    u(d - 1) = 1.0;
    Eigen::VectorXcd h = u;
    const cplx zb = std::conj(zeta);
    cplx power = 1.0;
    for (int n = 1; n <= rep.two_s; ++n) {
        u = (-rep.Sp.cast<cplx>() * u) / static_cast<double>(n);
        power *= zb;
        h += power * u;
    }
    return h;
}

ResolutionReport holo_resolution_check(const SpinRep& rep, int n_radial, int n_angular) {
    if (n_radial < 1 || n_angular < 1) throw DomainError("quadrature order must be positive");
    const int d = rep.dim();
    const double s = rep.s();
    const auto gl = gauss_legendre(n_radial, 0.0, 1.0);
    const double dang = 2.0 * pi / n_angular;
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(d, d);
    double norm_int = 0.0;
    double measure = 0.0;
    for (int i = 0; i < n_radial; ++i) {
        const double rho = gl.x[i];
        const double r = rho / (1.0 - rho);
        const double jac = 1.0 / ((1.0 - rho) * (1.0 - rho));
        const double radial = gl.w[i] * jac * r;
        const double weight = std::pow(1.0 + r * r, -2.0 * s - 2.0);
        norm_int += radial / ((1.0 + r * r) * (1.0 + r * r));
        for (int j = 0; j < n_angular; ++j) {
            const cplx zeta = std::polar(r, j * dang);
            const Eigen::VectorXcd h = holo_cs_vector(rep, zeta);
            acc += (radial * dang * weight) * h * h.adjoint();
            measure += radial * dang * weight;
        }
    }
    ResolutionReport out;
    const Eigen::MatrixXcd res = ((2.0 * s + 1.0) / pi) * acc;
    out.defect = max_abs(res - Eigen::MatrixXcd::Identity(d, d));
    out.offdiag = max_abs(res - Eigen::MatrixXcd(res.diagonal().asDiagonal()));
    out.measure = measure;
    out.frame_constant = 8.0 * pi * s * norm_int / (2.0 * s + 1.0);
    return out;
}

SpinExpectations spin_expectations(const SpinRep& rep, cplx zeta) {
    const Eigen::VectorXcd h = holo_cs_vector(rep, zeta);
    const double n2 = h.squaredNorm();
    SpinExpectations e;
    e.s_plus = h.dot(rep.Sp.cast<cplx>() * h) / n2;
    e.s3 = h.dot(rep.S3.cast<cplx>() * h).real() / n2;
    e.length_sq = std::norm(e.s_plus) + e.s3 * e.s3;
    return e;
}

SpinExpectations spin_expectations_closed(double s, cplx zeta) {
    const double a = std::norm(zeta);
    SpinExpectations e;
    e.s_plus = -2.0 * s * zeta / (1.0 + a);
    e.s3 = s * (a - 1.0) / (a + 1.0);
    e.length_sq = s * s;
    return e;
}

OscillatorResult oscillator_evolve(const SpinRep& rep, cplx zeta, double t) {
    const int d = rep.dim();
    const Eigen::MatrixXcd n_minus =
        (rep.S3 + rep.s() * Eigen::MatrixXd::Identity(d, d)).cast<cplx>();
    const Eigen::MatrixXcd prop = (-I * t * n_minus).exp();
    const Eigen::VectorXcd h = holo_cs_vector(rep, zeta);
    const Eigen::VectorXcd evolved = prop * h;

    OscillatorResult r;
    r.zeta_t = std::exp(I * t) * zeta;
    const Eigen::VectorXcd target = holo_cs_vector(rep, r.zeta_t);
    const cplx alpha = target.dot(evolved) / target.squaredNorm();
    r.phase = alpha;
    r.mismatch = (evolved - alpha * target).norm() / h.norm();
    if (r.mismatch > 1e-8 || std::abs(std::abs(alpha) - 1.0) > 1e-8)
        throw Error("evolved state left the coherent family");
    return r;
}

double ContractionDefect::max() const {
    return std::max({minus.maxCoeff(), plus.maxCoeff(), k3.maxCoeff()});
}

ContractionDefect contraction_defect(double s_in, int n_max) {
    const int two_s = checked_two_s(s_in);
    const double s = 0.5 * two_s;
    if (n_max < 0 || n_max > s) throw DomainError("need 0 <= n_max <= s");
    const int d = n_max + 1;
    ContractionDefect r{Eigen::MatrixXd::Zero(d, d), Eigen::MatrixXd::Zero(d, d),
                        Eigen::MatrixXd::Zero(d, d)};
    const double root = std::sqrt(s + 1.0);
    for (int n = 0; n <= n_max; ++n) {
        const double m = n - s;
        // K- w_n lands on w_{n-1}; K+ w_n on w_{n+1}.
        if (n >= 1) {
            const double kminus = raise_coeff(s, m - 1.0) / root;
            r.minus(n - 1, n) = std::abs(kminus - std::sqrt(2.0 * n));
        }
        if (n + 1 <= n_max) {
            const double kplus = raise_coeff(s, m) / root;
            r.plus(n + 1, n) = std::abs(kplus - std::sqrt(2.0 * n + 2.0));
        }
        r.k3(n, n) = std::abs(m / (s + 1.0) + 1.0);
    }
    return r;
}

Eigen::MatrixXd nminus_limit(double s_in, int n_max) {
    const int two_s = checked_two_s(s_in);
    const double s = 0.5 * two_s;
    if (n_max < 0 || n_max > two_s) throw DomainError("need 0 <= n_max <= 2s");
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n_max + 1, n_max + 1);
    for (int n = 0; n <= n_max; ++n) out(n, n) = std::abs(((n - s) + s) - n);
    return out;
}

}  // namespace framelab
