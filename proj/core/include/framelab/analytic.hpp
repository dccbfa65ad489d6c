#pragma once

#include <functional>

#include "framelab/signal.hpp"

namespace framelab {

// Unit step with theta(0) = 1/2.
inline double step(double u) { return u > 0.0 ? 1.0 : (u < 0.0 ? 0.0 : 0.5); }
// Exponential step theta(-Re zeta) e^zeta.
cplx step_exp(cplx zeta);

// f(z) at z = x - iy for 1-D samples treated as one period of a trigonometric
// polynomial: sum_k theta(y nu_k) c_k e^{-2 pi i nu_k z}. y > 0 gives f_+, y < 0 gives f_-,
// y = 0 gives f(x)/2.
cplx analytic_signal_1d(const FieldSample& f, cplx z);

enum class AstMethod { fourier, line, periodic };

struct AstOptions {
    int nodes_parallel = 32;    // Gauss-Legendre nodes along y in the half-space integral
    int nodes_transverse = 32;  // per transverse axis
    double band = 0.0;          // |nu| cutoff; 0 = estimate from the grid spectrum
    double decay_tol = 1e-8;    // max boundary |f| / max |f| accepted by the line method
    double line_tol = 1e-13;
};

// f(x - iy) = int dnu theta(y.nu) e^{-2 pi i nu.(x - iy)} fhat(nu), or equivalently
// (1/2 pi i) int dtau f(x - tau y) / (tau - i). Off-grid values are multilinear
// interpolations and vanish outside the grid.
cplx ast_eval(const FieldSample& f, const rvec& x, const rvec& y, AstMethod method,
              const AstOptions& opt = {});

// Largest |nu| where the grid spectrum exceeds rel * max.
double effective_band(const FieldSample& f, double rel = 1e-10);

struct HilbertOptions {
    AstMethod method = AstMethod::line;
    AstOptions ast;
    double conv_tol = 1e-4;
};

// H_y f(x) = lim -i [f(x + i eps y) - f(x - i eps y)], Neville-extrapolated over
// eps, eps/2, eps/4, eps/8.
cplx directional_hilbert(const FieldSample& f, const rvec& x, const rvec& y, double eps,
                         const HilbertOptions& opt = {});

using ComplexField = std::function<cplx(const rvec& x, const rvec& y)>;

struct DbarDefect {
    double directional = 0.0;  // |y^mu dbar_mu F|
    rvec components;           // |dbar_mu F|, 2 dbar_mu = d/dx^mu - i d/dy^mu
};

// Central differences with step h around (x, y).
DbarDefect dbar_defect(const ComplexField& F, const rvec& x, const rvec& y, double h);

}  // namespace framelab
