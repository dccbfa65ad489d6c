#pragma once

#include "framelab/types.hpp"

namespace framelab {

// Modified Bessel function of the second kind K_nu(w), nu >= 0, Re w > 0
// (or w on the principal sheet away from the negative real axis).
cplx bessel_k(double nu, cplx w);
double bessel_k(double nu, double x);

// e^w K_nu(w); finite where K_nu itself underflows.
cplx bessel_k_scaled(double nu, cplx w);
// K_{nu}, K_{nu+1}, ..., K_{nu+count-1} at w.
cvec bessel_k_seq(double nu, cplx w, int count);

// K_{nu+1}(x) / K_nu(x) for real x > 0.
double bessel_k_ratio(double nu, double x);

}  // namespace framelab
