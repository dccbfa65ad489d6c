#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace framelab {

using cplx = std::complex<double>;
using cvec = std::vector<cplx>;
using rvec = std::vector<double>;

inline constexpr double pi = 3.14159265358979323846;
inline constexpr cplx I{0.0, 1.0};

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid arguments or grids.
class DomainError : public Error {
public:
    using Error::Error;
};

class NotAFrameError : public Error {
public:
    using Error::Error;
};

// Iterative or extrapolated quantity failed to settle. Carries the last residual.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, double residual)
        : Error(what), residual_(residual) {}
    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

}  // namespace framelab
