#include "framelab/fourier.hpp"

#include <fftw3.h>

#include <mutex>

namespace framelab {

namespace {
std::mutex plan_mutex;  // FFTW planner is not thread-safe
}

cvec dftn(const cvec& in, const std::vector<int>& dims, int sign) {
    size_t total = 1;
    for (int d : dims) {
        if (d < 1) throw DomainError("dft: dimensions must be positive");
        total *= static_cast<size_t>(d);
    }
    if (total != in.size()) throw DomainError("dft: size does not match dimensions");
    cvec out(total);
    cvec work(in);
    auto* src = reinterpret_cast<fftw_complex*>(work.data());
    auto* dst = reinterpret_cast<fftw_complex*>(out.data());
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(plan_mutex);
        plan = fftw_plan_dft(static_cast<int>(dims.size()), dims.data(), src, dst,
                             sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD, FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(plan_mutex);
        fftw_destroy_plan(plan);
    }
    return out;
}

cvec dft(const cvec& in, int sign) { return dftn(in, {static_cast<int>(in.size())}, sign); }

}  // namespace framelab
