#include "suites.hpp"

#include "framelab/types.hpp"

namespace framelab::tools {

const std::vector<SuiteInfo>& suite_registry() {
    static const std::vector<SuiteInfo> reg = {
        {"frames", suite_frames, "finite frames, Neumann inverse, dual resolutions"},
        {"wft", suite_wft, "windowed Fourier lattice frame and reconstruction"},
        {"wavelet", suite_wavelet, "Meyer partition, discrete round trip, CWT Parseval"},
        {"analytic", suite_analytic, "analytic signal, AST, Hilbert, windowed X-ray"},
        {"coherent", suite_coherent, "canonical and Galilean coherent states"},
        {"relcs", suite_relcs, "relativistic coherent states"},
        {"spincs", suite_spincs, "spin coherent states and contraction"},
    };
    return reg;
}

Report run_verify(const std::string& name, std::uint64_t seed, const TolOverrides& tol,
                  const std::vector<std::string>& params) {
    Report rep;
    rep.suite = name;
    rep.seed = seed;
    rep.params = params;
    bool found = false;
    for (const auto& s : suite_registry()) {
        if (name != "all" && name != s.name) continue;
        found = true;
        SuiteContext ctx(s.name, seed, tol, rep.checks);
        s.run(ctx);
    }
    if (!found) throw DomainError("unknown suite " + name);
    return rep;
}

}  // namespace framelab::tools
