#pragma once

#include <string>
#include <vector>

#include "report.hpp"

namespace framelab::tools {

using SuiteFn = void (*)(SuiteContext&);

struct SuiteInfo {
    std::string name;
    SuiteFn run;
    std::string summary;
};

const std::vector<SuiteInfo>& suite_registry();

// Runs one suite, or every suite in registry order for "all". Throws on an unknown name.
Report run_verify(const std::string& name, std::uint64_t seed, const TolOverrides& tol = {},
                  const std::vector<std::string>& params = {});

void suite_frames(SuiteContext& ctx);
void suite_wft(SuiteContext& ctx);
void suite_wavelet(SuiteContext& ctx);
void suite_analytic(SuiteContext& ctx);
void suite_coherent(SuiteContext& ctx);
void suite_relcs(SuiteContext& ctx);
void suite_spincs(SuiteContext& ctx);

}  // namespace framelab::tools
