#pragma once

#include <chrono>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "framelab/rng.hpp"

namespace framelab::tools {

enum class Compare { at_most, at_least };

struct Check {
    std::string suite;
    std::string id;
    int criterion = 0;  // acceptance criterion number, 0 when untagged
    std::string title;
    double value = 0.0;
    Compare op = Compare::at_most;
    double tol = 0.0;
    bool pass = false;
    double seconds = 0.0;
};

struct Report {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<std::string> params;
    std::vector<Check> checks;

    bool all_pass() const;
    // Aligned table including runtimes.
    void write_text(std::ostream& out) const;
    // Machine CSV; no runtimes, so identical inputs give identical bytes.
    void write_csv(std::ostream& out) const;
};

// Per-check tolerance overrides: id -> tol; the key "*" applies to every check.
using TolOverrides = std::map<std::string, double>;

class SuiteContext {
public:
    SuiteContext(std::string suite, std::uint64_t seed, const TolOverrides& tol,
                 std::vector<Check>& sink);

    Rng& rng() { return rng_; }
    const std::string& suite() const { return suite_; }

    // Records value against tol (after overrides); returns pass.
    bool check(const std::string& id, int criterion, const std::string& title, double value,
               Compare op, double tol);
    bool flag(const std::string& id, int criterion, const std::string& title, bool ok) {
        return check(id, criterion, title, ok ? 1.0 : 0.0, Compare::at_least, 1.0);
    }

private:
    std::string suite_;
    Rng rng_;
    const TolOverrides& tol_;
    std::vector<Check>& sink_;
    std::chrono::steady_clock::time_point last_;
};

}  // namespace framelab::tools
