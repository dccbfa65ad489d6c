#include "report.hpp"

#include <cstdio>
#include <iomanip>

namespace framelab::tools {

namespace {

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6e", v);
    return buf;
}

const char* op_text(Compare op) { return op == Compare::at_most ? "<=" : ">="; }

}  // namespace

bool Report::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

void Report::write_text(std::ostream& out) const {
    size_t width = 10;
    for (const auto& c : checks) width = std::max(width, c.suite.size() + c.id.size() + 1);
    out << "framelab verify " << suite << "  seed " << seed << "\n";
    for (const auto& p : params) out << "  param " << p << "\n";
    for (const auto& c : checks) {
        out << "  " << std::left << std::setw(static_cast<int>(width)) << (c.suite + "." + c.id)
            << (c.pass ? "  PASS  " : "  FAIL  ") << std::setw(13) << sci(c.value) << " "
            << op_text(c.op) << " " << std::setw(13) << sci(c.tol)
            << (c.criterion ? "  [C" + std::to_string(c.criterion) + "]" : "      ") << "  "
            << std::fixed << std::setprecision(3) << c.seconds << "s  " << c.title << "\n";
        out << std::defaultfloat;
    }
    size_t failed = 0;
    for (const auto& c : checks) failed += c.pass ? 0 : 1;
    out << "  " << checks.size() - failed << "/" << checks.size() << " checks passed\n";
}

void Report::write_csv(std::ostream& out) const {
    out << "# framelab verify suite=" << suite << " seed=" << seed << "\n";
    for (const auto& p : params) out << "# param " << p << "\n";
    out << "suite,id,criterion,value,op,tol,pass,title\n";
    for (const auto& c : checks) {
        char value[32], tol[32];
        std::snprintf(value, sizeof value, "%.12e", c.value);
        std::snprintf(tol, sizeof tol, "%.6e", c.tol);
        out << c.suite << "," << c.id << "," << c.criterion << "," << value << "," << op_text(c.op)
            << "," << tol << "," << (c.pass ? 1 : 0) << ",\"" << c.title << "\"\n";
    }
}

SuiteContext::SuiteContext(std::string suite, std::uint64_t seed, const TolOverrides& tol,
                           std::vector<Check>& sink)
    : suite_(std::move(suite)),
      rng_(seed ^ fnv1a(suite_)),
      tol_(tol),
      sink_(sink),
      last_(std::chrono::steady_clock::now()) {}

bool SuiteContext::check(const std::string& id, int criterion, const std::string& title,
                         double value, Compare op, double tol) {
    if (auto it = tol_.find(suite_ + "." + id); it != tol_.end())
        tol = it->second;
    else if (auto all = tol_.find("*"); all != tol_.end() && op == Compare::at_most)
        tol = all->second;
    const auto now = std::chrono::steady_clock::now();
    Check c;
    c.suite = suite_;
    c.id = id;
    c.criterion = criterion;
    c.title = title;
    c.value = value;
    c.op = op;
    c.tol = tol;
    c.pass = op == Compare::at_most ? (value <= tol) : (value >= tol);
    c.seconds = std::chrono::duration<double>(now - last_).count();
    last_ = now;
    sink_.push_back(std::move(c));
    return sink_.back().pass;
}

}  // namespace framelab::tools
