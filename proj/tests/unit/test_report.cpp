#include <doctest.h>

#include <sstream>

#include "framelab/types.hpp"
#include "report.hpp"
#include "suites.hpp"

using namespace framelab;
using namespace framelab::tools;

TEST_CASE("suite context applies tolerance overrides") {
    std::vector<Check> sink;
    TolOverrides tol{{"demo.tight", 1e-20}, {"*", 1.0}};
    SuiteContext ctx("demo", 7, tol, sink);
    CHECK_FALSE(ctx.check("tight", 0, "", 1e-15, Compare::at_most, 1e-10));
    CHECK(ctx.check("loose", 0, "", 0.5, Compare::at_most, 1e-10));
    CHECK(ctx.check("floor", 0, "", 3.0, Compare::at_least, 2.0));
    CHECK(sink.size() == 3);
    CHECK(sink[0].tol == 1e-20);
}

TEST_CASE("per-suite generators are independent of suite order") {
    std::vector<Check> sink;
    TolOverrides tol;
    SuiteContext a("frames", 7, tol, sink), b("frames", 7, tol, sink), c("wft", 7, tol, sink);
    const auto x = a.rng().next();
    CHECK(x == b.rng().next());
    CHECK(x != c.rng().next());
}

TEST_CASE("verify frames passes and its CSV is deterministic") {
    const Report r1 = run_verify("frames", 7, {}, {"note=x"});
    const Report r2 = run_verify("frames", 7, {}, {"note=x"});
    CHECK(r1.all_pass());
    std::ostringstream a, b;
    r1.write_csv(a);
    r2.write_csv(b);
    CHECK(a.str() == b.str());
    CHECK(a.str().find("# param note=x") != std::string::npos);
    std::ostringstream t;
    r1.write_text(t);
    CHECK(t.str().find("checks passed") != std::string::npos);
}

TEST_CASE("an impossible tolerance fails with the measured value") {
    const Report r = run_verify("frames", 7, {{"frames.neumann_vs_direct", 1e-30}});
    CHECK_FALSE(r.all_pass());
    for (const auto& c : r.checks)
        if (c.id == "neumann_vs_direct") {
            CHECK_FALSE(c.pass);
            CHECK(c.value > 0.0);
        }
}

TEST_CASE("unknown suite") { CHECK_THROWS_AS(run_verify("nope", 1), DomainError); }
