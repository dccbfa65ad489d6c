#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "io.hpp"

using namespace framelab;
using namespace framelab::tools;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "framelab_io_test";
    fs::create_directories(dir);
    return dir / name;
}

void write_text(const fs::path& p, const std::string& s) {
    std::ofstream(p, std::ios::binary) << s;
}

std::string read_text(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string error_of(const fs::path& p, Format fmt = Format::automatic) {
    try {
        read_signal(p.string(), fmt);
    } catch (const IoError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("three-sample CSV round-trips bit-exactly") {
    FieldSample f({3}, {0.1}, {0.3});
    f.values = {cplx(1.0 / 3.0, -2e-300), cplx(M_PI, 0.0), cplx(-0.0, 1e300)};
    const fs::path p = scratch("three.csv");
    write_signal(p.string(), f);
    const FieldSample g = read_signal(p.string());
    CHECK(g.shape == f.shape);
    CHECK(g.origin == f.origin);
    CHECK(g.spacing == f.spacing);
    CHECK(g.values == f.values);
    // Writing again gives identical bytes.
    const fs::path q = scratch("three_again.csv");
    write_signal(q.string(), g);
    CHECK(read_text(p) == read_text(q));
}

TEST_CASE("2-D fields round-trip through CSV and raw64") {
    FieldSample f({3, 4}, {-1.0, 2.0}, {0.5, 0.25});
    for (size_t k = 0; k < f.count(); ++k) f.values[k] = cplx(std::sin(k * 0.7), std::cos(k * 1.1));
    for (const char* name : {"field.csv", "field.raw64"}) {
        const fs::path p = scratch(name);
        write_signal(p.string(), f);
        const FieldSample g = read_signal(p.string());
        CHECK(g.shape == f.shape);
        CHECK(g.origin == f.origin);
        CHECK(g.spacing == f.spacing);
        CHECK(g.values == f.values);
    }
}

TEST_CASE("CSV without the grid comment infers the grid") {
    const fs::path p = scratch("plain.csv");
    write_text(p, "x1,x2,re,im\n0,0,1,0\n0,0.5,2,0\n1,0,3,0\n1,0.5,4,-1\n");
    const FieldSample g = read_signal(p.string());
    CHECK(g.shape == std::vector<int>{2, 2});
    CHECK(g.spacing[1] == 0.5);
    CHECK(g.values[3] == cplx(4, -1));
}

TEST_CASE("malformed input reports what and where") {
    const fs::path empty = scratch("empty.csv");
    write_text(empty, "");
    CHECK(error_of(empty).find("no samples") != std::string::npos);

    const fs::path header_only = scratch("header.csv");
    write_text(header_only, "t,re,im\n");
    CHECK(error_of(header_only).find("no samples") != std::string::npos);

    const fs::path short_row = scratch("short.csv");
    write_text(short_row, "t,re,im\n0,1,0\n0.1,2\n");
    CHECK(error_of(short_row).find("line 3") != std::string::npos);

    const fs::path bad_num = scratch("badnum.csv");
    write_text(bad_num, "t,re,im\n0,1,0\n0.1,abc,0\n");
    CHECK(error_of(bad_num).find("line 3") != std::string::npos);

    const fs::path magic = scratch("magic.raw64");
    write_text(magic, std::string("NOPE") + std::string(60, '\0'));
    CHECK(error_of(magic).find("magic") != std::string::npos);

    const fs::path truncated = scratch("trunc.raw64");
    FieldSample f({4}, {0.0}, {1.0});
    write_signal(truncated.string(), f);
    const std::string bytes = read_text(truncated);
    write_text(truncated, bytes.substr(0, bytes.size() - 8));
    CHECK(error_of(truncated).find("truncated") != std::string::npos);

    CHECK_THROWS_AS(read_signal(scratch("missing.csv").string()), IoError);
}

TEST_CASE("writers refuse empty and non-finite data") {
    FieldSample f({2}, {0.0}, {1.0});
    f.values[1] = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_WITH_AS(write_signal(scratch("nan.csv").string(), f), "non-finite output", IoError);

    PlotGrid pg{"x", "y", "v", {0, 1}, {0, 1}, {1, 2, 3, std::numeric_limits<double>::infinity()}};
    CHECK_THROWS_WITH_AS(emit_plot_data(scratch("nan_plot.csv").string(), pg), "non-finite output", IoError);
    PlotGrid empty;
    CHECK_THROWS_WITH_AS(emit_plot_data(scratch("empty_plot.csv").string(), empty), "empty grid", IoError);
    PlotGrid ragged{"x", "y", "v", {0, 1}, {0, 1}, {1, 2, 3}};
    CHECK_THROWS_AS(emit_plot_data(scratch("ragged.csv").string(), ragged), IoError);
}

TEST_CASE("plot data writes a matrix and a sidecar") {
    PlotGrid pg{"shift", "frequency", "magnitude", {0, 1, 2}, {-1, 1}, {1, 2, 3, 4, 5, 6}};
    const fs::path p = scratch("spec.csv");
    emit_plot_data(p.string(), pg);
    CHECK(fs::exists(p));
    const std::string meta = read_text(p.string() + ".meta");
    CHECK(meta.find("shift") != std::string::npos);
    CHECK(meta.find("frequency") != std::string::npos);
}

TEST_CASE("signal conversions") {
    const SampledSignal s(cvec{1.0, 2.0, 3.0}, -1.0, 0.5);
    const FieldSample f = to_field(s);
    CHECK(f.shape == std::vector<int>{3});
    const SampledSignal back = to_sampled(f);
    CHECK(back.samples == s.samples);
    CHECK(back.t0 == s.t0);
    CHECK(format_double(0.1) == "0.1");
    CHECK(parse_format("raw64") == Format::raw64);
}
