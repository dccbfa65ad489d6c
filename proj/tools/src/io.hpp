#pragma once

#include <string>
#include <vector>

#include "framelab/signal.hpp"
#include "framelab/types.hpp"

namespace framelab::tools {

// Malformed or unreadable input, unwritable output.
class IoError : public Error {
public:
    using Error::Error;
};

enum class Format { automatic, csv, raw64 };

Format parse_format(const std::string& name);

// CSV: columns t,re,im (1-D) or x1..xn,re,im with the last axis fastest. A leading
// "# grid shape=... origin=... spacing=..." comment pins the grid exactly.
// raw64: 32-byte header ("FLB1", u32 ndim, u32 dims[3], 12 reserved bytes), then ndim
// (origin, spacing) float64 pairs, then interleaved re/im float64, all little-endian.
FieldSample read_signal(const std::string& path, Format format = Format::automatic);
void write_signal(const std::string& path, const FieldSample& f,
                  Format format = Format::automatic);

SampledSignal to_sampled(const FieldSample& f);
FieldSample to_field(const SampledSignal& s);

// Real matrix over (y, x) axes; values row-major with rows along y.
struct PlotGrid {
    std::string x_name = "x";
    std::string y_name = "y";
    std::string value_name = "value";
    rvec x;
    rvec y;
    rvec values;
};

// Writes the CSV matrix to `path` and axes to `path.meta`.
void emit_plot_data(const std::string& path, const PlotGrid& grid);

// Shortest round-trip decimal form.
std::string format_double(double v);

}  // namespace framelab::tools
