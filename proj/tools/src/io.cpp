#include "io.hpp"

#include <array>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <set>
#include <algorithm>
#include <sstream>

namespace framelab::tools {

namespace {

constexpr char kMagic[4] = {'F', 'L', 'B', '1'};

Format resolve(const std::string& path, Format f) {
    if (f != Format::automatic) return f;
    const auto dot = path.rfind('.');
    if (dot != std::string::npos) {
        const std::string ext = path.substr(dot + 1);
        if (ext == "raw64" || ext == "bin" || ext == "flb") return Format::raw64;
    }
    return Format::csv;
}

bool parse_number(std::string_view s, double& out) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    if (s.empty()) return false;
    if (s.front() == '+') s.remove_prefix(1);
    const auto r = std::from_chars(s.data(), s.data() + s.size(), out);
    return r.ec == std::errc() && r.ptr == s.data() + s.size();
}

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    size_t start = 0;
    while (true) {
        const auto pos = line.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(line.substr(start));
            break;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return out;
}

std::string line_error(size_t line, const std::string& what) {
    return "line " + std::to_string(line) + ": " + what;
}

// "# grid shape=4x5 origin=a,b spacing=c,d"
bool parse_grid_comment(const std::string& line, std::vector<int>& shape, rvec& origin,
                        rvec& spacing) {
    if (line.rfind("# grid ", 0) != 0) return false;
    std::istringstream in(line.substr(7));
    std::string tok;
    while (in >> tok) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos) throw IoError("malformed grid comment");
        const std::string key = tok.substr(0, eq);
        const std::string_view val(tok.c_str() + eq + 1, tok.size() - eq - 1);
        if (key == "shape") {
            for (auto part : split(val, 'x')) {
                double d = 0.0;
                if (!parse_number(part, d) || d < 1 || d != std::floor(d))
                    throw IoError("malformed grid shape");
                shape.push_back(static_cast<int>(d));
            }
        } else {
            rvec& dst = key == "origin" ? origin : spacing;
            if (key != "origin" && key != "spacing") throw IoError("unknown grid key " + key);
            for (auto part : split(val, ',')) {
                double d = 0.0;
                if (!parse_number(part, d)) throw IoError("malformed grid " + key);
                dst.push_back(d);
            }
        }
    }
    return true;
}

FieldSample read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    std::vector<int> shape;
    rvec origin, spacing;
    std::vector<rvec> rows;
    std::string line;
    size_t lineno = 0;
    size_t cols = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            if (rows.empty()) parse_grid_comment(line, shape, origin, spacing);
            continue;
        }
        const auto fields = split(line, ',');
        rvec vals(fields.size());
        bool numeric = true;
        for (size_t k = 0; k < fields.size(); ++k)
            if (!parse_number(fields[k], vals[k])) numeric = false;
        if (!numeric) {
            if (rows.empty() && !header_seen) {
                header_seen = true;
                cols = fields.size();
                continue;
            }
            throw IoError(line_error(lineno, "non-numeric field"));
        }
        if (cols == 0) cols = fields.size();
        if (fields.size() != cols)
            throw IoError(line_error(lineno, "expected " + std::to_string(cols) + " columns, got " +
                                               std::to_string(fields.size())));
        rows.push_back(std::move(vals));
    }
    if (rows.empty()) throw IoError("no samples");
    if (cols < 3 || cols > 5) throw IoError("expected 3 to 5 columns (coordinates, re, im)");
    const int ndim = static_cast<int>(cols) - 2;

    if (shape.empty()) {
        // Infer the grid from the distinct coordinates in order of appearance.
        for (int ax = 0; ax < ndim; ++ax) {
            std::set<double> seen;
            for (const auto& r : rows) seen.insert(r[ax]);
            const double lo = *seen.begin(), hi = *seen.rbegin();
            shape.push_back(static_cast<int>(seen.size()));
            origin.push_back(lo);
            spacing.push_back(seen.size() > 1 ? (hi - lo) / static_cast<double>(seen.size() - 1)
                                              : 1.0);
        }
    }
    if (static_cast<int>(shape.size()) != ndim || origin.size() != shape.size() ||
        spacing.size() != shape.size())
        throw IoError("grid comment does not match the column count");

    FieldSample f(shape, origin, spacing);
    if (f.count() != rows.size())
        throw IoError("rows do not form a full grid (" + std::to_string(rows.size()) + " rows, " +
                    std::to_string(f.count()) + " expected)");
    for (size_t k = 0; k < rows.size(); ++k) {
        const rvec p = f.point(k);
        for (int ax = 0; ax < ndim; ++ax) {
            const double tol = 1e-9 * std::max(std::abs(spacing[ax]), std::abs(p[ax]));
            if (std::abs(rows[k][ax] - p[ax]) > tol)
                throw IoError("row " + std::to_string(k + 1) +
                            ": coordinates are not on a uniform row-major grid");
        }
        f.values[k] = cplx(rows[k][ndim], rows[k][ndim + 1]);
    }
    return f;
}

template <class T>
T to_le(T v) {
    if constexpr (std::endian::native == std::endian::big) {
        std::array<unsigned char, sizeof(T)> b;
        std::memcpy(b.data(), &v, sizeof(T));
        std::reverse(b.begin(), b.end());
        std::memcpy(&v, b.data(), sizeof(T));
    }
    return v;
}

template <class T>
void put(std::ostream& out, T v) {
    v = to_le(v);
    out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <class T>
T get(std::istream& in) {
    T v{};
    in.read(reinterpret_cast<char*>(&v), sizeof(T));
    if (!in) throw IoError("truncated raw64 file");
    return to_le(v);
}

FieldSample read_raw(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    char magic[4];
    in.read(magic, 4);
    if (in.gcount() == 0) throw IoError("no samples");
    if (in.gcount() != 4 || std::memcmp(magic, kMagic, 4) != 0) throw IoError("bad magic (expected FLB1)");
    const auto ndim = get<std::uint32_t>(in);
    if (ndim < 1 || ndim > 3) throw IoError("raw64 header: ndim must be 1, 2 or 3");
    std::vector<int> shape;
    for (int k = 0; k < 3; ++k) {
        const auto d = get<std::uint32_t>(in);
        if (k < static_cast<int>(ndim)) {
            if (d == 0) throw IoError("no samples");
            shape.push_back(static_cast<int>(d));
        }
    }
    in.ignore(12);
    rvec origin, spacing;
    for (std::uint32_t k = 0; k < ndim; ++k) {
        origin.push_back(get<double>(in));
        spacing.push_back(get<double>(in));
    }
    FieldSample f(shape, origin, spacing);
    for (auto& v : f.values) {
        const double re = get<double>(in);
        const double im = get<double>(in);
        v = cplx(re, im);
    }
    return f;
}

void write_raw(const std::string& path, const FieldSample& f) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path);
    out.write(kMagic, 4);
    put<std::uint32_t>(out, static_cast<std::uint32_t>(f.ndim()));
    for (int k = 0; k < 3; ++k)
        put<std::uint32_t>(out, k < f.ndim() ? static_cast<std::uint32_t>(f.shape[k]) : 0u);
    const char pad[12] = {};
    out.write(pad, 12);
    for (int k = 0; k < f.ndim(); ++k) {
        put<double>(out, f.origin[k]);
        put<double>(out, f.spacing[k]);
    }
    for (const auto& v : f.values) {
        put<double>(out, v.real());
        put<double>(out, v.imag());
    }
    if (!out) throw IoError("write failed: " + path);
}

void write_csv(const std::string& path, const FieldSample& f) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    out << "# grid shape=";
    for (int k = 0; k < f.ndim(); ++k) out << (k ? "x" : "") << f.shape[k];
    out << " origin=";
    for (int k = 0; k < f.ndim(); ++k) out << (k ? "," : "") << format_double(f.origin[k]);
    out << " spacing=";
    for (int k = 0; k < f.ndim(); ++k) out << (k ? "," : "") << format_double(f.spacing[k]);
    out << "\n";
    if (f.ndim() == 1) {
        out << "t,re,im\n";
    } else {
        for (int k = 0; k < f.ndim(); ++k) out << "x" << (k + 1) << ",";
        out << "re,im\n";
    }
    for (size_t k = 0; k < f.count(); ++k) {
        const rvec p = f.point(k);
        for (double c : p) out << format_double(c) << ",";
        out << format_double(f.values[k].real()) << "," << format_double(f.values[k].imag())
            << "\n";
    }
    if (!out) throw IoError("write failed: " + path);
}

}  // namespace

Format parse_format(const std::string& name) {
    if (name.empty() || name == "auto") return Format::automatic;
    if (name == "csv") return Format::csv;
    if (name == "raw64") return Format::raw64;
    throw IoError("unknown format " + name);
}

std::string format_double(double v) {
    char buf[64];
    const auto r = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, r.ptr);
}

FieldSample read_signal(const std::string& path, Format format) {
    return resolve(path, format) == Format::raw64 ? read_raw(path) : read_csv(path);
}

void write_signal(const std::string& path, const FieldSample& f, Format format) {
    if (f.count() == 0) throw IoError("no samples");
    for (const auto& v : f.values)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) throw IoError("non-finite output");
    if (resolve(path, format) == Format::raw64)
        write_raw(path, f);
    else
        write_csv(path, f);
}

SampledSignal to_sampled(const FieldSample& f) {
    if (f.ndim() != 1) throw IoError("expected a 1-D signal");
    return SampledSignal(f.values, f.origin[0], f.spacing[0]);
}

FieldSample to_field(const SampledSignal& s) {
    FieldSample f({s.size()}, {s.t0}, {s.dt});
    f.values = s.samples;
    return f;
}

void emit_plot_data(const std::string& path, const PlotGrid& g) {
    if (g.x.empty() || g.y.empty() || g.values.empty()) throw IoError("empty grid");
    if (g.values.size() != g.x.size() * g.y.size()) throw IoError("grid is not rectangular");
    for (double v : g.values)
        if (!std::isfinite(v)) throw IoError("non-finite output");
    {
        std::ofstream out(path);
        if (!out) throw IoError("cannot write " + path);
        for (size_t i = 0; i < g.y.size(); ++i) {
            for (size_t j = 0; j < g.x.size(); ++j)
                out << (j ? "," : "") << format_double(g.values[i * g.x.size() + j]);
            out << "\n";
        }
        if (!out) throw IoError("write failed: " + path);
    }
    std::ofstream meta(path + ".meta");
    if (!meta) throw IoError("cannot write " + path + ".meta");
    meta << "rows " << g.y_name << " " << g.y.size() << " " << format_double(g.y.front()) << " "
         << format_double(g.y.back()) << "\n";
    meta << "cols " << g.x_name << " " << g.x.size() << " " << format_double(g.x.front()) << " "
         << format_double(g.x.back()) << "\n";
    meta << "values " << g.value_name << "\n";
}

}  // namespace framelab::tools
