#include <CLI11.hpp>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "framelab/analytic.hpp"
#include "framelab/frame.hpp"
#include "framelab/relativistic.hpp"
#include "framelab/spin.hpp"
#include "framelab/wavelet.hpp"
#include "framelab/wft.hpp"
#include "framelab/xray.hpp"
#include "io.hpp"
#include "report.hpp"
#include "suites.hpp"

using namespace framelab;
using namespace framelab::tools;

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string in;
    std::string out;
    std::string format = "auto";
    std::uint64_t seed = 1;
    std::vector<std::string> tol;
    std::vector<std::string> params;
};

class Params {
public:
    explicit Params(const std::vector<std::string>& kv) {
        for (const auto& s : kv) {
            const auto eq = s.find('=');
            if (eq == std::string::npos || eq == 0) throw UsageError("bad --params entry: " + s);
            map_[s.substr(0, eq)] = s.substr(eq + 1);
        }
    }

    double num(const std::string& key, double fallback) const {
        auto it = map_.find(key);
        if (it == map_.end()) return fallback;
        return to_double(key, it->second);
    }
    int integer(const std::string& key, int fallback) const {
        const double v = num(key, fallback);
        if (v != std::floor(v)) throw UsageError(key + " must be an integer");
        return static_cast<int>(v);
    }
    std::string str(const std::string& key, const std::string& fallback) const {
        auto it = map_.find(key);
        return it == map_.end() ? fallback : it->second;
    }
    rvec list(const std::string& key, const rvec& fallback) const {
        auto it = map_.find(key);
        if (it == map_.end()) return fallback;
        rvec out;
        std::stringstream ss(it->second);
        std::string tok;
        while (std::getline(ss, tok, ',')) out.push_back(to_double(key, tok));
        return out;
    }

private:
    static double to_double(const std::string& key, const std::string& v) {
        try {
            size_t used = 0;
            const double d = std::stod(v, &used);
            if (used != v.size()) throw std::invalid_argument(v);
            return d;
        } catch (const std::exception&) {
            throw UsageError("parameter " + key + ": not a number: " + v);
        }
    }
    std::map<std::string, std::string> map_;
};

TolOverrides parse_tol(const std::vector<std::string>& items) {
    TolOverrides out;
    for (const auto& s : items) {
        const auto eq = s.find('=');
        if (eq == std::string::npos) throw UsageError("bad --tol entry (want id=value): " + s);
        double v = 0.0;
        try {
            v = std::stod(s.substr(eq + 1));
        } catch (const std::exception&) {
            throw UsageError("bad --tol value: " + s);
        }
        if (!(v > 0.0)) throw UsageError("tolerances must be positive: " + s);
        out[s.substr(0, eq)] = v;
    }
    return out;
}

void print_header(const std::string& cmd, const Options& o) {
    std::cout << "# framelab " << cmd << "\n";
    for (const auto& p : o.params) std::cout << "# param " << p << "\n";
}

FieldSample require_input(const Options& o) {
    if (o.in.empty()) throw UsageError("--in is required");
    return read_signal(o.in, parse_format(o.format));
}

WaveletSpec wavelet_by_name(const std::string& name) {
    if (name == "mexican_hat") return mexican_hat();
    if (name == "gaussian_derivative") return gaussian_derivative();
    if (name == "meyer") return meyer_wavelet(build_meyer_pair(2, 1, -1));
    throw UsageError("unknown wavelet " + name);
}

// Spectrogram |ftilde(mF, nT)| on the full lattice.
int cmd_wft(const Options& o) {
    const Params p(o.params);
    const SampledSignal f = to_sampled(require_input(o));
    const double tau = p.num("tau", 64 * f.dt);
    const double T = p.num("T", tau / 2);
    const std::string window = p.str("window", "bump");
    const WindowSpec h = window == "rect" ? WindowSpec::rectangular(tau, f.dt)
                                          : WindowSpec::smooth_bump(tau, f.dt);
    const WFTLattice lat = full_lattice(f, h, T);
    const LatticeCoefficients c = wft_lattice_analyze(f, h, lat);
    const LatticeWeight g = lattice_weight(h, T, f.t0, f.dt, f.size());
    print_header("wft", o);
    std::cout << "lattice T=" << lat.T << " F=" << lat.F << " m=" << lat.m_lo << ".." << lat.m_hi
              << " n=" << lat.n_lo << ".." << lat.n_hi << "\n";
    std::cout << "bounds A=" << g.A << " B=" << g.B << (g.valid() ? "" : "  (not a frame)") << "\n";
    if (g.valid()) {
        const SampledSignal r = wft_reconstruct(c, h, g);
        std::cout << "reconstruction_error=" << relative_l2_error(r, f) << "\n";
    }
    if (!o.out.empty()) {
        PlotGrid pg{"shift", "frequency", "magnitude", {}, {}, {}};
        for (int n = lat.n_lo; n <= lat.n_hi; ++n) pg.x.push_back(n * lat.T);
        for (int m = lat.m_lo; m <= lat.m_hi; ++m) pg.y.push_back(m * lat.F);
        for (int m = lat.m_lo; m <= lat.m_hi; ++m)
            for (int n = lat.n_lo; n <= lat.n_hi; ++n) pg.values.push_back(std::abs(c.at(m, n)));
        emit_plot_data(o.out, pg);
    }
    return g.valid() ? kOk : kFail;
}

// Scalogram |ftilde(a, s)| on a log-spaced positive scale grid.
int cmd_cwt(const Options& o) {
    const Params p(o.params);
    const SampledSignal f = to_sampled(require_input(o));
    const WaveletSpec h = wavelet_by_name(p.str("wavelet", "mexican_hat"));
    const ScaleGrid sc = log_scale_grid(p.num("a_min", 0.05), p.num("a_max", 4.0),
                                        p.num("dln_a", 0.1), false);
    const double ds = p.num("ds", 0.1);
    rvec shifts;
    for (double s = p.num("s_min", f.t0); s <= p.num("s_max", f.t_end()) + 1e-12; s += ds)
        shifts.push_back(s);
    const CWTGrid c = cwt_analyze(f, h, sc.a, shifts);
    const Admissibility ad = admissibility_constant(h);
    print_header("cwt", o);
    std::cout << "wavelet=" << h.name << " c_h=" << format_double(ad.c_h)
              << " scales=" << sc.a.size() << " shifts=" << shifts.size() << "\n";
    if (ad.admissible) {
        const double fe = l2_norm(f) * l2_norm(f);
        std::cout << "energy ratio=" << cwt_energy(c, sc, ds, ad.c_h, true) / fe << "\n";
    }
    if (!o.out.empty()) {
        PlotGrid pg{"shift", "scale", "magnitude", shifts, sc.a, {}};
        for (const auto& v : c.values) pg.values.push_back(std::abs(v));
        emit_plot_data(o.out, pg);
    }
    return kOk;
}

AstMethod method_by_name(const std::string& name) {
    if (name == "fourier") return AstMethod::fourier;
    if (name == "line") return AstMethod::line;
    if (name == "periodic") return AstMethod::periodic;
    throw UsageError("unknown method " + name);
}

int cmd_ast(const Options& o) {
    const Params p(o.params);
    const FieldSample f = require_input(o);
    const rvec x = p.list("x", rvec(f.ndim(), 0.0));
    const rvec y = p.list("y", rvec(f.ndim(), 0.0));
    if (static_cast<int>(x.size()) != f.ndim() || static_cast<int>(y.size()) != f.ndim())
        throw UsageError("x and y need one component per axis");
    const cplx v = ast_eval(f, x, y, method_by_name(p.str("method", "line")));
    print_header("ast", o);
    std::cout << "re=" << format_double(v.real()) << " im=" << format_double(v.imag()) << "\n";
    return kOk;
}

// H_y f at every grid point (1-D) or at x.
int cmd_hilbert(const Options& o) {
    const Params p(o.params);
    const FieldSample f = require_input(o);
    HilbertOptions ho;
    ho.method = method_by_name(p.str("method", f.ndim() == 1 ? "periodic" : "line"));
    const double eps = p.num("eps", 0.02);
    const rvec y = p.list("y", rvec(f.ndim(), 0.0));
    rvec ydir = y;
    if (f.ndim() == 1 && ydir[0] == 0.0) ydir[0] = 1.0;
    print_header("hilbert", o);
    if (!o.out.empty()) {
        FieldSample out(f.shape, f.origin, f.spacing);
        for (size_t k = 0; k < f.count(); ++k)
            out.values[k] = directional_hilbert(f, f.point(k), ydir, eps, ho);
        write_signal(o.out, out, parse_format(o.format));
        std::cout << "wrote " << out.count() << " samples\n";
    } else {
        const rvec x = p.list("x", rvec(f.ndim(), 0.0));
        const cplx v = directional_hilbert(f, x, ydir, eps, ho);
        std::cout << "re=" << format_double(v.real()) << " im=" << format_double(v.imag()) << "\n";
    }
    return kOk;
}

// f_h(., y) on the input grid for one direction y.
int cmd_xray(const Options& o) {
    const Params p(o.params);
    const FieldSample f = require_input(o);
    const WaveletSpec h = wavelet_by_name(p.str("wavelet", "mexican_hat"));
    const rvec y = p.list("y", rvec(f.ndim(), 1.0));
    if (static_cast<int>(y.size()) != f.ndim()) throw UsageError("y needs one component per axis");
    print_header("xray", o);
    const XrayAdmissibility xa = xray_admissibility(h.freq, f.ndim());
    std::cout << "c_h=" << format_double(xa.c_h) << " N=" << format_double(xa.N) << "\n";
    if (!o.out.empty()) {
        DirectionGrid dirs{{y}, {1.0}};
        const FieldSample c = xray_coefficients(f, h, dirs).front();
        write_signal(o.out, c, parse_format(o.format));
        std::cout << "wrote " << c.count() << " samples\n";
    } else {
        const rvec x = p.list("x", rvec(f.ndim(), 0.0));
        const cplx v = windowed_xray(f, h.time, x, y);
        std::cout << "re=" << format_double(v.real()) << " im=" << format_double(v.imag()) << "\n";
    }
    return kOk;
}

int cmd_frames(const Options& o) {
    const Params p(o.params);
    Rng rng(o.seed);
    const auto make = [&]() -> FrameSystem {
        if (!o.in.empty()) {
            std::ifstream in(o.in);
            if (!in) throw UsageError("cannot read " + o.in);
            std::stringstream ss;
            ss << in.rdbuf();
            return FrameSystem::from_text(ss.str());
        }
        const std::string kind = p.str("kind", "random");
        if (kind == "mercedes_benz") return mercedes_benz();
        if (kind == "orthonormal") return orthonormal_basis(p.integer("d", 4));
        if (kind != "random") throw UsageError("unknown frame kind " + kind);
        return random_frame(rng, p.integer("d", 8), p.integer("m", 20), true,
                            p.integer("random_weights", 0) != 0);
    };
    const FrameSystem fr = make();
    print_header("frames", o);
    const FrameBounds raw = fr.raw_bounds();
    std::cout << "dim=" << fr.dim() << " size=" << fr.size() << " A=" << format_double(raw.A)
              << " B=" << format_double(raw.B) << "\n";
    if (!fr.is_frame()) {
        std::cout << "not a frame\n";
        return kFail;
    }
    const NeumannResult nr = neumann_inverse(fr);
    std::cout << "neumann terms=" << nr.terms_used << " residual=" << format_double(nr.residual)
              << " vs_direct=" << format_double((nr.inverse - fr.inverse()).norm()) << "\n";
    if (!o.out.empty()) {
        std::ofstream out(o.out);
        if (!out) throw UsageError("cannot write " + o.out);
        out << reciprocal_frame(fr).to_text();
    }
    return kOk;
}

int cmd_relcs(const std::string& what, const Options& o) {
    const Params p(o.params);
    const MassShellParams mp{p.num("m", 1.0), p.integer("s", 1), p.num("c", 1.0)};
    mp.validate();
    print_header("relcs " + what, o);
    const double lambda = p.num("lambda", 1.0);
    if (what == "norm") {
        std::cout << "lambda,closed,quadrature,effective_mass\n";
        for (double lam : p.list("lambdas", {lambda}))
            std::cout << format_double(lam) << "," << format_double(ez_norm_sq(mp, lam)) << ","
                      << format_double(ez_norm_sq(mp, lam, NormMethod::quadrature)) << ","
                      << format_double(effective_mass(mp, lam)) << "\n";
        return kOk;
    }
    if (what == "kernel") {
        const TubePoint a(p.list("x1", {0, 0}), p.list("y1", {1, 0}));
        const TubePoint b(p.list("x2", {0, 0}), p.list("y2", {1, 0}));
        const cplx k = kernel_eval(mp, a, b);
        std::cout << "re=" << format_double(k.real()) << " im=" << format_double(k.imag()) << "\n";
        if (mp.s == 1) {
            const cplx q = kernel_quadrature(mp, a, b);
            std::cout << "quadrature re=" << format_double(q.real())
                      << " im=" << format_double(q.imag()) << "\n";
        }
        return kOk;
    }
    if (what == "momentum") {
        rvec y = p.list("y", {});
        if (y.empty()) {
            y.assign(mp.s + 1, 0.0);
            y[0] = lambda;
        }
        const rvec P = expected_momentum(mp, y);
        std::cout << "P_mu=";
        for (size_t i = 0; i < P.size(); ++i) std::cout << (i ? "," : "") << format_double(P[i]);
        std::cout << "\nm_lambda=" << format_double(effective_mass(mp, std::sqrt(minkowski(y, y))))
                  << "\n";
        return kOk;
    }
    const double width = p.num("width", 1.0), center = p.num("p0", 0.5);
    const MomentumWavefunction f{
        mp, SampledSignal::from_function(
                [&](double q) { return cplx(std::exp(-(q - center) * (q - center) / width)); },
                -8, 0.05, 321)};
    if (mp.s != 1) throw UsageError("wavefunction commands need s=1");
    const PhaseSpaceGrid g;
    if (what == "phase_space" || what == "theorem43") {
        const double kn = k_norm_sq(f);
        std::cout << "t,sigma_norm,k_norm,relative\n";
        for (double t : p.list("t", {0.0, 0.7})) {
            const double n = phase_space_norm(f, lambda, t, g);
            std::cout << format_double(t) << "," << format_double(n) << "," << format_double(kn)
                      << "," << format_double((n - kn) / kn) << "\n";
        }
        return kOk;
    }
    if (what == "current") {
        const CurrentReport c = current_density(f, lambda, p.num("t", 0.0), g, 1e-3);
        std::cout << "max_defect=" << format_double(c.max_defect)
                  << " flux=" << format_double(c.flux) << " nonnegative=" << c.nonnegative << "\n";
        if (!o.out.empty()) {
            PlotGrid pg{"x", "component", "J", c.x, {0.0, 1.0}, c.j0};
            pg.values.insert(pg.values.end(), c.j1.begin(), c.j1.end());
            emit_plot_data(o.out, pg);
        }
        return kOk;
    }
    if (what == "nrlimit") {
        const SampledSignal fh = SampledSignal::from_function(
            [](double q) { return cplx(std::exp(-q * q / 2)); }, -8, 0.05, 321);
        PhaseSpaceGrid g2;
        g2.x0 = -15, g2.dx = 0.25, g2.nx = 121, g2.y0 = -10, g2.dy = 0.1, g2.ny = 201;
        const rvec cs = p.list("c_list", {2, 4, 8, 16});
        const rvec J = nonrel_limit_defect(fh, p.num("u", 1.0), mp.m, cs, g2);
        std::cout << "c,J\n";
        for (size_t i = 0; i < cs.size(); ++i)
            std::cout << format_double(cs[i]) << "," << format_double(J[i]) << "\n";
        return kOk;
    }
    throw UsageError("unknown relcs command " + what);
}

int cmd_spincs(const std::string& what, const Options& o) {
    const Params p(o.params);
    const SpinRep rep = build_rep(p.num("s", 1.0));
    print_header("spincs " + what, o);
    if (what == "overlap") {
        const double t1 = p.num("theta1", 0.3), p1 = p.num("phi1", 0.0);
        const double t2 = p.num("theta2", 1.2), p2 = p.num("phi2", 0.8);
        const double v = std::norm(spin_cs_vector(rep, t1, p1).dot(spin_cs_vector(rep, t2, p2)));
        const double law =
            std::pow((1 + sphere_point(t1, p1).dot(sphere_point(t2, p2))) / 2, rep.two_s);
        std::cout << "overlap_sq=" << format_double(v) << " law=" << format_double(law) << "\n";
        return kOk;
    }
    if (what == "resolution") {
        const ResolutionReport a = sphere_resolution_check(rep, p.integer("order", 16));
        const ResolutionReport b =
            holo_resolution_check(rep, p.integer("radial", 32), p.integer("angular", 16));
        std::cout << "sphere defect=" << format_double(a.defect) << " measure="
                  << format_double(a.measure) << "\nholomorphic defect=" << format_double(b.defect)
                  << " frame_constant=" << format_double(b.frame_constant) << "\n";
        return kOk;
    }
    if (what == "expectations") {
        const cplx z(p.num("re", 0.5), p.num("im", 0.0));
        const SpinExpectations e = spin_expectations(rep, z);
        std::cout << "s_plus=" << format_double(e.s_plus.real()) << ","
                  << format_double(e.s_plus.imag()) << " s3=" << format_double(e.s3)
                  << " length_sq=" << format_double(e.length_sq) << "\n";
        return kOk;
    }
    if (what == "contract") {
        const int n_max = p.integer("n_max", 3);
        std::cout << "s,minus,plus,k3,max\n";
        for (double s : p.list("s_list", {200, 400, 800})) {
            const ContractionDefect d = contraction_defect(s, n_max);
            std::cout << format_double(s) << "," << format_double(d.minus.maxCoeff()) << ","
                      << format_double(d.plus.maxCoeff()) << "," << format_double(d.k3.maxCoeff())
                      << "," << format_double(d.max()) << "\n";
        }
        return kOk;
    }
    throw UsageError("unknown spincs command " + what);
}

int cmd_verify(const std::string& suite, const Options& o) {
    const Report rep = run_verify(suite, o.seed, parse_tol(o.tol), o.params);
    if (o.format == "csv")
        rep.write_csv(std::cout);
    else
        rep.write_text(std::cout);
    if (!o.out.empty()) {
        std::ofstream out(o.out, std::ios::binary);
        if (!out) throw UsageError("cannot write " + o.out);
        rep.write_csv(out);
    }
    return rep.all_pass() ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"framelab: frames, coherent states and time-frequency transforms"};
    app.require_subcommand(1);
    Options o;
    const auto common = [&o](CLI::App* sub) {
        sub->add_option("--in", o.in, "input signal (csv or raw64)");
        sub->add_option("--out", o.out, "output path");
        sub->add_option("--format", o.format, "auto, csv or raw64 (verify: text or csv)");
        sub->add_option("--seed", o.seed, "seed for randomized parts");
        sub->add_option("--tol", o.tol, "tolerance override id=value, repeatable");
        sub->add_option("--params", o.params, "key=value, repeatable");
    };

    std::string action;
    std::string suite;
    std::map<std::string, CLI::App*> subs;
    for (const char* name : {"wft", "cwt", "ast", "hilbert", "xray", "frames"}) {
        subs[name] = app.add_subcommand(name);
        common(subs[name]);
    }
    subs["wft"]->description("windowed Fourier lattice coefficients and spectrogram");
    subs["cwt"]->description("continuous wavelet transform and scalogram");
    subs["ast"]->description("analytic-signal transform at one point");
    subs["hilbert"]->description("directional Hilbert transform");
    subs["xray"]->description("windowed X-ray transform");
    subs["frames"]->description("frame bounds, Neumann inverse, reciprocal frame");
    subs["relcs"] = app.add_subcommand("relcs", "relativistic coherent states");
    subs["relcs"]->add_option("action", action, "norm|kernel|momentum|phase_space|current|nrlimit")
        ->required();
    common(subs["relcs"]);
    subs["spincs"] = app.add_subcommand("spincs", "spin coherent states");
    subs["spincs"]->add_option("action", action, "overlap|resolution|expectations|contract")
        ->required();
    common(subs["spincs"]);
    subs["verify"] = app.add_subcommand("verify", "run a verification suite");
    subs["verify"]->add_option("suite", suite, "suite name or all")->required();
    common(subs["verify"]);
    subs["list"] = app.add_subcommand("list", "list verification suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (subs["list"]->parsed()) {
            for (const auto& s : suite_registry()) std::cout << s.name << "  " << s.summary << "\n";
            return kOk;
        }
        if (subs["verify"]->parsed()) return cmd_verify(suite, o);
        if (subs["relcs"]->parsed()) return cmd_relcs(action, o);
        if (subs["spincs"]->parsed()) return cmd_spincs(action, o);
        if (subs["wft"]->parsed()) return cmd_wft(o);
        if (subs["cwt"]->parsed()) return cmd_cwt(o);
        if (subs["ast"]->parsed()) return cmd_ast(o);
        if (subs["hilbert"]->parsed()) return cmd_hilbert(o);
        if (subs["xray"]->parsed()) return cmd_xray(o);
        if (subs["frames"]->parsed()) return cmd_frames(o);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFail;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
