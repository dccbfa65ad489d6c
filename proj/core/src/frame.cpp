#include "framelab/frame.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace framelab {

namespace {

constexpr int kDenseLimit = 512;

double power_top(const Eigen::MatrixXcd& m, double rel_tol, int max_iter) {
    const int d = static_cast<int>(m.rows());
    Eigen::VectorXcd v(d);
    for (int i = 0; i < d; ++i) v(i) = cplx(1.0 + 0.01 * i, 0.003 * (i % 7));
    v.normalize();
    double lam = 0.0;
    for (int it = 0; it < max_iter; ++it) {
        Eigen::VectorXcd mv = m * v;
        const double next = v.dot(mv).real();
        const double nrm = mv.norm();
        if (nrm == 0.0) return 0.0;
        v = mv / nrm;
        if (it > 0 && std::abs(next - lam) <= rel_tol * std::abs(next)) return next;
        lam = next;
    }
    return lam;
}

void write_double(std::string& out, double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    out.append(buf, res.ptr);
}

double parse_double(const std::string& tok, int line) {
    double v = 0.0;
    const char* b = tok.data();
    const char* e = b + tok.size();
    if (!tok.empty() && *b == '+') ++b;
    auto res = std::from_chars(b, e, v);
    if (res.ec != std::errc() || res.ptr != e)
        throw DomainError("frame text: bad number '" + tok + "' on line " + std::to_string(line));
    return v;
}

}  // namespace

FrameSystem::FrameSystem(Eigen::MatrixXcd vectors, rvec weights)
    : h_(std::move(vectors)), w_(std::move(weights)) {
    init();
}

FrameSystem::FrameSystem(const std::vector<Eigen::VectorXcd>& vectors, rvec weights)
    : w_(std::move(weights)) {
    if (vectors.empty()) throw DomainError("frame: empty index set");
    const auto d = vectors.front().size();
    h_.resize(d, static_cast<Eigen::Index>(vectors.size()));
    for (size_t m = 0; m < vectors.size(); ++m) {
        if (vectors[m].size() != d) throw DomainError("frame: vectors of unequal dimension");
        h_.col(static_cast<Eigen::Index>(m)) = vectors[m];
    }
    init();
}

void FrameSystem::init() {
    if (h_.cols() == 0 || h_.rows() == 0) throw DomainError("frame: empty index set");
    if (static_cast<Eigen::Index>(w_.size()) != h_.cols())
        throw DomainError("frame: weight count does not match vector count");
    for (double w : w_)
        if (!(w > 0.0) || !std::isfinite(w)) throw DomainError("frame: weights must be positive");
    if (!h_.allFinite()) throw DomainError("frame: non-finite vector entries");

    g_ = h_ * weight_vector().asDiagonal() * h_.adjoint();
    g_ = 0.5 * (g_ + g_.adjoint()).eval();

    const int d = dim();
    if (d <= kDenseLimit) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(g_);
        const Eigen::VectorXd& ev = es.eigenvalues();
        bounds_ = {ev(0), ev(d - 1)};
        if (is_frame()) {
            const Eigen::VectorXd inv = ev.cwiseInverse();
            ginv_ = es.eigenvectors() * inv.asDiagonal() * es.eigenvectors().adjoint();
        }
    } else {
        const double b = power_top(g_, 1e-10, 100000);
        const Eigen::MatrixXcd shifted =
            b * Eigen::MatrixXcd::Identity(d, d) - g_;
        const double top = power_top(shifted, 1e-10, 100000);
        bounds_ = {b - top, b};
        if (is_frame()) ginv_ = g_.ldlt().solve(Eigen::MatrixXcd::Identity(d, d));
    }
}

Eigen::VectorXd FrameSystem::weight_vector() const {
    return Eigen::Map<const Eigen::VectorXd>(w_.data(), static_cast<Eigen::Index>(w_.size()));
}

const Eigen::MatrixXcd& FrameSystem::inverse() const {
    if (!is_frame()) throw NotAFrameError("not a frame");
    return ginv_;
}

std::string FrameSystem::to_text() const {
    std::string out;
    out += std::to_string(dim()) + " " + std::to_string(size()) + "\n";
    for (int m = 0; m < size(); ++m) {
        write_double(out, w_[static_cast<size_t>(m)]);
        for (int i = 0; i < dim(); ++i) {
            out += ' ';
            write_double(out, h_(i, m).real());
            out += ' ';
            write_double(out, h_(i, m).imag());
        }
        out += '\n';
    }
    return out;
}

FrameSystem FrameSystem::from_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int d = -1, count = -1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream hs(line);
        if (!(hs >> d >> count) || d < 1 || count < 1)
            throw DomainError("frame text: bad header on line " + std::to_string(lineno));
        break;
    }
    if (d < 1) throw DomainError("frame text: missing header");
    Eigen::MatrixXcd h(d, count);
    rvec w(static_cast<size_t>(count));
    int m = 0;
    while (m < count && std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::vector<std::string> tok;
        std::string t;
        while (ls >> t) tok.push_back(t);
        if (static_cast<int>(tok.size()) != 1 + 2 * d)
            throw DomainError("frame text: expected " + std::to_string(1 + 2 * d) +
                              " fields on line " + std::to_string(lineno));
        w[static_cast<size_t>(m)] = parse_double(tok[0], lineno);
        for (int i = 0; i < d; ++i)
            h(i, m) = cplx(parse_double(tok[static_cast<size_t>(1 + 2 * i)], lineno),
                           parse_double(tok[static_cast<size_t>(2 + 2 * i)], lineno));
        ++m;
    }
    if (m != count)
        throw DomainError("frame text: expected " + std::to_string(count) + " vectors, got " +
                          std::to_string(m));
    return FrameSystem(std::move(h), std::move(w));
}

CoefficientVector analyze(const FrameSystem& frame, const Eigen::VectorXcd& f) {
    if (f.size() != frame.dim()) throw DomainError("analyze: dimension mismatch");
    return frame.vectors().adjoint() * f;
}

FrameBounds frame_bounds(const FrameSystem& frame) {
    if (!frame.is_frame()) throw NotAFrameError("not a frame");
    return frame.raw_bounds();
}

NeumannResult neumann_inverse(const FrameSystem& frame, double tol, int max_terms) {
    const FrameBounds b = frame_bounds(frame);
    const int d = frame.dim();
    const double c = 2.0 / (b.A + b.B);
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(d, d);
    const Eigen::MatrixXcd r = id - c * frame.frame_operator();
    NeumannResult out;
    Eigen::MatrixXcd sum = id;
    Eigen::MatrixXcd term = id;
    out.terms_used = 1;
    for (;;) {
        term = (term * r).eval();
        const double tn = term.norm();
        if (tn < tol) {
            out.residual = tn;
            break;
        }
        if (out.terms_used >= max_terms)
            throw ConvergenceError("neumann_inverse: max_terms reached, residual " +
                                       std::to_string(tn),
                                   tn);
        sum += term;
        ++out.terms_used;
    }
    out.inverse = c * sum;
    return out;
}

FrameSystem reciprocal_frame(const FrameSystem& frame) {
    return FrameSystem(frame.inverse() * frame.vectors(), frame.weights());
}

Eigen::MatrixXcd reproducing_kernel(const FrameSystem& frame) {
    return frame.vectors().adjoint() * frame.inverse() * frame.vectors();
}

Eigen::VectorXcd reconstruct(const FrameSystem& frame, const CoefficientVector& coeffs) {
    if (coeffs.size() != frame.size()) throw DomainError("reconstruct: coefficient count mismatch");
    return frame.inverse() * (frame.vectors() * (frame.weight_vector().asDiagonal() * coeffs));
}

double consistency_residual(const FrameSystem& frame, const CoefficientVector& g) {
    if (g.size() != frame.size()) throw DomainError("consistency_residual: size mismatch");
    const Eigen::VectorXcd kg = analyze(frame, reconstruct(frame, g));
    return weighted_norm(frame, g - kg);
}

Eigen::VectorXcd least_squares_reconstruct(const FrameSystem& frame, const std::vector<int>& subset,
                                           const Eigen::VectorXcd& values) {
    if (subset.empty()) throw DomainError("least_squares_reconstruct: empty subset");
    if (static_cast<Eigen::Index>(subset.size()) != values.size())
        throw DomainError("least_squares_reconstruct: subset/value size mismatch");
    Eigen::VectorXcd g = Eigen::VectorXcd::Zero(frame.size());
    for (size_t k = 0; k < subset.size(); ++k) {
        const int m = subset[k];
        if (m < 0 || m >= frame.size()) throw DomainError("least_squares_reconstruct: bad index");
        g(m) = values(static_cast<Eigen::Index>(k));
    }
    return reconstruct(frame, g);
}

double frame_energy(const FrameSystem& frame, const Eigen::VectorXcd& f) {
    const double n = weighted_norm(frame, analyze(frame, f));
    return n * n;
}

double weighted_norm(const FrameSystem& frame, const CoefficientVector& g) {
    double s = 0.0;
    for (int m = 0; m < frame.size(); ++m) s += frame.weights()[static_cast<size_t>(m)] * std::norm(g(m));
    return std::sqrt(s);
}

FrameSystem orthonormal_basis(int d) {
    if (d < 1) throw DomainError("orthonormal_basis: d must be >= 1");
    return FrameSystem(Eigen::MatrixXcd::Identity(d, d), rvec(static_cast<size_t>(d), 1.0));
}

FrameSystem mercedes_benz() {
    Eigen::MatrixXcd h(2, 3);
    for (int k = 0; k < 3; ++k) {
        const double a = 2.0 * pi * k / 3.0;
        h(0, k) = std::cos(a);
        h(1, k) = std::sin(a);
    }
    h(0, 1) = -0.5;
    h(0, 2) = -0.5;
    return FrameSystem(std::move(h), rvec(3, 1.0));
}

FrameSystem random_frame(Rng& rng, int d, int m, bool complex_entries, bool random_weights) {
    Eigen::MatrixXcd h(d, m);
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < d; ++i)
            h(i, j) = complex_entries ? cplx(rng.normal(), rng.normal()) : cplx(rng.normal(), 0.0);
    rvec w(static_cast<size_t>(m), 1.0);
    if (random_weights)
        for (double& x : w) x = rng.uniform(0.5, 2.0);
    return FrameSystem(std::move(h), std::move(w));
}

}  // namespace framelab
