#include "framelab/special.hpp"

#include <cmath>

namespace framelab {

namespace {

constexpr double kEps = 1e-16;
constexpr int kMaxIter = 100000;

// Taylor coefficients of 1/Gamma(z): 1/Gamma(1+x) = sum_k c[k] x^{k-1}, k = 1..26.
constexpr double kRecipGamma[27] = {
    0.0,
    1.0,
    0.5772156649015329,
    -0.6558780715202538,
    -0.0420026350340952,
    0.1665386113822915,
    -0.0421977345555443,
    -0.0096219715278770,
    0.0072189432466630,
    -0.0011651675918591,
    -0.0002152416741149,
    0.0001280502823882,
    -0.0000201348547807,
    -0.0000012504934821,
    0.0000011330272320,
    -0.0000002056338417,
    0.0000000061160950,
    0.0000000050020075,
    -0.0000000011812746,
    0.0000000001043427,
    0.0000000000077823,
    -0.0000000000036968,
    0.0000000000005100,
    -0.0000000000000206,
    -0.0000000000000054,
    0.0000000000000014,
    0.0000000000000001,
};

// gam1 = (1/Gamma(1-x) - 1/Gamma(1+x)) / (2x), gam2 = (1/Gamma(1-x) + 1/Gamma(1+x)) / 2.
void temme_gammas(double x, double& gam1, double& gam2, double& gampl, double& gammi) {
    gam1 = 0.0;
    gam2 = 0.0;
    for (int k = 26; k >= 1; --k) {
        if (k % 2 == 0)
            gam1 = gam1 * x * x - kRecipGamma[k];
        else
            gam2 = gam2 * x * x + kRecipGamma[k];
    }
    gampl = gam2 - x * gam1;
    gammi = gam2 + x * gam1;
}

bool is_half_integer(double nu) {
    const double t = nu - 0.5;
    return std::abs(t - std::round(t)) < 1e-15;
}

// Returns K_mu and K_{mu+1} with |mu| <= 1/2, times e^w when `scaled`.
void k_pair(double mu, cplx w, bool scaled, cplx& kmu, cplx& kmu1) {
    if (std::abs(w) <= 2.0) {
        const cplx x2 = 0.5 * w;
        const double pimu = pi * mu;
        const double fact = std::abs(pimu) < kEps ? 1.0 : pimu / std::sin(pimu);
        cplx d = -std::log(x2);
        cplx e = mu * d;
        const cplx fact2 = std::abs(e) < kEps ? cplx(1.0) : std::sinh(e) / e;
        double gam1, gam2, gampl, gammi;
        temme_gammas(mu, gam1, gam2, gampl, gammi);
        cplx ff = fact * (gam1 * std::cosh(e) + gam2 * fact2 * d);
        cplx sum = ff;
        e = std::exp(e);
        cplx p = 0.5 * e / gampl;
        cplx q = 0.5 / (e * gammi);
        cplx c = 1.0;
        d = x2 * x2;
        cplx sum1 = p;
        const double mu2 = mu * mu;
        int i = 1;
        for (; i <= kMaxIter; ++i) {
            ff = (double(i) * ff + p + q) / (double(i) * i - mu2);
            c *= d / double(i);
            p /= (i - mu);
            q /= (i + mu);
            const cplx del = c * ff;
            sum += del;
            const cplx del1 = c * (p - double(i) * ff);
            sum1 += del1;
            if (std::abs(del) < std::abs(sum) * kEps) break;
        }
        if (i > kMaxIter) throw ConvergenceError("bessel_k: series did not converge", 0.0);
        const cplx ew = scaled ? std::exp(w) : cplx(1.0);
        kmu = sum * ew;
        kmu1 = sum1 * (2.0 / w) * ew;
        return;
    }
    // Steed's continued fraction CF2.
    const double mu2 = mu * mu;
    cplx b = 2.0 * (1.0 + w);
    cplx d = 1.0 / b;
    cplx h = d, delh = d;
    cplx q1 = 0.0, q2 = 1.0;
    const double a1 = 0.25 - mu2;
    cplx q = a1, c = a1;
    double a = -a1;
    cplx s = 1.0 + q * delh;
    int i = 2;
    for (; i <= kMaxIter; ++i) {
        a -= 2.0 * (i - 1);
        c = -a * c / double(i);
        const cplx qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        const cplx dels = q * delh;
        s += dels;
        if (std::abs(dels) < std::abs(s) * kEps) break;
    }
    if (i > kMaxIter) throw ConvergenceError("bessel_k: continued fraction did not converge", 0.0);
    h = a1 * h;
    kmu = std::sqrt(pi / (2.0 * w)) * (scaled ? cplx(1.0) : std::exp(-w)) / s;
    kmu1 = kmu * (mu + w + 0.5 - h) / w;
}

cvec k_seq(double nu, cplx w, int count, bool scaled) {
    if (nu < 0.0) nu = -nu;  // K_{-nu} = K_nu
    if (count < 1) return {};
    if (w == cplx(0.0)) throw DomainError("bessel_k: argument must be nonzero");
    if (w.real() <= 0.0 && std::abs(w.imag()) < 1e-300)
        throw DomainError("bessel_k: argument on the branch cut");
    cplx k0, k1;
    int nl;
    double base;
    if (is_half_integer(nu)) {
        k0 = std::sqrt(pi / (2.0 * w)) * (scaled ? cplx(1.0) : std::exp(-w));  // K_{1/2}
        k1 = k0 * (1.0 + 1.0 / w);                        // K_{3/2}
        base = 0.5;
        nl = static_cast<int>(std::lround(nu - 0.5));
    } else {
        nl = static_cast<int>(std::floor(nu + 0.5));
        base = nu - nl;
        k_pair(base, w, scaled, k0, k1);
    }
    const cplx wi2 = 2.0 / w;
    for (int i = 1; i <= nl; ++i) {
        const cplx kn = (base + i) * wi2 * k1 + k0;
        k0 = k1;
        k1 = kn;
    }
    cvec out(static_cast<size_t>(count));
    out[0] = k0;
    if (count > 1) out[1] = k1;
    for (int j = 2; j < count; ++j)
        out[static_cast<size_t>(j)] =
            (nu + j - 1) * wi2 * out[static_cast<size_t>(j - 1)] + out[static_cast<size_t>(j - 2)];
    return out;
}

}  // namespace

cvec bessel_k_seq(double nu, cplx w, int count) { return k_seq(nu, w, count, false); }

cplx bessel_k(double nu, cplx w) { return k_seq(nu, w, 1, false)[0]; }

cplx bessel_k_scaled(double nu, cplx w) { return k_seq(nu, w, 1, true)[0]; }

double bessel_k(double nu, double x) {
    if (!(x > 0.0)) throw DomainError("bessel_k: real argument must be positive");
    return bessel_k(nu, cplx(x, 0.0)).real();
}

double bessel_k_ratio(double nu, double x) {
    if (!(x > 0.0)) throw DomainError("bessel_k_ratio: argument must be positive");
    const cvec k = k_seq(nu, cplx(x, 0.0), 2, true);
    return (k[1] / k[0]).real();
}

}  // namespace framelab
