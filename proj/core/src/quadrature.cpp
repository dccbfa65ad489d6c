#include "framelab/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace framelab {

namespace {

GaussRule unit_rule(int n) {
    GaussRule r;
    r.x.resize(static_cast<size_t>(n));
    r.w.resize(static_cast<size_t>(n));
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
            const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        r.x[static_cast<size_t>(i)] = -x;
        r.x[static_cast<size_t>(n - 1 - i)] = x;
        r.w[static_cast<size_t>(i)] = w;
        r.w[static_cast<size_t>(n - 1 - i)] = w;
    }
    return r;
}

}  // namespace

GaussRule gauss_legendre(int n, double a, double b) {
    if (n < 1) throw DomainError("gauss_legendre: n must be >= 1");
    static std::mutex mu;
    static std::map<int, GaussRule> cache;
    GaussRule base;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(n);
        if (it == cache.end()) it = cache.emplace(n, unit_rule(n)).first;
        base = it->second;
    }
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    for (size_t i = 0; i < base.x.size(); ++i) {
        base.x[i] = c + h * base.x[i];
        base.w[i] *= h;
    }
    return base;
}

}  // namespace framelab
