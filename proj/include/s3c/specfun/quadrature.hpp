#pragma once

// Gauss-Legendre nodes (Newton on the recurrence) and a truncated tanh-sinh
// rule. Workspaces are per-call or cached behind a mutex-free function-local
// static keyed by n; both rules are deterministic.

#include <cmath>
#include <functional>
#include <map>
#include <utility>
#include <vector>

namespace s3c::sf {

struct GLRule {
    std::vector<double> x, w;  // nodes/weights on [-1,1]
};

inline const GLRule& gauss_legendre(int n) {
    static std::map<int, GLRule> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    GLRule r;
    r.x.resize(n);
    r.w.resize(n);
    const double pi = 3.14159265358979323846;
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(pi * (i + 0.75) / (n + 0.5));
        double pp = 0;
        for (int it2 = 0; it2 < 100; ++it2) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        r.x[i] = -x;
        r.x[n - 1 - i] = x;
        r.w[i] = r.w[n - 1 - i] = 2.0 / ((1.0 - x * x) * pp * pp);
    }
    return cache.emplace(n, std::move(r)).first->second;
}

template <class F>
auto integrate_gl(F&& f, double a, double b, int n) -> decltype(f(0.0)) {
    const GLRule& r = gauss_legendre(n);
    decltype(f(0.0)) acc{};
    double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (int i = 0; i < n; ++i) acc += r.w[i] * f(mid + half * r.x[i]);
    return acc * half;
}

// tanh-sinh on [a,b]; level controls node density (h = 2^-level)
template <class F>
auto integrate_tanh_sinh(F&& f, double a, double b, int level = 7) -> decltype(f(0.0)) {
    const double pi_half = 1.5707963267948966;
    double h = std::pow(2.0, -level);
    double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    decltype(f(0.0)) acc{};
    // t range chosen so the double-exponential weights underflow gracefully
    int kmax = static_cast<int>(std::ceil(6.0 / h));
    for (int k = -kmax; k <= kmax; ++k) {
        double t = k * h;
        double s = pi_half * std::sinh(t);
        double x = std::tanh(s);
        double w = pi_half * std::cosh(t) / std::pow(std::cosh(s), 2);
        if (w < 1e-18) continue;
        acc += w * f(mid + half * x);
    }
    return acc * (half * h);
}

}  // namespace s3c::sf
