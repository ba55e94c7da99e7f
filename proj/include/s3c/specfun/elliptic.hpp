#pragma once

// Jacobi elliptic functions sn, cn, dn by the descending-Landen / AGM scheme
// (real argument, modulus 0 <= k < 1), plus a Dual2 wrapper that assembles the
// derivatives from the exact identities sn' = cn dn, cn' = -sn dn,
// dn' = -k^2 sn cn.

#include <array>
#include <cmath>
#include <complex>

#include "s3c/dual.hpp"
#include "s3c/errors.hpp"

namespace s3c::sf {

struct SnCnDn {
    double sn, cn, dn;
};

inline SnCnDn jacobi_elliptic(double u, double k) {
    if (!(k >= 0.0 && k < 1.0)) throw range_error("jacobi_elliptic: need 0 <= k < 1");
    const double eps = 1e-15;
    double m = k * k;
    if (m < eps) {
        // k -> 0 degeneration: circular functions
        return {std::sin(u), std::cos(u), 1.0 - 0.5 * m * std::sin(u) * std::sin(u)};
    }
    double a[16], g[16], c[16];
    a[0] = 1.0;
    g[0] = std::sqrt(1.0 - m);
    c[0] = k;
    int n = 0;
    while (std::abs(c[n]) > eps && n < 15) {
        a[n + 1] = 0.5 * (a[n] + g[n]);
        g[n + 1] = std::sqrt(a[n] * g[n]);
        c[n + 1] = 0.5 * (a[n] - g[n]);
        ++n;
    }
    double phi = std::ldexp(a[n] * u, n);  // 2^n a_n u
    for (int i = n; i > 0; --i)
        phi = 0.5 * (phi + std::asin(std::max(-1.0, std::min(1.0, c[i] * std::sin(phi) / a[i]))) );
    double sn = std::sin(phi), cn = std::cos(phi);
    double dn = std::sqrt(1.0 - m * sn * sn);
    return {sn, cn, dn};
}

// complete elliptic integral K(k) via AGM
inline double elliptic_K(double k) {
    if (!(k >= 0.0 && k < 1.0)) throw range_error("elliptic_K: need 0 <= k < 1");
    double a = 1.0, g = std::sqrt(1.0 - k * k);
    for (int i = 0; i < 60 && std::abs(a - g) > 1e-16; ++i) {
        double an = 0.5 * (a + g);
        g = std::sqrt(a * g);
        a = an;
    }
    return 3.14159265358979323846 / (2.0 * a);
}

// Dual2 lift: u must carry a real value (chart coordinates are real)
template <class T>
std::array<Dual2<T>, 3> jacobi_elliptic_dual(const Dual2<T>& u, double k) {
    double uv = std::real(std::complex<double>(value_of(u)));
    SnCnDn f = jacobi_elliptic(uv, k);
    double k2 = k * k;
    double s = f.sn, c = f.cn, d = f.dn;
    T s1 = T(c * d), c1 = T(-s * d), d1 = T(-k2 * s * c);
    T s2 = T(-s * (d * d + k2 * c * c));
    T c2 = T(-c * (d * d - k2 * s * s));
    T d2 = T(-k2 * d * (c * c - s * s));
    auto lift = [&](double f0, T f1, T f2) {
        Dual2<T> r{T(f0)};
        for (int i = 0; i < 3; ++i) r.g[i] = f1 * u.g[i];
        for (int a = 0, idx = 0; a < 3; ++a)
            for (int b = a; b < 3; ++b, ++idx)
                r.h[idx] = f1 * u.h[idx] + f2 * u.g[a] * u.g[b];
        return r;
    };
    return {lift(s, s1, s2), lift(c, c1, c2), lift(d, d1, d2)};
}

}  // namespace s3c::sf
