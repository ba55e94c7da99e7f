#pragma once

// Second-order forward-mode scalars over three variables: value, gradient and
// Hessian propagate together, so metric data and Laplacians come out exact to
// roundoff (no truncation error to argue about in the agreement checks).

#include <array>
#include <cmath>
#include <complex>

namespace s3c {

template <class T>
struct Dual2 {
    T v{};
    std::array<T, 3> g{};
    std::array<T, 6> h{};  // packed symmetric Hessian: 00,01,02,11,12,22

    Dual2() = default;
    Dual2(const T& value) : v(value) {}
    Dual2(double value) : v(value) {}

    static constexpr int hidx(int a, int b) {
        if (a > b) std::swap(a, b);
        return a == 0 ? b : (b + a + 1);  // (0,b)->b, (1,1)->3, (1,2)->4, (2,2)->5
    }
    T hess(int a, int b) const { return h[hidx(a, b)]; }

    // independent variable in slot `a`
    static Dual2 var(const T& value, int a) {
        Dual2 d(value);
        d.g[a] = T(1);
        return d;
    }
};

using cdual = Dual2<std::complex<double>>;

// ---- arithmetic -----------------------------------------------------------

template <class T>
Dual2<T> operator+(const Dual2<T>& x, const Dual2<T>& y) {
    Dual2<T> r(x.v + y.v);
    for (int i = 0; i < 3; ++i) r.g[i] = x.g[i] + y.g[i];
    for (int i = 0; i < 6; ++i) r.h[i] = x.h[i] + y.h[i];
    return r;
}
template <class T>
Dual2<T> operator-(const Dual2<T>& x, const Dual2<T>& y) {
    Dual2<T> r(x.v - y.v);
    for (int i = 0; i < 3; ++i) r.g[i] = x.g[i] - y.g[i];
    for (int i = 0; i < 6; ++i) r.h[i] = x.h[i] - y.h[i];
    return r;
}
template <class T>
Dual2<T> operator-(const Dual2<T>& x) {
    Dual2<T> r(-x.v);
    for (int i = 0; i < 3; ++i) r.g[i] = -x.g[i];
    for (int i = 0; i < 6; ++i) r.h[i] = -x.h[i];
    return r;
}
template <class T>
Dual2<T> operator*(const Dual2<T>& x, const Dual2<T>& y) {
    Dual2<T> r(x.v * y.v);
    for (int i = 0; i < 3; ++i) r.g[i] = x.g[i] * y.v + x.v * y.g[i];
    for (int a = 0, k = 0; a < 3; ++a)
        for (int b = a; b < 3; ++b, ++k)
            r.h[k] = x.h[k] * y.v + x.g[a] * y.g[b] + x.g[b] * y.g[a] + x.v * y.h[k];
    return r;
}

// unary chain rule from (f, f', f'') at x.v
template <class T>
Dual2<T> dual_apply(const Dual2<T>& x, const T& f0, const T& f1, const T& f2) {
    Dual2<T> r(f0);
    for (int i = 0; i < 3; ++i) r.g[i] = f1 * x.g[i];
    for (int a = 0, k = 0; a < 3; ++a)
        for (int b = a; b < 3; ++b, ++k)
            r.h[k] = f1 * x.h[k] + f2 * x.g[a] * x.g[b];
    return r;
}

template <class T>
Dual2<T> inv(const Dual2<T>& x) {
    T iv = T(1) / x.v;
    return dual_apply(x, iv, -iv * iv, T(2) * iv * iv * iv);
}
template <class T>
Dual2<T> operator/(const Dual2<T>& x, const Dual2<T>& y) { return x * inv(y); }

// mixed scalar forms
template <class T, class S>
Dual2<T> operator+(const Dual2<T>& x, const S& s) { return x + Dual2<T>(T(s)); }
template <class T, class S>
Dual2<T> operator+(const S& s, const Dual2<T>& x) { return Dual2<T>(T(s)) + x; }
template <class T, class S>
Dual2<T> operator-(const Dual2<T>& x, const S& s) { return x - Dual2<T>(T(s)); }
template <class T, class S>
Dual2<T> operator-(const S& s, const Dual2<T>& x) { return Dual2<T>(T(s)) - x; }
template <class T, class S>
Dual2<T> operator*(const Dual2<T>& x, const S& s) {
    Dual2<T> r(x.v * T(s));
    for (int i = 0; i < 3; ++i) r.g[i] = x.g[i] * T(s);
    for (int i = 0; i < 6; ++i) r.h[i] = x.h[i] * T(s);
    return r;
}
template <class T, class S>
Dual2<T> operator*(const S& s, const Dual2<T>& x) { return x * s; }
template <class T, class S>
Dual2<T> operator/(const Dual2<T>& x, const S& s) { return x * (T(1) / T(s)); }
template <class T, class S>
Dual2<T> operator/(const S& s, const Dual2<T>& x) { return inv(x) * s; }

// ---- elementary functions --------------------------------------------------

template <class T> Dual2<T> sin(const Dual2<T>& x) {
    using std::sin; using std::cos;
    T s = sin(x.v), c = cos(x.v);
    return dual_apply(x, s, c, -s);
}
template <class T> Dual2<T> cos(const Dual2<T>& x) {
    using std::sin; using std::cos;
    T s = sin(x.v), c = cos(x.v);
    return dual_apply(x, c, -s, -c);
}
template <class T> Dual2<T> tan(const Dual2<T>& x) { return sin(x) / cos(x); }
template <class T> Dual2<T> exp(const Dual2<T>& x) {
    using std::exp;
    T e = exp(x.v);
    return dual_apply(x, e, e, e);
}
template <class T> Dual2<T> log(const Dual2<T>& x) {
    using std::log;
    T iv = T(1) / x.v;
    return dual_apply(x, log(x.v), iv, -iv * iv);
}
template <class T> Dual2<T> sqrt(const Dual2<T>& x) {
    using std::sqrt;
    T r = sqrt(x.v);
    return dual_apply(x, r, T(0.5) / r, T(-0.25) / (r * x.v));
}
template <class T> Dual2<T> sinh(const Dual2<T>& x) {
    using std::sinh; using std::cosh;
    T s = sinh(x.v), c = cosh(x.v);
    return dual_apply(x, s, c, s);
}
template <class T> Dual2<T> cosh(const Dual2<T>& x) {
    using std::sinh; using std::cosh;
    T s = sinh(x.v), c = cosh(x.v);
    return dual_apply(x, c, s, c);
}
template <class T> Dual2<T> tanh(const Dual2<T>& x) { return sinh(x) / cosh(x); }
template <class T> Dual2<T> pow(const Dual2<T>& x, double p) {
    using std::pow;
    T f0 = pow(x.v, p);
    T f1 = T(p) * pow(x.v, p - 1);
    T f2 = T(p) * T(p - 1) * pow(x.v, p - 2);
    return dual_apply(x, f0, f1, f2);
}

// scalar fallbacks so generic code compiles for plain complex/double arguments
template <class T> T value_of(const T& x) { return x; }
template <class T> T value_of(const Dual2<T>& x) { return x.v; }

}  // namespace s3c
