#pragma once

// Bessel-family evaluations, one routine per regime actually used by the
// charts and kernels:
//   J integer order, complex/dual argument ........ power series, |z| <= 12
//   Y,H1 integer order, complex/dual argument ..... log series,   |z| <= 8
//   H1 half-integer order ......................... closed form + upward
//                                                   recurrence (exact)
//   J real order, real argument ................... series (x<=12) or
//                                                   Schlaefli integral
//                                                   (nu <= 50, x <= 100)
//   I real order .................................. series (x <= 60)
//   K imaginary order ............................. cosine-transform
//                                                   tanh-sinh quadrature
//                                                   (x >= 0.1, |k| <= 10)
//   Ai ............................................ Maclaurin (|t| <= 8) +
//                                                   asymptotics (|t| <= 20)
// Out-of-region calls throw range_error rather than degrade.

#include <cmath>
#include <complex>

#include "s3c/dual.hpp"
#include "s3c/errors.hpp"
#include "s3c/specfun/gamma.hpp"
#include "s3c/specfun/quadrature.hpp"

namespace s3c::sf {

inline constexpr double kPi = 3.14159265358979323846;

template <class CT>
CT bessel_j_int(int n, const CT& z) {
    bool flip = false;
    if (n < 0) {
        n = -n;
        flip = (n % 2) != 0;
    }
    if (std::abs(value_of(z)) > 12.0)
        throw range_error("bessel_j_int: |z| > 12 outside series region");
    CT half = z * 0.5;
    CT h2 = half * half;
    CT term(1.0);
    for (int m = 1; m <= n; ++m) term = term * half * (1.0 / m);
    CT sum = term;
    for (int m = 1; m <= 200; ++m) {
        term = term * h2 * (-1.0 / (m * (m + static_cast<double>(n))));
        sum = sum + term;
        using std::abs;
        if (abs(value_of(term)) < 1e-18 * (1.0 + abs(value_of(sum)))) break;
    }
    return flip ? -sum : sum;
}

template <class CT>
CT bessel_y_int(int n, const CT& z) {
    if (n < 0) {
        CT y = bessel_y_int(-n, z);
        return ((-n) % 2) ? -y : y;
    }
    if (std::abs(value_of(z)) > 8.0)
        throw range_error("bessel_y_int: |z| > 8 outside series region");
    const double euler = 0.57721566490153286061;
    CT half = z * 0.5;
    CT h2 = half * half;
    CT logterm = (2.0 / kPi) * log(half) * bessel_j_int(n, z);

    // finite part: sum_{k=0}^{n-1} (n-1-k)!/k! (z/2)^{2k-n}
    CT fin(0.0);
    if (n > 0) {
        double coef = 1.0;  // (n-1)!
        for (int m = 2; m <= n - 1; ++m) coef *= m;
        CT p = 1.0 / half;
        for (int m = 1; m < n; ++m) p = p / half;  // (z/2)^{-n}
        for (int k = 0; k < n; ++k) {
            fin = fin + coef * p;
            if (k + 1 < n) {
                coef /= (n - 1.0 - k) * (k + 1.0);
                p = p * h2;
            }
        }
    }
    // entire part: sum_{k>=0} (-1)^k [psi(k+1)+psi(n+k+1)] (z/2)^{2k+n} / (k!(n+k)!)
    CT inf(0.0);
    double hk = 0.0, hnk = 0.0;
    for (int m = 1; m <= n; ++m) hnk += 1.0 / m;
    double factk = 1.0, factnk = 1.0;
    for (int m = 2; m <= n; ++m) factnk *= m;
    CT p(1.0);
    for (int m = 0; m < n; ++m) p = p * half;  // (z/2)^n
    for (int k = 0; k <= 250; ++k) {
        double psi_sum = (hk - euler) + (hnk - euler);
        double sgn = (k % 2) ? -1.0 : 1.0;
        inf = inf + (sgn * psi_sum / (factk * factnk)) * p;
        using std::abs;
        if (k > 3 && abs(value_of(p)) / (factk * factnk) < 1e-18) break;
        p = p * h2;
        hk += 1.0 / (k + 1.0);
        hnk += 1.0 / (n + k + 1.0);
        factk *= (k + 1.0);
        factnk *= (n + k + 1.0);
    }
    return logterm - (1.0 / kPi) * fin - (1.0 / kPi) * inf;
}

template <class CT>
CT hankel1_int(int n, const CT& z) {
    cd i(0.0, 1.0);
    return bessel_j_int(n, z) + i * bessel_y_int(n, z);
}

// H^(1)_{m+1/2}(z), m >= -1; closed start values, exact upward recurrence
template <class CT>
CT hankel1_half(int m, const CT& z) {
    if (m < -1) throw range_error("hankel1_half: order below -1/2 unsupported");
    cd i(0.0, 1.0);
    CT pref = sqrt(2.0 / (kPi * z));  // principal branch
    CT e = exp(i * z);
    CT hm = pref * e;             // H_{-1/2}
    CT h = (-i) * pref * e;       // H_{+1/2}
    if (m == -1) return hm;
    double nu = 0.5;
    for (int k = 0; k < m; ++k) {
        CT hn = (2.0 * nu) * h / z - hm;
        hm = h;
        h = hn;
        nu += 1.0;
    }
    return h;
}

// J_nu(x), real order, x >= 0
inline double bessel_j_real(double nu, double x) {
    if (x < 0.0) throw range_error("bessel_j_real: x must be >= 0");
    if (nu > 50.0 || x > 100.0)
        throw range_error("bessel_j_real: outside documented region (nu <= 50, x <= 100)");
    if (x == 0.0) return nu == 0.0 ? 1.0 : 0.0;
    if (x <= 12.0) {
        if (nu < 0.0 && std::abs(nu - std::round(nu)) < 1e-14) {
            int n = static_cast<int>(std::llround(-nu));
            double j = bessel_j_real(-nu, x);
            return (n % 2) ? -j : j;
        }
        if (nu < 0.0) throw range_error("bessel_j_real: negative non-integer order unsupported");
        double half = 0.5 * x, h2 = half * half;
        double term = std::exp(nu * std::log(half) - std::lgamma(nu + 1.0));
        double sum = term;
        for (int m = 1; m <= 200; ++m) {
            term *= -h2 / (m * (m + nu));
            sum += term;
            if (std::abs(term) < 1e-18 * (1.0 + std::abs(sum))) break;
        }
        return sum;
    }
    // Schlaefli: J_nu(x) = (1/pi) int_0^pi cos(nu t - x sin t) dt
    //                    - sin(nu pi)/pi int_0^inf e^{-nu t - x sinh t} dt
    double osc = integrate_gl([&](double t) { return std::cos(nu * t - x * std::sin(t)); },
                              0.0, kPi, 640) / kPi;
    double s = std::sin(nu * kPi);
    if (std::abs(s) < 1e-15) return osc;
    double tmax = std::asinh(50.0 / x) + (nu > 0 ? 0.0 : 1.0);
    double tail = integrate_gl([&](double t) { return std::exp(-nu * t - x * std::sinh(t)); },
                               0.0, tmax, 200);
    return osc - s / kPi * tail;
}

// I_nu(x), nu >= 0, series
inline double bessel_i_real(double nu, double x) {
    if (nu < 0.0 || x < 0.0) throw range_error("bessel_i_real: require nu >= 0, x >= 0");
    if (x > 60.0) throw range_error("bessel_i_real: x > 60 outside series region");
    double half = 0.5 * x, h2 = half * half;
    double term = std::exp(nu * std::log(half > 0 ? half : 1.0) - std::lgamma(nu + 1.0));
    if (x == 0.0) return nu == 0.0 ? 1.0 : 0.0;
    double sum = term;
    for (int m = 1; m <= 400; ++m) {
        term *= h2 / (m * (m + nu));
        sum += term;
        if (term < 1e-18 * sum) break;
    }
    return sum;
}

// K_nu(x), real order, by the same cosh-transform (supports the Airy bridge)
inline double bessel_k_real(double nu, double x) {
    if (x <= 0.0) throw range_error("bessel_k_real: x must be positive");
    double tmax = std::acosh(1.0 + 45.0 / x) + 2.0 / (1.0 + x);
    return integrate_tanh_sinh(
        [&](double t) { return std::exp(-x * std::cosh(t)) * std::cosh(nu * t); }, 0.0,
        tmax, 8);
}

// K_{ik}(x) = int_0^inf e^{-x cosh t} cos(k t) dt  (real-valued)
inline double bessel_k_imag(double k, double x) {
    if (x < 0.1) throw range_error("bessel_k_imag: x < 0.1 outside documented region");
    if (std::abs(k) > 10.0) throw range_error("bessel_k_imag: |k| > 10 outside documented region");
    double tmax = std::acosh(45.0 / x);
    return integrate_tanh_sinh(
        [&](double t) { return std::exp(-x * std::cosh(t)) * std::cos(k * t); }, 0.0, tmax, 8);
}

// kind-dispatched front end over the per-regime routines
enum class BesselKind { J_real_order, H1_half_integer, K_imag_order, I_real_order };

inline std::complex<double> bessel_eval(BesselKind kind, double order, double arg) {
    switch (kind) {
        case BesselKind::J_real_order:
            return bessel_j_real(order, arg);
        case BesselKind::H1_half_integer: {
            double m = order - 0.5;
            if (std::abs(m - std::round(m)) > 1e-12)
                throw range_error("bessel_eval: H1 kind requires half-integer order");
            return hankel1_half(static_cast<int>(std::llround(m)),
                                std::complex<double>(arg));
        }
        case BesselKind::K_imag_order:
            return bessel_k_imag(order, arg);
        case BesselKind::I_real_order:
            return bessel_i_real(order, arg);
    }
    throw range_error("bessel_eval: unknown kind");
}

// ---- Airy ------------------------------------------------------------------

template <class CT>
CT airy_ai_series(const CT& t) {
    if (std::abs(value_of(t)) > 8.0)
        throw range_error("airy_ai_series: |t| > 8 outside series region");
    const double c1 = 0.35502805388781723926;   // Ai(0)
    const double c2 = 0.25881940379280679841;   // -Ai'(0)
    CT t3 = t * t * t;
    CT f(1.0), termf(1.0);
    CT g = t, termg = t;
    for (int k = 0; k < 60; ++k) {
        termf = termf * t3 * (1.0 / ((3.0 * k + 2.0) * (3.0 * k + 3.0)));
        f = f + termf;
        termg = termg * t3 * (1.0 / ((3.0 * k + 3.0) * (3.0 * k + 4.0)));
        g = g + termg;
        using std::abs;
        if (abs(value_of(termf)) + abs(value_of(termg)) < 1e-19) break;
    }
    return c1 * f - c2 * g;
}

inline double airy_ai(double t) {
    if (std::abs(t) > 20.0) throw range_error("airy_ai: |t| > 20 outside documented region");
    if (t >= 4.0) {
        // Ai(t) = (1/pi) sqrt(t/3) K_{1/3}((2/3) t^{3/2}); the series loses
        // digits to cancellation here, the quadrature does not
        double zeta = 2.0 / 3.0 * std::pow(t, 1.5);
        return std::sqrt(t / 3.0) / kPi * bessel_k_real(1.0 / 3.0, zeta);
    }
    if (t >= -8.0) {
        std::complex<double> r = airy_ai_series(std::complex<double>(t, 0.0));
        return r.real();
    }
    // oscillatory asymptotics, u_k = Gamma(3k+1/2) / (54^k k! Gamma(k+1/2));
    // DLMF 9.7.9
    auto uk_next = [](double u, int k) {
        return u * (3.0 * k + 0.5) * (3.0 * k + 1.5) * (3.0 * k + 2.5) /
               (54.0 * (k + 1.0) * (k + 0.5));
    };
    double s = -t;
    double zeta = 2.0 / 3.0 * std::pow(s, 1.5);
    double sum_even = 0.0, sum_odd = 0.0;
    double u = 1.0;
    for (int k = 0; k < 24; ++k) {
        double term = u / std::pow(zeta, k);
        if (k % 2 == 0)
            sum_even += ((k / 2) % 2) ? -term : term;
        else
            sum_odd += (((k - 1) / 2) % 2) ? -term : term;
        if (k > 0 && std::abs(term) < 1e-17) break;
        u = uk_next(u, k);
    }
    double phase = zeta - kPi / 4.0;
    return (std::cos(phase) * sum_even + std::sin(phase) * sum_odd) /
           (std::sqrt(kPi) * std::pow(s, 0.25));
}

}  // namespace s3c::sf
