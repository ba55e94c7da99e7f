#pragma once

// Invariant distances, heat kernels (Gegenbauer sum vs Theta closed form) and
// Green functions on the sphere/hyperboloid real sections, all in imaginary
// time (T = -i tau). C_J^1(cos psi) = sin((J+1)psi)/sin(psi) away from the
// axis, by recurrence otherwise.

#include <array>
#include <cmath>
#include <complex>
#include <vector>

#include "s3c/dual.hpp"
#include "s3c/errors.hpp"
#include "s3c/specfun/legendre.hpp"
#include "s3c/specfun/theta.hpp"

namespace s3c {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPiSq = 19.739208802178717238;

// Eq.-style three-angle formula for cos psi between two spherical-chart points
// (chi, theta, phi); equals dot4 of the embeddings.
inline double cos_psi_spherical(const std::array<double, 3>& a,
                                const std::array<double, 3>& b) {
    return std::cos(a[0]) * std::cos(b[0]) +
           std::sin(a[0]) * std::sin(b[0]) *
               (std::cos(a[1]) * std::cos(b[1]) +
                std::sin(a[1]) * std::sin(b[1]) * std::cos(b[2] - a[2]));
}

// cosh d between two spherical-chart points (tau, theta, phi) on the
// two-sheeted hyperboloid; >= 1 with equality iff coincident
inline double cosh_d_hyperboloid(const std::array<double, 3>& a,
                                 const std::array<double, 3>& b) {
    if (a[0] < 0 || b[0] < 0)
        throw domain_error("cosh_d_hyperboloid: radial coordinates must be >= 0");
    return std::cosh(a[0]) * std::cosh(b[0]) -
           std::sinh(a[0]) * std::sinh(b[0]) *
               (std::cos(a[1]) * std::cos(b[1]) +
                std::sin(a[1]) * std::sin(b[1]) * std::cos(b[2] - a[2]));
}

namespace detail {

inline double gegenbauer1(int n, double x) {  // C_n^1, Chebyshev-U recurrence
    double p0 = 1.0, p1 = 2.0 * x;
    if (n == 0) return p0;
    for (int k = 1; k < n; ++k) {
        double p2 = 2.0 * x * p1 - p0;
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

}  // namespace detail

// K(psi, tau) = (1/2 pi^2) sum (J+1) C_J^1(cos psi) e^{-tau J(J+2)/2}.
// j_max = 0 picks the truncation from the geometric tail bound (< 1e-14).
inline double heat_kernel_spectral(double cospsi, double tau, int j_max = 0) {
    if (!(tau > 0.0)) throw domain_error("heat_kernel_spectral: tau must be positive");
    if (!(std::abs(cospsi) <= 1.0))
        throw domain_error("heat_kernel_spectral: |cos psi| must be <= 1");
    if (j_max <= 0) j_max = static_cast<int>(std::ceil(std::sqrt(80.0 / tau))) + 12;
    double sum = 0.0;
    double c0 = 1.0, cm = 0.0;  // C_J^1 recurrence
    for (int J = 0; J <= j_max; ++J) {
        sum += (J + 1.0) * c0 * std::exp(-tau * J * (J + 2.0) / 2.0);
        double cn = 2.0 * cospsi * c0 - cm;
        cm = c0;
        c0 = cn;
    }
    return sum / kTwoPiSq;
}

// closed Theta form; outside (0, pi) the spectral form is evaluated instead
// and *fell_back is set
inline double heat_kernel_theta(double psi, double tau, bool* fell_back = nullptr) {
    if (!(tau > 0.0)) throw domain_error("heat_kernel_theta: tau must be positive");
    if (fell_back) *fell_back = false;
    double s = std::sin(psi);
    if (std::abs(s) < 1e-12) {
        if (fell_back) *fell_back = true;
        return heat_kernel_spectral(std::cos(psi), tau);
    }
    // e^{tau/2}/(4 pi^2) d/dcos(psi) Theta3(psi/2 | i tau / 2 pi),
    // the derivative taken as (-1/sin psi) d/dpsi via a dual pass
    cdual p = cdual::var(cd(psi), 0);
    cdual th = sf::theta3(p * 0.5, cd(0.0, tau / (2.0 * kPi)));
    cd dpsi = th.g[0];
    cd val = std::exp(tau / 2.0) / (4.0 * kPi * kPi) * (-1.0 / s) * dpsi;
    return val.real();
}

// G(psi, E) = (1/2 pi) sin[(pi-psi)(gamma+1/2)] / (sin[pi(gamma+1/2)] sin psi),
// gamma = -1/2 + sqrt(2E+1); real for all E below the spectrum.
inline double green_sphere(double psi, double E) {
    if (!(psi > 0.0 && psi < kPi)) throw domain_error("green_sphere: psi must be in (0,pi)");
    // spectrum poles at E = J(J+2)/2
    double s = std::sqrt(std::max(0.0, 2.0 * E + 1.0));
    if (2.0 * E + 1.0 >= 0.0) {
        double nearest = std::round(s);
        if (nearest >= 1.0 && std::abs(s - nearest) < 1e-9)
            throw numerical_error("green_sphere: E is at (or within 1e-9 of) a spectrum pole");
    }
    cd sq = std::sqrt(cd(2.0 * E + 1.0, 0.0));
    if (std::abs(sq) < 1e-8) {
        // limit sin((pi-psi)s)/sin(pi s) -> (pi-psi)/pi as s -> 0
        return (kPi - psi) / (2.0 * kPi * kPi * std::sin(psi));
    }
    cd val = std::sin((kPi - psi) * sq) / (std::sin(kPi * sq) * std::sin(psi)) / (2.0 * kPi);
    return val.real();
}

// eigen-expansion of the resolvent with the tail split off analytically:
//   2n/(n^2-a) = 2/n + 2a/n^3 + 2a^2/(n^3(n^2-a)),  a = 2E+1, n = J+1,
//   sum 2 sin(n psi)/n   = pi - psi,
//   sum 2 sin(n psi)/n^3 = psi^3/6 - pi psi^2/2 + pi^2 psi/3.
inline double resolvent_spectral(double psi, double E, int j_max = 400) {
    if (!(psi > 0.0 && psi < kPi))
        throw domain_error("resolvent_spectral: psi must be in (0,pi)");
    if (j_max < 1) throw domain_error("resolvent_spectral: J_max must be >= 1");
    // conditioning guard near poles
    if (E > -0.5) {
        double jr = std::round(std::sqrt(2.0 * E + 1.0) - 1.0);
        for (double J : {jr - 1.0, jr, jr + 1.0})
            if (J >= 0 && std::abs(E - 0.5 * J * (J + 2.0)) < 1e-6)
                throw numerical_error("resolvent_spectral: |E - E_J| < 1e-6, ill-conditioned");
    }
    double a = 2.0 * E + 1.0;
    double tail1 = kPi - psi;
    double tail3 = psi * psi * psi / 6.0 - kPi * psi * psi / 2.0 + kPi * kPi * psi / 3.0;
    double rem = 0.0;
    for (int J = 0; J <= j_max; ++J) {
        double n = J + 1.0;
        rem += 2.0 * a * a * std::sin(n * psi) / (n * n * n * (n * n - a));
    }
    return (tail1 + a * tail3 + rem) / (2.0 * kPi * kPi * std::sin(psi));
}

// G_L3(d, E) = (-1/pi^2 sinh d) Q^{1/2}_{-1/2 - i sqrt(2E-1)}(cosh d)
inline cd green_hyperboloid(double d, double E) {
    if (!(d > 0.0)) throw domain_error("green_hyperboloid: d must be positive");
    cd ptil = std::sqrt(cd(2.0 * E - 1.0, 0.0));
    cd nu = cd(-0.5, 0.0) - cd(0.0, 1.0) * ptil;
    return (-1.0 / (kPi * kPi * std::sinh(d))) * sf::legendre_q_half(nu, std::cosh(d));
}

// roots of 1/G: bracketed bisection on h(E) = sin(pi sqrt(2E+1))
inline std::vector<double> pole_scan(double e_lo, double e_hi, int n_poles) {
    if (n_poles < 1) throw domain_error("pole_scan: n_poles must be >= 1");
    auto h = [](double E) { return std::sin(kPi * std::sqrt(std::max(0.0, 2.0 * E + 1.0))); };
    std::vector<double> roots;
    // below E = -1/2 the argument of the root function is clamped; the zero of
    // sin at gamma+1/2 = 0 is not a pole (the numerator vanishes with it), so
    // scanning starts strictly above it
    e_lo = std::max(e_lo, -0.45);
    const int grid = 4000;
    double prev = h(e_lo);
    double prev_e = e_lo;
    for (int k = 1; k <= grid && static_cast<int>(roots.size()) < n_poles; ++k) {
        double e = e_lo + (e_hi - e_lo) * k / grid;
        double cur = h(e);
        if (prev * cur < 0.0) {
            double lo = prev_e, hi = e;
            for (int it = 0; it < 200; ++it) {
                double mid = 0.5 * (lo + hi);
                if (h(lo) * h(mid) <= 0.0)
                    hi = mid;
                else
                    lo = mid;
                if (hi - lo < 1e-13) break;
            }
            roots.push_back(0.5 * (lo + hi));
        }
        prev = cur;
        prev_e = e;
    }
    if (static_cast<int>(roots.size()) < n_poles)
        throw domain_error("pole_scan: range does not cover the requested number of poles");
    roots.resize(static_cast<std::size_t>(n_poles));
    return roots;
}

}  // namespace s3c
