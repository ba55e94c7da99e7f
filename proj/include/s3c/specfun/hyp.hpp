#pragma once

// Gauss and confluent hypergeometric functions. Arguments are templated so the
// same series drive plain complex evaluation and Dual2-based ODE residuals;
// parameters stay complex constants.
//
// Reliable regions (calls outside throw range_error):
//   hyp2f1:  terminating series always; otherwise |z| <= 0.6 direct,
//            0.6 < Re z < 1 via the z -> 1-z connection (needs c-a-b
//            nonintegral), z < -0.6 via Pfaff; |z| >= 1 rejected.
//   hyp1f1:  entire; direct series, practical for |z| <= 50.

#include <cmath>
#include <complex>

#include "s3c/dual.hpp"
#include "s3c/errors.hpp"
#include "s3c/specfun/gamma.hpp"

namespace s3c::sf {

inline bool is_nonpositive_int(cd x, double tol = 1e-12) {
    return std::abs(x.imag()) < tol && x.real() < 0.5 &&
           std::abs(x.real() - std::round(x.real())) < tol;
}
inline bool is_integer(cd x, double tol = 1e-12) {
    return std::abs(x.imag()) < tol && std::abs(x.real() - std::round(x.real())) < tol;
}

// complex power helpers usable on duals (principal branch via exp/log)
inline cd pow_c(cd base, cd expo) { return std::pow(base, expo); }
template <class T>
Dual2<T> pow_c(const Dual2<T>& base, cd expo) {
    return exp(log(base) * T(expo));
}

namespace detail {

template <class CT>
CT hyp2f1_series(cd a, cd b, cd c, const CT& z, int max_terms = 4000) {
    CT term(cd(1.0, 0.0));
    CT sum = term;
    for (int k = 0; k < max_terms; ++k) {
        cd ratio = (a + static_cast<double>(k)) * (b + static_cast<double>(k)) /
                   ((c + static_cast<double>(k)) * static_cast<double>(k + 1));
        if (std::abs(ratio) == 0.0) return sum;  // terminating polynomial
        term = term * z * ratio;
        sum = sum + term;
        using std::abs;
        if (abs(value_of(term)) < 1e-17 * (1.0 + abs(value_of(sum)))) return sum;
    }
    throw numerical_error("hyp2f1: series did not converge");
}

}  // namespace detail

template <class CT>
CT hyp2f1(cd a, cd b, cd c, const CT& z) {
    if (is_nonpositive_int(c) && !(is_nonpositive_int(a) && a.real() >= c.real()) &&
        !(is_nonpositive_int(b) && b.real() >= c.real()))
        throw range_error("hyp2f1: c is a nonpositive integer");

    // terminating cases are polynomials, fine anywhere
    if (is_nonpositive_int(a) || is_nonpositive_int(b))
        return detail::hyp2f1_series(a, b, c, z);

    cd zv = value_of(z);
    if (std::abs(zv) <= 0.6) return detail::hyp2f1_series(a, b, c, z);

    if (zv.real() < 0.0) {
        // Pfaff: 2F1(a,b;c;z) = (1-z)^-a 2F1(a, c-b; c; z/(z-1)); the mapped
        // argument lands in [0,1) and re-dispatches
        CT w = z / (z - 1.0);
        return pow_c(1.0 - z, -a) * hyp2f1(a, c - b, c, w);
    }

    if (zv.real() < 1.0 && std::abs(zv.imag()) < 0.4) {
        // connection at z=1 (DLMF 15.8.4); requires c-a-b not an integer
        cd cab = c - a - b;
        if (is_integer(cab))
            throw range_error("hyp2f1: z near 1 with integral c-a-b unsupported");
        // reciprocal gammas: a coefficient whose denominator hits a pole drops
        // out and the surviving series terminates
        cd g1 = gamma_complex(c) * gamma_complex(cab) * rgamma(c - a) * rgamma(c - b);
        cd g2 = gamma_complex(c) * gamma_complex(-cab) * rgamma(a) * rgamma(b);
        CT omz = 1.0 - z;
        return g1 * detail::hyp2f1_series(a, b, 1.0 - cab, omz) +
               g2 * pow_c(omz, cab) * detail::hyp2f1_series(c - a, c - b, 1.0 + cab, omz);
    }
    throw range_error("hyp2f1: argument outside documented region");
}

template <class CT>
CT hyp1f1(cd a, cd c, const CT& z, int max_terms = 4000) {
    if (is_nonpositive_int(c) && !(is_nonpositive_int(a) && a.real() >= c.real()))
        throw range_error("hyp1f1: c is a nonpositive integer");
    CT term(cd(1.0, 0.0));
    CT sum = term;
    for (int k = 0; k < max_terms; ++k) {
        cd ratio = (a + static_cast<double>(k)) /
                   ((c + static_cast<double>(k)) * static_cast<double>(k + 1));
        if (std::abs(ratio) == 0.0) return sum;
        term = term * z * ratio;
        sum = sum + term;
        using std::abs;
        if (abs(value_of(term)) < 1e-17 * (1.0 + abs(value_of(sum)))) return sum;
    }
    throw numerical_error("hyp1f1: series did not converge");
}

}  // namespace s3c::sf
