#pragma once

// Jacobi theta_3 in the convention fixed for the kernel identity:
//   Theta3(v|tau) = sum_{n in Z} exp(i pi tau n^2 + 2 i n v),  Im tau > 0,
// truncated once terms drop below 1e-16. Templated so the heat-kernel
// derivative can run on duals.

#include <cmath>
#include <complex>

#include "s3c/dual.hpp"
#include "s3c/errors.hpp"

namespace s3c::sf {

template <class CT>
CT theta3(const CT& v, std::complex<double> tau, int* terms_used = nullptr) {
    if (!(tau.imag() > 0.0)) throw range_error("theta3: requires Im tau > 0");
    std::complex<double> ipitau = std::complex<double>(0.0, 1.0) * 3.14159265358979323846 * tau;
    CT sum(1.0);
    int n = 1;
    for (; n <= 400; ++n) {
        std::complex<double> qn = std::exp(ipitau * static_cast<double>(n) * static_cast<double>(n));
        if (std::abs(qn) < 1e-16) break;
        sum = sum + 2.0 * qn * cos(v * (2.0 * n));
        // cos of a dual/complex arg stays bounded on the real sections used here
    }
    if (n > 400) throw numerical_error("theta3: series did not reach tail bound");
    if (terms_used) *terms_used = n;
    return sum;
}

}  // namespace s3c::sf
