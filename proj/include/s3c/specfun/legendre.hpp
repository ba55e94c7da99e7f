#pragma once

// Associated Legendre functions of complex degree/order via the Gauss
// hypergeometric representation,
//   P_nu^mu(x) = [(1+x)/(1-x)]^{mu/2} 2F1(-nu, nu+1; 1-mu; (1-x)/2) / Gamma(1-mu),
// Ferrers branch on (-1,1); for x > 1 the base flips to (x+1)/(x-1)
// (DLMF 14.3.6). Q_nu^{1/2} on the cosh domain has an elementary closed form.

#include <cmath>
#include <complex>

#include "s3c/dual.hpp"
#include "s3c/errors.hpp"
#include "s3c/specfun/gamma.hpp"
#include "s3c/specfun/hyp.hpp"

namespace s3c::sf {

template <class CT>
CT legendre_p(cd nu, cd mu, const CT& x) {
    cd xv = value_of(x);
    if (std::abs(xv.imag()) > 1e-14)
        throw range_error("legendre_p: argument must be real-valued");
    double xr = xv.real();
    if (is_nonpositive_int(1.0 - mu))
        throw range_error("legendre_p: 1-mu is a nonpositive integer; use a regularized form");
    CT base;
    if (xr > -1.0 && xr < 1.0)
        base = (1.0 + x) / (1.0 - x);
    else if (xr > 1.0)
        base = (x + 1.0) / (x - 1.0);
    else
        throw range_error("legendre_p: argument must lie in (-1,1) or (1,inf)");
    CT z = (1.0 - x) * 0.5;
    cd pref = 1.0 / gamma_complex(1.0 - mu);
    return pref * pow_c(base, mu * 0.5) * hyp2f1(-nu, nu + 1.0, 1.0 - mu, z);
}

// Q_nu^{1/2}(cosh d) = i sqrt(pi/(2 sinh d)) e^{-(nu+1/2) d}, u = cosh d > 1.
// Exact to roundoff; the convention (the i factor) matches the x>1 branch.
inline cd legendre_q_half(cd nu, double u) {
    if (!(u > 1.0)) throw range_error("legendre_q_half: argument must exceed 1");
    double d = std::acosh(u);
    const double pi = 3.14159265358979323846;
    cd i(0.0, 1.0);
    return i * std::sqrt(pi / (2.0 * std::sinh(d))) * std::exp(-(nu + 0.5) * d);
}

}  // namespace s3c::sf
