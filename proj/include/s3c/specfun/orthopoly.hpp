#pragma once

// Classical orthogonal polynomials by three-term recurrence. The recurrences
// are exact for any real parameters (including the negative-integer Laguerre
// orders the parabolic chart needs), so no parameter gymnastics here.

#include <cmath>

#include "s3c/dual.hpp"
#include "s3c/errors.hpp"

namespace s3c::sf {

// Jacobi P_n^{(a,b)}(x)
template <class CT>
CT jacobi_p(int n, double a, double b, const CT& x) {
    if (n < 0) throw range_error("jacobi_p: n < 0");
    CT p0(1.0);
    if (n == 0) return p0;
    CT p1 = 0.5 * (a - b) + (0.5 * (a + b) + 1.0) * x;
    for (int k = 1; k < n; ++k) {
        double k1 = k + 1.0;
        double c1 = 2.0 * k1 * (k1 + a + b) * (2.0 * k + a + b);
        double c2 = (2.0 * k + a + b + 1.0) * (a * a - b * b);
        double c3 = (2.0 * k + a + b) * (2.0 * k + a + b + 1.0) * (2.0 * k + a + b + 2.0);
        double c4 = 2.0 * (k + a) * (k + b) * (2.0 * k + a + b + 2.0);
        CT p2 = ((c2 + c3 * x) * p1 - c4 * p0) * (1.0 / c1);
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

// Gegenbauer C_n^lambda(x)
template <class CT>
CT gegenbauer_c(int n, double lambda, const CT& x) {
    if (n < 0) throw range_error("gegenbauer_c: n < 0");
    CT p0(1.0);
    if (n == 0) return p0;
    CT p1 = 2.0 * lambda * x;
    for (int k = 1; k < n; ++k) {
        CT p2 = (2.0 * (k + lambda) * x * p1 - (k + 2.0 * lambda - 1.0) * p0) *
                (1.0 / (k + 1.0));
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

// generalized Laguerre L_n^{(alpha)}(x); alpha may be any real, including
// negative integers
template <class CT>
CT laguerre_l(int n, double alpha, const CT& x) {
    if (n < 0) throw range_error("laguerre_l: n < 0");
    CT p0(1.0);
    if (n == 0) return p0;
    CT p1 = 1.0 + alpha - x;
    for (int k = 1; k < n; ++k) {
        CT p2 = ((2.0 * k + 1.0 + alpha - x) * p1 - (k + alpha) * p0) * (1.0 / (k + 1.0));
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

enum class PolyFamily { jacobi, gegenbauer, laguerre };

// spec-facing real evaluation: family dispatch with two parameters (Jacobi
// uses both, the others use the first)
inline double orthopoly_eval(PolyFamily fam, int n, double p1, double p2, double x) {
    switch (fam) {
        case PolyFamily::jacobi:
            if (p1 <= -1.0 || p2 <= -1.0)
                throw range_error("orthopoly_eval: jacobi parameters must be > -1");
            return jacobi_p(n, p1, p2, x);
        case PolyFamily::gegenbauer:
            if (p1 <= -0.5) throw range_error("orthopoly_eval: gegenbauer lambda must be > -1/2");
            return gegenbauer_c(n, p1, x);
        case PolyFamily::laguerre:
            if (p1 <= -1.0) throw range_error("orthopoly_eval: laguerre alpha must be > -1");
            if (x < 0.0) throw range_error("orthopoly_eval: laguerre x must be >= 0");
            return laguerre_l(n, p1, x);
    }
    throw range_error("orthopoly_eval: unknown family");
}

}  // namespace s3c::sf
