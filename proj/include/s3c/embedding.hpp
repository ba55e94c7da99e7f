#pragma once

// Coordinate-chart operations: embed, constraint residual, bilinear 4-dot,
// seeded interior sampling, and the algebraic sum-of-squares identities for
// systems 17-21.

#include <array>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "s3c/charts.hpp"
#include "s3c/errors.hpp"
#include "s3c/rng.hpp"

namespace s3c {

inline void validate_domain(const CoordTriple& p) {
    const ChartInfo& info = chart_info(p.system);
    for (int a = 0; a < 3; ++a) {
        double lo = info.domain[a][0], hi = info.domain[a][1];
        if (!(p.u[a] > lo - 1e-15) || !(p.u[a] < hi + 1e-15))
            throw domain_error("system " + std::to_string(p.system) + ": coordinate " +
                               info.coords[a] + "=" + std::to_string(p.u[a]) +
                               " outside (" + std::to_string(lo) + ", " +
                               std::to_string(hi) + ")");
    }
}

inline CPoint4 embed(const CoordTriple& p) {
    const ChartInfo& info = chart_info(p.system);
    if (!info.embedding)
        throw capability_error("system " + std::to_string(p.system) +
                               " has no embedding capability");
    validate_domain(p);
    std::array<cd, 3> u = {cd(p.u[0]), cd(p.u[1]), cd(p.u[2])};
    auto z = chartdef::embed_ct(p.system, u);
    return {z[0], z[1], z[2], z[3]};
}

inline double constraint_residual(const CPoint4& q) {
    cd s = q.z1 * q.z1 + q.z2 * q.z2 + q.z3 * q.z3 + q.z4 * q.z4;
    return std::abs(s - 1.0);
}

inline cd dot4(const CPoint4& a, const CPoint4& b) {
    return a.z1 * b.z1 + a.z2 * b.z2 + a.z3 * b.z3 + a.z4 * b.z4;
}

inline std::vector<CoordTriple> domain_sample(int system, int n, std::uint64_t seed) {
    if (n < 1) throw domain_error("domain_sample: n must be >= 1");
    const ChartInfo& info = chart_info(system);
    std::vector<CoordTriple> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int idx = 0; idx < n; ++idx) {
        CoordTriple p;
        p.system = system;
        for (int a = 0; a < 3; ++a)
            p.u[a] = uniform(seed, static_cast<std::uint64_t>(system),
                             static_cast<std::uint64_t>(idx), static_cast<std::uint64_t>(a),
                             info.sample_box[a][0], info.sample_box[a][1]);
        out.push_back(p);
    }
    return out;
}

// ---- systems 17-21: printed quadratic combinations -------------------------

namespace detail {

inline void require_order(bool ok, const std::string& msg) {
    if (!ok) throw domain_error(msg);
}

}  // namespace detail

// |sum z_i^2 - 1| evaluated from the printed quadratic combinations (with the
// registry's sign errata applied), no square roots taken.
inline double constraint_identity(int system, const std::array<double, 3>& rho) {
    const double r1 = rho[0], r2 = rho[1], r3 = rho[2];
    const double e1 = r1 + r2 + r3;
    const double e2 = r1 * r2 + r1 * r3 + r2 * r3;
    const double e3 = r1 * r2 * r3;
    switch (system) {
        case 17: {
            double a = chart_info(17).pa, b = chart_info(17).pb;
            detail::require_order(0 < r1 && r1 < 1 && 1 < r2 && r2 < b && b < r3 && r3 < a,
                                  "system 17: need 0 < rho1 < 1 < rho2 < b < rho3 < a");
            double z1s = e3 / (a * b);
            double z2s = -(r1 - 1) * (r2 - 1) * (r3 - 1) / ((a - 1) * (b - 1));
            double z3s = (r1 - b) * (r2 - b) * (r3 - b) / ((a - b) * (b - 1) * b);
            double z4s = -(r1 - a) * (r2 - a) * (r3 - a) / ((a - b) * (a - 1) * a);
            return std::abs(z1s + z2s + z3s + z4s - 1.0);
        }
        case 18: {
            double a = chart_info(18).pa;
            detail::require_order(0 < r1 && r1 < 1 && 1 < r2 && r2 < a && a < r3,
                                  "system 18: need 0 < rho1 < 1 < rho2 < a < rho3");
            // sign-flipped printed combinations (see registry erratum)
            double z12 = -((a + 1) * e3 - a * e2) / (a * a);
            double z3s = (r1 - 1) * (r2 - 1) * (r3 - 1) / (a - 1);
            double z4s = -(r1 - a) * (r2 - a) * (r3 - a) / (a * a * (a - 1));
            return std::abs(z12 + z3s + z4s - 1.0);
        }
        case 19: {
            detail::require_order(0 < r1 && r1 < r2 && r2 < 1 && 1 < r3,
                                  "system 19: need 0 < rho1 < rho2 < 1 < rho3");
            double z12 = 2 * e3 - e2 + 1;   // printed, consistent as is
            double z34 = e2 - 2 * e3;
            return std::abs(z12 + z34 - 1.0);
        }
        case 20: {
            detail::require_order(0 < r1 && r1 < r2 && r2 < 1 && 1 < r3,
                                  "system 20: need 0 < rho1 < rho2 < 1 < rho3");
            // lines 3 and 4 only; line 1 is garbled in print (registry note)
            double z123 = e3 - e2 + e1;
            double z4s = -(r1 - 1) * (r2 - 1) * (r3 - 1);
            return std::abs(z123 + z4s - 1.0);
        }
        case 21: {
            detail::require_order(0 < r1 && r1 < r2 && r2 < r3,
                                  "system 21: need 0 < rho1 < rho2 < rho3");
            // A,C,D from the printed lines; B from the next Taylor coefficient of
            // sqrt(2 Q(e)) around e=0, Q(e) = prod(rho_i - e).
            double q0 = 2 * e3, q1 = -2 * e2, q2 = 2 * e1, q3 = -2.0;
            double A = std::sqrt(q0);
            double C = -e2 / A;
            double D = (C * C / 2 - e1) / A;
            double a0 = std::sqrt(q0);
            double a1 = q1 / (2 * a0);
            double a2 = (q2 - a1 * a1) / (2 * a0);
            double a3 = (q3 - 2 * a1 * a2) / (2 * a0);
            double B = -a3;
            return std::abs(A * B + C * D - 1.0);
        }
        default:
            throw capability_error("constraint_identity: system must be 17..21");
    }
}

}  // namespace s3c
