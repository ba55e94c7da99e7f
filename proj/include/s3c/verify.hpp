#pragma once

// Report-producing verification drivers shared by the CLI and the acceptance
// suite. One report per system; sub-deviations are folded into max_abs_err
// scaled to the headline tolerance so that pass <=> max_abs_err <= tol holds
// exactly, with the raw sub-values spelled out in the notes.

#include <cstdio>
#include <string>

#include "s3c/geometry.hpp"
#include "s3c/report.hpp"

namespace s3c {

namespace detail {
inline std::string fmt_g(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}
}  // namespace detail

inline VerificationReport metric_agreement(int system, int n_points, std::uint64_t seed,
                                           double tol = 1e-9, double gamma_tol = 1e-8) {
    const ChartInfo& info = chart_info(system);
    VerificationReport r;
    r.system = system;
    r.n_points = n_points;
    r.seed = seed;
    r.tol = tol;
    r.params = {{"points", std::to_string(n_points)},
                {"seed", std::to_string(seed)},
                {"tol", detail::fmt_g(tol)}};
    r.notes = info.errata;
    if (info.embedding) {
        r.check = "metric-agreement";
        AgreementResult a = metric_agreement_sweep(system, n_points, seed);
        const double ctol = 1e-12, otol = 1e-12, stol = 1e-10;
        r.max_abs_err = a.max_metric_dev;
        r.max_abs_err = std::max(r.max_abs_err, a.max_gamma_dev * (tol / gamma_tol));
        r.max_abs_err = std::max(r.max_abs_err, a.max_constraint * (tol / ctol));
        r.max_abs_err = std::max(r.max_abs_err, a.max_offdiag * (tol / otol));
        r.max_abs_err = std::max(r.max_abs_err, a.max_sqrtg_sq_dev * (tol / stol));
        r.max_rel_err = r.max_abs_err / tol;
        r.pass = r.max_abs_err <= tol;
        r.notes.push_back("metric entrywise dev " + detail::fmt_g(a.max_metric_dev) +
                          " (tol " + detail::fmt_g(tol) + ")");
        r.notes.push_back((info.gamma_printed ? std::string("Gamma vs printed closed form dev ")
                                              : std::string("Gamma via d ln sqrt(g) dev ")) +
                          detail::fmt_g(a.max_gamma_dev) + " (tol " + detail::fmt_g(gamma_tol) +
                          ")");
        r.notes.push_back("constraint residual " + detail::fmt_g(a.max_constraint) +
                          " (tol 1e-12)");
        r.notes.push_back("orthogonality offdiag " + detail::fmt_g(a.max_offdiag) +
                          " (tol 1e-12)");
        r.notes.push_back("sqrt(g)^2 vs det rel dev " + detail::fmt_g(a.max_sqrtg_sq_dev) +
                          " (tol 1e-10)");
    } else {
        r.check = "constraint-identity";
        const double idtol = 1e-10;
        r.tol = idtol;
        double worst = 0.0, sdev = 0.0;
        for (const CoordTriple& p : domain_sample(system, n_points, seed)) {
            worst = std::max(worst, constraint_identity(system, p.u));
            MetricSample m = metric_closed_form(p);
            cd det = m.g[0][0] * m.g[1][1] * m.g[2][2];
            sdev = std::max(sdev, std::abs(m.sqrt_g * m.sqrt_g - det) / std::abs(det));
        }
        r.max_abs_err = std::max(worst, sdev * (idtol / 1e-10));
        r.max_rel_err = r.max_abs_err / idtol;
        r.pass = r.max_abs_err <= idtol;
        r.notes.push_back("sum-of-squares identity dev " + detail::fmt_g(worst) +
                          " (tol 1e-10)");
        r.notes.push_back("closed-form sqrt(g)^2 vs det rel dev " + detail::fmt_g(sdev) +
                          " (tol 1e-10)");
    }
    return r;
}

}  // namespace s3c
