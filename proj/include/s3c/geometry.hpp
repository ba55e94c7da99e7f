#pragma once

// Metric tensors, sqrt(g), Gamma factors and the Laplace-Beltrami action,
// derived from the charts two independent ways: exact dual-number
// differentiation of the embedding, and the closed forms carried by the
// registry. The agreement sweep is the artifact's core check.

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "s3c/charts.hpp"
#include "s3c/dual.hpp"
#include "s3c/embedding.hpp"
#include "s3c/errors.hpp"

namespace s3c {

struct MetricSample {
    std::array<std::array<cd, 3>, 3> g{};
    cd sqrt_g{};
    std::array<cd, 3> gamma{};
};

// twice-differentiable complex amplitude on the chart interior
using ScalarField = std::function<cdual(const std::array<cdual, 3>&)>;

namespace detail {

inline std::array<cdual, 3> seed_coords(const CoordTriple& p) {
    return {cdual::var(cd(p.u[0]), 0), cdual::var(cd(p.u[1]), 1),
            cdual::var(cd(p.u[2]), 2)};
}

struct MetricData {
    std::array<std::array<cd, 3>, 3> g{};       // g_ab
    std::array<std::array<cd, 3>, 3> dg_diag{};  // dg_diag[c][a] = d_c g_aa
};

inline MetricData metric_data_from_embedding(const CoordTriple& p) {
    const ChartInfo& info = chart_info(p.system);
    if (!info.embedding)
        throw capability_error("system " + std::to_string(p.system) +
                               " has no embedding capability");
    validate_domain(p);
    auto z = chartdef::embed_ct(p.system, seed_coords(p));
    MetricData md;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            cd s = 0.0;
            for (int i = 0; i < 4; ++i) s += z[i].g[a] * z[i].g[b];
            md.g[a][b] = s;
        }
    for (int c = 0; c < 3; ++c)
        for (int a = 0; a < 3; ++a) {
            cd s = 0.0;
            for (int i = 0; i < 4; ++i) s += 2.0 * z[i].hess(c, a) * z[i].g[a];
            md.dg_diag[c][a] = s;
        }
    return md;
}

inline cd det3(const std::array<std::array<cd, 3>, 3>& g) {
    return g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1]) -
           g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0]) +
           g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0]);
}

}  // namespace detail

// 4x3 matrix dz_i/du^a, exact to roundoff
inline std::array<std::array<cd, 3>, 4> jacobian(const CoordTriple& p) {
    const ChartInfo& info = chart_info(p.system);
    if (!info.embedding)
        throw capability_error("system " + std::to_string(p.system) +
                               " has no embedding capability");
    validate_domain(p);
    auto z = chartdef::embed_ct(p.system, detail::seed_coords(p));
    std::array<std::array<cd, 3>, 4> J;
    for (int i = 0; i < 4; ++i)
        for (int a = 0; a < 3; ++a) J[i][a] = z[i].g[a];
    return J;
}

inline MetricSample metric_from_embedding(const CoordTriple& p) {
    auto md = detail::metric_data_from_embedding(p);
    MetricSample m;
    m.g = md.g;
    cd det = detail::det3(md.g);
    m.sqrt_g = std::sqrt(det);
    // Gamma_a = d_a det / (2 det), branch-free (diagonal metric assumed for the
    // derivative, which the orthogonality check enforces)
    for (int a = 0; a < 3; ++a) {
        cd dd = 0.0;
        for (int b = 0; b < 3; ++b) {
            cd cof = 1.0;
            for (int c = 0; c < 3; ++c)
                if (c != b) cof *= md.g[c][c];
            dd += md.dg_diag[a][b] * cof;
        }
        m.gamma[a] = dd / (2.0 * det);
    }
    return m;
}

inline MetricSample metric_closed_form(const CoordTriple& p) {
    const ChartInfo& info = chart_info(p.system);
    if (!info.metric_closed_form)
        throw capability_error("system " + std::to_string(p.system) +
                               " has no closed-form metric");
    validate_domain(p);
    std::array<cd, 3> u = {cd(p.u[0]), cd(p.u[1]), cd(p.u[2])};
    auto cm = chartdef::metric_closed_ct(p.system, u);
    MetricSample m;
    for (int a = 0; a < 3; ++a) m.g[a][a] = cm.gdiag[a];
    m.sqrt_g = cm.sqrt_g;
    m.gamma = cm.gamma;
    return m;
}

struct AgreementResult {
    double max_metric_dev = 0.0;   // entrywise |g_emb - g_closed|
    double max_gamma_dev = 0.0;    // |Gamma_emb - Gamma_closed|
    double max_offdiag = 0.0;      // orthogonality residual
    double max_constraint = 0.0;   // |sum z^2 - 1| over the samples
    double max_sqrtg_sq_dev = 0.0; // relative |(sqrt g)^2 - det g|, both routes
    int n_points = 0;
};

inline AgreementResult metric_agreement_sweep(int system, int n, std::uint64_t seed) {
    AgreementResult r;
    r.n_points = n;
    for (const CoordTriple& p : domain_sample(system, n, seed)) {
        MetricSample me = metric_from_embedding(p);
        MetricSample mc = metric_closed_form(p);
        r.max_constraint = std::max(r.max_constraint, constraint_residual(embed(p)));
        cd det_e = detail::det3(me.g);
        for (int a = 0; a < 3; ++a) {
            for (int b = 0; b < 3; ++b) {
                double dev = std::abs(me.g[a][b] - mc.g[a][b]);
                r.max_metric_dev = std::max(r.max_metric_dev, dev);
                if (a != b) r.max_offdiag = std::max(r.max_offdiag, std::abs(me.g[a][b]));
            }
            r.max_gamma_dev = std::max(r.max_gamma_dev, std::abs(me.gamma[a] - mc.gamma[a]));
        }
        double se = std::abs(me.sqrt_g * me.sqrt_g - det_e) / std::max(1e-300, std::abs(det_e));
        cd det_c = mc.g[0][0] * mc.g[1][1] * mc.g[2][2];
        double sc = std::abs(mc.sqrt_g * mc.sqrt_g - det_c) / std::max(1e-300, std::abs(det_c));
        r.max_sqrtg_sq_dev = std::max({r.max_sqrtg_sq_dev, se, sc});
    }
    return r;
}

// Delta f at p, using dual-number second derivatives of f and embedding-exact
// metric data (diagonal inverse; orthogonality is asserted, not assumed).
inline cd laplace_beltrami_apply(int system, const ScalarField& f, const CoordTriple& p) {
    auto md = detail::metric_data_from_embedding({system, p.u});
    double scale = 0.0;
    for (int a = 0; a < 3; ++a) scale = std::max(scale, std::abs(md.g[a][a]));
    for (int a = 0; a < 3; ++a) {
        if (std::abs(md.g[a][a]) < 1e-10 * scale)
            throw numerical_error("laplace_beltrami_apply: metric degenerate at sample point");
        for (int b = 0; b < 3; ++b)
            if (a != b && std::abs(md.g[a][b]) > 1e-9 * scale)
                throw numerical_error("laplace_beltrami_apply: metric not diagonal");
    }
    cdual fv = f(detail::seed_coords(p));
    cd lap = 0.0;
    for (int a = 0; a < 3; ++a) {
        cd gaa = md.g[a][a];
        cd gamma_a = 0.0;
        for (int b = 0; b < 3; ++b) gamma_a += md.dg_diag[a][b] / (2.0 * md.g[b][b]);
        lap += fv.hess(a, a) / gaa + (gamma_a / gaa - md.dg_diag[a][a] / (gaa * gaa)) * fv.g[a];
    }
    return lap;
}

// max over points of |-(1/2) Delta f - E f| / max |f|
inline double hamiltonian_residual(int system, const ScalarField& f, double energy,
                                   const std::vector<CoordTriple>& points) {
    double max_res = 0.0, max_f = 0.0;
    for (const CoordTriple& p : points) {
        cd lap = laplace_beltrami_apply(system, f, p);
        cdual fv = f(detail::seed_coords(p));
        max_res = std::max(max_res, std::abs(-0.5 * lap - energy * fv.v));
        max_f = std::max(max_f, std::abs(fv.v));
    }
    if (max_f == 0.0) throw numerical_error("hamiltonian_residual: field vanishes on grid");
    return max_res / max_f;
}

}  // namespace s3c
