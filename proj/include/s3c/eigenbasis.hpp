#pragma once

// Explicit eigenfunctions for systems 1, 2, 3, 4, 5, 16 and the 1D
// special-function building blocks of the remaining solvable charts, with
// quantum-number validation, L2 normalization checks (systems 1, 3) and
// dual-number ODE residuals.
//
// Conventions that differ from print (registry/ledger carry the details):
//   system 2/5: Hankel order J+1 (Bessel's equation forces nu^2=(J+1)^2);
//   system 3:   Gegenbauer orders l+1 and m+1/2, phase e^{im phi};
//   system 16:  Laguerre order lambda = -(J+1), the minus branch of the
//               paper's lambda = +-sqrt(1+2E).

#include <array>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "s3c/charts.hpp"
#include "s3c/dual.hpp"
#include "s3c/errors.hpp"
#include "s3c/geometry.hpp"
#include "s3c/specfun/bessel.hpp"
#include "s3c/specfun/hyp.hpp"
#include "s3c/specfun/legendre.hpp"
#include "s3c/specfun/orthopoly.hpp"
#include "s3c/specfun/quadrature.hpp"

namespace s3c {

struct QuantumNumbers {
    int J = 0;        // principal label (derived for systems 4 and 16)
    double sub1 = 0;  // 1:(m1) 2:(k_y) 3:(l) 4:(l) 5:(k_rho) 16:(n_xi)
    double sub2 = 0;  // 1:(m2) 2:(k_z) 3:(m) 4:(n_x) 5:(nu) 16:(n_eta)
    double k = 1.0;   // continuous transverse parameter: 4:(k_y) 16:(k_tau)
};

inline double energy(int J) {
    if (J < 0) throw validation_error("energy: J must be a nonnegative integer");
    return 0.5 * J * (J + 2.0);
}

struct EigenMode {
    int system;
    QuantumNumbers qn;
    double energy;
    ScalarField field;
};

namespace detail {

inline int as_int(double x, const char* what) {
    double r = std::round(x);
    if (std::abs(x - r) > 1e-9)
        throw validation_error(std::string(what) + " must be an integer, got " +
                               std::to_string(x));
    return static_cast<int>(r);
}

inline double dfact_odd(int m) {  // (2m-1)!!
    double r = 1.0;
    for (int j = 1; j < 2 * m; j += 2) r *= j;
    return r;
}

}  // namespace detail

inline void validate_qn(int system, const QuantumNumbers& qn) {
    switch (system) {
        case 1: {
            int m1 = detail::as_int(qn.sub1, "system 1: m1");
            int m2 = detail::as_int(qn.sub2, "system 1: m2");
            if (qn.J < 0) throw validation_error("system 1: J must be >= 0");
            if (std::abs(m1) + std::abs(m2) > qn.J)
                throw validation_error("system 1: |m1|+|m2| <= J violated");
            if ((qn.J - std::abs(m1) - std::abs(m2)) % 2 != 0)
                throw validation_error(
                    "system 1: J-|m1|-|m2| must be even (Jacobi index integrality)");
            return;
        }
        case 2:
            if (qn.J < 0) throw validation_error("system 2: J must be >= 0");
            if (qn.sub1 == 0.0 && qn.sub2 == 0.0)
                throw validation_error("system 2: (k_y,k_z) must not both vanish");
            return;
        case 3: {
            int l = detail::as_int(qn.sub1, "system 3: l");
            int m = detail::as_int(qn.sub2, "system 3: m");
            if (!(qn.J >= l && l >= m && m >= 0))
                throw validation_error("system 3: need J >= l >= m >= 0");
            return;
        }
        case 4: {
            int l = detail::as_int(qn.sub1, "system 4: l");
            int nx = detail::as_int(qn.sub2, "system 4: n_x");
            if (l < 0 || nx < 0) throw validation_error("system 4: need l, n_x >= 0");
            if (!(qn.k > 0)) throw validation_error("system 4: need k_y > 0");
            return;
        }
        case 5: {
            detail::as_int(qn.sub2, "system 5: nu");
            if (qn.J < 0) throw validation_error("system 5: J must be >= 0");
            if (!(qn.sub1 > 0)) throw validation_error("system 5: need k_rho > 0");
            return;
        }
        case 16: {
            int nxi = detail::as_int(qn.sub1, "system 16: n_xi");
            int neta = detail::as_int(qn.sub2, "system 16: n_eta");
            if (nxi < 0 || neta < 0) throw validation_error("system 16: need n_xi, n_eta >= 0");
            if (qn.k == 0.0) throw validation_error("system 16: need k != 0");
            return;
        }
        default:
            throw capability_error("system " + std::to_string(system) +
                                   ": eigenbasis out of scope" +
                                   (system == 9 ? " (Mathieu)" : system == 6 || system == 13
                                    ? " (Lame)" : system == 15 ? " (spheroidal)" : ""));
    }
}

inline EigenMode make_eigenmode(int system, QuantumNumbers qn) {
    validate_qn(system, qn);
    const double pi = 3.14159265358979323846;
    const cd i(0.0, 1.0);
    EigenMode mode{system, qn, 0.0, nullptr};
    switch (system) {
        case 1: {
            int m1 = static_cast<int>(qn.sub1), m2 = static_cast<int>(qn.sub2);
            int a = std::abs(m1), b = std::abs(m2);
            int n = (qn.J - a - b) / 2;
            double lg = std::lgamma(n + 1.0) + std::lgamma((qn.J + a + b) / 2 + 1.0) -
                        std::lgamma((qn.J - a + b) / 2 + 1.0) -
                        std::lgamma((qn.J + a - b) / 2 + 1.0);
            double norm = std::sqrt(2.0 * (qn.J + 1.0) * std::exp(lg)) / (2.0 * pi);
            mode.energy = energy(qn.J);
            mode.field = [=](const std::array<cdual, 3>& u) {
                const cdual& th = u[0];
                cdual phase = exp((u[1] * (double)m1 + u[2] * (double)m2) * i);
                cdual radial = pow(sin(th), (double)a) * pow(cos(th), (double)b) *
                               sf::jacobi_p(n, a, b, cos(th * 2.0));
                return norm * phase * radial;
            };
            return mode;
        }
        case 2: {
            double ky = qn.sub1, kz = qn.sub2;
            double k = std::hypot(ky, kz);
            int nu = qn.J + 1;  // order arbitration: Bessel's equation gives (J+1)^2
            mode.energy = energy(qn.J);
            double norm = 1.0 / (2.0 * pi * std::sqrt(2.0));
            mode.field = [=](const std::array<cdual, 3>& u) {
                cdual emix = exp(u[0] * cd(0.0, -1.0));
                cdual plane = exp((u[1] * ky + u[2] * kz) * i);
                return norm * plane * emix * sf::hankel1_int(nu, emix * k);
            };
            return mode;
        }
        case 3: {
            int l = static_cast<int>(qn.sub1), m = static_cast<int>(qn.sub2);
            int J = qn.J;
            double nchi = std::sqrt(std::exp(std::lgamma(J - l + 1.0) + 2.0 * std::lgamma(l + 1.0) -
                                             std::lgamma(J + l + 2.0)) *
                                    (J + 1.0) * std::pow(2.0, 2.0 * l + 1.0) / pi);
            double nth = detail::dfact_odd(m) *
                         std::sqrt((2.0 * l + 1.0) *
                                   std::exp(std::lgamma(l - m + 1.0) - std::lgamma(l + m + 1.0)) /
                                   2.0);
            double norm = nchi * nth / std::sqrt(2.0 * pi);
            mode.energy = energy(J);
            mode.field = [=](const std::array<cdual, 3>& u) {
                cdual rchi = pow(sin(u[0]), (double)l) * sf::gegenbauer_c(J - l, l + 1.0, cos(u[0]));
                cdual rth = pow(sin(u[1]), (double)m) * sf::gegenbauer_c(l - m, m + 0.5, cos(u[1]));
                return norm * rchi * rth * exp(u[2] * (double)m * i);
            };
            return mode;
        }
        case 4: {
            int l = static_cast<int>(qn.sub1), nx = static_cast<int>(qn.sub2);
            int J = l + nx;
            double ky = qn.k;
            mode.qn.J = J;
            mode.energy = energy(J);
            double norm = std::sqrt((l + nx + 1.0) *
                                    std::exp(std::lgamma(l + 2.0 * nx + 2.0) - std::lgamma(l + 1.0)) /
                                    (4.0 * pi));
            cd mu(-(nx + 0.5), 0.0);
            mode.field = [=](const std::array<cdual, 3>& u) {
                cdual emix = exp(u[1] * cd(0.0, -1.0));
                cdual hank = exp(u[1] * cd(0.0, -0.5)) * sf::hankel1_half(nx, emix * ky);
                cdual leg = pow(sin(u[0]), -0.5) *
                            sf::legendre_p(cd(J + 0.5, 0.0), mu, cos(u[0]));
                return norm * exp(u[2] * ky * i) * hank * leg;
            };
            return mode;
        }
        case 5: {
            double krho = qn.sub1;
            int nu = static_cast<int>(qn.sub2);
            int J = qn.J;
            mode.energy = energy(J);
            double norm = std::sqrt(krho) / (std::sqrt(2.0 * pi) * std::sqrt(2.0));
            mode.field = [=](const std::array<cdual, 3>& u) {
                cdual emix = exp(u[0] * cd(0.0, -1.0));
                return norm * exp(u[2] * (double)nu * i) * sf::bessel_j_int(nu, u[1] * krho) *
                       emix * sf::hankel1_int(J + 1, emix * krho);
            };
            return mode;
        }
        case 16: {
            int nxi = static_cast<int>(qn.sub1), neta = static_cast<int>(qn.sub2);
            int J = nxi + neta;
            double w = std::abs(qn.k), kt = qn.k;
            double lam = -(J + 1.0);
            mode.qn.J = J;
            mode.energy = energy(J);
            double norm = 1.0 / std::sqrt(2.0 * pi);
            mode.field = [=](const std::array<cdual, 3>& u) {
                cdual gauss = exp((u[0] * u[0] + u[1] * u[1]) * (-0.5 * w));
                cdual prod = pow(u[0] * u[1], lam + 1.0) * gauss *
                             sf::laguerre_l(nxi, lam, u[0] * u[0] * w) *
                             sf::laguerre_l(neta, lam, u[1] * u[1] * w);
                return norm * prod * exp(u[2] * kt * i);
            };
            return mode;
        }
        default:
            throw capability_error("make_eigenmode: unsupported system");
    }
}

inline cd eigenfunction_eval(int system, const QuantumNumbers& qn, const CoordTriple& p) {
    EigenMode m = make_eigenmode(system, qn);
    std::array<cdual, 3> u = {cdual(cd(p.u[0])), cdual(cd(p.u[1])), cdual(cd(p.u[2]))};
    return m.field(u).v;
}

// ---- normalization / Gram checks (systems 1 and 3) --------------------------

inline std::vector<QuantumNumbers> first_valid_modes(int system, int count) {
    std::vector<QuantumNumbers> out;
    if (system == 1) {
        for (int J = 0; static_cast<int>(out.size()) < count && J <= 12; ++J)
            for (int m1 = -J; m1 <= J && static_cast<int>(out.size()) < count; ++m1)
                for (int m2 = -J; m2 <= J && static_cast<int>(out.size()) < count; ++m2) {
                    if (std::abs(m1) + std::abs(m2) > J) continue;
                    if ((J - std::abs(m1) - std::abs(m2)) % 2) continue;
                    out.push_back({J, static_cast<double>(m1), static_cast<double>(m2), 0.0});
                }
    } else if (system == 3) {
        for (int J = 0; static_cast<int>(out.size()) < count && J <= 12; ++J)
            for (int l = 0; l <= J && static_cast<int>(out.size()) < count; ++l)
                for (int m = 0; m <= l && static_cast<int>(out.size()) < count; ++m)
                    out.push_back({J, static_cast<double>(l), static_cast<double>(m), 0.0});
    } else {
        throw capability_error("first_valid_modes: norm checks cover systems 1 and 3 only");
    }
    return out;
}

// max |Gram - Identity| over the mode set; periodic directions exact (Fourier
// orthogonality), compact directions by Gauss-Legendre of degree >= 4 J_max
inline double norm_check(int system, const std::vector<QuantumNumbers>& modes) {
    if (system != 1 && system != 3)
        throw capability_error("norm_check: systems 1 and 3 only");
    int jmax = 0;
    for (const auto& q : modes) jmax = std::max(jmax, q.J);
    int nq = std::max(64, 4 * jmax + 16);
    const double pi = 3.14159265358979323846;
    const auto& rule = sf::gauss_legendre(nq);

    auto at = [](const ScalarField& f, double a1, double a2, double a3) -> cd {
        std::array<cdual, 3> u = {cdual(cd(a1)), cdual(cd(a2)), cdual(cd(a3))};
        return f(u).v;
    };

    // cache mode values on the compact-direction grid, phases stripped (phi=0)
    std::size_t nm = modes.size();
    std::vector<std::vector<cd>> vals(nm);
    std::vector<double> weights;
    if (system == 1) {
        for (std::size_t m = 0; m < nm; ++m) {
            ScalarField f = make_eigenmode(1, modes[m]).field;
            vals[m].resize(nq);
            for (int it = 0; it < nq; ++it) {
                double th = pi / 4 + (pi / 4) * rule.x[it];
                vals[m][it] = at(f, th, 0.0, 0.0);
            }
        }
        weights.resize(nq);
        for (int it = 0; it < nq; ++it) {
            double th = pi / 4 + (pi / 4) * rule.x[it];
            weights[it] = rule.w[it] * (pi / 4) * std::sin(th) * std::cos(th);
        }
    } else {
        for (std::size_t m = 0; m < nm; ++m) {
            ScalarField f = make_eigenmode(3, modes[m]).field;
            vals[m].resize(static_cast<std::size_t>(nq) * nq);
            for (int ic = 0; ic < nq; ++ic) {
                double chv = pi / 2 + (pi / 2) * rule.x[ic];
                for (int it = 0; it < nq; ++it) {
                    double thv = pi / 2 + (pi / 2) * rule.x[it];
                    vals[m][static_cast<std::size_t>(ic) * nq + it] = at(f, chv, thv, 0.0);
                }
            }
        }
        weights.resize(static_cast<std::size_t>(nq) * nq);
        for (int ic = 0; ic < nq; ++ic) {
            double chv = pi / 2 + (pi / 2) * rule.x[ic];
            for (int it = 0; it < nq; ++it) {
                double thv = pi / 2 + (pi / 2) * rule.x[it];
                weights[static_cast<std::size_t>(ic) * nq + it] =
                    rule.w[ic] * rule.w[it] * (pi * pi / 4) * std::sin(chv) * std::sin(chv) *
                    std::sin(thv);
            }
        }
    }

    double periodic_measure = (system == 1) ? 4.0 * pi * pi : 2.0 * pi;
    double max_dev = 0.0;
    for (std::size_t ii = 0; ii < nm; ++ii)
        for (std::size_t jj = ii; jj < nm; ++jj) {
            cd gram = 0.0;
            bool same_phase = (system == 1)
                                  ? (modes[ii].sub1 == modes[jj].sub1 &&
                                     modes[ii].sub2 == modes[jj].sub2)
                                  : (modes[ii].sub2 == modes[jj].sub2);
            if (same_phase) {
                for (std::size_t q = 0; q < weights.size(); ++q)
                    gram += weights[q] * std::conj(vals[ii][q]) * vals[jj][q];
                gram *= periodic_measure;
            }
            double target = (ii == jj) ? 1.0 : 0.0;
            max_dev = std::max(max_dev, std::abs(gram - target));
        }
    return max_dev;
}

// ---- 1D building-block ODE residuals ----------------------------------------

enum class Block1D {
    complex_liouville,
    sym_poschl_teller,
    mod_poschl_teller,
    radial_oscillator,
    airy,
    legendre_complex,
    bessel_K_imag,
};

struct Block1DParams {
    int J = 0;          // complex_liouville / sym_poschl_teller
    double nu = 0.0;    // complex_liouville Hankel order; mod PT cosh index
    double k = 1.0;     // liouville wavenumber / K order / legendre order
    int l = 0;          // sym PT angular label
    double eta = 0.0;   // mod PT sinh index
    double p = 0.0;     // mod PT / legendre momentum
    int n = 0;          // oscillator node count
    double lam = 1.0;   // oscillator order
    double omega = 1.0; // oscillator frequency
};

namespace detail {

// value, first and second derivative of a 1D dual evaluation
struct D2 {
    cd f, f1, f2;
};
template <class Fun>
D2 eval_d2(Fun&& fun, double x) {
    cdual xv = cdual::var(cd(x), 0);
    cdual r = fun(xv);
    return {r.v, r.g[0], r.hess(0, 0)};
}

inline bool half_integerp(double nu) {
    return std::abs(nu - std::floor(nu) - 0.5) < 1e-12;
}

}  // namespace detail

// plugs the closed-form candidate into the block's ODE on the grid and returns
// max |residual| / max |solution|
inline double ode_residual_1d(Block1D block, const Block1DParams& prm,
                              const std::vector<double>& grid) {
    if (grid.empty()) throw domain_error("ode_residual_1d: empty grid");
    const cd i(0.0, 1.0);
    double max_res = 0.0, max_sol = 0.0;
    for (double x : grid) {
        detail::D2 d;
        cd ode;
        switch (block) {
            case Block1D::complex_liouville: {
                double k = prm.k, nu = prm.nu;
                auto psi = [&](const cdual& t) {
                    cdual emix = exp(t * cd(0.0, -1.0));
                    if (detail::half_integerp(nu))
                        return emix * sf::hankel1_half(static_cast<int>(std::floor(nu)), emix * k);
                    return emix * sf::hankel1_int(static_cast<int>(std::llround(nu)), emix * k);
                };
                d = detail::eval_d2(psi, x);
                ode = d.f2 + 2.0 * i * d.f1 +
                      (prm.J * (prm.J + 2.0) - k * k * std::exp(cd(0.0, -2.0 * x))) * d.f;
                break;
            }
            case Block1D::sym_poschl_teller: {
                int J = prm.J, l = prm.l;
                auto phi = [&](const cdual& t) {
                    return pow(sin(t), -0.5) *
                           sf::legendre_p(cd(J + 0.5, 0.0), cd(-(l + 0.5), 0.0), cos(t));
                };
                d = detail::eval_d2(phi, x);
                ode = d.f2 + 2.0 * std::cos(x) / std::sin(x) * d.f1 +
                      (prm.J * (prm.J + 2.0) - l * (l + 1.0) / (std::sin(x) * std::sin(x))) * d.f;
                break;
            }
            case Block1D::mod_poschl_teller: {
                double eta = prm.eta, nv = prm.nu, p = prm.p;
                cd k1 = 0.5 * (1.0 + nv), k2 = 0.5 * (1.0 + eta);
                cd kap = 0.5 * (1.0 + i * p);
                auto psi = [&](const cdual& t) {
                    cdual sh = sinh(t);
                    return pow(cosh(t), 2.0 * k1.real() - 0.5) * pow(sh, 2.0 * k2.real() - 0.5) *
                           sf::hyp2f1(k1 + k2 - kap, k1 + k2 + kap - 1.0, 2.0 * k2,
                                      -(sh * sh));
                };
                d = detail::eval_d2(psi, x);
                double sh = std::sinh(x), ch = std::cosh(x);
                ode = d.f2 + (p * p - (eta * eta - 0.25) / (sh * sh) +
                              (nv * nv - 0.25) / (ch * ch)) * d.f;
                break;
            }
            case Block1D::radial_oscillator: {
                double w = prm.omega, lam = prm.lam;
                int n = prm.n;
                auto wf = [&](const cdual& t) {
                    return pow(t, lam + 0.5) * exp(t * t * (-0.5 * w)) *
                           sf::laguerre_l(n, lam, t * t * w);
                };
                d = detail::eval_d2(wf, x);
                ode = d.f2 + (2.0 * w * (2.0 * n + lam + 1.0) - w * w * x * x -
                              (lam * lam - 0.25) / (x * x)) * d.f;
                break;
            }
            case Block1D::airy: {
                auto ai = [&](const cdual& t) { return sf::airy_ai_series(t); };
                d = detail::eval_d2(ai, x);
                ode = d.f2 - x * d.f;
                break;
            }
            case Block1D::legendre_complex: {
                cd nu = cd(-0.5, prm.p), mu = cd(0.0, prm.k);
                auto y = [&](const cdual& t) { return sf::legendre_p(nu, mu, t); };
                d = detail::eval_d2(y, x);
                ode = (1.0 - x * x) * d.f2 - 2.0 * x * d.f1 +
                      (nu * (nu + 1.0) - mu * mu / (1.0 - x * x)) * d.f;
                break;
            }
            case Block1D::bessel_K_imag: {
                double k = prm.k;
                // derivatives under the integral sign are exact
                double tmax = std::acosh(45.0 / x);
                auto moment = [&](int pow_cosh) {
                    return sf::integrate_tanh_sinh(
                        [&](double t) {
                            double c = std::cosh(t);
                            double w = std::exp(-x * c) * std::cos(k * t);
                            for (int q = 0; q < pow_cosh; ++q) w *= c;
                            return w;
                        },
                        0.0, tmax, 8);
                };
                double f = moment(0), f1 = -moment(1), f2 = moment(2);
                d = {cd(f), cd(f1), cd(f2)};
                ode = x * x * d.f2 + x * d.f1 + (k * k - x * x) * d.f;
                break;
            }
        }
        max_res = std::max(max_res, std::abs(ode));
        max_sol = std::max(max_sol, std::abs(d.f));
    }
    if (max_sol == 0.0) throw numerical_error("ode_residual_1d: trivial solution on grid");
    return max_res / max_sol;
}

}  // namespace s3c
