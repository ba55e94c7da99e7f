// Oracle suite for the special functions: every family is checked against an
// independent route (direct series, recursion seeded far away, quadrature at a
// tighter target, ODE integration, or closed forms), plus values frozen from
// 30-digit reference computations.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <vector>

#include "s3c/dual.hpp"
#include "s3c/specfun/bessel.hpp"
#include "s3c/specfun/elliptic.hpp"
#include "s3c/specfun/gamma.hpp"
#include "s3c/specfun/hyp.hpp"
#include "s3c/specfun/legendre.hpp"
#include "s3c/specfun/orthopoly.hpp"
#include "s3c/specfun/theta.hpp"

using namespace s3c;
namespace sfn = s3c::sf;
using cd = std::complex<double>;
using Catch::Approx;

static constexpr double kPi = 3.14159265358979323846;

// ---- oracles (independent of the implementation paths) ----------------------

// Gamma by upward recursion seeded with the Stirling series at Re z + 24
static cd oracle_gamma(cd z) {
    const int shift = 24;
    cd w = z + static_cast<double>(shift);
    // Stirling with Bernoulli corrections
    cd series = 1.0 / (12.0 * w) - 1.0 / (360.0 * w * w * w) +
                1.0 / (1260.0 * std::pow(w, 5)) - 1.0 / (1680.0 * std::pow(w, 7));
    cd lg = (w - 0.5) * std::log(w) - w + 0.5 * std::log(2.0 * kPi) + series;
    cd g = std::exp(lg);
    for (int k = shift - 1; k >= 0; --k) g /= (z + static_cast<double>(k));
    return g;
}

// Kahan-compensated 1F1 series
static cd oracle_1f1(cd a, cd c, cd z) {
    cd sum = 1.0, comp = 0.0, term = 1.0;
    for (int k = 0; k < 500; ++k) {
        term *= (a + static_cast<double>(k)) * z /
                ((c + static_cast<double>(k)) * static_cast<double>(k + 1));
        cd y = term - comp;
        cd t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        if (std::abs(term) < 1e-18 * (1.0 + std::abs(sum))) break;
    }
    return sum;
}

// plain 3-term (terminating) 2F1 series
static cd oracle_2f1_series(cd a, cd b, cd c, cd z) {
    cd sum = 1.0, term = 1.0;
    for (int k = 0; k < 400; ++k) {
        term *= (a + static_cast<double>(k)) * (b + static_cast<double>(k)) * z /
                ((c + static_cast<double>(k)) * static_cast<double>(k + 1));
        sum += term;
        if (std::abs(term) < 1e-18 * (1.0 + std::abs(sum))) break;
    }
    return sum;
}

// RK4 integration of sn' = cn dn, cn' = -sn dn, dn' = -k^2 sn cn from 0 to u
static sfn::SnCnDn oracle_elliptic_rk(double u, double k) {
    double s = 0, c = 1, d = 1;
    int n = 20000;
    double h = u / n;
    auto f = [&](double sv, double cv, double dv, int comp) {
        if (comp == 0) return cv * dv;
        if (comp == 1) return -sv * dv;
        return -k * k * sv * cv;
    };
    for (int i = 0; i < n; ++i) {
        double k1s = f(s, c, d, 0), k1c = f(s, c, d, 1), k1d = f(s, c, d, 2);
        double k2s = f(s + h / 2 * k1s, c + h / 2 * k1c, d + h / 2 * k1d, 0);
        double k2c = f(s + h / 2 * k1s, c + h / 2 * k1c, d + h / 2 * k1d, 1);
        double k2d = f(s + h / 2 * k1s, c + h / 2 * k1c, d + h / 2 * k1d, 2);
        double k3s = f(s + h / 2 * k2s, c + h / 2 * k2c, d + h / 2 * k2d, 0);
        double k3c = f(s + h / 2 * k2s, c + h / 2 * k2c, d + h / 2 * k2d, 1);
        double k3d = f(s + h / 2 * k2s, c + h / 2 * k2c, d + h / 2 * k2d, 2);
        double k4s = f(s + h * k3s, c + h * k3c, d + h * k3d, 0);
        double k4c = f(s + h * k3s, c + h * k3c, d + h * k3d, 1);
        double k4d = f(s + h * k3s, c + h * k3c, d + h * k3d, 2);
        s += h / 6 * (k1s + 2 * k2s + 2 * k3s + k4s);
        c += h / 6 * (k1c + 2 * k2c + 2 * k3c + k4c);
        d += h / 6 * (k1d + 2 * k2d + 2 * k3d + k4d);
    }
    return {s, c, d};
}

// ---- gamma -------------------------------------------------------------------

TEST_CASE("gamma: classic values and recursion oracle") {
    CHECK(std::abs(sfn::gamma_complex(cd(1, 0)) - cd(1, 0)) < 1e-14);
    CHECK(std::abs(sfn::gamma_complex(cd(5, 0)) - cd(24, 0)) < 3e-13);
    // frozen: mpmath gamma(0.5+2i)
    cd ref(0.089855176706431636, -0.060493760292887568);
    CHECK(std::abs(sfn::gamma_complex(cd(0.5, 2)) - ref) < 1e-13);
    CHECK(std::abs(sfn::gamma_complex(cd(0.5, 2)) - oracle_gamma(cd(0.5, 2))) < 1e-11);
    CHECK(std::abs(sfn::gamma_complex(cd(-2.5, 0)) - cd(-0.94530872048294188, 0)) < 1e-13);
    CHECK(std::abs(sfn::gamma_complex(cd(3, -4)) -
                   cd(0.0052255384713692142, 0.17254707929430019)) < 1e-13);
    CHECK_THROWS_AS(sfn::gamma_complex(cd(-3, 0)), s3c::range_error);
}

TEST_CASE("gamma: functional equation on a strip grid") {
    for (double re = -8; re <= 8; re += 1.3)
        for (double im = -10; im <= 10; im += 2.7) {
            cd z(re + 0.21, im + 0.13);
            cd lhs = sfn::gamma_complex(z + 1.0);
            cd rhs = z * sfn::gamma_complex(z);
            CHECK(std::abs(lhs - rhs) / std::abs(lhs) < 1e-12);
        }
}

// ---- hypergeometric -----------------------------------------------------------

TEST_CASE("hyp2f1: identities and region handling") {
    // binomial: 2F1(a,b;b;z) = (1-z)^{-a}
    CHECK(std::abs(sfn::hyp2f1(cd(0.7), cd(2.3), cd(2.3), cd(0.3)) -
                   cd(1.2836049168437711)) < 1e-12);
    // logarithm: 2F1(1,1;2;1/2) = 2 ln 2
    CHECK(std::abs(sfn::hyp2f1(cd(1), cd(1), cd(2), cd(0.5)) -
                   cd(1.3862943611198906)) < 1e-12);
    // terminating polynomial vs direct series oracle
    cd poly = sfn::hyp2f1(cd(-2), cd(3), cd(1.5), cd(0.4));
    CHECK(std::abs(poly - cd(-0.088)) < 1e-14);
    CHECK(std::abs(poly - oracle_2f1_series(cd(-2), cd(3), cd(1.5), cd(0.4))) < 1e-15);
    // complex parameters (frozen)
    CHECK(std::abs(sfn::hyp2f1(cd(0.5, 0.5), cd(1.2), cd(2.3, -1), cd(0.45)) -
                   cd(1.0376797765218939, 0.18464290900652886)) < 1e-11);
    // near z=1 via the connection formula (frozen)
    CHECK(std::abs(sfn::hyp2f1(cd(0.3), cd(0.7), cd(1.1), cd(0.928)) -
                   cd(1.5097262301829513)) < 1e-10);
    // far negative z via Pfaff (frozen)
    CHECK(std::abs(sfn::hyp2f1(cd(0.3), cd(0.7), cd(1.1), cd(-5.0)) -
                   cd(0.68220619611019496)) < 1e-10);
    CHECK_THROWS_AS(sfn::hyp2f1(cd(0.3), cd(0.7), cd(-2.0), cd(0.4)), s3c::range_error);
}

TEST_CASE("hyp1f1: identities and Kahan oracle") {
    CHECK(std::abs(sfn::hyp1f1(cd(1.7), cd(1.7), cd(1.0)) - cd(std::exp(1.0))) < 1e-13);
    CHECK(std::abs(sfn::hyp1f1(cd(-1), cd(1), cd(0.25)) - cd(0.75)) < 1e-15);
    cd v = sfn::hyp1f1(cd(0.3), cd(1.7), cd(-2.0));
    CHECK(std::abs(v - cd(0.76542105081993122)) < 1e-12);
    CHECK(std::abs(v - oracle_1f1(cd(0.3), cd(1.7), cd(-2.0))) < 1e-11);
    CHECK(std::abs(sfn::hyp1f1(cd(2.5), cd(1.3), cd(3.7)) - cd(196.01222865710698)) < 1e-10);
}

// ---- orthogonal polynomials ----------------------------------------------------

TEST_CASE("orthopoly: low-order values and hypergeometric cross-check") {
    CHECK(sfn::gegenbauer_c(0, 1.0, 0.3) == 1.0);
    CHECK(sfn::gegenbauer_c(1, 1.0, 0.3) == Approx(0.6).epsilon(1e-15));
    CHECK(sfn::jacobi_p(1, 0.0, 0.0, -0.2) == Approx(-0.2).epsilon(1e-15));
    // L_2^{(1)}(1.5) vs binom(3,2) 1F1(-2;2;1.5)
    double l21 = sfn::laguerre_l(2, 1.0, 1.5);
    CHECK(l21 == Approx(-0.375).epsilon(1e-14));
    cd via_1f1 = 3.0 * oracle_1f1(cd(-2), cd(2), cd(1.5));
    CHECK(l21 == Approx(via_1f1.real()).epsilon(1e-12));
    CHECK_THROWS_AS(sfn::orthopoly_eval(sfn::PolyFamily::laguerre, 2, 1.0, 0.0, -1.0),
                    s3c::range_error);
}

TEST_CASE("orthopoly: three-term recurrence residual at high degree") {
    // recompute P_n from P_{n-1}, P_{n-2} and compare on a grid
    for (double x : {-0.9, -0.3, 0.2, 0.8}) {
        for (int n : {25, 100, 200}) {
            double a = 0.5, b = 1.5;
            double pn = sfn::jacobi_p(n, a, b, x);
            double pm = sfn::jacobi_p(n - 1, a, b, x);
            double pk = sfn::jacobi_p(n - 2, a, b, x);
            int k = n - 1;
            double c1 = 2.0 * (k + 1.0) * (k + 1 + a + b) * (2.0 * k + a + b);
            double c2 = (2.0 * k + a + b + 1) * (a * a - b * b);
            double c3 = (2.0 * k + a + b) * (2.0 * k + a + b + 1) * (2.0 * k + a + b + 2);
            double c4 = 2.0 * (k + a) * (k + b) * (2.0 * k + a + b + 2);
            double resid = c1 * pn - ((c2 + c3 * x) * pm - c4 * pk);
            CHECK(std::abs(resid) / (std::abs(c1 * pn) + 1e-30) < 1e-12);
        }
        // Gegenbauer half-angle identity C_n^1(cos t) = sin((n+1)t)/sin t
        double t = std::acos(x);
        for (int n : {3, 17, 60})
            CHECK(sfn::gegenbauer_c(n, 1.0, x) ==
                  Approx(std::sin((n + 1) * t) / std::sin(t)).epsilon(1e-11));
    }
}

// ---- Legendre ------------------------------------------------------------------

TEST_CASE("legendre_p: values, half-integer closed form, defining ODE") {
    // P_nu^0(1) = 1 (series collapses at z=0)
    CHECK(std::abs(sfn::legendre_p(cd(0.7, 0.2), cd(0), cd(1.0 - 1e-16)) - cd(1.0)) < 1e-10);
    // P_{1/2}^{-1/2}(cos th) = sqrt(2/(pi sin th)) sin(th)  [nu = 1]
    double th = kPi / 3;
    cd v = sfn::legendre_p(cd(0.5), cd(-0.5), cd(std::cos(th)));
    CHECK(std::abs(v - cd(0.74251524928569113)) < 1e-12);
    CHECK(std::abs(v - cd(std::sqrt(2.0 / (kPi * std::sin(th))) * std::sin(th))) < 1e-12);
    // complex order/degree (frozen) -- the system-7 building block
    cd w = sfn::legendre_p(cd(-0.5, 2.0), cd(0, 1), cd(std::tanh(0.8)));
    CHECK(std::abs(w - cd(1.8928085994871106, 2.1104089008788861)) < 1e-9);
    // real order on (-1,1) (frozen)
    CHECK(std::abs(sfn::legendre_p(cd(3.5), cd(-2.5), cd(0.3)) -
                   cd(0.014183120658949784)) < 1e-11);
    // x > 1 branch (frozen): P_{ip-1/2}^{-1/2-l}(cosh 0.9), p = 1.3, l = 2
    cd x1 = sfn::legendre_p(cd(-0.5, 1.3), cd(-2.5), cd(std::cosh(0.9)));
    CHECK(std::abs(x1 - cd(0.030972454148611103, 0.0)) < 1e-11);
    // defining ODE via duals at interior points
    for (double x : {-0.6, 0.1, 0.55}) {
        cd nu(0.8, 0.4), mu(0.25, 0.0);
        cdual xv = cdual::var(cd(x), 0);
        cdual y = sfn::legendre_p(nu, mu, xv);
        cd ode = (1.0 - x * x) * y.hess(0, 0) - 2.0 * x * y.g[0] +
                 (nu * (nu + 1.0) - mu * mu / (1.0 - x * x)) * y.v;
        CHECK(std::abs(ode) / std::abs(y.v) < 1e-8);
    }
}

TEST_CASE("legendre_q_half: closed form, decay, frozen references") {
    double d = 1.0, u = std::cosh(d);
    cd q0 = sfn::legendre_q_half(cd(0), u);
    CHECK(std::abs(q0 - cd(0, 0.701223699414)) < 1e-10);
    // nu = -1/2: exponent vanishes
    cd qh = sfn::legendre_q_half(cd(-0.5), u);
    CHECK(std::abs(qh - cd(0, 1.0) * std::sqrt(kPi / (2.0 * std::sinh(d)))) < 1e-14);
    // frozen: nu = 1.3 and complex nu = -1/2 - 2i
    CHECK(std::abs(sfn::legendre_q_half(cd(1.3), u) - cd(0, 0.191105752119)) < 1e-10);
    CHECK(std::abs(sfn::legendre_q_half(cd(-0.5, -2.0), u) -
                   cd(-1.05125914955, -0.481116691382)) < 1e-10);
    // monotone decay e^{-(nu+1/2)d} over d = 1,2,3 for real nu > -1/2
    double m1 = std::abs(sfn::legendre_q_half(cd(0.7), std::cosh(1.0)));
    double m2 = std::abs(sfn::legendre_q_half(cd(0.7), std::cosh(2.0)));
    double m3 = std::abs(sfn::legendre_q_half(cd(0.7), std::cosh(3.0)));
    CHECK(m1 > m2);
    CHECK(m2 > m3);
    CHECK_THROWS_AS(sfn::legendre_q_half(cd(0), 0.99), s3c::range_error);
}

// ---- Bessel family ---------------------------------------------------------------

TEST_CASE("bessel J: series region, integral region, frozen references") {
    CHECK(sfn::bessel_j_real(0.0, 0.0) == 1.0);
    CHECK(sfn::bessel_j_real(0.0, 2.5) == Approx(-0.048383776468197996).epsilon(1e-12));
    CHECK(sfn::bessel_j_real(3.0, 7.1) == Approx(-0.18964113404785482).epsilon(1e-11));
    CHECK(sfn::bessel_j_real(2.7, 5.3) == Approx(0.21913492437119933).epsilon(1e-11));
    CHECK(sfn::bessel_j_real(0.5, 0.3) == Approx(0.43049351732812456).epsilon(1e-12));
    // integral path (frozen)
    CHECK(sfn::bessel_j_real(10.25, 40.0) == Approx(0.097987603502931668).epsilon(1e-10));
    CHECK(sfn::bessel_j_real(50.0, 100.0) == Approx(-0.038698339728525383).epsilon(1e-10));
    CHECK(sfn::bessel_j_real(7.0, 60.0) == Approx(-0.0071266351474327106).epsilon(1e-9));
    // both routes against the half-integer closed form J_{3/2}
    auto j32 = [](double x) {
        return std::sqrt(2.0 / (kPi * x)) * (std::sin(x) / x - std::cos(x));
    };
    CHECK(sfn::bessel_j_real(1.5, 11.9) == Approx(j32(11.9)).epsilon(1e-11));   // series
    CHECK(sfn::bessel_j_real(1.5, 12.5) == Approx(j32(12.5)).epsilon(1e-11));   // integral
    CHECK(sfn::bessel_j_real(1.5, 40.0) == Approx(j32(40.0)).epsilon(1e-10));
    CHECK_THROWS_AS(sfn::bessel_j_real(60.0, 5.0), s3c::range_error);
}

TEST_CASE("bessel J/Y integer order at complex argument; defining ODE by duals") {
    // frozen: Y0(1.8), Y3(2.2)
    CHECK(std::abs(sfn::bessel_y_int(0, cd(1.8)) - cd(0.477431714900476)) < 1e-12);
    CHECK(std::abs(sfn::bessel_y_int(3, cd(2.2)) - cd(-0.94590915232622887)) < 1e-11);
    // frozen Hankel at complex arguments
    CHECK(std::abs(sfn::hankel1_int(4, cd(1.3) * std::exp(cd(0, -0.3))) -
                   cd(10.810113886474478, -5.3073703680079027)) < 1e-9);
    CHECK(std::abs(sfn::hankel1_int(2, cd(0.9, -0.4)) -
                   cd(1.0370690452370774, -1.3460152398756514)) < 1e-10);
    // Bessel ODE via duals, complex argument path z = k e^{-ix}
    for (int n : {0, 1, 4}) {
        double k = 1.3, x0 = 0.4;
        cdual x = cdual::var(cd(x0), 0);
        cdual z = exp(x * cd(0, -1)) * k;
        cdual w = sfn::bessel_j_int(n, z);
        // in x: z'' = -z, so ODE transforms; check directly in z via chain rule
        cd zv = z.v, dz = z.g[0];
        cd wp = w.g[0] / dz;
        cd wpp = (w.hess(0, 0) - wp * z.hess(0, 0)) / (dz * dz);
        cd ode = zv * zv * wpp + zv * wp + (zv * zv - static_cast<double>(n) * n) * w.v;
        CHECK(std::abs(ode) / std::abs(w.v) < 1e-10);
    }
}

TEST_CASE("hankel half-integer closed forms and J/H consistency") {
    // H^(1)_{1/2}(2) = -i sqrt(2/(pi 2)) e^{2i}
    cd h = sfn::hankel1_half(0, cd(2.0));
    CHECK(std::abs(h - cd(0.51301613656182775, 0.23478571040624847)) < 1e-14);
    // Re H^(1)_{n+1/2}(x) = J_{n+1/2}(x) on the real axis
    for (int m : {0, 1, 3}) {
        double x = 2.7;
        cd hv = sfn::hankel1_half(m, cd(x));
        CHECK(hv.real() == Approx(sfn::bessel_j_real(m + 0.5, x)).epsilon(1e-11));
    }
    // Wronskian J Y' - J' Y = 2/(pi z) at half-integer order, via recurrences
    double x = 1.9;
    int m = 2;
    cd H = sfn::hankel1_half(m, cd(x)), Hm = sfn::hankel1_half(m - 1, cd(x));
    cd Hp = Hm - (m + 0.5) / x * H;  // H'_nu = H_{nu-1} - nu/z H_nu
    double J = sfn::bessel_j_real(m + 0.5, x), Jm = sfn::bessel_j_real(m - 0.5, x);
    double Jp = Jm - (m + 0.5) / x * J;
    double wr = J * Hp.imag() - Jp * H.imag();  // J Y' - J' Y
    CHECK(wr == Approx(2.0 / (kPi * x)).epsilon(1e-10));
}

TEST_CASE("bessel_eval dispatcher") {
    CHECK(sfn::bessel_eval(sfn::BesselKind::J_real_order, 0.0, 2.5).real() ==
          Approx(-0.048383776468197996).epsilon(1e-12));
    cd h = sfn::bessel_eval(sfn::BesselKind::H1_half_integer, 0.5, 2.0);
    CHECK(std::abs(h - cd(0.51301613656182775, 0.23478571040624847)) < 1e-14);
    CHECK(sfn::bessel_eval(sfn::BesselKind::K_imag_order, 0.0, 1.0).real() ==
          Approx(0.42102443824070833).epsilon(1e-11));
    CHECK(sfn::bessel_eval(sfn::BesselKind::I_real_order, 1.5, 2.0).real() ==
          Approx(1.0994731886331097).epsilon(1e-12));
    CHECK_THROWS_AS(sfn::bessel_eval(sfn::BesselKind::H1_half_integer, 0.7, 2.0),
                    s3c::range_error);
}

TEST_CASE("bessel I and K of imaginary order") {
    CHECK(sfn::bessel_i_real(1.5, 2.0) == Approx(1.0994731886331097).epsilon(1e-12));
    CHECK(sfn::bessel_i_real(0.0, 0.5) == Approx(1.0634833707413235).epsilon(1e-13));
    // K0(1) as the k=0 limit (frozen, quadrature path)
    CHECK(sfn::bessel_k_imag(0.0, 1.0) == Approx(0.42102443824070833).epsilon(1e-11));
    CHECK(sfn::bessel_k_imag(2.0, 1.5) == Approx(0.069331857212619632).margin(1e-10));
    CHECK(sfn::bessel_k_imag(1.0, 0.7) == Approx(0.4011091831077217).margin(1e-10));
    // defining ODE x^2 y'' + x y' + (k^2 - x^2) y = 0 via moments
    double k = 1.3;
    for (double x : {0.6, 1.1, 2.0}) {
        double tmax = std::acosh(45.0 / x);
        auto mom = [&](int p) {
            return sfn::integrate_tanh_sinh(
                [&](double t) {
                    double c = std::cosh(t), w = std::exp(-x * c) * std::cos(k * t);
                    for (int q = 0; q < p; ++q) w *= c;
                    return w;
                },
                0.0, tmax, 8);
        };
        double y = mom(0), y1 = -mom(1), y2 = mom(2);
        CHECK(std::abs(x * x * y2 + x * y1 + (k * k - x * x) * y) < 1e-10);
    }
    CHECK_THROWS_AS(sfn::bessel_k_imag(0.5, 0.01), s3c::range_error);
}

TEST_CASE("airy: frozen values over the whole documented range, defining ODE") {
    CHECK(sfn::airy_ai(0.0) == Approx(0.35502805388781724).epsilon(1e-13));
    CHECK(sfn::airy_ai(1.0) == Approx(0.13529241631288142).epsilon(1e-12));
    CHECK(sfn::airy_ai(-2.0) == Approx(0.22740742820168558).epsilon(1e-12));
    CHECK(sfn::airy_ai(5.0) == Approx(0.00010834442813607442).epsilon(1e-11));
    CHECK(sfn::airy_ai(8.0) == Approx(4.6922076160992316e-8).epsilon(1e-10));
    CHECK(sfn::airy_ai(12.0) == Approx(1.3931846888753608e-13).epsilon(1e-10));
    CHECK(sfn::airy_ai(20.0) == Approx(1.6916728686705403e-27).epsilon(1e-9));
    CHECK(sfn::airy_ai(-8.0) == Approx(-0.052705050356386203).epsilon(1e-10));
    CHECK(sfn::airy_ai(-15.0) == Approx(0.27821749087082893).epsilon(1e-10));
    CHECK(sfn::airy_ai(-20.0) == Approx(-0.17640612707798469).epsilon(1e-10));
    // Ai'' - t Ai = 0 via duals at t in {-2, 0, 2}
    for (double t : {-2.0, 0.0, 2.0}) {
        cdual tv = cdual::var(cd(t), 0);
        cdual a = sfn::airy_ai_series(tv);
        CHECK(std::abs(a.hess(0, 0) - t * a.v) < 1e-8);
    }
    CHECK_THROWS_AS(sfn::airy_ai(25.0), s3c::range_error);
}

TEST_CASE("jacobi elliptic: identities, degenerate modulus, RK oracle") {
    double k = std::sqrt(0.5);
    auto f = sfn::jacobi_elliptic(1.2, k);
    CHECK(f.sn == Approx(0.88771548861927816).epsilon(1e-12));
    CHECK(f.cn == Approx(0.46039245352789639).epsilon(1e-12));
    CHECK(f.dn == Approx(0.77844756126069155).epsilon(1e-12));
    auto rk = oracle_elliptic_rk(1.2, k);
    CHECK(std::abs(f.sn - rk.sn) < 1e-10);
    CHECK(std::abs(f.cn - rk.cn) < 1e-10);
    CHECK(std::abs(f.dn - rk.dn) < 1e-10);
    // identities over a grid of (u, k)
    for (double u : {-1.7, -0.3, 0.0, 0.6, 2.4})
        for (double kk : {0.1, 0.5, std::sqrt(0.5), 0.93}) {
            auto g = sfn::jacobi_elliptic(u, kk);
            CHECK(std::abs(g.sn * g.sn + g.cn * g.cn - 1.0) < 1e-12);
            CHECK(std::abs(g.dn * g.dn - (1.0 - kk * kk * g.sn * g.sn)) < 1e-12);
        }
    // degenerate modulus: sn(u, k->0) = sin u
    auto z = sfn::jacobi_elliptic(0.7, 0.0);
    CHECK(z.sn == Approx(0.64421768723769105).epsilon(1e-14));
    auto at0 = sfn::jacobi_elliptic(0.0, 0.77);
    CHECK(at0.sn == 0.0);
    CHECK(at0.cn == 1.0);
    CHECK(at0.dn == 1.0);
    // dual wrapper: sn' = cn dn
    cdual u = cdual::var(cd(1.2), 0);
    auto d = sfn::jacobi_elliptic_dual(u, k);
    CHECK(std::abs(d[0].g[0] - cd(0.35839138267161721)) < 1e-12);
}

TEST_CASE("theta3: frozen sums, evenness, tail bound") {
    cd tau(0, 1);
    int terms = 0;
    cd t0 = sfn::theta3(cd(0.0), tau, &terms);
    CHECK(std::abs(t0 - cd(1.086434811213308)) < 1e-14);
    CHECK(std::abs(sfn::theta3(cd(kPi / 2), tau) - cd(0.91357913815611682)) < 1e-14);
    CHECK(std::abs(sfn::theta3(cd(0.4), tau) - cd(1.0602146499248634)) < 1e-13);
    CHECK(std::abs(sfn::theta3(cd(0.4), tau) - sfn::theta3(cd(-0.4), tau)) < 1e-15);
    // adding 5 more terms changes nothing beyond 1e-15
    cd extra = 0.0;
    for (int n = terms; n < terms + 5; ++n)
        extra += 2.0 * std::exp(cd(0, 1) * kPi * tau * static_cast<double>(n) *
                                static_cast<double>(n)) *
                 std::cos(2.0 * n * 0.0);
    CHECK(std::abs(extra) < 1e-15);
    CHECK_THROWS_AS(sfn::theta3(cd(0.0), cd(1.0, -0.2)), s3c::range_error);
}
