#include <catch2/catch_amalgamated.hpp>

#include <complex>

#include "s3c/dual.hpp"

using namespace s3c;
using Catch::Approx;
using cd = std::complex<double>;

static cdual x_at(double v, int slot) { return cdual::var(cd(v), slot); }

TEST_CASE("product rule and Hessian symmetry") {
    // f(u0,u1) = u0^2 * sin(u1)
    auto f = [](const cdual& a, const cdual& b) { return a * a * sin(b); };
    double a = 0.7, b = 1.3;
    cdual r = f(x_at(a, 0), x_at(b, 1));

    CHECK(r.v.real() == Approx(a * a * std::sin(b)).epsilon(1e-14));
    CHECK(r.g[0].real() == Approx(2 * a * std::sin(b)).epsilon(1e-14));
    CHECK(r.g[1].real() == Approx(a * a * std::cos(b)).epsilon(1e-14));
    CHECK(r.hess(0, 0).real() == Approx(2 * std::sin(b)).epsilon(1e-14));
    CHECK(r.hess(0, 1).real() == Approx(2 * a * std::cos(b)).epsilon(1e-14));
    CHECK(r.hess(1, 0).real() == Approx(2 * a * std::cos(b)).epsilon(1e-14));
    CHECK(r.hess(1, 1).real() == Approx(-a * a * std::sin(b)).epsilon(1e-14));
}

TEST_CASE("quotients, exp/log/sqrt/pow chains") {
    double v = 0.9;
    cdual x = x_at(v, 2);
    cdual r = exp(log(x) * 0.5) / sqrt(x);  // == 1 identically
    CHECK(std::abs(r.v - cd(1.0)) < 1e-14);
    CHECK(std::abs(r.g[2]) < 1e-13);
    CHECK(std::abs(r.hess(2, 2)) < 1e-12);

    cdual p = pow(x, 2.5);
    CHECK(p.v.real() == Approx(std::pow(v, 2.5)).epsilon(1e-14));
    CHECK(p.g[2].real() == Approx(2.5 * std::pow(v, 1.5)).epsilon(1e-14));
    CHECK(p.hess(2, 2).real() == Approx(2.5 * 1.5 * std::pow(v, 0.5)).epsilon(1e-13));
}

TEST_CASE("hyperbolic functions against finite differences") {
    double v = 0.45, h = 1e-5;
    cdual r = tanh(x_at(v, 0) * x_at(v, 0));
    auto fd = [&](double t) { return std::tanh(t * t); };
    double d1 = (fd(v + h) - fd(v - h)) / (2 * h);
    double d2 = (fd(v + h) - 2 * fd(v) + fd(v - h)) / (h * h);
    CHECK(r.g[0].real() == Approx(d1).epsilon(1e-8));
    CHECK(r.hess(0, 0).real() == Approx(d2).margin(1e-5));
}

TEST_CASE("complex-valued chains keep holomorphic derivatives") {
    cd i(0, 1);
    double v = 0.6;
    cdual x = x_at(v, 1);
    cdual r = exp(x * cd(0.0, -1.0));  // e^{-ix}: r' = -i e^{-ix}, r'' = -e^{-ix}
    cd e = std::exp(-i * v);
    CHECK(std::abs(r.v - e) < 1e-15);
    CHECK(std::abs(r.g[1] - (-i * e)) < 1e-15);
    CHECK(std::abs(r.hess(1, 1) - (-e)) < 1e-15);
}
