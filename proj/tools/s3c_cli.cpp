// Batch verification driver: exposes the library checks as subcommands with
// machine-readable JSON/CSV output and deterministic seeds.
//
// Exit codes: 0 all checks pass, 1 verification failure, 2 usage error.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "s3c/eigenbasis.hpp"
#include "s3c/embedding.hpp"
#include "s3c/geometry.hpp"
#include "s3c/kernels.hpp"
#include "s3c/report.hpp"
#include "s3c/verify.hpp"
#include "s3c/version.hpp"

using namespace s3c;

namespace {

void write_text(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream f(path);
    f << text << "\n";
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

int run_verify_metric(const std::string& system_arg, int points, std::uint64_t seed,
                      double tol, double gamma_tol, int threads, const std::string& out) {
    std::vector<int> systems;
    if (system_arg == "all") {
        for (int s = 1; s <= 21; ++s) systems.push_back(s);
    } else {
        int s = 0;
        try {
            s = std::stoi(system_arg);
        } catch (...) {
            std::cerr << "unknown system '" << system_arg << "'\n";
            return 2;
        }
        if (s < 1 || s > 21) {
            std::cerr << "unknown system " << s << "\n";
            return 2;
        }
        systems.push_back(s);
    }
    std::vector<VerificationReport> reports(systems.size());
    if (threads > 1) {
        std::vector<std::future<VerificationReport>> fut;
        for (int s : systems)
            fut.push_back(std::async(std::launch::async, metric_agreement, s, points, seed,
                                     tol, gamma_tol));
        for (std::size_t i = 0; i < fut.size(); ++i) reports[i] = fut[i].get();
    } else {
        for (std::size_t i = 0; i < systems.size(); ++i)
            reports[i] = metric_agreement(systems[i], points, seed, tol, gamma_tol);
    }
    nlohmann::json arr = nlohmann::json::array();
    bool all_pass = true;
    for (const auto& r : reports) {
        arr.push_back(to_json(r));
        all_pass = all_pass && r.pass;
    }
    write_text(out, arr.dump(2));
    return all_pass ? 0 : 1;
}

int run_eigencheck(const std::string& system_arg, int j_max, int grid, double tol,
                   const std::string& out) {
    nlohmann::json arr = nlohmann::json::array();
    bool all_pass = true;

    auto push = [&](VerificationReport& r) {
        arr.push_back(to_json(r));
        all_pass = all_pass && r.pass;
    };

    if (system_arg == "liouville-block") {
        std::vector<double> g;
        for (int i = 0; i < grid; ++i) g.push_back(-1.0 + 2.0 * i / (grid - 1));
        VerificationReport r;
        r.check = "liouville-order-arbitration";
        r.n_points = grid;
        r.tol = 1e-8;
        r.params = {{"J_max", std::to_string(j_max)}, {"k", "1.3"}};
        double worst_good = 0.0, best_bad = 1e300;
        for (int J = 0; J <= j_max; ++J) {
            Block1DParams good;
            good.J = J;
            good.nu = J + 1.0;
            good.k = 1.3;
            Block1DParams bad = good;
            bad.nu = J + 0.5;
            double rg = ode_residual_1d(Block1D::complex_liouville, good, g);
            double rb = ode_residual_1d(Block1D::complex_liouville, bad, g);
            worst_good = std::max(worst_good, rg);
            best_bad = std::min(best_bad, rb);
        }
        r.max_abs_err = worst_good;
        r.pass = worst_good <= 1e-8 && best_bad > 1e-2;
        r.notes.push_back("order=J+1 passes (max residual " + fmt(worst_good) +
                          "); order=J+1/2 fails (min residual " + fmt(best_bad) + ")");
        r.notes.push_back("erratum recorded against the printed H^(1)_{J+1/2} of the "
                          "horicyclic wave-functions: Bessel's equation forces nu^2 = "
                          "J(J+2)+1 = (J+1)^2");
        push(r);
        write_text(out, arr.dump(2));
        return all_pass ? 0 : 1;
    }

    static const std::map<std::string, Block1D> kBlocks = {
        {"sym-poschl-teller", Block1D::sym_poschl_teller},
        {"mod-poschl-teller", Block1D::mod_poschl_teller},
        {"radial-oscillator", Block1D::radial_oscillator},
        {"airy", Block1D::airy},
        {"legendre-complex", Block1D::legendre_complex},
        {"bessel-k", Block1D::bessel_K_imag},
    };
    auto bit = kBlocks.find(system_arg);
    if (bit != kBlocks.end()) {
        std::vector<double> g;
        bool symmetric = bit->second == Block1D::airy || bit->second == Block1D::legendre_complex;
        for (int i = 0; i < grid; ++i)
            g.push_back(symmetric ? -0.8 + 1.6 * i / (grid - 1.0)
                                  : 0.3 + 1.9 * i / (grid - 1.0));
        VerificationReport r;
        r.check = "ode-residual:" + system_arg;
        r.n_points = grid;
        r.tol = 1e-8;
        Block1DParams prm;
        prm.J = std::min(j_max, 5);
        prm.l = 1;
        prm.eta = 0.8;
        prm.nu = 1.7;
        prm.p = 1.1;
        prm.k = 1.3;
        prm.n = 2;
        prm.lam = 2.0;
        r.max_abs_err = ode_residual_1d(bit->second, prm, g);
        r.pass = r.max_abs_err <= r.tol;
        push(r);
        write_text(out, arr.dump(2));
        return all_pass ? 0 : 1;
    }

    int sys = 0;
    try {
        sys = std::stoi(system_arg);
    } catch (...) {
        std::cerr << "unknown system or block '" << system_arg << "'\n";
        return 2;
    }
    if (sys < 1 || sys > 21) {
        std::cerr << "unknown system " << sys << "\n";
        return 2;
    }
    if (!chart_info(sys).eigenbasis) {
        std::cerr << "eigencheck: system " << sys << ": eigenbasis out of scope"
                  << (sys == 9 ? " (Mathieu)"
                      : sys == 6 || sys == 13 ? " (Lame)"
                      : sys == 15 ? " (spheroidal)" : "")
                  << "\n";
        return 2;
    }

    auto pts = domain_sample(sys, grid, 42);
    VerificationReport r;
    r.system = sys;
    r.check = "hamiltonian-residual";
    r.n_points = grid;
    r.seed = 42;
    r.tol = tol;
    r.params = {{"J_max", std::to_string(j_max)}};
    double worst = 0.0;
    int n_modes = 0;
    for (int J = 0; J <= j_max; ++J) {
        std::vector<QuantumNumbers> modes;
        switch (sys) {
            case 1:
                for (int m1 = -J; m1 <= J; ++m1)
                    for (int m2 = -J; m2 <= J; ++m2) {
                        if (std::abs(m1) + std::abs(m2) > J) continue;
                        if ((J - std::abs(m1) - std::abs(m2)) % 2) continue;
                        modes.push_back({J, double(m1), double(m2), 0});
                    }
                break;
            case 2:
                modes.push_back({J, 1.0, 0.5, 0});
                break;
            case 3:
                for (int l = 0; l <= J; ++l)
                    for (int m = 0; m <= l; ++m) modes.push_back({J, double(l), double(m), 0});
                break;
            case 4:
                for (int l = 0; l <= J; ++l) modes.push_back({0, double(l), double(J - l), 0.8});
                break;
            case 5:
                modes.push_back({J, 1.1, 1.0, 0});
                break;
            case 16:
                for (int nxi = 0; nxi <= J; ++nxi)
                    modes.push_back({0, double(nxi), double(J - nxi), 1.3});
                break;
        }
        for (const auto& qn : modes) {
            EigenMode m = make_eigenmode(sys, qn);
            worst = std::max(worst, hamiltonian_residual(sys, m.field, m.energy, pts));
            ++n_modes;
        }
    }
    r.max_rel_err = worst;  // residuals are relative to max |f|
    r.max_abs_err = worst;
    r.pass = worst <= tol;
    r.params["modes"] = std::to_string(n_modes);
    if (sys == 2 || sys == 5)
        r.notes.push_back("Hankel order J+1 (printed J+1/2 is an erratum; see "
                          "liouville-block arbitration)");
    if (sys == 3)
        r.notes.push_back("Gegenbauer orders l+1, m+1/2 and phase e^{im phi} "
                          "(printed orders fail the residual oracle)");
    if (sys == 16)
        r.notes.push_back("Laguerre order lambda=-(J+1), the minus branch of "
                          "lambda=+-sqrt(1+2E); the printed +(J+1) fails the residual oracle");
    push(r);
    write_text(out, arr.dump(2));
    return all_pass ? 0 : 1;
}

int run_kernel_compare(std::vector<double> psi_grid, std::vector<double> tau_grid, double tol,
                       const std::string& out, const std::string& csv_path) {
    if (psi_grid.empty()) psi_grid = {0.3, 1.0, 2.0, 3.0};
    if (tau_grid.empty()) tau_grid = {0.25, 0.5, 1.0, 2.0};
    for (double t : tau_grid)
        if (!(t > 0.0)) {
            std::cerr << "tau must be positive\n";
            return 2;
        }
    for (double p : psi_grid)
        if (!(p > 0.0 && p < 3.14159265358979)) {
            std::cerr << "psi must lie in (0, pi)\n";
            return 2;
        }

    std::ostringstream csv;
    csv << "psi,tau,spectral,theta,abs_diff\n";
    double worst_theta = 0.0;
    for (double p : psi_grid)
        for (double t : tau_grid) {
            double spec = heat_kernel_spectral(std::cos(p), t);
            double theta = heat_kernel_theta(p, t);
            double d = std::abs(theta - spec);
            worst_theta = std::max(worst_theta, d);
            csv << fmt(p) << "," << fmt(t) << "," << fmt(spec) << "," << fmt(theta) << ","
                << fmt(d) << "\n";
        }

    VerificationReport rth;
    rth.check = "theta-kernel-identity";
    rth.n_points = static_cast<int>(psi_grid.size() * tau_grid.size());
    rth.tol = tol;
    rth.max_abs_err = worst_theta;
    rth.pass = worst_theta <= tol;

    VerificationReport rres;
    rres.check = "resolvent-identity";
    rres.tol = 1e-6;
    double worst_res = 0.0;
    for (double E : {-1.0, -0.5, -0.375})
        for (double p : {0.8, 1.6, 2.4})
            worst_res = std::max(worst_res,
                                 std::abs(resolvent_spectral(p, E, 400) - green_sphere(p, E)));
    rres.n_points = 9;
    rres.max_abs_err = worst_res;
    rres.pass = worst_res <= rres.tol;
    rres.notes.push_back("E in {-1,-0.5,-0.375} x psi in {0.8,1.6,2.4}, adaptive tail");

    VerificationReport rpol;
    rpol.check = "pole-recovery";
    rpol.tol = 1e-8;
    auto poles = pole_scan(-0.4, 20.0, 6);
    double worst_pole = 0.0;
    double expected[6] = {0.0, 1.5, 4.0, 7.5, 12.0, 17.5};
    for (int i = 0; i < 6; ++i)
        worst_pole = std::max(worst_pole, std::abs(poles[i] - expected[i]));
    rpol.n_points = 6;
    rpol.max_abs_err = worst_pole;
    rpol.pass = worst_pole <= rpol.tol;

    nlohmann::json arr = nlohmann::json::array();
    for (auto* r : {&rth, &rres, &rpol}) arr.push_back(to_json(*r));
    if (!csv_path.empty()) {
        std::ofstream f(csv_path);
        f << csv.str();
    } else {
        std::cout << csv.str();
    }
    write_text(out, arr.dump(2));
    return (rth.pass && rres.pass && rpol.pass) ? 0 : 1;
}

int run_specfun_table(const std::string& out) {
    std::ostringstream csv;
    csv << "family,params,arg,value_re,value_im\n";
    auto row = [&](const std::string& fam, const std::string& par, double arg, cd v) {
        csv << fam << "," << par << "," << fmt(arg) << "," << fmt(v.real()) << ","
            << fmt(v.imag()) << "\n";
    };
    for (double x : {0.5, 1.5, 2.5, 5.0})
        row("gamma", "", x, sf::gamma_complex(cd(x)));
    row("gamma", "im=2", 0.5, sf::gamma_complex(cd(0.5, 2)));
    for (double z : {-0.5, 0.2, 0.5})
        row("hyp2f1", "a=0.3;b=0.7;c=1.1", z, sf::hyp2f1(cd(0.3), cd(0.7), cd(1.1), cd(z)));
    for (double z : {-2.0, 0.5, 3.7})
        row("hyp1f1", "a=0.3;c=1.7", z, sf::hyp1f1(cd(0.3), cd(1.7), cd(z)));
    for (int n : {0, 2, 5}) {
        row("jacobi", "n=" + std::to_string(n) + ";a=0.5;b=1.5", 0.3,
            cd(sf::jacobi_p(n, 0.5, 1.5, 0.3)));
        row("gegenbauer", "n=" + std::to_string(n) + ";lam=1", 0.3,
            cd(sf::gegenbauer_c(n, 1.0, 0.3)));
        row("laguerre", "n=" + std::to_string(n) + ";alpha=1", 1.5,
            cd(sf::laguerre_l(n, 1.0, 1.5)));
    }
    row("legendre_p", "nu=0.5;mu=-0.5", 0.5, sf::legendre_p(cd(0.5), cd(-0.5), cd(0.5)));
    row("legendre_q_half", "nu=0", std::cosh(1.0), sf::legendre_q_half(cd(0), std::cosh(1.0)));
    for (double x : {0.5, 2.5, 7.1})
        row("bessel_j", "nu=0", x, cd(sf::bessel_j_real(0, x)));
    row("bessel_j", "nu=2.7", 5.3, cd(sf::bessel_j_real(2.7, 5.3)));
    row("hankel1_half", "nu=1/2", 2.0, sf::hankel1_half(0, cd(2.0)));
    row("bessel_i", "nu=1.5", 2.0, cd(sf::bessel_i_real(1.5, 2.0)));
    for (double k : {0.0, 1.0, 2.0})
        row("bessel_k_imag", "k=" + fmt(k), 1.0, cd(sf::bessel_k_imag(k, 1.0)));
    for (double t : {-2.0, 0.0, 1.0, 5.0})
        row("airy_ai", "", t, cd(sf::airy_ai(t)));
    for (double u : {0.0, 0.7, 1.2}) {
        auto f = sf::jacobi_elliptic(u, std::sqrt(0.5));
        row("sn", "k2=0.5", u, cd(f.sn));
        row("cn", "k2=0.5", u, cd(f.cn));
        row("dn", "k2=0.5", u, cd(f.dn));
    }
    row("theta3", "tau=i", 0.0, sf::theta3(cd(0.0), cd(0, 1)));
    row("theta3", "tau=i", 0.4, sf::theta3(cd(0.4), cd(0, 1)));
    if (out.empty())
        std::cout << csv.str();
    else {
        std::ofstream f(out);
        f << csv.str();
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification CLI for separable quantum mechanics on the complex 3-sphere"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);

    // verify-metric
    auto* vm = app.add_subcommand("verify-metric",
                                  "embedding-vs-closed-form metric/Gamma agreement");
    std::string vm_system = "all", vm_out;
    int vm_points = 64, vm_threads = 1;
    std::uint64_t vm_seed = 42;
    double vm_tol = 1e-9, vm_gamma_tol = 1e-8;
    vm->add_option("--system", vm_system, "system id 1..21 or 'all'");
    vm->add_option("--points", vm_points, "samples per system")->check(CLI::PositiveNumber);
    vm->add_option("--seed", vm_seed, "sampling seed");
    vm->add_option("--tol", vm_tol, "metric agreement tolerance");
    vm->add_option("--gamma-tol", vm_gamma_tol, "Gamma agreement tolerance");
    vm->add_option("--threads", vm_threads, "worker threads")->check(CLI::PositiveNumber);
    vm->add_option("--out", vm_out, "write JSON report here (default stdout)");

    // eigencheck
    auto* ec = app.add_subcommand("eigencheck", "Hamiltonian/ODE residuals for eigenbases");
    std::string ec_system, ec_out;
    int ec_jmax = 5, ec_grid = 32;
    double ec_tol = 1e-6;
    ec->add_option("--system", ec_system,
                   "system id, 'liouville-block', or a 1D block name")
        ->required();
    ec->add_option("--J-max", ec_jmax, "largest principal label")->check(CLI::PositiveNumber);
    ec->add_option("--grid", ec_grid, "grid points")->check(CLI::PositiveNumber);
    ec->add_option("--tol", ec_tol, "residual tolerance");
    ec->add_option("--out", ec_out, "write JSON report here (default stdout)");

    // kernel-compare
    auto* kc = app.add_subcommand("kernel-compare",
                                  "Theta identity, resolvent identity, pole recovery");
    std::vector<double> kc_psi, kc_tau;
    double kc_tol = 1e-10;
    std::string kc_out, kc_csv;
    kc->add_option("--psi-grid", kc_psi, "psi grid values")->delimiter(',');
    kc->add_option("--tau-grid", kc_tau, "tau grid values")->delimiter(',');
    kc->add_option("--tol", kc_tol, "theta identity tolerance");
    kc->add_option("--out", kc_out, "write JSON summary here (default stdout)");
    kc->add_option("--csv", kc_csv, "write CSV table here (default stdout)");

    // specfun-table
    auto* st = app.add_subcommand("specfun-table", "dump special-function sample values as CSV");
    std::string st_out;
    st->add_option("--out", st_out, "write CSV here (default stdout)");

    // list-systems
    auto* ls = app.add_subcommand("list-systems", "dump the chart registry as JSON");
    std::string ls_out;
    ls->add_option("--out", ls_out, "write JSON here (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (vm->parsed())
            return run_verify_metric(vm_system, vm_points, vm_seed, vm_tol, vm_gamma_tol,
                                     vm_threads, vm_out);
        if (ec->parsed()) return run_eigencheck(ec_system, ec_jmax, ec_grid, ec_tol, ec_out);
        if (kc->parsed()) return run_kernel_compare(kc_psi, kc_tau, kc_tol, kc_out, kc_csv);
        if (st->parsed()) return run_specfun_table(st_out);
        if (ls->parsed()) {
            write_text(ls_out, chart_registry_json().dump(2));
            return 0;
        }
    } catch (const domain_error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const capability_error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
