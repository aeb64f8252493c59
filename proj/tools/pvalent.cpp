// Command-line front end: every calculator and verifier, JSON on stdout,
// human-readable notes on stderr.  Exit codes: 0 pass/success, 1 fail,
// 2 usage error, 3 hypothesis violation without --force.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "pvalent/bounds.hpp"
#include "pvalent/hypergeom.hpp"
#include "pvalent/json_io.hpp"
#include "pvalent/radii.hpp"
#include "pvalent/series.hpp"
#include "pvalent/verify.hpp"

namespace {

using pvalent::cplx;

std::string read_all(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw pvalent::parameter_error("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_line(const std::string& json) {
    std::cout << json << "\n";
}

std::string json_number(double v) {
    // Reuse the library's shortest-round-trip float printing.
    return nlohmann::ordered_json(v).dump();
}

// Shared parameter bag; each subcommand registers the flags it understands.
struct Params {
    int p = 1, n = 1, m = 0, t = 1, seed = 0;
    double alpha = 0.0, beta = 1.0, mu = 1.0, gamma = 1.0, delta = 1.0;
    double A = 1.0, B = -1.0, A2 = 1.0, B2 = -1.0;
    double eta = 0.0, kappa = 0.0, rho = 0.0;
    double ell = 0.0, lambda = 1.0;
    bool force = false;

    CLI::Option* ell_opt = nullptr;
    CLI::Option* lambda_opt = nullptr;
    CLI::Option* alpha_opt = nullptr;
    CLI::Option* beta_opt = nullptr;

    // (iii)-style convenience weights: alpha = ell + p - p lambda, beta = lambda.
    void resolve_weights(int p_for_map) {
        const bool have_ell = ell_opt && ell_opt->count() > 0;
        const bool have_lambda = lambda_opt && lambda_opt->count() > 0;
        if (!have_ell && !have_lambda)
            return;
        if (!(have_ell && have_lambda))
            throw pvalent::parameter_error("--ell and --lambda must be given together");
        if ((alpha_opt && alpha_opt->count() > 0) || (beta_opt && beta_opt->count() > 0))
            throw pvalent::parameter_error("--ell/--lambda conflict with --alpha/--beta");
        alpha = ell + p_for_map - p_for_map * lambda;
        beta = lambda;
    }
};

void add_weight_flags(CLI::App* cmd, Params& pr) {
    pr.alpha_opt = cmd->add_option("--alpha", pr.alpha, "operator weight alpha");
    pr.beta_opt = cmd->add_option("--beta", pr.beta, "operator weight beta (> 0)");
    pr.ell_opt = cmd->add_option("--ell", pr.ell, "convenience weight: alpha = ell + p(1-lambda)");
    pr.lambda_opt = cmd->add_option("--lambda", pr.lambda, "convenience weight: beta = lambda");
}

int run_hyp2f1(double a, double b, double c, double zre, double zim) {
    const cplx v = pvalent::gauss_2f1(a, b, c, cplx(zre, zim));
    write_line("{\"value\":{\"re\":" + json_number(v.real()) + ",\"im\":" +
               json_number(v.imag()) + "}}");
    std::fprintf(stderr, "2F1(%g,%g;%g;%g%+gi) = %.17g %+.17gi\n", a, b, c, zre, zim,
                 v.real(), v.imag());
    return 0;
}

int run_bound(const std::string& name, Params& pr) {
    pr.resolve_weights(pr.p);
    pvalent::BoundValue bv;
    if (name == "rho")
        bv = pvalent::rho_inclusion(pr.p, pr.alpha, pr.beta, pr.mu, pr.A, pr.B, pr.force);
    else if (name == "rho_tilde")
        bv = pvalent::rho_tilde(pr.p, pr.alpha, pr.beta, pr.A, pr.B, pr.force);
    else if (name == "tau")
        bv = pvalent::tau_integral_preserve(pr.p, pr.alpha, pr.beta, pr.delta, pr.A, pr.B,
                                            pr.force);
    else if (name == "xi")
        bv = pvalent::xi_power(pr.p, pr.alpha, pr.beta, pr.mu, pr.gamma, pr.A, pr.B,
                               pr.force);
    else if (name == "sigma")
        bv = pvalent::sigma_coeff(pr.p, pr.n, pr.alpha, pr.beta, pr.mu, pr.A, pr.B, pr.t,
                                  pr.force);
    else if (name == "xi_f")
        bv = pvalent::xi_F(pr.p, pr.n, pr.delta, pr.mu, pr.A, pr.B, pr.force);
    else if (name == "eta_conv")
        bv = pvalent::eta_convolution(pr.p, pr.alpha, pr.beta, pr.mu, pr.A, pr.B, pr.A2,
                                      pr.B2, pr.force);
    else // "rho_convexity", enforced by the flag validator
        bv = pvalent::rho_convexity(pr.p, pr.eta, pr.force);
    write_line("{\"value\":" + json_number(bv.value) +
               ",\"hypotheses_ok\":" + (bv.hypotheses_ok ? "true" : "false") + "}");
    std::fprintf(stderr, "%s = %.17g (%s)\n", name.c_str(), bv.value,
                 bv.hypotheses_ok ? "hypotheses ok" : "outside hypotheses");
    return 0;
}

int run_radius(const std::string& name, Params& pr) {
    pr.resolve_weights(pr.p);
    double r;
    if (name == "mu_kappa")
        r = pvalent::radius_mu_kappa(pr.p, pr.alpha, pr.beta, pr.mu, pr.kappa);
    else if (name == "cor234")
        r = pvalent::radius_mu_kappa(pr.p, 0.0, 1.0, pr.mu, pr.rho / pr.p);
    else if (name == "power")
        r = pvalent::radius_power(pr.p, pr.n, pr.alpha, pr.beta, pr.mu, pr.gamma,
                                  pr.kappa);
    else if (name == "linear")
        r = pvalent::radius_linear(pr.p, pr.n, pr.alpha, pr.beta, pr.mu);
    else if (name == "majorization")
        r = pvalent::majorization_radius(pr.p, pr.alpha, pr.beta, pr.A, pr.B);
    else // "majorization_closed"
        r = pvalent::majorization_radius_closed(pr.p, pr.eta);
    write_line("{\"value\":" + json_number(r) + "}");
    std::fprintf(stderr, "%s = %.17g\n", name.c_str(), r);
    return 0;
}

int run_apply(Params& pr, const std::string& in_path) {
    const pvalent::PSeries f = pvalent::pseries_from_json(read_all(in_path));
    pr.resolve_weights(f.p());
    pvalent::OperatorParams op{f.p(), f.n(), pr.m, pr.alpha, pr.beta};
    const pvalent::PSeries g = pvalent::apply_theta(f, op);
    write_line(pvalent::to_json(g));
    std::fprintf(stderr, "applied operator power m=%d (alpha=%g, beta=%g) to p=%d n=%d N=%d\n",
                 pr.m, pr.alpha, pr.beta, f.p(), f.n(), f.N());
    return 0;
}

// Extremal majorization pair: g with z g'/g = p(1+Az)/(1-z), A = 1-2 eta/p,
// and f = g (z+c)/(1+cz).  Returns the z-derivatives (the theorem's conclusion
// for the classical weights compares |f'| with |g'|).
void extremal_majorization_pair(int p, double eta, double c, int N, pvalent::Poly& fp,
                                pvalent::Poly& gp) {
    if (!(std::abs(c) < 1.0))
        throw pvalent::parameter_error("Schwarz factor constant must satisfy |c| < 1");
    const double acoef = 1.0 - 2.0 * eta / p;
    std::vector<cplx> tail(static_cast<std::size_t>(N - p), cplx(1.0 + acoef, 0.0));
    pvalent::OperatorParams op{p, 1, 0, 0.0, 1.0};
    const pvalent::Poly g = pvalent::series_from_ratio(tail, op, N).as_poly();
    std::vector<cplx> mob(static_cast<std::size_t>(N) + 1, cplx(0.0, 0.0));
    mob[0] = cplx(c, 0.0);
    double mk = 1.0 - c * c;
    for (int k = 1; k <= N; ++k) {
        mob[static_cast<std::size_t>(k)] = cplx(mk, 0.0);
        mk *= -c;
    }
    const pvalent::Poly f = (g * pvalent::Poly(0, std::move(mob))).truncated(N + 1);
    fp = f.derivative();
    gp = g.derivative();
}

int run_verify(const std::string& check, Params& pr, const std::string& in_path,
               pvalent::Grid grid, int N, double tol, bool tol_given, double cval,
               double rval) {
    pvalent::VerifyReport rep;
    if (check == "identity") {
        const pvalent::PSeries f = pvalent::pseries_from_json(read_all(in_path));
        pr.resolve_weights(f.p());
        pvalent::OperatorParams op{f.p(), f.n(), pr.m, pr.alpha, pr.beta};
        rep.tolerance = tol_given ? tol : 1e-12;
        rep.worst_violation = pvalent::theta_identity_residual(f, op);
        rep.witness = cplx(0.0, 0.0);
        rep.radial_samples = 0;
        rep.angular_samples = 0;
        rep.pass = rep.worst_violation <= rep.tolerance;
    } else if (check == "subordination") {
        pr.resolve_weights(pr.p);
        const double a1 = pr.A2, b1 = pr.B2; // phi = (1+A2 z)/(1+B2 z) vs target (A,B)
        auto phi = [a1, b1](cplx z) { return (1.0 + a1 * z) / (1.0 + b1 * z); };
        rep = pvalent::is_subordinate(phi, pr.A, pr.B, grid, tol_given ? tol : 1e-9);
    } else if (check == "class") {
        const pvalent::PSeries f = pvalent::pseries_from_json(read_all(in_path));
        pr.resolve_weights(f.p());
        pvalent::OperatorParams op{f.p(), f.n(), pr.m, pr.alpha, pr.beta};
        rep = pvalent::class_membership(f, op, pvalent::ClassParams{pr.mu, pr.A, pr.B},
                                        grid, tol_given ? tol : 1e-9);
    } else if (check == "majorization") {
        pvalent::Poly fp, gp;
        extremal_majorization_pair(pr.p, pr.eta, cval, N, fp, gp);
        rep = pvalent::majorization_check(fp, gp, rval, grid, tol_given ? tol : 1e-9);
    } else if (check == "sharpness-inclusion") {
        pr.resolve_weights(pr.p);
        pvalent::SharpnessOptions opts{N, grid};
        rep = pvalent::sharpness_inclusion(pr.p, pr.alpha, pr.beta, pr.mu, pr.A, pr.B,
                                           opts);
    } else if (check == "sharpness-radius") {
        pr.resolve_weights(pr.p);
        pvalent::SharpnessOptions opts{N, grid};
        rep = pvalent::sharpness_radius(pr.p, pr.alpha, pr.beta, pr.mu, pr.A, pr.B, opts);
    } else if (check == "sharpness-majorization") {
        pvalent::SharpnessOptions opts{N, grid};
        rep = pvalent::sharpness_majorization(pr.p, pr.eta, opts);
    } else { // "sharpness-convolution"
        pr.resolve_weights(pr.p);
        rep = pvalent::sharpness_convolution(pr.p, pr.alpha, pr.beta, pr.mu, pr.A, pr.A2,
                                             grid.angular, tol_given ? tol : 1e-3);
    }
    write_line(pvalent::to_json(rep));
    std::fprintf(stderr, "%s: %s (worst violation %.3g, tolerance %.3g)\n", check.c_str(),
                 rep.pass ? "PASS" : "FAIL", rep.worst_violation, rep.tolerance);
    return rep.pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"p-valent multiplier-operator toolkit"};
    app.require_subcommand(1);

    // hyp2f1 ---------------------------------------------------------------
    double ha = 0, hb = 0, hc = 1, hz = 0, hzi = 0;
    CLI::App* c_hyp = app.add_subcommand("hyp2f1", "evaluate the Gauss series 2F1(a,b;c;z)");
    c_hyp->add_option("--a", ha, "upper parameter a")->required();
    c_hyp->add_option("--b", hb, "upper parameter b")->required();
    c_hyp->add_option("--c", hc, "lower parameter c")->required();
    c_hyp->add_option("--z", hz, "argument, real part")->required();
    c_hyp->add_option("--zim", hzi, "argument, imaginary part");

    // bound ----------------------------------------------------------------
    Params bp;
    std::string bound_name;
    CLI::App* c_bound = app.add_subcommand("bound", "closed-form sharp bounds");
    c_bound->add_option("--name", bound_name, "which bound")
        ->required()
        ->check(CLI::IsMember({"rho", "rho_tilde", "tau", "xi", "sigma", "xi_f",
                               "eta_conv", "rho_convexity"}));
    c_bound->add_option("--p", bp.p, "valence p")->required();
    c_bound->add_option("--n", bp.n, "gap width n");
    add_weight_flags(c_bound, bp);
    c_bound->add_option("--mu", bp.mu, "mixing weight mu");
    c_bound->add_option("--gamma", bp.gamma, "power exponent gamma");
    c_bound->add_option("--delta", bp.delta, "integral transform weight delta");
    c_bound->add_option("--A", bp.A, "dominant numerator coefficient A");
    c_bound->add_option("--B", bp.B, "dominant denominator coefficient B");
    c_bound->add_option("--A2", bp.A2, "second-class A (eta_conv)");
    c_bound->add_option("--B2", bp.B2, "second-class B (eta_conv)");
    c_bound->add_option("--eta", bp.eta, "convexity order eta");
    c_bound->add_option("--t", bp.t, "coefficient root index t");
    c_bound->add_flag("--force", bp.force,
                      "compute outside theorem hypotheses (sets hypotheses_ok=false)");

    // radius ---------------------------------------------------------------
    Params rp;
    std::string radius_name;
    CLI::App* c_rad = app.add_subcommand("radius", "closed-form sharp radii");
    c_rad->add_option("--name", radius_name, "which radius")
        ->required()
        ->check(CLI::IsMember({"mu_kappa", "cor234", "power", "linear", "majorization",
                               "majorization_closed"}));
    c_rad->add_option("--p", rp.p, "valence p")->required();
    c_rad->add_option("--n", rp.n, "gap width n");
    add_weight_flags(c_rad, rp);
    c_rad->add_option("--mu", rp.mu, "mixing weight mu");
    c_rad->add_option("--gamma", rp.gamma, "power exponent gamma");
    c_rad->add_option("--kappa", rp.kappa, "target order kappa");
    c_rad->add_option("--rho", rp.rho, "starlikeness order rho (cor234)");
    c_rad->add_option("--A", rp.A, "majorization class A");
    c_rad->add_option("--B", rp.B, "majorization class B");
    c_rad->add_option("--eta", rp.eta, "starlikeness order eta (majorization_closed)");

    // apply ----------------------------------------------------------------
    Params ap;
    std::string apply_in;
    CLI::App* c_apply = app.add_subcommand("apply", "apply an operator power to a series (JSON in, JSON out)");
    c_apply->add_option("--m", ap.m, "operator power m")->required();
    add_weight_flags(c_apply, ap);
    c_apply->add_option("--in", apply_in, "input path (default: stdin)");

    // verify ---------------------------------------------------------------
    Params vp;
    std::string verify_check, verify_in;
    int v_N = 256;
    double v_tol = 0.0, v_c = 0.5, v_r = 0.2;
    pvalent::Grid v_grid;
    CLI::App* c_ver = app.add_subcommand("verify", "sampled verification checks (evidence, not proof)");
    CLI::Option* tol_opt;
    c_ver->add_option("--check", verify_check, "which check")
        ->required()
        ->check(CLI::IsMember({"identity", "subordination", "class", "majorization",
                               "sharpness-inclusion", "sharpness-radius",
                               "sharpness-majorization", "sharpness-convolution"}));
    c_ver->add_option("--p", vp.p, "valence p");
    c_ver->add_option("--m", vp.m, "base operator power m");
    add_weight_flags(c_ver, vp);
    c_ver->add_option("--mu", vp.mu, "mixing weight mu");
    c_ver->add_option("--A", vp.A, "target dominant A");
    c_ver->add_option("--B", vp.B, "target dominant B");
    c_ver->add_option("--A2", vp.A2, "candidate/second-class A");
    c_ver->add_option("--B2", vp.B2, "candidate/second-class B");
    c_ver->add_option("--eta", vp.eta, "starlikeness order eta");
    c_ver->add_option("--c", v_c, "Schwarz factor constant c (majorization pair)");
    c_ver->add_option("--r", v_r, "majorization disk radius r");
    c_ver->add_option("--N", v_N, "truncation order for built series");
    c_ver->add_option("--radial", v_grid.radial, "radial sample count");
    c_ver->add_option("--angular", v_grid.angular, "angular sample count");
    c_ver->add_option("--rmax", v_grid.r_max, "outermost sample radius");
    tol_opt = c_ver->add_option("--tol", v_tol, "override the check tolerance");
    c_ver->add_option("--seed", vp.seed,
                      "seed for sampled verification (current grids are deterministic)");
    c_ver->add_option("--in", verify_in, "input series path (default: stdin)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        std::cerr << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(c_hyp))
            return run_hyp2f1(ha, hb, hc, hz, hzi);
        if (app.got_subcommand(c_bound))
            return run_bound(bound_name, bp);
        if (app.got_subcommand(c_rad))
            return run_radius(radius_name, rp);
        if (app.got_subcommand(c_apply))
            return run_apply(ap, apply_in);
        return run_verify(verify_check, vp, verify_in, v_grid, v_N, v_tol,
                          tol_opt->count() > 0, v_c, v_r);
    } catch (const pvalent::hypothesis_error& e) {
        std::cerr << "hypothesis violation: " << e.what() << " (use --force to compute anyway)\n";
        return 3;
    } catch (const pvalent::pole_error& e) {
        std::cerr << "pole: " << e.what() << " near z = " << e.witness.real() << " + "
                  << e.witness.imag() << "i\n";
        return 1;
    } catch (const pvalent::parameter_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
