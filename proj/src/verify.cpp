#include "pvalent/verify.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "pvalent/hypergeom.hpp"
#include "pvalent/radii.hpp"

namespace pvalent {

namespace {
constexpr double two_pi = 6.283185307179586476925286766559;
}

double Region::exterior_margin(cplx w) const {
    if (shape == Shape::halfplane)
        return re_bound - w.real();
    return std::abs(w - center) - radius;
}

Region target_region(double A, double B) {
    if (!(B >= -1.0 && B < A && A <= 1.0))
        throw parameter_error("target region: require -1 <= B < A <= 1");
    Region r;
    if (B == -1.0) {
        r.shape = Region::Shape::halfplane;
        r.re_bound = (1.0 - A) / 2.0;
    } else {
        r.shape = Region::Shape::disk;
        r.center = cplx((1.0 - A * B) / (1.0 - B * B), 0.0);
        r.radius = (A - B) / (1.0 - B * B);
    }
    return r;
}

void Grid::validate() const {
    if (radial < 1 || angular < 1)
        throw parameter_error("grid: sample counts must be >= 1");
    if (!(r_max > 0.0 && r_max < 1.0))
        throw parameter_error("grid: r_max must lie in (0,1)");
}

namespace {

std::vector<cplx> grid_points(const Grid& g, double r_scale = -1.0) {
    g.validate();
    const double rmax = r_scale > 0.0 ? r_scale : g.r_max;
    std::vector<cplx> z;
    z.reserve(static_cast<std::size_t>(g.radial) * static_cast<std::size_t>(g.angular));
    for (int i = 0; i < g.radial; ++i) {
        const double r = rmax * (i + 1) / g.radial;
        for (int j = 0; j < g.angular; ++j)
            z.push_back(std::polar(r, two_pi * j / g.angular));
    }
    return z;
}

} // namespace

VerifyReport is_subordinate(const std::function<cplx(cplx)>& phi, double A, double B,
                            Grid grid, double tol) {
    const Region region = target_region(A, B);
    if (std::abs(phi(cplx(0.0, 0.0)) - 1.0) > 1e-12)
        throw parameter_error("subordination check: phi(0) must equal 1");
    VerifyReport rep;
    rep.radial_samples = grid.radial;
    rep.angular_samples = grid.angular;
    rep.tolerance = tol;
    double worst = -1e308;
    cplx at(0.0, 0.0);
    for (const cplx& z : grid_points(grid)) {
        const double margin = region.exterior_margin(phi(z));
        if (margin > worst) {
            worst = margin;
            at = z;
        }
    }
    rep.worst_violation = std::max(0.0, worst);
    rep.witness = at;
    rep.pass = rep.worst_violation <= tol;
    return rep;
}

VerifyReport class_membership(const PSeries& f, const OperatorParams& op,
                              const ClassParams& cls, Grid grid, double tol) {
    op.validate();
    cls.validate();
    if (op.p != f.p() || op.n != f.n())
        throw parameter_error("class membership: operator params do not match the series");
    const Region region = target_region(cls.A, cls.B);

    // z^p-normalized images of three consecutive operator powers.
    const Poly d0 = apply_theta(f, op).normalized_poly();
    const Poly d1 = apply_theta(f, op.with_m(op.m + 1)).normalized_poly();
    const Poly d2 = apply_theta(f, op.with_m(op.m + 2)).normalized_poly();

    const std::vector<cplx> z = grid_points(grid);
    std::vector<cplx> v0(z.size()), v1(z.size()), v2(z.size());
    d0.eval_batch(z.data(), z.size(), v0.data());
    d1.eval_batch(z.data(), z.size(), v1.data());
    d2.eval_batch(z.data(), z.size(), v2.data());

    VerifyReport rep;
    rep.radial_samples = grid.radial;
    rep.angular_samples = grid.angular;
    rep.tolerance = tol;
    double worst = -1e308;
    cplx at(0.0, 0.0);
    for (std::size_t s = 0; s < z.size(); ++s) {
        if (std::abs(v0[s]) < 1e-12 || std::abs(v1[s]) < 1e-12)
            throw pole_error("class membership: operator-image denominator vanished near a sample",
                             z[s]);
        const cplx w = (1.0 - cls.mu) * (v1[s] / v0[s]) + cls.mu * (v2[s] / v1[s]);
        const double margin = region.exterior_margin(w);
        if (margin > worst) {
            worst = margin;
            at = z[s];
        }
    }
    rep.worst_violation = std::max(0.0, worst);
    rep.witness = at;
    rep.pass = rep.worst_violation <= tol;
    return rep;
}

VerifyReport majorization_check(const Poly& f, const Poly& g, double r, Grid grid,
                                double tol) {
    if (!(r > 0.0 && r < 1.0))
        throw parameter_error("majorization check: radius must lie in (0,1)");
    const std::vector<cplx> z = grid_points(grid, r);
    std::vector<cplx> vf(z.size()), vg(z.size());
    f.eval_batch(z.data(), z.size(), vf.data());
    g.eval_batch(z.data(), z.size(), vg.data());

    VerifyReport rep;
    rep.radial_samples = grid.radial;
    rep.angular_samples = grid.angular;
    rep.tolerance = tol;
    double worst = -1e308;
    cplx at(0.0, 0.0);
    for (std::size_t s = 0; s < z.size(); ++s) {
        const double mg = std::abs(vg[s]);
        const double margin = (std::abs(vf[s]) - mg) / std::max(1.0, mg);
        if (margin > worst) {
            worst = margin;
            at = z[s];
        }
    }
    rep.worst_violation = std::max(0.0, worst);
    rep.witness = at;
    rep.pass = rep.worst_violation <= tol;
    return rep;
}

VerifyReport caratheodory_lower_bound_check(double gamma, Grid grid, double tol) {
    if (!(gamma >= 0.0 && gamma < 1.0))
        throw parameter_error("caratheodory bound check: gamma must lie in [0,1)");
    VerifyReport rep;
    rep.radial_samples = grid.radial;
    rep.angular_samples = grid.angular;
    rep.tolerance = tol;
    double worst = -1e308;
    cplx at(0.0, 0.0);
    const std::vector<cplx> zs = grid_points(grid);
    for (int j = 1; j <= 3; ++j) {
        for (int ph = 0; ph < 8; ++ph) {
            const cplx rot = std::polar(1.0, two_pi * ph / 8.0);
            for (const cplx& z : zs) {
                const cplx w = rot * std::pow(z, j);
                const cplx phi = gamma + (1.0 - gamma) * (1.0 + w) / (1.0 - w);
                const double bound =
                    2.0 * gamma - 1.0 + 2.0 * (1.0 - gamma) / (1.0 + std::abs(z));
                const double margin = bound - phi.real();
                if (margin > worst) {
                    worst = margin;
                    at = z;
                }
            }
        }
    }
    rep.worst_violation = std::max(0.0, worst);
    rep.witness = at;
    rep.pass = rep.worst_violation <= tol;
    return rep;
}

std::function<cplx(cplx)> extremal_ratio(double kappa, int n) {
    if (!(kappa >= 0.0 && kappa < 1.0))
        throw parameter_error("extremal ratio: kappa must lie in [0,1)");
    if (n < 1)
        throw parameter_error("extremal ratio: n must be >= 1");
    return [kappa, n](cplx z) {
        cplx zn(1.0, 0.0);
        for (int i = 0; i < n; ++i)
            zn *= z;
        return (1.0 + (1.0 - 2.0 * kappa) * zn) / (1.0 - zn);
    };
}

// ---------------------------------------------------------------------------
// Sharpness evidence

namespace {

// Mixed two-ratio functional of f at the sample points, via z^p-normalized images.
std::vector<cplx> mixed_functional(const PSeries& f, const OperatorParams& op, double mu,
                                   const std::vector<cplx>& z) {
    const Poly d0 = apply_theta(f, op).normalized_poly();
    const Poly d1 = apply_theta(f, op.with_m(op.m + 1)).normalized_poly();
    const Poly d2 = apply_theta(f, op.with_m(op.m + 2)).normalized_poly();
    std::vector<cplx> v0(z.size()), v1(z.size()), v2(z.size()), out(z.size());
    d0.eval_batch(z.data(), z.size(), v0.data());
    d1.eval_batch(z.data(), z.size(), v1.data());
    d2.eval_batch(z.data(), z.size(), v2.data());
    for (std::size_t s = 0; s < z.size(); ++s) {
        if (std::abs(v0[s]) < 1e-12 || std::abs(v1[s]) < 1e-12)
            throw pole_error("sharpness: operator-image denominator vanished near a sample",
                             z[s]);
        out[s] = (1.0 - mu) * (v1[s] / v0[s]) + mu * (v2[s] / v1[s]);
    }
    return out;
}

std::vector<cplx> to_complex(const std::vector<double>& v) {
    std::vector<cplx> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = cplx(v[i], 0.0);
    return out;
}

} // namespace

VerifyReport sharpness_inclusion(int p, double alpha, double beta, double mu, double A,
                                 double B, SharpnessOptions opts, double membership_tol,
                                 double rho_gap_tol) {
    const double rho = rho_inclusion(p, alpha, beta, mu, A, B).value;
    const auto spec = QIntegralSpec::inclusion(p, alpha, beta, mu, A, B);
    const OperatorParams op{p, 1, 0, alpha, beta};
    const PSeries f =
        series_from_ratio(to_complex(best_dominant_coefficients(spec, opts.N - p)), op,
                          opts.N);

    const VerifyReport membership =
        class_membership(f, op, ClassParams{mu, A, B}, opts.grid, membership_tol);

    // Locate the sampled minimum of Re(T^{m+1}f/T^m f).
    const Poly d0 = apply_theta(f, op).normalized_poly();
    const Poly d1 = apply_theta(f, op.with_m(1)).normalized_poly();
    const std::vector<cplx> z = grid_points(opts.grid);
    std::vector<cplx> v0(z.size()), v1(z.size());
    d0.eval_batch(z.data(), z.size(), v0.data());
    d1.eval_batch(z.data(), z.size(), v1.data());
    double min_re = 1e308;
    cplx argmin(0.0, 0.0);
    for (std::size_t s = 0; s < z.size(); ++s) {
        const double re = (v1[s] / v0[s]).real();
        if (re < min_re) {
            min_re = re;
            argmin = z[s];
        }
    }
    const double gap = std::fabs(min_re - rho);

    // The minimum should sit next to z = -r_max: outermost radii, angle near pi.
    const bool near_boundary = std::abs(argmin) >= opts.grid.r_max * (1.0 - 2.0 / opts.grid.radial) - 1e-12;
    const double dtheta = std::fabs(std::arg(argmin) - two_pi / 2.0);
    const bool near_axis = dtheta <= 4.0 * two_pi / opts.grid.angular + 1e-12;

    VerifyReport rep;
    rep.radial_samples = opts.grid.radial;
    rep.angular_samples = opts.grid.angular;
    rep.tolerance = rho_gap_tol;
    rep.witness = argmin;
    // Composite violation in units of rho_gap_tol: the membership violation is
    // rescaled so that pass <=> worst_violation <= tolerance still holds.
    double violation = gap;
    violation = std::max(violation,
                         membership.worst_violation * (rho_gap_tol / membership_tol));
    if (!near_boundary || !near_axis)
        violation = std::max(violation, 2.0 * rho_gap_tol);
    rep.worst_violation = violation;
    rep.pass = violation <= rho_gap_tol;
    return rep;
}

VerifyReport sharpness_radius(int p, double alpha, double beta, double mu, double A,
                              double B, SharpnessOptions opts) {
    ClassParams cls{mu, A, B};
    cls.validate();
    if (!(mu > 0.0))
        throw parameter_error("radius sharpness: mu must be > 0");
    const double kappa = cls.kappa();
    const double R = radius_mu_kappa(p, alpha, beta, mu, kappa);

    // Extremal: ratio (1+(1-2 kappa)z)/(1-z), i.e. tail coefficients 2(1-kappa).
    std::vector<cplx> c(static_cast<std::size_t>(opts.N - p), cplx(2.0 * (1.0 - kappa), 0.0));
    const OperatorParams op{p, 1, 0, alpha, beta};
    const PSeries f = series_from_ratio(c, op, opts.N);

    const double r_in = R * (1.0 - 1e-3);
    const double r_out = std::min(R * 1.1, 0.999);
    std::vector<cplx> zin(static_cast<std::size_t>(opts.grid.angular));
    std::vector<cplx> zout(zin.size());
    for (int j = 0; j < opts.grid.angular; ++j) {
        const double th = two_pi * j / opts.grid.angular;
        zin[static_cast<std::size_t>(j)] = std::polar(r_in, th);
        zout[static_cast<std::size_t>(j)] = std::polar(r_out, th);
    }
    const std::vector<cplx> win = mixed_functional(f, op, mu, zin);
    const std::vector<cplx> wout = mixed_functional(f, op, mu, zout);

    double inner_min = 1e308, outer_min = 1e308;
    cplx outer_at(0.0, 0.0);
    for (std::size_t s = 0; s < win.size(); ++s)
        inner_min = std::min(inner_min, win[s].real() - kappa);
    for (std::size_t s = 0; s < wout.size(); ++s) {
        const double v = wout[s].real() - kappa;
        if (v < outer_min) {
            outer_min = v;
            outer_at = zout[s];
        }
    }

    VerifyReport rep;
    rep.radial_samples = 2;
    rep.angular_samples = opts.grid.angular;
    rep.tolerance = 1e-9;
    rep.witness = outer_at;
    // Violated if the functional already dips below kappa inside radius R, or
    // fails to dip below it shortly beyond R.
    rep.worst_violation = std::max({0.0, -inner_min, outer_min});
    rep.pass = rep.worst_violation <= rep.tolerance;
    return rep;
}

VerifyReport sharpness_majorization(int p, double eta, SharpnessOptions opts,
                                    double scan_tol) {
    if (!(eta >= 0.0 && eta < p))
        throw parameter_error("majorization sharpness: eta must lie in [0, p)");
    const double r_closed = majorization_radius_closed(p, eta);

    // g with z g'/g = p(1+Az)/(1-z), A = 1-2 eta/p: ratio tail 1+A.
    const double Acoef = 1.0 - 2.0 * eta / p;
    std::vector<cplx> c(static_cast<std::size_t>(opts.N - p), cplx(1.0 + Acoef, 0.0));
    const OperatorParams op{p, 1, 0, 0.0, 1.0};
    const Poly g = series_from_ratio(c, op, opts.N).as_poly();
    const Poly gp = g.derivative();

    const double r_hi = std::min(r_closed + 0.12, 0.95);
    const int shells = std::max(64, opts.grid.radial);
    const int angles = opts.grid.angular;
    std::vector<cplx> z;
    z.reserve(static_cast<std::size_t>(shells) * static_cast<std::size_t>(angles));
    for (int i = 0; i < shells; ++i) {
        const double r = r_hi * (i + 1) / shells;
        for (int j = 0; j < angles; ++j)
            z.push_back(std::polar(r, two_pi * j / angles));
    }
    std::vector<cplx> vg(z.size());
    gp.eval_batch(z.data(), z.size(), vg.data());

    // Worst derivative-majorization margin per shell across the Schwarz sweep
    // f_c = g (z+c)/(1+cz), c in 0.05 steps.  Both signs of c are needed: the
    // onset at the closed radius pairs the distortion-extremal direction
    // z = -r with phi(-r) < 0, which pushes the extremal c toward -1.
    std::vector<double> shell_margin(static_cast<std::size_t>(shells), -1e308);
    std::vector<cplx> shell_at(static_cast<std::size_t>(shells), cplx(0.0, 0.0));
    std::vector<cplx> vf(z.size());
    for (int ci = -19; ci < 20; ++ci) {
        const double cval = 0.05 * ci;
        // Moebius factor (z+c)/(1+cz) as a series: c, then (1-c^2)(-c)^{k-1}.
        std::vector<cplx> mob(static_cast<std::size_t>(opts.N) + 1, cplx(0.0, 0.0));
        mob[0] = cplx(cval, 0.0);
        double mk = 1.0 - cval * cval;
        for (int k = 1; k <= opts.N; ++k) {
            mob[static_cast<std::size_t>(k)] = cplx(mk, 0.0);
            mk *= -cval;
        }
        const Poly fc = (g * Poly(0, std::move(mob))).truncated(opts.N + 1);
        const Poly fp = fc.derivative();
        fp.eval_batch(z.data(), z.size(), vf.data());
        for (int i = 0; i < shells; ++i) {
            for (int j = 0; j < angles; ++j) {
                const std::size_t s = static_cast<std::size_t>(i) * angles + j;
                const double mg = std::abs(vg[s]);
                const double margin = (std::abs(vf[s]) - mg) / std::max(1.0, mg);
                if (margin > shell_margin[static_cast<std::size_t>(i)]) {
                    shell_margin[static_cast<std::size_t>(i)] = margin;
                    shell_at[static_cast<std::size_t>(i)] = z[s];
                }
            }
        }
    }

    // Largest radius such that every shell inside it still majorizes.
    double scan_radius = r_hi;
    cplx first_fail(0.0, 0.0);
    for (int i = 0; i < shells; ++i) {
        if (shell_margin[static_cast<std::size_t>(i)] > 1e-9) {
            scan_radius = r_hi * i / shells; // last passing shell
            first_fail = shell_at[static_cast<std::size_t>(i)];
            break;
        }
    }

    VerifyReport rep;
    rep.radial_samples = shells;
    rep.angular_samples = angles;
    rep.tolerance = scan_tol;
    rep.witness = first_fail;
    rep.worst_violation = std::fabs(scan_radius - r_closed);
    rep.pass = rep.worst_violation <= scan_tol;
    return rep;
}

VerifyReport sharpness_convolution(int p, double alpha, double beta, double mu,
                                   double A1, double A2, int samples, double tol) {
    const double eta = eta_convolution(p, alpha, beta, mu, A1, -1.0, A2, -1.0).value;
    const double K = (1.0 + A1) * (1.0 + A2);
    const double c = (alpha + p * beta) / (mu * beta);
    const auto phi0 = [&](double x) {
        const cplx F = gauss_2f1(1.0, 1.0, c + 1.0, cplx(x / (x - 1.0), 0.0));
        return 1.0 - K + K * (F / (1.0 - x)).real();
    };
    if (samples < 2)
        throw parameter_error("convolution sharpness: need at least 2 samples");
    double min_phi = 1e308;
    double at = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double x = -0.999 * i / (samples - 1);
        const double v = phi0(x);
        if (v < min_phi) {
            min_phi = v;
            at = x;
        }
    }
    const double end_gap = phi0(-0.999) - eta;

    VerifyReport rep;
    rep.radial_samples = samples;
    rep.angular_samples = 1;
    rep.tolerance = tol;
    rep.witness = cplx(at, 0.0);
    rep.worst_violation = std::max({0.0, eta - min_phi, end_gap - 2e-2});
    rep.pass = rep.worst_violation <= tol;
    return rep;
}

} // namespace pvalent
