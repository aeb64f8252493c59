#include "pvalent/bounds.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "pvalent/hypergeom.hpp"

namespace pvalent {

void ClassParams::validate() const {
    if (!(B >= -1.0 && B < A && A <= 1.0))
        throw parameter_error("class params: require -1 <= B < A <= 1, got A = " +
                              std::to_string(A) + ", B = " + std::to_string(B));
    if (!(mu >= 0.0))
        throw parameter_error("class params: mu must be >= 0, got " + std::to_string(mu));
}

namespace {

constexpr double quiet_nan = std::numeric_limits<double>::quiet_NaN();

void check_common(int p, double alpha, double beta, double A, double B) {
    if (p < 1)
        throw parameter_error("bound: p must be >= 1");
    if (!(beta > 0.0))
        throw parameter_error("bound: beta must be > 0");
    if (!(alpha + p * beta > 0.0))
        throw parameter_error("bound: alpha + p beta must be > 0");
    if (!(B >= -1.0 && B < A && A <= 1.0))
        throw parameter_error("bound: require -1 <= B < A <= 1");
}

// Shared hypothesis gate: throws unless ok or forced.
bool gate(bool ok, bool force, const char* what) {
    if (!ok && !force)
        throw hypothesis_error(what);
    return ok;
}

double x_of(double B) { return B / (B - 1.0); }

// real-valued 2F1 for the bound formulas (arguments are always real here)
double f21(double a, double b, double c, double x) {
    return gauss_2f1(a, b, c, cplx(x, 0.0)).real();
}

} // namespace

BoundValue rho_inclusion(int p, double alpha, double beta, double mu, double A, double B,
                         bool force) {
    check_common(p, alpha, beta, A, B);
    if (!(mu > 0.0))
        throw parameter_error("inclusion order: mu must be > 0");
    const double u = alpha + p * beta;
    const bool ok = (B < 0.0) && (A <= -mu * beta * B / u);
    gate(ok, force, "inclusion order: requires -1 <= B < 0 and A <= -mu beta B/(alpha + p beta)");
    if (B == 0.0)
        return {quiet_nan, ok}; // a-parameter degenerates; formula not evaluable
    const double b = u / (mu * beta);
    const double a = b * (B - A) / B;
    return {1.0 / f21(1.0, a, b + 1.0, x_of(B)), ok};
}

BoundValue rho_tilde(int p, double alpha, double beta, double A, double B, bool force) {
    return rho_inclusion(p, alpha, beta, 1.0, A, B, force);
}

BoundValue tau_integral_preserve(int p, double alpha, double beta, double delta,
                                 double A, double B, bool force) {
    check_common(p, alpha, beta, A, B);
    const double u = alpha + p * beta;
    if (!(delta + p > 0.0))
        throw parameter_error("integral-preserved order: delta must be > -p");
    const double lo1 = (B != 0.0) ? (u / beta) * ((B - A) / B) - p - 1.0
                                  : -std::numeric_limits<double>::infinity();
    const double lo2 = alpha / beta - u * (1.0 - A) / (beta * (1.0 - B));
    const bool ok = (B < 0.0) && (delta >= std::max(lo1, lo2));
    gate(ok, force,
         "integral-preserved order: requires -1 <= B < 0 and delta above the admissibility threshold");
    if (B == 0.0)
        return {quiet_nan, ok};
    const double a = (u / beta) * ((B - A) / B);
    const double F = f21(1.0, a, delta + p + 1.0, x_of(B));
    return {(beta * (delta + p) / F - (delta * beta - alpha)) / u, ok};
}

BoundValue xi_power(int p, double alpha, double beta, double mu, double power_gamma,
                    double A, double B, bool force) {
    check_common(p, alpha, beta, A, B);
    if (!(mu > 0.0 && mu < 1.0))
        throw parameter_error("power-ratio order: mu must lie in (0,1)");
    if (!(power_gamma > 0.0 && power_gamma <= 1.0))
        throw parameter_error("power-ratio order: gamma must lie in (0,1]");
    const double u = alpha + p * beta;
    const double cap = std::min(1.0 - mu * (1.0 - B),
                                -mu * (beta * power_gamma / u - 1.0) * B);
    const bool ok = (B < 0.0) && (A <= cap);
    gate(ok, force,
         "power-ratio order: requires -1 <= B < 0 and A <= min{1 - mu(1-B), -mu(beta gamma/(alpha+p beta) - 1)B}");
    if (B == 0.0)
        return {quiet_nan, ok};
    const double a = (u / (mu * beta * power_gamma)) * ((B - A) / B);
    const double c = (1.0 - mu) * u / (mu * beta * power_gamma) + 1.0;
    return {1.0 / f21(1.0, a, c, x_of(B)), ok};
}

BoundValue sigma_coeff(int p, int n, double alpha, double beta, double mu, double A,
                       double B, int t, bool force) {
    (void)force; // no hypotheses beyond the parameter domain
    check_common(p, alpha, beta, A, B);
    if (n < 1)
        throw parameter_error("coefficient bound: n must be >= 1");
    if (!(mu > 0.0))
        throw parameter_error("coefficient bound: mu must be > 0");
    if (t < 1)
        throw parameter_error("coefficient bound: t must be a positive integer");
    const double u = alpha + p * beta;
    double sigma;
    if (B == 0.0) {
        sigma = 1.0 - u * A / (u + mu * beta * n);
    } else {
        const double c = u / (mu * beta * n) + 1.0;
        sigma = A / B + (1.0 - A / B) * (1.0 / (1.0 - B)) * f21(1.0, 1.0, c, x_of(B));
    }
    const double value = (t == 1) ? sigma : std::pow(sigma, 1.0 / t);
    return {value, true};
}

BoundValue xi_F(int p, int n, double delta, double mu, double A, double B, bool force) {
    (void)force;
    if (p < 1)
        throw parameter_error("transformed-ratio bound: p must be >= 1");
    if (n < 1)
        throw parameter_error("transformed-ratio bound: n must be >= 1");
    if (!(delta + p > 0.0))
        throw parameter_error("transformed-ratio bound: delta must be > -p");
    if (!(mu > 0.0))
        throw parameter_error("transformed-ratio bound: mu must be > 0");
    if (!(B >= -1.0 && B < A && A <= 1.0))
        throw parameter_error("transformed-ratio bound: require -1 <= B < A <= 1");
    if (B == 0.0)
        return {1.0 - (delta + p) * A / (delta + p + mu * n), true};
    const double c = (delta + p) / (mu * n) + 1.0;
    return {A / B + (1.0 - A / B) * (1.0 / (1.0 - B)) * f21(1.0, 1.0, c, x_of(B)), true};
}

BoundValue eta_convolution(int p, double alpha, double beta, double mu, double A1,
                           double B1, double A2, double B2, bool force) {
    (void)force;
    check_common(p, alpha, beta, A1, B1);
    if (!(B2 >= -1.0 && B2 < A2 && A2 <= 1.0))
        throw parameter_error("convolution order: require -1 <= B2 < A2 <= 1");
    if (!(mu > 0.0))
        throw parameter_error("convolution order: mu must be > 0");
    const double u = alpha + p * beta;
    const double c = u / (mu * beta);
    const double inner = 1.0 - 0.5 * f21(1.0, 1.0, c + 1.0, 0.5);
    const double k = 4.0 * (A1 - B1) * (A2 - B2) / ((1.0 - B1) * (1.0 - B2));
    return {1.0 - k * inner, true};
}

BoundValue rho_convexity(int p, double eta, bool force) {
    if (p < 1)
        throw parameter_error("convexity-starlikeness order: p must be >= 1");
    const bool ok = (eta >= 0.5 * (p - 1)) && (eta < p);
    gate(ok, force, "convexity-starlikeness order: requires (p-1)/2 <= eta < p");
    return {p / f21(1.0, 2.0 * (p - eta), p + 1.0, 0.5), ok};
}

} // namespace pvalent
