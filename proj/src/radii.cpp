#include "pvalent/radii.hpp"

#include <cmath>
#include <string>

namespace pvalent {

double RealPolynomial::eval(double r) const {
    double acc = 0.0;
    for (std::size_t i = c.size(); i-- > 0;)
        acc = acc * r + c[i];
    return acc;
}

void RealPolynomial::validate() const {
    if (c.size() < 2)
        throw parameter_error("polynomial: degree must be >= 1");
    if (c.back() == 0.0)
        throw parameter_error("polynomial: leading coefficient must be nonzero");
}

double smallest_positive_root(const RealPolynomial& poly, double hi) {
    poly.validate();
    if (!(hi > 0.0))
        throw parameter_error("root search: hi must be > 0");
    const double step = 1e-3;
    double a = 0.0;
    double fa = poly.eval(a);
    for (double b = step; a < hi; b = std::min(b + step, hi)) {
        const double fb = poly.eval(b);
        if (fb == 0.0)
            return b;
        if ((fa < 0.0) != (fb < 0.0)) {
            // bisect [a, b]
            double lo = a, up = b, flo = fa;
            while (up - lo > 1e-12) {
                const double mid = 0.5 * (lo + up);
                const double fm = poly.eval(mid);
                if (fm == 0.0)
                    return mid;
                if ((flo < 0.0) != (fm < 0.0))
                    up = mid;
                else {
                    lo = mid;
                    flo = fm;
                }
            }
            return 0.5 * (lo + up);
        }
        a = b;
        fa = fb;
        if (b >= hi)
            break;
    }
    throw no_root_error("root search: no sign change in (0, " + std::to_string(hi) + "]");
}

namespace {

void check_op_weights(int p, double alpha, double beta) {
    if (p < 1)
        throw parameter_error("radius: p must be >= 1");
    if (!(beta > 0.0))
        throw parameter_error("radius: beta must be > 0");
    if (!(alpha + p * beta > 0.0))
        throw parameter_error("radius: alpha + p beta must be > 0");
}

// Smaller root of u(1-2k) x^2 - 2(u(1-k)+v) x + u = 0 for u, v > 0,
// 0 <= k < 1, written without subtractive cancellation; the quadratic
// degenerates to linear at k = 1/2, where this expression is its root.
double stable_small_root(double u, double v, double kappa) {
    const double S = u * (1.0 - kappa) + v;
    const double D = (u * kappa - v) * (u * kappa - v) + 2.0 * u * v;
    return u / (S + std::sqrt(D));
}

} // namespace

double radius_mu_kappa(int p, double alpha, double beta, double mu, double kappa) {
    check_op_weights(p, alpha, beta);
    if (!(mu > 0.0))
        throw parameter_error("radius: mu must be > 0");
    if (!(kappa >= 0.0 && kappa < 1.0))
        throw parameter_error("radius: kappa must lie in [0,1)");
    return stable_small_root(alpha + p * beta, mu * beta, kappa);
}

double radius_power(int p, int n, double alpha, double beta, double mu,
                    double power_gamma, double kappa) {
    check_op_weights(p, alpha, beta);
    if (n < 1)
        throw parameter_error("radius: n must be >= 1");
    if (!(mu > 0.0 && mu < 1.0))
        throw parameter_error("radius: mu must lie in (0,1)");
    if (!(power_gamma > 0.0 && power_gamma <= 1.0))
        throw parameter_error("radius: gamma must lie in (0,1]");
    if (!(kappa >= 0.0 && kappa < 1.0))
        throw parameter_error("radius: kappa must lie in [0,1)");
    const double w = (1.0 - mu) * (alpha + p * beta);
    const double s = n * mu * beta * power_gamma;
    const double x = stable_small_root(w, s, kappa); // x = r^n
    return std::pow(x, 1.0 / n);
}

double radius_linear(int p, int n, double alpha, double beta, double mu) {
    check_op_weights(p, alpha, beta);
    if (n < 1)
        throw parameter_error("radius: n must be >= 1");
    if (!(mu > 0.0))
        throw parameter_error("radius: mu must be > 0");
    const double u = alpha + p * beta;
    const double v = mu * beta * n;
    const double x = (std::sqrt(u * u + v * v) - v) / u; // r^n
    return std::pow(x, 1.0 / n);
}

double majorization_radius(int p, double alpha, double beta, double A, double B) {
    check_op_weights(p, alpha, beta);
    if (!(B >= -1.0 && B < A && A <= 1.0))
        throw parameter_error("majorization radius: require -1 <= B < A <= 1");
    const double u = alpha + p * beta;
    const double aA = std::fabs(A), aB = std::fabs(B);
    RealPolynomial poly;
    poly.c = {u, -(u * aA + 2.0 * beta), -(u + 2.0 * beta * aB), u * aA};
    if (A == 0.0)
        poly.c.pop_back(); // cubic degenerates to a quadratic
    return smallest_positive_root(poly, 1.0);
}

double majorization_radius_alt(int p, double alpha, double beta, double A, double B) {
    check_op_weights(p, alpha, beta);
    if (!(B >= -1.0 && B < A && A <= 1.0))
        throw parameter_error("majorization radius: require -1 <= B < A <= 1");
    const double u = alpha + p * beta;
    const double aA = std::fabs(A), aB = std::fabs(B);
    RealPolynomial poly;
    poly.c = {u, -(u * aA + 2.0 * beta), -(u + beta * aB), u * aA};
    if (A == 0.0)
        poly.c.pop_back();
    return smallest_positive_root(poly, 1.0);
}

double majorization_radius_closed(int p, double eta) {
    if (p < 1)
        throw parameter_error("majorization radius: p must be >= 1");
    if (!(eta >= 0.0 && eta < p))
        throw parameter_error("majorization radius: eta must lie in [0, p)");
    const double D = std::fabs(p - 2.0 * eta);
    const double S = p + D + 2.0;
    // Smaller root of D r^2 - S r + p; at eta = p/2 (D = 0) this is exactly
    // the linear root p/(p+2) since sqrt((p+2)^2) is exact.
    return 2.0 * p / (S + std::sqrt(S * S - 4.0 * p * D));
}

} // namespace pvalent
