#pragma once

#include <vector>

#include "pvalent/errors.hpp"

namespace pvalent {

// Real polynomial c_0 + c_1 r + ... + c_d r^d, ascending coefficients.
struct RealPolynomial {
    std::vector<double> c;

    double eval(double r) const;
    int degree() const { return static_cast<int>(c.size()) - 1; }
    void validate() const; // degree >= 1 after requiring a nonzero leading coefficient
};

// Smallest r in (0, hi] with poly(r) = 0: bracketing scan with step 1e-3,
// bisection-refined to width 1e-12.
double smallest_positive_root(const RealPolynomial& poly, double hi = 1.0);

// Radius to which the half-plane bound of level kappa = (1-A)/(1-B) persists
// for the mixed two-ratio functional.  Computed as the smaller root of
//   u(1-2k) r^2 - 2(u(1-k) + v) r + u = 0,   u = alpha + p beta, v = mu beta,
// in the cancellation-free form u/(S + sqrt(D)), S = u(1-k)+v,
// D = (u k - v)^2 + 2uv, which is continuous through kappa = 1/2.
double radius_mu_kappa(int p, double alpha, double beta, double mu, double kappa);

// Radius for the mixed power-ratio functional: the same quadratic shape in
// x = r^n with u -> (1-mu)(alpha+p beta) and v -> n mu beta gamma; returns the
// n-th root of the smaller quadratic root.
double radius_power(int p, int n, double alpha, double beta, double mu,
                    double power_gamma, double kappa);

// Radius of positivity for the linear-combination functional, independent of
// kappa:  R = [(sqrt(u^2 + (mu beta n)^2) - mu beta n)/u]^{1/n}.
double radius_linear(int p, int n, double alpha, double beta, double mu);

// Majorization radius: smallest positive root of
//   u|A| r^3 - (u + 2 beta|B|) r^2 - (u|A| + 2 beta) r + u = 0,  u = alpha+p beta.
double majorization_radius(int p, double alpha, double beta, double A, double B);

// Alternate printed variant with a single beta|B| in the r^2 coefficient,
// kept for comparison against the general cubic above.
double majorization_radius_alt(int p, double alpha, double beta, double A, double B);

// Closed-form majorization radius for the starlike-of-order-eta case:
// smallest root of D r^2 - (D+p+2) r + p, D = |p-2 eta|, evaluated as
// 2p/(S + sqrt(S^2 - 4pD)) which degenerates smoothly to p/(p+2) at eta = p/2.
double majorization_radius_closed(int p, double eta);

} // namespace pvalent
