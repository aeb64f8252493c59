#pragma once

#include "pvalent/errors.hpp"

namespace pvalent {

// Subordination target parameters: the class dominant is (1+Az)/(1+Bz).
struct ClassParams {
    double mu = 0.0;
    double A = 1.0;
    double B = -1.0;

    void validate() const; // -1 <= B < A <= 1, mu >= 0
    double kappa() const { return (1.0 - A) / (1.0 - B); }
};

// Result of a closed-form bound.  hypotheses_ok records whether the inputs lie
// inside the hypotheses under which the formula is a proven sharp bound; with
// force the value is computed anyway (exploration), flagged false.
struct BoundValue {
    double value;
    bool hypotheses_ok;
};

// Order constant of the half-plane inclusion: inf Re of the ratio of
// consecutive operator images over the class with mixing weight mu.
BoundValue rho_inclusion(int p, double alpha, double beta, double mu, double A, double B,
                         bool force = false);

// mu = 1 specialization of rho_inclusion (pure second-ratio class).
BoundValue rho_tilde(int p, double alpha, double beta, double A, double B,
                     bool force = false);

// Order constant preserved by the integral transform F_{delta,p}.
BoundValue tau_integral_preserve(int p, double alpha, double beta, double delta,
                                 double A, double B, bool force = false);

// Lower bound for Re (T^m f / z^p)^{1/gamma} over the mixed power class.
BoundValue xi_power(int p, double alpha, double beta, double mu, double power_gamma,
                    double A, double B, bool force = false);

// Coefficient-functional bound sigma (returned as sigma^{1/t} for t > 1).
BoundValue sigma_coeff(int p, int n, double alpha, double beta, double mu, double A,
                       double B, int t, bool force = false);

// Lower bound constant for the F_{delta,p}-transformed ratio; depends on
// (delta, p, mu, n) only.
BoundValue xi_F(int p, int n, double delta, double mu, double A, double B,
                bool force = false);

// Order constant of the Hadamard convolution of members of two classes.
BoundValue eta_convolution(int p, double alpha, double beta, double mu, double A1,
                           double B1, double A2, double B2, bool force = false);

// Starlikeness order of images of the p-valent convex class of order eta.
BoundValue rho_convexity(int p, double eta, bool force = false);

} // namespace pvalent
