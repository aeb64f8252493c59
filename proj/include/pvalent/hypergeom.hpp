#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "pvalent/errors.hpp"

namespace pvalent {

using cplx = std::complex<double>;

// Gauss hypergeometric series argument bundle; real parameters, complex argument.
struct Hyp2F1Args {
    double a, b, c;
    cplx z;
};

// Sum of the Gauss series sum_k (a)_k (b)_k / ((c)_k k!) z^k, symmetric in a and b.
// Direct summation inside the unit disk; when |z-1| > max(1, |z|) the argument
// is first shrunk through the Pfaff map w = z/(z-1) (which also covers real
// z <= -1).  Relative accuracy target 1e-12.
cplx gauss_2f1(double a, double b, double c, cplx z);
inline cplx gauss_2f1(const Hyp2F1Args& args) {
    return gauss_2f1(args.a, args.b, args.c, args.z);
}

// Series term cap (default 100000); the environment variable PVALENT_MAX_TERMS
// overrides it at first use.
int hyp_series_term_cap();

enum class QKind { inclusion, integral_preserve, power };

// Weighted endpoint-ratio integral underlying the best dominants:
//   Q(z) = int_0^1 t^{b-1} ((1+Btz)/(1+Bz))^e dt          (B != 0, e = c0 (A-B)/B)
//   Q(z) = int_0^1 t^{b-1} exp(c0 A (t-1) z) dt           (B = 0)
// where b (exponent_base) and c0 (ratio_coeff) depend on the kind.  c0 also
// acts as the beta* weight of the underlying first-order equation
// q + z q' / (beta* q + gamma*) = (1+Az)/(1+Bz), with beta* + gamma* = b.
struct QIntegralSpec {
    QKind kind;
    int p = 1;
    double alpha = 0.0, beta = 1.0;
    double mu = 1.0;       // inclusion and power kinds
    double power_gamma = 1.0; // power kind only (gamma of the outer exponent)
    double delta = 0.0;    // integral_preserve kind only
    double A = 1.0, B = -1.0;

    static QIntegralSpec inclusion(int p, double alpha, double beta, double mu,
                                   double A, double B);
    static QIntegralSpec integral_preserve(int p, double alpha, double beta,
                                           double delta, double A, double B);
    static QIntegralSpec power(int p, double alpha, double beta, double mu,
                               double power_gamma, double A, double B);

    void validate() const;
    double exponent_base() const; // b > 0
    double ratio_coeff() const;   // c0 = beta*
    double exponent_ratio() const; // e = c0 (A-B)/B; requires B != 0
    double bb_beta() const { return ratio_coeff(); }
    double bb_gamma() const { return exponent_base() - ratio_coeff(); }
};

cplx q_integral(const QIntegralSpec& spec, cplx z, double abs_tol = 1e-11);

// Best-dominant value q(z) obtained from Q(z):
//   q_raw = 1/(beta* Q) - gamma*/beta*, and for the power kind the dominant of
//   the base ratio is (q_raw - mu)/(1 - mu).  q(0) = 1 in every kind.
cplx best_dominant_q(const QIntegralSpec& spec, cplx z, double abs_tol = 1e-11);

// Taylor coefficients q_1..q_count of the best dominant (q_0 = 1), from the
// coefficient recurrence of the first-order equation; used to build extremal
// functions without quadrature.
std::vector<double> best_dominant_coefficients(const QIntegralSpec& spec, int count);

// Averaged dominant of the convex-averaging lemma:
//   psi(z) = (gamma/n) z^{-gamma/n} int_0^z t^{gamma/n - 1} h(t) dt
//          = (gamma/n) int_0^1 s^{gamma/n - 1} h(s z) ds,
// computed in the substituted form (no z-power cancellation issues).
cplx lemma1_average(const std::function<cplx(cplx)>& h, double gamma, int n, cplx z,
                    double abs_tol = 1e-11);

} // namespace pvalent
