#pragma once

#include <cmath>
#include <complex>

#include "pvalent/errors.hpp"

namespace pvalent {

// Double-exponential (tanh-sinh) quadrature on (0,1).
//
// Nodes x = 1/(1 + exp(-pi sinh t)) are generated in sigmoid form so the left
// endpoint is approached through positive denormals instead of cancelling, and
// the complement 1-x is supplied to the integrand exactly (it is the mirror
// node), which keeps endpoint-singular weights t^{b-1} and (1-t)^{c-b-1} with
// fractional b finite.  Each refinement halves the step; the level-to-level
// difference is the (very conservative) error estimate.

struct QuadOptions {
    double abs_tol = 1e-11;
    int max_level = 11;
    double t_max = 7.5;
};

// f is called as f(x, one_minus_x) and may return std::complex<double>.
template <class F>
std::complex<double> tanh_sinh_01(F&& f, QuadOptions opt = {}) {
    using cplx = std::complex<double>;
    constexpr double pi = 3.1415926535897932384626433832795;

    // Weighted contribution of the node pair at +-t, t > 0.  The weight is
    // dx/dt = pi cosh(t) x (1-x); nodes whose abscissa underflowed to zero are
    // dropped (their true weight underflows with them).
    auto pair_contrib = [&](double t) -> cplx {
        const double g = pi * std::sinh(t);
        const double xp = 1.0 / (1.0 + std::exp(-g));
        const double xm = 1.0 / (1.0 + std::exp(g));
        const double w = pi * std::cosh(t) * xp * xm;
        if (!(w > 0.0))
            return cplx(0.0, 0.0);
        cplx s = w * f(xp, xm);
        if (xm > 0.0)
            s += w * f(xm, xp);
        return s;
    };

    double h = 1.0;
    cplx sum = (pi / 4.0) * f(0.5, 0.5); // t = 0 node, weight pi/4
    for (int k = 1; k * h <= opt.t_max; ++k)
        sum += pair_contrib(k * h);
    cplx estimate = h * sum;

    for (int level = 1; level <= opt.max_level; ++level) {
        h *= 0.5;
        cplx add(0.0, 0.0);
        for (int k = 1; k * h <= opt.t_max; k += 2)
            add += pair_contrib(k * h);
        const cplx refined = 0.5 * estimate + h * add;
        const double delta = std::abs(refined - estimate);
        estimate = refined;
        if (level >= 3 && delta <= std::max(opt.abs_tol, 1e-15 * std::abs(estimate)))
            return estimate;
    }
    throw convergence_error("tanh-sinh quadrature did not reach the requested tolerance");
}

} // namespace pvalent
