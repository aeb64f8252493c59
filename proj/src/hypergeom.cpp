#include "pvalent/hypergeom.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "pvalent/quadrature.hpp"

namespace pvalent {

int hyp_series_term_cap() {
    static const int cap = [] {
        if (const char* env = std::getenv("PVALENT_MAX_TERMS")) {
            const long v = std::strtol(env, nullptr, 10);
            if (v > 0 && v <= 100000000L)
                return static_cast<int>(v);
        }
        return 100000;
    }();
    return cap;
}

namespace {

bool is_nonpositive_integer(double x) {
    return x <= 0.0 && x == std::floor(x);
}

// Direct Gauss series; caller guarantees |z| < 1.  The term recurrence forms
// the numerator (a+k)(b+k) as a single product, so swapping a and b cannot
// change any rounding.
cplx gauss_series(double a, double b, double c, cplx z) {
    cplx sum(1.0, 0.0);
    cplx term(1.0, 0.0);
    const int cap = hyp_series_term_cap();
    for (int k = 0; k < cap; ++k) {
        const double num = (a + k) * (b + k);
        if (num == 0.0)
            return sum; // series terminated (polynomial case)
        term *= (num / ((c + k) * (k + 1.0))) * z;
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum))
            return sum;
    }
    throw convergence_error("2F1 series did not converge within the term cap at |z| = " +
                            std::to_string(std::abs(z)));
}

} // namespace

cplx gauss_2f1(double a, double b, double c, cplx z) {
    if (is_nonpositive_integer(c))
        throw parameter_error("2F1: c must not be a non-positive integer, got " +
                              std::to_string(c));
    if (b < a)
        std::swap(a, b); // canonical order: exact a <-> b symmetry
    if (z == cplx(0.0, 0.0))
        return {1.0, 0.0};
    const double az = std::abs(z);
    const double az1 = std::abs(z - 1.0);
    // Pfaff map w = z/(z-1): |w| = |z|/|z-1| < min(1, |z|) exactly when
    // |z-1| > max(1, |z|); this covers the whole left half of the plane and
    // real z <= -1, and always shrinks the argument when applied.
    if (az1 > 1.0 && az1 > az) {
        const cplx w = z / (z - 1.0);
        return std::pow(1.0 - z, -a) * gauss_series(a, c - b, c, w);
    }
    if (az >= 1.0)
        throw parameter_error("2F1: argument |z| = " + std::to_string(az) +
                              " outside the convergence domain");
    return gauss_series(a, b, c, z);
}

// ---------------------------------------------------------------------------
// Q integrals

QIntegralSpec QIntegralSpec::inclusion(int p, double alpha, double beta, double mu,
                                       double A, double B) {
    QIntegralSpec s;
    s.kind = QKind::inclusion;
    s.p = p;
    s.alpha = alpha;
    s.beta = beta;
    s.mu = mu;
    s.A = A;
    s.B = B;
    s.validate();
    return s;
}

QIntegralSpec QIntegralSpec::integral_preserve(int p, double alpha, double beta,
                                               double delta, double A, double B) {
    QIntegralSpec s;
    s.kind = QKind::integral_preserve;
    s.p = p;
    s.alpha = alpha;
    s.beta = beta;
    s.delta = delta;
    s.A = A;
    s.B = B;
    s.validate();
    return s;
}

QIntegralSpec QIntegralSpec::power(int p, double alpha, double beta, double mu,
                                   double power_gamma, double A, double B) {
    QIntegralSpec s;
    s.kind = QKind::power;
    s.p = p;
    s.alpha = alpha;
    s.beta = beta;
    s.mu = mu;
    s.power_gamma = power_gamma;
    s.A = A;
    s.B = B;
    s.validate();
    return s;
}

void QIntegralSpec::validate() const {
    if (p < 1)
        throw parameter_error("Q integral: p must be >= 1");
    if (!(beta > 0.0) || !(alpha + p * beta > 0.0))
        throw parameter_error("Q integral: requires beta > 0 and alpha + p beta > 0");
    if (!(B >= -1.0 && B < A && A <= 1.0))
        throw parameter_error("Q integral: requires -1 <= B < A <= 1");
    switch (kind) {
    case QKind::inclusion:
        if (!(mu > 0.0))
            throw parameter_error("Q integral (inclusion): mu must be > 0");
        break;
    case QKind::integral_preserve:
        break;
    case QKind::power:
        if (!(mu > 0.0 && mu < 1.0))
            throw parameter_error("Q integral (power): mu must lie in (0,1)");
        if (!(power_gamma > 0.0 && power_gamma <= 1.0))
            throw parameter_error("Q integral (power): gamma must lie in (0,1]");
        break;
    }
    if (!(exponent_base() > 0.0))
        throw parameter_error("Q integral: non-integrable exponent (base " +
                              std::to_string(exponent_base()) + " <= 0)");
}

double QIntegralSpec::exponent_base() const {
    const double u = alpha + p * beta;
    switch (kind) {
    case QKind::inclusion:
        return u / (mu * beta);
    case QKind::integral_preserve:
        return delta + p;
    case QKind::power:
        return (1.0 - mu) * u / (mu * beta * power_gamma);
    }
    return 0.0; // unreachable
}

double QIntegralSpec::ratio_coeff() const {
    const double u = alpha + p * beta;
    switch (kind) {
    case QKind::inclusion:
        return u / (mu * beta);
    case QKind::integral_preserve:
        return u / beta;
    case QKind::power:
        return u / (mu * beta * power_gamma);
    }
    return 0.0; // unreachable
}

double QIntegralSpec::exponent_ratio() const {
    if (B == 0.0)
        throw parameter_error("Q integral: exponent_ratio undefined at B = 0");
    return ratio_coeff() * (A - B) / B;
}

cplx q_integral(const QIntegralSpec& spec, cplx z, double abs_tol) {
    spec.validate();
    if (std::abs(z) > 1.0 + 1e-12)
        throw parameter_error("Q integral: |z| must be <= 1");
    const double b = spec.exponent_base();
    QuadOptions opt;
    opt.abs_tol = abs_tol;
    if (spec.B == 0.0) {
        const cplx w = spec.ratio_coeff() * spec.A * z;
        return tanh_sinh_01(
            [&](double t, double) {
                return std::pow(t, b - 1.0) * std::exp(w * (t - 1.0));
            },
            opt);
    }
    const cplx denom = 1.0 + spec.B * z;
    if (std::abs(denom) < 1e-14)
        throw parameter_error("Q integral: z at the pole -1/B");
    const double e = spec.exponent_ratio();
    const cplx log_denom = std::log(denom);
    return tanh_sinh_01(
        [&](double t, double) {
            // ((1+Btz)/(1+Bz))^e via principal logs; 1+Btz stays in the right
            // half-plane for t in [0,1], |B| <= 1, |z| <= 1.
            const cplx lg = std::log(1.0 + (spec.B * t) * z) - log_denom;
            return std::pow(t, b - 1.0) * std::exp(e * lg);
        },
        opt);
}

cplx best_dominant_q(const QIntegralSpec& spec, cplx z, double abs_tol) {
    const cplx Q = q_integral(spec, z, abs_tol);
    if (std::abs(Q) == 0.0)
        throw convergence_error("best dominant: Q(z) vanished");
    const double bstar = spec.bb_beta();
    const double gstar = spec.bb_gamma();
    const cplx q_raw = 1.0 / (bstar * Q) - gstar / bstar;
    if (spec.kind == QKind::power)
        return (q_raw - spec.mu) / (1.0 - spec.mu);
    return q_raw;
}

std::vector<double> best_dominant_coefficients(const QIntegralSpec& spec, int count) {
    spec.validate();
    if (count < 0)
        throw parameter_error("best dominant coefficients: count must be >= 0");
    const double bstar = spec.bb_beta();
    const double gstar = spec.bb_gamma();
    const double s = bstar + gstar; // = exponent_base, always > 0
    // h(z) = (1+Az)/(1+Bz) = 1 + sum_k h_k z^k with h_k = (A-B)(-B)^{k-1}.
    std::vector<double> h(static_cast<std::size_t>(count) + 1, 0.0);
    std::vector<double> q(static_cast<std::size_t>(count) + 1, 0.0);
    double hk = spec.A - spec.B;
    for (int k = 1; k <= count; ++k) {
        h[static_cast<std::size_t>(k)] = hk;
        hk *= -spec.B;
    }
    // z q' = (h - q)(beta* q + gamma*)  =>
    // q_k (s + k) = h_k s + beta* sum_{j=1}^{k-1} (h_{k-j} - q_{k-j}) q_j.
    for (int k = 1; k <= count; ++k) {
        double acc = h[static_cast<std::size_t>(k)] * s;
        for (int j = 1; j < k; ++j)
            acc += bstar * (h[static_cast<std::size_t>(k - j)] - q[static_cast<std::size_t>(k - j)]) *
                   q[static_cast<std::size_t>(j)];
        q[static_cast<std::size_t>(k)] = acc / (s + k);
    }
    std::vector<double> out(q.begin() + 1, q.end());
    if (spec.kind == QKind::power)
        for (double& v : out)
            v /= (1.0 - spec.mu);
    return out;
}

cplx lemma1_average(const std::function<cplx(cplx)>& h, double gamma, int n, cplx z,
                    double abs_tol) {
    if (n < 1)
        throw parameter_error("averaged dominant: n must be >= 1");
    if (gamma == 0.0)
        throw parameter_error("averaged dominant: gamma must be nonzero");
    if (!(gamma > 0.0))
        throw parameter_error("averaged dominant: Re gamma must be >= 0 (real gamma > 0)");
    const double b = gamma / n;
    QuadOptions opt;
    opt.abs_tol = abs_tol;
    const cplx integral = tanh_sinh_01(
        [&](double s, double) { return std::pow(s, b - 1.0) * h(s * z); }, opt);
    return b * integral;
}

} // namespace pvalent
