#include "pvalent/series.hpp"

#include <cmath>
#include <cstddef>
#include <string>

#include "pvalent/kernels.hpp"

namespace pvalent {

void OperatorParams::validate() const {
    if (p < 1)
        throw parameter_error("operator params: p must be >= 1, got " + std::to_string(p));
    if (n < 1)
        throw parameter_error("operator params: n must be >= 1, got " + std::to_string(n));
    if (!(beta > 0.0))
        throw parameter_error("operator params: beta must be > 0, got " + std::to_string(beta));
    if (!(alpha + p * beta > 0.0))
        throw parameter_error("operator params: alpha + p beta must be > 0, got " +
                              std::to_string(alpha + p * beta));
}

double OperatorParams::log_ratio(int k) const {
    if (k == p)
        return 0.0;
    return std::log((alpha + k * beta) / (alpha + p * beta));
}

double OperatorParams::multiplier(int k) const {
    return std::exp(m * log_ratio(k));
}

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(int lo, std::vector<cplx> coef) : lo_(lo), coef_(std::move(coef)) {
    if (lo_ < 0)
        throw parameter_error("poly: lowest exponent must be >= 0");
    if (coef_.empty())
        coef_.push_back(cplx(0.0, 0.0));
}

cplx Poly::coeff(int k) const {
    if (k < lo_ || k > hi())
        return {0.0, 0.0};
    return coef_[static_cast<std::size_t>(k - lo_)];
}

void Poly::eval_batch(const cplx* z, std::size_t npts, cplx* out) const {
    const std::size_t n = coef_.size();
    std::vector<double> cre(n), cim(n);
    for (std::size_t i = 0; i < n; ++i) {
        cre[i] = coef_[i].real();
        cim[i] = coef_[i].imag();
    }
    std::vector<double> zre(npts), zim(npts), wre(npts), wim(npts);
    for (std::size_t j = 0; j < npts; ++j) {
        zre[j] = z[j].real();
        zim[j] = z[j].imag();
    }
    kernels::poly_eval_batch()(cre.data(), cim.data(), n, lo_,
                               zre.data(), zim.data(), npts,
                               wre.data(), wim.data());
    for (std::size_t j = 0; j < npts; ++j)
        out[j] = cplx(wre[j], wim[j]);
}

cplx Poly::eval(cplx z) const {
    cplx out;
    eval_batch(&z, 1, &out);
    return out;
}

Poly Poly::derivative() const {
    if (coef_.size() == 1 && lo_ == 0)
        return Poly(0, {cplx(0.0, 0.0)});
    std::vector<cplx> d;
    d.reserve(coef_.size());
    // d/dz c_k z^k = k c_k z^{k-1}; exponent lo_-1 clamps to 0 when lo_ = 0
    // (the k = 0 term differentiates away).
    int dlo = lo_ > 0 ? lo_ - 1 : 0;
    for (int k = lo_; k <= hi(); ++k) {
        if (k == 0)
            continue;
        d.push_back(static_cast<double>(k) * coeff(k));
    }
    if (d.empty())
        d.push_back(cplx(0.0, 0.0));
    return Poly(dlo, std::move(d));
}

Poly Poly::times_z_derivative() const {
    std::vector<cplx> d(coef_.size());
    for (std::size_t i = 0; i < coef_.size(); ++i)
        d[i] = static_cast<double>(lo_ + static_cast<int>(i)) * coef_[i];
    return Poly(lo_, std::move(d));
}

Poly Poly::scaled(cplx s) const {
    std::vector<cplx> c(coef_.size());
    for (std::size_t i = 0; i < coef_.size(); ++i)
        c[i] = s * coef_[i];
    return Poly(lo_, std::move(c));
}

Poly Poly::shifted_down(int s) const {
    if (s == 0)
        return *this;
    if (lo_ >= s)
        return Poly(lo_ - s, coef_);
    throw parameter_error("poly: cannot shift exponents below zero");
}

Poly Poly::truncated(int maxdeg) const {
    if (maxdeg >= hi())
        return *this;
    if (maxdeg < lo_)
        return Poly(0, {cplx(0.0, 0.0)});
    std::vector<cplx> c(coef_.begin(), coef_.begin() + (maxdeg - lo_ + 1));
    return Poly(lo_, std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
    std::vector<cplx> c(a.coef_.size() + b.coef_.size() - 1, cplx(0.0, 0.0));
    for (std::size_t i = 0; i < a.coef_.size(); ++i)
        for (std::size_t j = 0; j < b.coef_.size(); ++j)
            c[i + j] += a.coef_[i] * b.coef_[j];
    return Poly(a.lo_ + b.lo_, std::move(c));
}

Poly operator+(const Poly& a, const Poly& b) {
    int lo = a.lo_ < b.lo_ ? a.lo_ : b.lo_;
    int hi = a.hi() > b.hi() ? a.hi() : b.hi();
    std::vector<cplx> c(static_cast<std::size_t>(hi - lo + 1), cplx(0.0, 0.0));
    for (int k = lo; k <= hi; ++k)
        c[static_cast<std::size_t>(k - lo)] = a.coeff(k) + b.coeff(k);
    return Poly(lo, std::move(c));
}

// ---------------------------------------------------------------------------
// PSeries

PSeries::PSeries(int p, int n, int N) : p_(p), n_(n), N_(N) {
    if (p_ < 1)
        throw parameter_error("series: p must be >= 1, got " + std::to_string(p_));
    if (n_ < 1)
        throw parameter_error("series: n must be >= 1, got " + std::to_string(n_));
    if (N_ < p_ + n_)
        throw parameter_error("series: truncation order N must be >= p + n, got N = " +
                              std::to_string(N_));
    tail_.assign(static_cast<std::size_t>(N_ - (p_ + n_) + 1), cplx(0.0, 0.0));
}

cplx PSeries::coeff(int k) const {
    if (k < p_ || k > N_)
        throw parameter_error("series: coefficient index " + std::to_string(k) +
                              " outside [p, N]");
    if (k == p_)
        return {1.0, 0.0};
    if (k < p_ + n_)
        return {0.0, 0.0};
    return tail_[static_cast<std::size_t>(k - (p_ + n_))];
}

void PSeries::set_coeff(int k, cplx v) {
    if (k < p_ + n_ || k > N_)
        throw parameter_error("series: settable coefficients lie in [p+n, N], got k = " +
                              std::to_string(k));
    tail_[static_cast<std::size_t>(k - (p_ + n_))] = v;
}

PSeries PSeries::all_ones(int p, int n, int N) {
    PSeries f(p, n, N);
    for (auto& c : f.tail_)
        c = cplx(1.0, 0.0);
    return f;
}

Poly PSeries::as_poly() const {
    std::vector<cplx> c(static_cast<std::size_t>(N_ - p_ + 1), cplx(0.0, 0.0));
    c[0] = cplx(1.0, 0.0);
    for (int k = p_ + n_; k <= N_; ++k)
        c[static_cast<std::size_t>(k - p_)] = tail_[static_cast<std::size_t>(k - (p_ + n_))];
    return Poly(p_, std::move(c));
}

Poly PSeries::normalized_poly() const {
    return as_poly().shifted_down(p_);
}

// ---------------------------------------------------------------------------
// Operations

static void require_compatible(const PSeries& f, const OperatorParams& op) {
    op.validate();
    if (op.p != f.p() || op.n != f.n())
        throw parameter_error("operator params (p, n) = (" + std::to_string(op.p) + ", " +
                              std::to_string(op.n) + ") do not match series (p, n) = (" +
                              std::to_string(f.p()) + ", " + std::to_string(f.n()) + ")");
}

PSeries hadamard(const PSeries& f, const PSeries& g) {
    if (f.p() != g.p() || f.n() != g.n())
        throw parameter_error("hadamard: series have mismatched (p, n)");
    const int N = f.N() < g.N() ? f.N() : g.N();
    PSeries h(f.p(), f.n(), N);
    for (int k = f.p() + f.n(); k <= N; ++k)
        h.set_coeff(k, f.coeff(k) * g.coeff(k));
    return h;
}

PSeries apply_theta(const PSeries& f, const OperatorParams& op) {
    require_compatible(f, op);
    PSeries g(f.p(), f.n(), f.N());
    for (int k = f.p() + f.n(); k <= f.N(); ++k)
        g.set_coeff(k, op.multiplier(k) * f.coeff(k));
    return g;
}

double theta_identity_residual(const PSeries& f, const OperatorParams& op) {
    require_compatible(f, op);
    const PSeries g = apply_theta(f, op);            // T^m f
    const PSeries h = apply_theta(f, op.with_m(op.m + 1)); // T^{m+1} f
    const double u = op.alpha + op.p * op.beta;
    double worst = 0.0;
    for (int k = f.p(); k <= f.N(); ++k) {
        const cplx gk = g.coeff(k);
        const cplx lhs = op.beta * static_cast<double>(k) * gk;
        const cplx rhs = u * h.coeff(k) - op.alpha * gk;
        double scale = 1.0;
        if (std::abs(lhs) > scale)
            scale = std::abs(lhs);
        if (std::abs(rhs) > scale)
            scale = std::abs(rhs);
        const double r = std::abs(lhs - rhs) / scale;
        if (r > worst)
            worst = r;
    }
    return worst;
}

PSeries integral_operator(const PSeries& f, double delta) {
    if (!(delta > -f.p()))
        throw parameter_error("integral operator: delta must be > -p, got " +
                              std::to_string(delta));
    // Same floating-point path as the operator power by construction.
    return apply_theta(f, OperatorParams{f.p(), f.n(), -1, delta, 1.0});
}

cplx evaluate(const PSeries& f, cplx z) {
    return f.as_poly().eval(z);
}

Poly differentiate(const PSeries& f) {
    return f.as_poly().derivative();
}

PSeries series_from_ratio(const std::vector<cplx>& ratio_tail,
                          const OperatorParams& op, int N) {
    op.validate();
    if (N < op.p + op.n)
        throw parameter_error("series_from_ratio: N must be >= p + n");
    for (int j = 1; j < op.n && j <= static_cast<int>(ratio_tail.size()); ++j)
        if (ratio_tail[static_cast<std::size_t>(j - 1)] != cplx(0.0, 0.0))
            throw parameter_error("series_from_ratio: ratio coefficient c_" +
                                  std::to_string(j) + " must vanish for gap width n = " +
                                  std::to_string(op.n));
    const auto c = [&](int j) -> cplx {
        if (j < 1 || j > static_cast<int>(ratio_tail.size()))
            return {0.0, 0.0};
        return ratio_tail[static_cast<std::size_t>(j - 1)];
    };
    const double u = op.alpha + op.p * op.beta;
    // G = T^m f from  beta (k - p) g_k = (alpha + p beta) sum_{j=1}^{k-p} c_j g_{k-j}.
    std::vector<cplx> g(static_cast<std::size_t>(N - op.p + 1), cplx(0.0, 0.0));
    g[0] = cplx(1.0, 0.0);
    for (int k = op.p + 1; k <= N; ++k) {
        cplx acc(0.0, 0.0);
        for (int j = 1; j <= k - op.p; ++j)
            acc += c(j) * g[static_cast<std::size_t>(k - j - op.p)];
        g[static_cast<std::size_t>(k - op.p)] = u * acc / (op.beta * (k - op.p));
    }
    // Invert the operator power coefficient-wise.
    PSeries f(op.p, op.n, N);
    for (int k = op.p + op.n; k <= N; ++k) {
        const double inv = std::exp(-op.m * op.log_ratio(k));
        f.set_coeff(k, inv * g[static_cast<std::size_t>(k - op.p)]);
    }
    return f;
}

} // namespace pvalent
