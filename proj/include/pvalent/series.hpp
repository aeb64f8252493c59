#pragma once

#include <complex>
#include <vector>

#include "pvalent/errors.hpp"

namespace pvalent {

using cplx = std::complex<double>;

// Parameters of the coefficient-multiplier operator: acting on a p-valent
// series with gap width n, the m-th power rescales the coefficient of z^k by
// ((alpha + k beta)/(alpha + p beta))^m.  beta > 0 and alpha + p beta > 0 keep
// every multiplier positive; m may be any integer (negative powers invert).
struct OperatorParams {
    int p = 1;
    int n = 1;
    int m = 0;
    double alpha = 0.0;
    double beta = 1.0;

    void validate() const;

    // log((alpha + k beta)/(alpha + p beta)); exactly 0 at k = p.
    double log_ratio(int k) const;

    // Multiplier for exponent k, computed as exp(m * log_ratio(k)) so that
    // m = 0 gives exactly 1 and the m <-> -m pair inverts to within an ulp.
    double multiplier(int k) const;

    OperatorParams with_m(int mm) const {
        OperatorParams o = *this;
        o.m = mm;
        return o;
    }
};

// Dense truncated polynomial sum_{k=lo}^{lo+len-1} c[k-lo] z^k.  This is the
// unnormalized workhorse for derivative images, extremal pairs and grid
// evaluation; lo >= 0 so the batched kernels can apply a z^lo prefix.
class Poly {
public:
    Poly() = default;
    Poly(int lo, std::vector<cplx> coef);

    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(coef_.size()) - 1; }
    const std::vector<cplx>& coef() const { return coef_; }

    cplx coeff(int k) const;

    // Single-point evaluation; routed through the batched kernel so the value
    // matches grid evaluation bit for bit.
    cplx eval(cplx z) const;

    // Evaluate at npts points via the dispatched SIMD kernel.
    void eval_batch(const cplx* z, std::size_t npts, cplx* out) const;

    Poly derivative() const;
    Poly times_z_derivative() const; // z * d/dz, exponents preserved
    Poly scaled(cplx s) const;

    // Shift all exponents down by s (requires lo >= s and, when trailing
    // coefficients below s exist, that they are exactly zero).
    Poly shifted_down(int s) const;

    Poly truncated(int maxdeg) const;

    friend Poly operator*(const Poly& a, const Poly& b); // full Cauchy product
    friend Poly operator+(const Poly& a, const Poly& b);

private:
    int lo_ = 0;
    std::vector<cplx> coef_;
};

// Normalized p-valent series  f(z) = z^p + sum_{k=p+n}^{N} a_k z^k.
// The leading coefficient is implicitly 1 and the gap p+1..p+n-1 is
// structurally zero; only the tail from p+n to N is stored (densely).
class PSeries {
public:
    PSeries(int p, int n, int N);

    int p() const { return p_; }
    int n() const { return n_; }
    int N() const { return N_; }

    // Coefficient of z^k for any k in [p, N].
    cplx coeff(int k) const;

    // Tail coefficients only: k must lie in [p+n, N].
    void set_coeff(int k, cplx v);

    const std::vector<cplx>& tail() const { return tail_; }
    std::vector<cplx>& tail() { return tail_; }

    // Tail identically 1 — the Hadamard identity element (geometric-type series).
    static PSeries all_ones(int p, int n, int N);

    Poly as_poly() const;

    // f(z)/z^p as a Poly with lo = 0 (value 1 at the origin); keeps small-radius
    // grid samples away from the pole guard for large p.
    Poly normalized_poly() const;

private:
    int p_, n_, N_;
    std::vector<cplx> tail_; // exponents p+n .. N
};

// Coefficient-wise (Hadamard) product.  Requires matching (p, n); the result
// truncates to min(N_f, N_g).  The implicit leading terms z^p * z^p -> z^p.
PSeries hadamard(const PSeries& f, const PSeries& g);

// Apply the m-th operator power.  op must match f's (p, n).
PSeries apply_theta(const PSeries& f, const OperatorParams& op);

// Residual of the first-order identity relating consecutive operator powers:
//   beta z (T^m f)'(z) = (alpha + p beta) T^{m+1} f(z) - alpha T^m f(z),
// checked coefficient-wise.  Returns the max over retained exponents of
// |LHS_k - RHS_k| / max(1, |LHS_k|, |RHS_k|); the normalization keeps the
// residual at roundoff scale even when large positive m inflates the tail.
double theta_identity_residual(const PSeries& f, const OperatorParams& op);

// Bernardi-type integral transform (delta + p) z^{-delta} int_0^z t^{delta-1} f(t) dt,
// realized as the operator power m = -1 with weights (delta, 1).  delta > -p.
PSeries integral_operator(const PSeries& f, double delta);

cplx evaluate(const PSeries& f, cplx z);

Poly differentiate(const PSeries& f);

// Reconstruct f from the ratio of consecutive operator images: given
// psi(z) = 1 + sum_{j>=1} c_j z^j with T^{m+1} f / T^m f = psi, solve the
// coefficient recurrence for G = T^m f and invert the operator power.
// ratio_tail holds c_1, c_2, ... (missing entries are zero); coefficients
// c_1..c_{n-1} must vanish or the gap of the result would be violated.
PSeries series_from_ratio(const std::vector<cplx>& ratio_tail,
                          const OperatorParams& op, int N);

} // namespace pvalent
