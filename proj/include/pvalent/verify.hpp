#pragma once

#include <complex>
#include <functional>

#include "pvalent/bounds.hpp"
#include "pvalent/series.hpp"

namespace pvalent {

// Image of the unit disk under w -> (1+Aw)/(1+Bw): a half-plane when B = -1,
// otherwise a disk.
struct Region {
    enum class Shape { disk, halfplane };
    Shape shape;
    cplx center{0.0, 0.0}; // disk only
    double radius = 0.0;   // disk only
    double re_bound = 0.0; // halfplane only

    // Signed exterior margin of w: <= 0 inside the region, > 0 outside.
    double exterior_margin(cplx w) const;
};

Region target_region(double A, double B);

// Outcome of a sampled numerical check.  Sampled evidence, not a proof; the
// tolerance the pass flag was judged against is recorded in the report.
struct VerifyReport {
    bool pass = false;
    double worst_violation = 0.0; // >= 0; 0 when every sample satisfied the property
    cplx witness{0.0, 0.0};       // sample of worst margin
    int radial_samples = 0;
    int angular_samples = 0;
    double tolerance = 0.0;
};

// Polar sampling grid over |z| <= r_max (radii r_max (i+1)/radial, angles 2 pi j/angular).
struct Grid {
    int radial = 64;
    int angular = 512;
    double r_max = 0.995;

    void validate() const;
};

// Image-containment subordination check against (1+Az)/(1+Bz); valid because
// the target is univalent.  phi(0) must equal 1 (to 1e-12).
VerifyReport is_subordinate(const std::function<cplx(cplx)>& phi, double A, double B,
                            Grid grid = {}, double tol = 1e-9);

// Samples the defining functional
//   (1-mu) T^{m+1}f/T^m f + mu T^{m+2}f/T^{m+1}f
// over the grid and dispatches to the region test.  Denominators are the
// z^p-normalized series; modulus < 1e-12 at a sample raises pole_error.
VerifyReport class_membership(const PSeries& f, const OperatorParams& op,
                              const ClassParams& cls, Grid grid = {}, double tol = 1e-9);

// Pointwise |f(z)| <= |g(z)| (1 + tol) on samples with |z| <= r.  Callers pass
// operator/derivative images as generic polynomials.
VerifyReport majorization_check(const Poly& f, const Poly& g, double r, Grid grid = {},
                                double tol = 1e-9);

// Caratheodory-part lower bound: for test functions
//   phi_w(z) = gamma + (1-gamma)(1+w(z))/(1-w(z)),  w(z) = e^{i theta} z^j,
// verifies Re phi_w(z) >= 2 gamma - 1 + 2(1-gamma)/(1+|z|) on the grid
// (j = 1..3, eight phases); equality is attained by w(z) = z at z = -r.
VerifyReport caratheodory_lower_bound_check(double gamma, Grid grid = {32, 64, 0.995},
                                            double tol = 1e-9);

// The sharpness ratio (1+(1-2 kappa) z^n)/(1-z^n); feed to series_from_ratio
// to construct the extremal functions.
std::function<cplx(cplx)> extremal_ratio(double kappa, int n);

// --- sharpness evidence -----------------------------------------------------

struct SharpnessOptions {
    int N = 256;  // truncation of the constructed extremal series
    Grid grid{};
};

// Builds the extremal for the inclusion bound (ratio = best dominant q),
// verifies class membership, and checks that the sampled minimum of
// Re(T^{m+1}f/T^m f) is attained near z = -r_max within rho_gap_tol of the
// closed-form order rho.
VerifyReport sharpness_inclusion(int p, double alpha, double beta, double mu, double A,
                                 double B, SharpnessOptions opts = {},
                                 double membership_tol = 1e-6,
                                 double rho_gap_tol = 5e-3);

// Sign-change evidence at the kappa-radius: the mixed functional of the
// extremal is positive (above kappa) at R(1-1e-3) and dips below kappa by
// radius min(1.1 R, 0.999).
VerifyReport sharpness_radius(int p, double alpha, double beta, double mu, double A,
                              double B, SharpnessOptions opts = {});

// Majorization scan for the starlike-of-order-eta extremal pair
// f = g (z+c)/(1+cz): largest passing radius vs the closed-form radius,
// agreement within scan_tol (truncation-limited).
VerifyReport sharpness_majorization(int p, double eta, SharpnessOptions opts = {},
                                    double scan_tol = 2e-2);

// Convolution-order sharpness at B1 = B2 = -1: the extremal functional phi0
// approaches eta from above along the negative real axis.
VerifyReport sharpness_convolution(int p, double alpha, double beta, double mu,
                                   double A1, double A2, int samples = 512,
                                   double tol = 1e-3);

} // namespace pvalent
