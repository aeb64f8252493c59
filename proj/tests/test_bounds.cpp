#include "pvalent/bounds.hpp"

#include <cmath>
#include <complex>

#include "doctest.h"

#include "pvalent/hypergeom.hpp"
#include "pvalent/quadrature.hpp"
#include "pvalent/rng.hpp"

namespace {

using pvalent::cplx;
using pvalent::gauss_2f1;
using pvalent::Rng;

} // namespace

TEST_CASE("class params enforce the dominant parameter ordering") {
    const pvalent::ClassParams swapped{0.5, -0.5, 0.5};
    const pvalent::ClassParams neg_mu{-0.1, 1.0, -1.0};
    const pvalent::ClassParams classical{0.0, 1.0, -1.0};
    const pvalent::ClassParams mixed{1.0, 0.5, -0.5};
    CHECK_THROWS_AS(swapped.validate(), pvalent::parameter_error);
    CHECK_THROWS_AS(neg_mu.validate(), pvalent::parameter_error);
    CHECK_NOTHROW(classical.validate());
    CHECK(mixed.kappa() == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("inclusion order hits one half for the classical half-plane case") {
    const auto bv = pvalent::rho_inclusion(1, 0.0, 1.0, 1.0, 1.0, -1.0);
    CHECK(bv.hypotheses_ok);
    CHECK(std::fabs(bv.value - 0.5) <= 1e-12);
}

TEST_CASE("inclusion order tends to one as the class degenerates") {
    const auto bv = pvalent::rho_inclusion(1, 0.0, 1.0, 1.0, -0.5 + 1e-12, -0.5);
    CHECK(std::fabs(bv.value - 1.0) <= 1e-9);
}

TEST_CASE("inclusion order enforces its hypotheses unless forced") {
    CHECK_THROWS_AS(pvalent::rho_inclusion(1, 0.0, 1.0, 1.0, 1.0, 0.5),
                    pvalent::hypothesis_error);
    // A above the cap -mu beta B/(alpha+p beta)
    CHECK_THROWS_AS(pvalent::rho_inclusion(1, 0.0, 1.0, 0.5, 0.9, -0.5),
                    pvalent::hypothesis_error);
    const auto forced = pvalent::rho_inclusion(1, 0.0, 1.0, 0.5, 0.9, -0.5, true);
    CHECK_FALSE(forced.hypotheses_ok);
    CHECK(std::isfinite(forced.value));
}

TEST_CASE("tilde variant is exactly the mu equal one specialization") {
    Rng rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        const int p = rng.uniform_int(1, 3);
        const double beta = rng.uniform(0.5, 1.5);
        const double alpha = rng.uniform(0.0, 1.0);
        const double B = rng.uniform(-1.0, -0.2);
        const double cap = -beta * B / (alpha + p * beta);
        const double A = rng.uniform(B + 0.05, std::min(1.0, cap));
        const auto lhs = pvalent::rho_tilde(p, alpha, beta, A, B);
        const auto rhs = pvalent::rho_inclusion(p, alpha, beta, 1.0, A, B);
        CHECK(lhs.value == rhs.value);
    }
    CHECK(std::fabs(pvalent::rho_tilde(1, 0.0, 1.0, 1.0, -1.0).value - 0.5) <= 1e-12);
}

TEST_CASE("integral-preserving order reproduces the classical value at delta zero") {
    const auto bv = pvalent::tau_integral_preserve(1, 0.0, 1.0, 0.0, 1.0, -1.0);
    CHECK(bv.hypotheses_ok);
    CHECK(std::fabs(bv.value - 0.5) <= 1e-12);
}

TEST_CASE("integral-preserving order tends to one as the class degenerates") {
    const auto bv = pvalent::tau_integral_preserve(1, 0.0, 1.0, 2.0, -0.5 + 1e-12, -0.5);
    CHECK(std::fabs(bv.value - 1.0) <= 1e-9);
}

TEST_CASE("integral-preserving order rejects delta below the threshold") {
    // (p,alpha,beta,A,B) = (1,0,1,1,-1): threshold max{2-1-1, 0-1} = 0
    CHECK_THROWS_AS(pvalent::tau_integral_preserve(1, 0.0, 1.0, -0.5, 1.0, -1.0),
                    pvalent::hypothesis_error);
    CHECK_NOTHROW(pvalent::tau_integral_preserve(1, 0.0, 1.0, 0.0, 1.0, -1.0));
}

TEST_CASE("power-mean order matches the derived half value at the parameter cap") {
    // (p,alpha,beta,mu,gamma) = (1,0,1,1/2,1): cap A = 0, xi = 1/2F1(1,2;2;1/2) = 1/2
    const auto bv = pvalent::xi_power(1, 0.0, 1.0, 0.5, 1.0, 0.0, -1.0);
    CHECK(bv.hypotheses_ok);
    CHECK(std::fabs(bv.value - 0.5) <= 1e-12);
}

TEST_CASE("power-mean order tends to one as the class degenerates") {
    const auto bv = pvalent::xi_power(1, 0.0, 1.0, 0.5, 1.0, -0.6 + 1e-12, -0.6);
    CHECK(std::fabs(bv.value - 1.0) <= 1e-9);
}

TEST_CASE("power-mean specialization reproduces the eta-form hypergeometric bound") {
    // m=1, alpha=0, beta=1, A=1-2 eta/p, B=-1, gamma=1:
    // p * xi equals p / 2F1(1, 2(p-eta)/mu; p(1-mu)/mu + 1; 1/2).
    // (eta large enough that A clears the theorem's cap -mu(beta gamma/u-1)B)
    for (double eta : {1.3, 1.6, 1.9}) {
        const int p = 2;
        const double mu = 0.5;
        const auto bv = pvalent::xi_power(p, 0.0, 1.0, mu, 1.0, 1.0 - 2.0 * eta / p, -1.0);
        const cplx F = gauss_2f1(1.0, 2.0 * (p - eta) / mu, p * (1.0 - mu) / mu + 1.0,
                                 cplx(0.5, 0.0));
        CHECK(std::fabs(p * bv.value - p / F.real()) <= 1e-10);
    }
}

TEST_CASE("coefficient-functional bound tends to one in the flat limit") {
    // A == B is rejected (the dominant ordering is strict); approaching it
    // from above drives the bound to the trivial value 1.
    CHECK_THROWS_AS(pvalent::sigma_coeff(1, 1, 0.0, 1.0, 1.0, 0.0, 0.0, 1),
                    pvalent::parameter_error);
    CHECK(std::fabs(pvalent::sigma_coeff(1, 1, 0.0, 1.0, 1.0, 1e-9, 0.0, 1).value - 1.0) <=
          1e-8);
}

TEST_CASE("coefficient-functional bound takes the t-th root when requested") {
    const double sigma = pvalent::sigma_coeff(1, 2, 0.5, 1.0, 0.8, 0.6, -0.4, 1).value;
    const double rooted = pvalent::sigma_coeff(1, 2, 0.5, 1.0, 0.8, 0.6, -0.4, 3).value;
    CHECK(std::fabs(rooted - std::pow(sigma, 1.0 / 3.0)) <= 1e-14);
}

TEST_CASE("coefficient-functional bound matches the eta-shifted corollary form") {
    // (A,B) = (1-2 eta, -1), alpha=delta, beta=1:
    // sigma = eta + (1-eta)(2F1(1,1;(delta+p)/(mu n)+1;1/2) - 1)
    for (double eta : {0.0, 0.25, 0.6}) {
        const int p = 1, n = 2;
        const double delta = 1.5, mu = 0.7;
        const double got =
            pvalent::sigma_coeff(p, n, delta, 1.0, mu, 1.0 - 2.0 * eta, -1.0, 1).value;
        const double c = (delta + p) / (mu * n);
        const double F = gauss_2f1(1.0, 1.0, c + 1.0, cplx(0.5, 0.0)).real();
        CHECK(std::fabs(got - (eta + (1.0 - eta) * (F - 1.0))) <= 1e-12);
    }
}

TEST_CASE("coefficient-functional bound has the documented flat B-zero branch") {
    // sigma(B=0) = 1 - (alpha+p beta) A/(alpha+p beta+mu beta n)
    const double got = pvalent::sigma_coeff(2, 1, 0.5, 1.0, 0.6, 0.3, 0.0, 1).value;
    const double u = 0.5 + 2.0;
    CHECK(std::fabs(got - (1.0 - u * 0.3 / (u + 0.6))) <= 1e-14);
}

TEST_CASE("transformed-ratio bound shares the sigma formula with shifted parameters") {
    // xi_F uses (delta+p)/(mu n) where sigma uses (alpha+p beta)/(mu beta n).
    const double xf = pvalent::xi_F(1, 2, 1.5, 0.7, 0.6, -0.4).value;
    const double x = -0.4 / (-0.4 - 1.0);
    const double c = (1.5 + 1.0) / (0.7 * 2.0);
    const double want =
        0.6 / -0.4 + (1.0 - 0.6 / -0.4) / 1.4 * gauss_2f1(1, 1, c + 1.0, cplx(x, 0.0)).real();
    CHECK(std::fabs(xf - want) <= 1e-12);
    CHECK(std::fabs(pvalent::xi_F(1, 1, 0.5, 1.0, 1e-9, 0.0).value - 1.0) <= 1e-8);
}

TEST_CASE("convolution order reproduces the four-log-two-minus-three constant") {
    const auto bv = pvalent::eta_convolution(1, 0.0, 1.0, 1.0, 1.0, -1.0, 1.0, -1.0);
    CHECK(std::fabs(bv.value - (4.0 * std::log(2.0) - 3.0)) <= 1e-10);
}

TEST_CASE("convolution order tends to one as either class degenerates") {
    const auto bv =
        pvalent::eta_convolution(1, 0.0, 1.0, 1.0, -0.5 + 1e-12, -0.5, 0.8, -0.9);
    CHECK(std::fabs(bv.value - 1.0) <= 1e-9);
}

TEST_CASE("convolution order agrees with the direct endpoint integral") {
    Rng rng(32);
    for (int trial = 0; trial < 5; ++trial) {
        const int p = rng.uniform_int(1, 3);
        const double beta = rng.uniform(0.6, 1.4);
        const double alpha = rng.uniform(0.0, 1.0);
        const double mu = rng.uniform(0.4, 1.0);
        const double B1 = rng.uniform(-1.0, -0.1), A1 = rng.uniform(B1 + 0.1, 1.0);
        const double B2 = rng.uniform(-1.0, -0.1), A2 = rng.uniform(B2 + 0.1, 1.0);
        const double got =
            pvalent::eta_convolution(p, alpha, beta, mu, A1, B1, A2, B2).value;
        const double c = (alpha + p * beta) / (mu * beta);
        const cplx integral = pvalent::tanh_sinh_01([&](double s, double) {
            return cplx(std::pow(s, c - 1.0) / (1.0 + s), 0.0);
        });
        const double k = 4.0 * (A1 - B1) * (A2 - B2) / ((1.0 - B1) * (1.0 - B2));
        const double want = 1.0 - k * (1.0 - c * integral.real());
        CHECK(std::fabs(got - want) <= 1e-8);
    }
}

TEST_CASE("convexity-to-starlikeness order reproduces its classical values") {
    CHECK(std::fabs(pvalent::rho_convexity(1, 0.0).value - 0.5) <= 1e-12);
    CHECK(std::fabs(pvalent::rho_convexity(2, 0.5).value - 1.0) <= 1e-12);
    CHECK(std::fabs(pvalent::rho_convexity(2, 2.0 - 1e-9).value - 2.0) <= 1e-6);
    CHECK_THROWS_AS(pvalent::rho_convexity(2, 0.2), pvalent::hypothesis_error);
    CHECK_THROWS_AS(pvalent::rho_convexity(2, 2.0), pvalent::hypothesis_error);
}

TEST_CASE("bounds are invariant under common scaling of the operator weights") {
    // A = 0.15 sits under the admissibility cap -mu beta B/(alpha+p beta),
    // which is itself scale-invariant (~0.199 for both weight pairs).
    const auto base = pvalent::rho_inclusion(2, 0.5, 1.2, 0.8, 0.15, -0.6);
    const auto scaled = pvalent::rho_inclusion(2, 1.5, 3.6, 0.8, 0.15, -0.6);
    CHECK(std::fabs(base.value - scaled.value) <= 4e-16 * std::fabs(base.value));
}

TEST_CASE("inclusion order is nonincreasing in the numerator parameter") {
    const double cap = -0.8 * 1.0 * -0.6 / 2.0; // -mu beta B / (alpha+p beta)
    double prev = 2.0;
    for (int i = 0; i < 50; ++i) {
        const double A = -0.59 + (cap + 0.59) * i / 49.0;
        const double v = pvalent::rho_inclusion(2, 0.0, 1.0, 0.8, A, -0.6).value;
        CHECK(v <= prev + 1e-12);
        prev = v;
    }
}

TEST_CASE("the elder inclusion corollary equals the mapped modern form") {
    // (p+alpha) / 2F1(1, p(B-At)/B; alpha+p+1; B/(B-1)) via the mu=beta=1
    // mapping A = (p At + alpha B)/(p+alpha).
    const int p = 2;
    const double alpha = 1.0, B = -0.5, At = 0.3;
    const double A = (p * At + alpha * B) / (p + alpha);
    const double lhs =
        (p + alpha) *
        pvalent::rho_inclusion(p, alpha, 1.0, 1.0, A, B).value;
    const double x = B / (B - 1.0);
    const double rhs =
        (p + alpha) / gauss_2f1(1.0, p * (B - At) / B, alpha + p + 1.0, cplx(x, 0.0)).real();
    CHECK(std::fabs(lhs - rhs) <= 1e-10);
}
