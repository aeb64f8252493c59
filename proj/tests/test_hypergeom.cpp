#include "pvalent/hypergeom.hpp"

#include <cmath>
#include <complex>

#include "doctest.h"

#include "pvalent/quadrature.hpp"
#include "pvalent/rng.hpp"

namespace {

using pvalent::cplx;
using pvalent::gauss_2f1;
using pvalent::QIntegralSpec;
using pvalent::Rng;

// Euler-integral oracle, normalized by the Beta integral so no gamma function
// is needed: F(a,b;c;z) = int t^{b-1}(1-t)^{c-b-1}(1-tz)^{-a} dt / B(b, c-b).
cplx euler_2f1(double a, double b, double c, cplx z) {
    const auto numer = pvalent::tanh_sinh_01([&](double t, double tc) {
        return std::pow(t, b - 1.0) * std::pow(tc, c - b - 1.0) *
               std::pow(1.0 - t * z, -a);
    });
    const auto denom = pvalent::tanh_sinh_01([&](double t, double tc) {
        return cplx(std::pow(t, b - 1.0) * std::pow(tc, c - b - 1.0), 0.0);
    });
    return numer / denom;
}

} // namespace

TEST_CASE("tanh-sinh quadrature integrates endpoint singularities on (0,1)") {
    const auto i1 = pvalent::tanh_sinh_01(
        [](double t, double) { return cplx(1.0 / std::sqrt(t), 0.0); });
    CHECK(std::abs(i1 - 2.0) <= 1e-11);
    const auto i2 = pvalent::tanh_sinh_01([](double t, double tc) {
        return cplx(1.0 / std::sqrt(t * tc), 0.0);
    });
    CHECK(std::abs(i2 - 3.14159265358979324) <= 1e-10);
    const auto i3 =
        pvalent::tanh_sinh_01([](double t, double) { return cplx(t * t, 0.0); });
    CHECK(std::abs(i3 - 1.0 / 3.0) <= 1e-13);
}

TEST_CASE("gauss series reproduces closed-form special values") {
    CHECK(gauss_2f1(0.7, -1.3, 2.4, cplx(0.0, 0.0)) == cplx(1.0, 0.0));
    CHECK(std::abs(gauss_2f1(1, 1, 2, cplx(0.5, 0.0)) - 2.0 * std::log(2.0)) <= 1e-12);
    CHECK(std::abs(gauss_2f1(1, 2, 2, cplx(0.5, 0.0)) - 2.0) <= 1e-12);
    // real z <= -1 goes through the Pfaff shrink: -ln(1-z)/z at z = -3
    CHECK(std::abs(gauss_2f1(1, 1, 2, cplx(-3.0, 0.0)) - std::log(4.0) / 3.0) <= 1e-12);
}

TEST_CASE("gauss series rejects bad lower parameters and unreachable arguments") {
    CHECK_THROWS_AS(gauss_2f1(1, 1, 0, cplx(0.2, 0.0)), pvalent::parameter_error);
    CHECK_THROWS_AS(gauss_2f1(1, 1, -3, cplx(0.2, 0.0)), pvalent::parameter_error);
    CHECK_THROWS_AS(gauss_2f1(1, 1, 2.5, cplx(0.9, 0.9)), pvalent::parameter_error);
    CHECK_NOTHROW(gauss_2f1(1, 1, -3.5, cplx(0.2, 0.0))); // negative non-integer c is fine
}

TEST_CASE("gauss series is symmetric in the upper parameters by construction") {
    Rng rng(21);
    for (int trial = 0; trial < 40; ++trial) {
        const double a = rng.uniform(-2.0, 3.0);
        const double b = rng.uniform(-2.0, 3.0);
        const double c = rng.uniform(0.3, 4.0);
        const cplx z(rng.uniform(-0.9, 0.5), rng.uniform(-0.3, 0.3));
        const cplx u = gauss_2f1(a, b, c, z);
        const cplx v = gauss_2f1(b, a, c, z);
        CHECK(u.real() == v.real());
        CHECK(u.imag() == v.imag());
    }
}

TEST_CASE("gauss series agrees with the Euler integral oracle") {
    Rng rng(22);
    for (int trial = 0; trial < 15; ++trial) {
        const double a = rng.uniform(0.2, 2.5);
        const double b = rng.uniform(0.2, 2.5);
        const double c = b + rng.uniform(0.3, 2.5); // c > b > 0
        const cplx z(rng.uniform(-0.9, 0.5), 0.0);
        const cplx got = gauss_2f1(a, b, c, z);
        const cplx want = euler_2f1(a, b, c, z);
        CHECK(std::abs(got - want) / std::abs(want) <= 1e-9);
    }
}

TEST_CASE("pfaff and contiguous relations hold on a parameter grid") {
    Rng rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        const double a = rng.uniform(0.2, 2.0);
        const double b = rng.uniform(0.2, 2.0);
        const double c = rng.uniform(2.3, 4.0);
        const cplx z(rng.uniform(-0.85, 0.45), 0.0);
        const cplx lhs = gauss_2f1(a, b, c, z);
        const cplx rhs = std::pow(1.0 - z, -a) * gauss_2f1(a, c - b, c, z / (z - 1.0));
        CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(lhs)));

        const double a2 = rng.uniform(0.3, 3.0);
        const cplx f1 = gauss_2f1(1.0, a2, a2 + 1.0, z);
        const cplx f2 = gauss_2f1(1.0, a2 + 1.0, a2 + 2.0, z);
        CHECK(std::abs((a2 + 1.0) * f1 - (a2 + 1.0) - a2 * z * f2) <= 1e-10);
    }
}

TEST_CASE("series term cap is readable and has the documented default") {
    CHECK(pvalent::hyp_series_term_cap() == 100000);
}

TEST_CASE("q-integral normalizes to the beta value at the origin") {
    const auto spec = QIntegralSpec::inclusion(1, 0.5, 1.0, 0.8, 0.6, -0.7);
    const double b = spec.exponent_base();
    CHECK(std::abs(pvalent::q_integral(spec, cplx(0.0, 0.0)) - 1.0 / b) <= 1e-10);

    // B = 0 switches to the exponential-limit branch; with exponent base 1
    // the integral reduces to (1 - exp(-w))/w for w = c0 A z.
    const auto bzero = QIntegralSpec::inclusion(1, 0.0, 1.0, 1.0, 0.5, 0.0);
    CHECK(bzero.exponent_base() == doctest::Approx(1.0));
    for (double x : {-0.9, -0.3, 0.4}) {
        const double w = bzero.ratio_coeff() * 0.5 * x;
        const double want = (1.0 - std::exp(-w)) / w;
        CHECK(std::abs(pvalent::q_integral(bzero, cplx(x, 0.0)) - want) <= 1e-10);
    }
}

TEST_CASE("q-integral matches the hypergeometric closed form at minus one") {
    // (p,alpha,beta,mu,A,B) = (1,0,1,1,1,-1): Q(-1) = (mu beta/(alpha+p beta)) 2F1(1,2;2;1/2)
    const auto spec = QIntegralSpec::inclusion(1, 0.0, 1.0, 1.0, 1.0, -1.0);
    const cplx got = pvalent::q_integral(spec, cplx(-1.0, 0.0));
    const cplx want = 1.0 * gauss_2f1(1, 2, 2, cplx(0.5, 0.0));
    CHECK(std::abs(got - want) <= 1e-9 * std::abs(want));
}

TEST_CASE("best dominant is normalized at the origin for every kind") {
    const auto incl = QIntegralSpec::inclusion(1, 0.2, 1.1, 0.9, 0.5, -0.6);
    const auto pres = QIntegralSpec::integral_preserve(2, 0.0, 1.0, 1.5, 0.4, -0.5);
    const auto pow = QIntegralSpec::power(1, 0.0, 1.0, 0.5, 1.0, 0.0, -1.0);
    for (const auto& s : {incl, pres, pow})
        CHECK(std::abs(pvalent::best_dominant_q(s, cplx(0.0, 0.0)) - 1.0) <= 1e-9);
}

TEST_CASE("best dominant of the half-plane inclusion hits one half at minus one") {
    const auto spec = QIntegralSpec::inclusion(1, 0.0, 1.0, 1.0, 1.0, -1.0);
    CHECK(std::abs(pvalent::best_dominant_q(spec, cplx(-1.0, 0.0)) - 0.5) <= 1e-9);
}

TEST_CASE("best dominant coefficients reproduce the geometric dominant") {
    // For (1,0,1,1,1,-1) the dominant is q(z) = 1/(1-z): all coefficients 1.
    const auto spec = QIntegralSpec::inclusion(1, 0.0, 1.0, 1.0, 1.0, -1.0);
    const auto coeffs = pvalent::best_dominant_coefficients(spec, 12);
    REQUIRE(coeffs.size() == 12);
    for (double q : coeffs)
        CHECK(std::fabs(q - 1.0) <= 1e-12);
}

TEST_CASE("best dominant coefficients sum to the quadrature value inside the disk") {
    Rng rng(24);
    for (int trial = 0; trial < 4; ++trial) {
        const auto spec = QIntegralSpec::inclusion(rng.uniform_int(1, 3),
                                                   rng.uniform(0.0, 1.0),
                                                   rng.uniform(0.6, 1.4),
                                                   rng.uniform(0.4, 1.0),
                                                   rng.uniform(-0.1, 0.3), -0.7);
        const auto coeffs = pvalent::best_dominant_coefficients(spec, 64);
        for (double x : {-0.45, 0.3}) {
            cplx sum(1.0, 0.0), zk(1.0, 0.0);
            for (double q : coeffs) {
                zk *= cplx(x, 0.0);
                sum += q * zk;
            }
            const cplx want = pvalent::best_dominant_q(spec, cplx(x, 0.0));
            CHECK(std::abs(sum - want) <= 1e-9);
        }
    }
}

TEST_CASE("averaged dominant matches direct integrals and the flat case") {
    auto one = [](cplx) { return cplx(1.0, 0.0); };
    CHECK(std::abs(pvalent::lemma1_average(one, 1.7, 2, cplx(0.4, 0.2)) - 1.0) <= 1e-10);

    auto linear = [](cplx t) { return 1.0 + t; };
    CHECK(std::abs(pvalent::lemma1_average(linear, 1.0, 1, cplx(0.5, 0.0)) - 1.25) <=
          1e-10);

    CHECK_THROWS_AS(pvalent::lemma1_average(one, 0.0, 1, cplx(0.1, 0.0)),
                    pvalent::parameter_error);
}

TEST_CASE("reciprocal q-integral attains its minimum real part at minus one") {
    // Lemma-4 style monotonicity for the inclusion kind with B < 0.
    Rng rng(25);
    for (int trial = 0; trial < 3; ++trial) {
        const auto spec = QIntegralSpec::inclusion(rng.uniform_int(1, 2),
                                                   rng.uniform(0.0, 0.5),
                                                   rng.uniform(0.8, 1.2),
                                                   rng.uniform(0.5, 1.0),
                                                   rng.uniform(0.0, 0.4), -0.8);
        const double floor_val =
            (1.0 / pvalent::q_integral(spec, cplx(-1.0, 0.0))).real();
        for (int s = 0; s < 24; ++s) {
            const cplx z = std::polar(0.999, 0.2618 * s);
            const double re = (1.0 / pvalent::q_integral(spec, z)).real();
            CHECK(re >= floor_val - 1e-8);
        }
    }
}

TEST_CASE("q-integral spec validation rejects out-of-order class parameters") {
    CHECK_THROWS_AS(QIntegralSpec::inclusion(1, 0.0, 1.0, 1.0, -1.0, 1.0).validate(),
                    pvalent::parameter_error);
    CHECK_THROWS_AS(QIntegralSpec::inclusion(1, 0.0, -1.0, 1.0, 1.0, -1.0).validate(),
                    pvalent::parameter_error);
    CHECK_THROWS_AS(QIntegralSpec::power(1, 0.0, 1.0, 1.5, 1.0, 0.0, -1.0).validate(),
                    pvalent::parameter_error);
    CHECK_THROWS_AS(
        QIntegralSpec::integral_preserve(1, 0.0, 1.0, -1.0, 1.0, -1.0).validate(),
        pvalent::parameter_error);
}
