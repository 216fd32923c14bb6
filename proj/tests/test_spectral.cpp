#include <doctest.h>

#include <cmath>

#include "bands.hpp"
#include "opuc/construction.hpp"
#include "opuc/error.hpp"
#include "opuc/opuc.hpp"
#include "opuc/spectral.hpp"
#include "support.hpp"

using namespace opuc;
using namespace testing_support;

TEST_CASE("Fejer-Riesz examples") {
    TrigPolynomial one;
    one.cosCoeffs = {1.0};
    one.sinCoeffs = {0.0};
    CHECK(coeff_distance(fejer_riesz(one), ComplexPolynomial::constant(1.0)) < 1e-14);

    TrigPolynomial w;
    w.cosCoeffs = {2.0, 2.0};
    w.sinCoeffs = {0.0, 0.0};
    // |1 + z|^2 vanishes at z = -1, outside the strictly positive class;
    // lifting it by eps recovers 1 + z in the limit
    CHECK_THROWS_AS(fejer_riesz(w), InadmissibleInput);
    for (double eps : {1e-2, 1e-4, 1e-6}) {
        w.cosCoeffs = {2.0 + eps, 2.0};
        CHECK(coeff_distance(fejer_riesz(w), ComplexPolynomial({1.0, 1.0})) < 2 * std::sqrt(eps));
    }
    w.cosCoeffs = {4.25, 2.0};
    const auto q = fejer_riesz(w);
    CHECK(q[0].real() > 0.0);
    CHECK(factorization_residual(q, w) < 1e-12);
    CHECK(coeff_distance(q, ComplexPolynomial({2.0, 0.5})) < 1e-12);  // |2 + z/2|^2 = 4.25 + 2 cos

    TrigPolynomial neg;
    neg.cosCoeffs = {1.0, 2.0};
    neg.sinCoeffs = {0.0, 0.0};
    CHECK_THROWS_AS(fejer_riesz(neg), InadmissibleInput);
}

TEST_CASE("Fejer-Riesz on random even polynomials against the root oracle") {
    Rng rng(101);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t m = 1 + rng() % 32;
        const auto w = random_positive_trig(rng, m, true);
        const auto q = fejer_riesz(w);
        CHECK(q.degree() == m);
        CHECK(factorization_residual(q, w) < 1e-10);
        CHECK(q[0].real() > 0.0);
        CHECK(std::abs(q[0].imag()) == 0.0);
        for (std::size_t k = 0; k <= m; ++k) CHECK(std::abs(q[k].imag()) < 1e-12 * q.max_abs_coeff());
        const auto scan = scan_circle(q);
        CHECK(scan.minAbs > 0.0);
        CHECK(scan.winding == 0);
        const auto oracle = factor_by_roots(w);
        CHECK(coeff_distance(q, oracle) < 1e-8 * q.max_abs_coeff());
    }
}

TEST_CASE("Fejer-Riesz on general positive polynomials") {
    Rng rng(102);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t m = 1 + rng() % 20;
        const auto w = random_positive_trig(rng, m, false);
        const auto q = fejer_riesz(w);
        CHECK(factorization_residual(q, w) < 1e-10);
        CHECK(coeff_distance(q, factor_by_roots(w)) < 1e-8 * q.max_abs_coeff());
    }
}

TEST_CASE("Fejer-Riesz from samples") {
    Rng rng(103);
    const auto w = random_positive_trig(rng, 12, true);
    const auto q = fejer_riesz(w.samples(64), 12);
    CHECK(coeff_distance(q, fejer_riesz(w)) < 1e-10);
    CHECK_THROWS_AS(fejer_riesz(w.samples(64), 6), InvalidArgument);
}

TEST_CASE("zeros of P + P* lie on the circle") {
    Rng rng(104);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 1 + rng() % 24;
        const auto p = random_inside_zero_polynomial(rng, n, 0.95);
        for (auto r : polynomial_roots(p + star(p, n))) CHECK(std::abs(std::abs(r) - 1.0) < 1e-8);
    }
}

TEST_CASE("phase examples") {
    CHECK(phase(ComplexPolynomial::constant(1.0), 1.3) == 0.0);
    const ComplexPolynomial q({1.0, 0.5});
    for (double t : {0.2, 1.0, 2.5, -1.7}) {
        CHECK(phase(q, t) == doctest::Approx(std::atan(0.5 * std::sin(t) / (1 + 0.5 * std::cos(t)))).epsilon(1e-13));
        CHECK(phase(q, -t) == doctest::Approx(-phase(q, t)).epsilon(1e-14));
    }
    CHECK(std::abs(phase(q, kPi)) < 1e-14);
    CHECK(verify_phase_bound(ComplexPolynomial::constant(1.0), 1) == 0.0);
    // phase' = (1/2)(cos t + 1/2) / (5/4 + cos t), at most 1/3 (attained at t = 0)
    CHECK(verify_phase_bound(q, 1) == doctest::Approx(1.0 / 3.0).epsilon(1e-6));
    CHECK(verify_phase_bound(q, 1) <= 1.0);
    CHECK_THROWS_AS(phase(ComplexPolynomial({1.0, 1.0}), 3.5), InadmissibleInput);
}

TEST_CASE("phase accumulates through several turns") {
    // (1 + 0.9 z)^4: the principal argument wraps, the continuous branch does not
    ComplexPolynomial q = ComplexPolynomial::constant(1.0);
    for (int k = 0; k < 4; ++k) q = q * ComplexPolynomial({1.0, 0.9});
    for (double t : {1.0, 2.0, 2.9}) {
        const double expected = 4 * std::atan2(0.9 * std::sin(t), 1 + 0.9 * std::cos(t));
        CHECK(phase(q, t) == doctest::Approx(expected).epsilon(1e-12));
    }
    CHECK(std::abs(std::arg(q.on_circle(2.0)) - phase(q, 2.0)) > 1.0);
}

TEST_CASE("constructed outer factor") {
    for (int m : {2, 16, 32}) {
        const auto Q = spectral_factor_Q(m, 0.75);
        TrigPolynomial w = shifted_fejer_trig(m);
        w += modulus_squared(build_B(m, 0.375).polynomial());
        CHECK(factorization_residual(Q, w) < 1e-8);
        CHECK(Q[0].real() > 0.0);
        for (std::size_t k = 0; k <= Q.degree(); ++k) CHECK(std::abs(Q[k].imag()) < 1e-14 * Q.max_abs_coeff());
        // same outer factor from the zeros of the Laurent lift
        CHECK(coeff_distance(Q, factor_by_roots(w)) < 1e-8 * Q.max_abs_coeff());
        double minW = 1e300;
        for (double v : w.samples(4096)) minW = std::min(minW, v);
        CHECK(minW > 0.0);
    }
}

TEST_CASE("phase derivative bound of the constructed factor") {
    double prev = 0.0;
    for (int m : {16, 32, 64, 128}) {
        const double v = verify_phase_bound(spectral_factor_Q(m, 0.75), m);
        CHECK(v < bands::kPhaseBoundMax);
        CHECK(v > 0.2);
        // rises towards the limit of the pure shifted Fejer factor
        CHECK(v > prev);
        prev = v;
    }
}
