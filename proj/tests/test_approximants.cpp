#include <doctest.h>

#include <cmath>
#include <sstream>

#include "bands.hpp"
#include "opuc/approximants.hpp"
#include "opuc/error.hpp"
#include "opuc/measure.hpp"
#include "support.hpp"

using namespace opuc;
using namespace testing_support;

TEST_CASE("Taylor coefficients of the negative power") {
    const auto B = build_B(10, 0.5);
    CHECK(B.coeffs[0] == 1.0);
    CHECK(B.coeffs[1] == doctest::Approx(0.5));
    CHECK(B.coeffs[2] == doctest::Approx(0.375).epsilon(1e-15));
    for (std::size_t j = 1; j < B.coeffs.size(); ++j) CHECK(B.coeffs[j] < B.coeffs[j - 1]);
    CHECK_THROWS_AS(build_B(10, 1.0), InvalidArgument);
    CHECK_THROWS_AS(build_B(10, 0.0), InvalidArgument);

    // d_j j^{1 - beta} tends to 1 / Gamma(beta), monotonically from below
    for (double beta : {0.25, 0.375, 0.5}) {
        const auto b = build_B(10000, beta);
        double prev = 0.0;
        for (int j = 1; j <= 10000; ++j) {
            const double v = b.coeffs[j] * std::pow(j, 1.0 - beta);
            CHECK(v >= prev * (1 - 1e-12));
            prev = v;
        }
        CHECK(prev == doctest::Approx(1.0 / std::tgamma(beta)).epsilon(1e-4));
    }
}

TEST_CASE("Taylor coefficients of the positive power with correction") {
    const double beta = 0.25, M = 1.0;
    const int n = 64;
    const auto A = build_A(n, beta, M);
    CHECK(A.coeffs[1] == doctest::Approx(beta));
    CHECK(std::abs(A.polynomial()(1.0) - M * std::pow(n, -beta)) < 1e-14);
    double partial = 0.0;
    for (int j = 1; j <= n; ++j) {
        CHECK(A.coeffs[j] > 0.0);
        partial += A.coeffs[j];
    }
    CHECK(partial < 1.0);
    // the tail sum_{j > n} c_j behaves like n^{-beta} / Gamma(1 - beta)
    double big = 0.0;
    const int N = 100000;
    for (double c : build_A(N, beta, M).coeffs) big += c;
    CHECK(big > partial);
    CHECK(big < 1.0);
    CHECK((1.0 - big) * std::pow(N, beta) * std::tgamma(1.0 - beta) == doctest::Approx(1.0).epsilon(1e-3));
    CHECK_THROWS_AS(build_A(8, 0.5, 0.0), InvalidArgument);
}

TEST_CASE("direct sums agree with the polynomial") {
    const auto B = build_B(40, 0.375);
    const auto p = B.polynomial();
    for (double t : {-2.0, -0.01, 0.3, 1.1}) {
        CHECK(std::abs(B.at(t) - p.on_circle(t)) < 1e-13);
        const double h = 1e-5;
        const cplx fd = (B.at(t + h) - B.at(t - h)) / (2 * h);
        CHECK(std::abs(fd - B.d_theta(t)) < 1e-6 * std::abs(B.d_theta(t)));
        const cplx fd2 = (B.d_theta(t + h) - B.d_theta(t - h)) / (2 * h);
        CHECK(std::abs(fd2 - B.d2_theta(t)) < 1e-5 * std::abs(B.d2_theta(t)));
    }
}

TEST_CASE("approximants converge away from z = 1") {
    // |1 - z| > 1 - upsilon on the closed disk, sampled
    auto deviation = [](int n, double beta, bool positive) {
        const auto P = positive ? build_A(n, beta, 1.0).polynomial() : build_B(n, beta).polynomial();
        double d = 0.0;
        for (double r : {0.0, 0.5, 0.9, 1.0})
            for (int k = 0; k < 256; ++k) {
                const cplx z = r * unit(kTwoPi * k / 256);
                if (std::abs(1.0 - z) <= 1.0 - kUpsilon) continue;
                d = std::max(d, std::abs(P(z) - fractional_power(z, positive ? beta : -beta)));
            }
        return d;
    };
    for (double beta : {0.3, 0.5}) {
        CHECK(deviation(512, beta, true) < deviation(128, beta, true));
        CHECK(deviation(512, beta, false) < deviation(128, beta, false));
    }
    CHECK(fractional_power(0.5, 0.5).real() == doctest::Approx(std::sqrt(0.5)));
}

TEST_CASE("correction polynomial stays below 3 on the disk") {
    for (double alpha : {0.6, 0.75, 0.9})
        for (int n : {4, 32, 256}) {
            const auto A = build_A(n, 1.0 - alpha, 1.0).polynomial();
            double mx = 0.0;
            for (double r : {0.0, 0.3, 0.7, 0.95, 1.0})
                for (int k = 0; k < 512; ++k) mx = std::max(mx, std::abs(A(r * unit(kTwoPi * k / 512))));
            CHECK(mx < 3.0);
        }
}

TEST_CASE("negative power bound on the circle") {
    // |B_n|^2 (1/n + |t|)^{alpha} bounded uniformly over the sweep
    double lo = 1e300, hi = 0.0;
    for (int n : {64, 128, 256, 512}) {
        const auto B = build_B(n, 0.375);
        for (double t : appendix_grid(n)) {
            const double v = std::norm(B.at(t)) * std::pow(1.0 / n + std::abs(t), 0.75);
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    CHECK(hi < 2.2);   // measured 2.098
    CHECK(lo > 0.79);  // measured 0.833
}

TEST_CASE("Fejer kernel") {
    for (int m : {1, 2, 5, 16, 100}) {
        CHECK(fejer(m, 0.0) == doctest::Approx(m));
        if (m >= 2) CHECK(std::abs(fejer(m, kTwoPi / m)) < 1e-12);
        const auto t = fejer_trig(m);
        CHECK(t.mean() == 1.0);
        for (double th : {0.0, 0.01, 0.5, 2.0, -3.0}) {
            CHECK(t.value(th) == doctest::Approx(fejer(m, th)).epsilon(1e-12));
            CHECK(fejer(m, th) >= 0.0);
        }
        // grid mean is exact for degree < grid size
        double s = 0.0;
        for (int k = 0; k < 4 * m + 8; ++k) s += fejer(m, kTwoPi * k / (4 * m + 8));
        CHECK(s / (4 * m + 8) == doctest::Approx(1.0).epsilon(1e-12));
    }
    CHECK_THROWS_AS(fejer(0, 0.0), InvalidArgument);
}

TEST_CASE("shifted Fejer kernel") {
    for (int m : {2, 8, 33, 128}) {
        CHECK(shifted_fejer_G(m, 0.0) == doctest::Approx(m + fejer(m, kPi / m)));
        const auto t = shifted_fejer_trig(m);
        CHECK(t.mean() == doctest::Approx(2.0));
        CHECK(t.degree() <= static_cast<std::size_t>(m));
        for (double th : {0.0, 0.02, 0.7, -2.5}) {
            CHECK(t.value(th) == doctest::Approx(shifted_fejer_G(m, th)).epsilon(1e-12));
            CHECK(shifted_fejer_G(m, th) >= 0.0);
        }
    }
    double C = 0.0;
    for (int m = 8; m <= 512; m *= 2)
        for (int i = 0; i <= 4000; ++i) {
            const double th = kPi * i / 4000.0;
            C = std::max(C, shifted_fejer_G(m, th) * (m * m * th * th + 1) / m);
        }
    CHECK(C < bands::kShiftedFejerConstant);
}

TEST_CASE("appendix bound ratios stay in their frozen bands") {
    for (const auto& band : bands::kAppendixABands) {
        for (int n : {64, 512}) {
            AppendixBound which{};
            bool found = false;
            for (auto b : {AppendixBound::Poly2Re, AppendixBound::Poly2Im, AppendixBound::Poly2ImSmall,
                           AppendixBound::DeriderFirst, AppendixBound::DeriderSecond, AppendixBound::Poly1Re,
                           AppendixBound::Poly1Im, AppendixBound::Poly1ImSmall, AppendixBound::DerDer})
                if (to_string(b) == band.bound) {
                    which = b;
                    found = true;
                }
            REQUIRE(found);
            const auto r = verify_appendix_A(which, n, band.beta, appendix_grid(n));
            INFO(band.bound << " beta=" << band.beta << " n=" << n);
            CHECK(r.ratioMin >= band.lo);
            CHECK(r.ratioMax <= band.hi);
        }
    }
}

TEST_CASE("appendix sign claims") {
    for (int n : {64, 256}) {
        const auto grid = appendix_grid(n);
        CHECK(verify_appendix_A(AppendixBound::Poly2Sign, n, 0.375, grid).ratioMin > 0.0);
        for (double beta : {0.25, 0.5, 0.75})
            CHECK(verify_appendix_A(AppendixBound::Poly1Sign, n, beta, grid).ratioMin > 0.0);
    }
    CHECK_THROWS_AS(verify_appendix_A(AppendixBound::Poly2Re, 64, 0.75, appendix_grid(64)), InvalidArgument);
    CHECK(verify_appendix_A_suite(64, 0.75).size() == 7);
    CHECK(verify_appendix_A_suite(64, 0.375).size() == 11);
    std::ostringstream os;
    write_bound_csv_header(os);
    write_bound_csv_row(os, verify_appendix_A_suite(64, 0.375).front());
    CHECK(os.str().rfind("lemma,n,beta,ratio_min,ratio_max\npoly2_re,64,0.375,", 0) == 0);
}

TEST_CASE("trifle integrals") {
    for (double a : {0.1, kPi, 10.0, 100.0}) {
        const auto r = trifle_integrals(0.5, a);
        CHECK(r.cosine > 0.0);
        CHECK(r.sine > 0.0);
    }
    // closed forms for gamma = 1/2 via Fresnel-type series at small a
    const double a = 0.1;
    const auto r = trifle_integrals(0.5, a);
    CHECK(r.cosine == doctest::Approx(2 * std::sqrt(a) - std::pow(a, 2.5) / 5 + std::pow(a, 4.5) / 108).epsilon(1e-10));
    CHECK(r.sine == doctest::Approx(2 * std::pow(a, 1.5) / 3 - std::pow(a, 3.5) / 21).epsilon(1e-8));
    // large a approaches the improper integral
    CHECK(trifle_integrals(0.5, 2000.5 * kPi).sine == doctest::Approx(trifle_sine_infinity(0.5)).epsilon(1e-3));
    CHECK(trifle_sine_infinity(0.5) == doctest::Approx(std::sqrt(kPi / 2)).epsilon(1e-14));
}
