#pragma once

// Truncated Taylor polynomials of (1 - z)^{+-beta}, the Fejer kernel and
// the numerical bound suites that go with them.

#include <iosfwd>
#include <string>
#include <vector>

#include "opuc/polynomial.hpp"
#include "opuc/trig.hpp"

namespace opuc {

enum class TaylorKind {
    A,  ///< M n^{-beta} + sum_{j=1}^n c_j (1 - z^j), approximates (1 - z)^{beta}
    B   ///< sum_{j=0}^n d_j z^j, approximates (1 - z)^{-beta}
};

struct FractionalPowerTaylor {
    TaylorKind kind = TaylorKind::B;
    double beta = 0.5;
    int degree = 0;
    double correctionM = 0.0;
    /// B: d_0..d_n. A: c_1..c_n stored at indices 1..n (index 0 unused, zero).
    std::vector<double> coeffs;

    ComplexPolynomial polynomial() const;
    cplx operator()(cplx z) const { return polynomial()(z); }
    /// Value and theta-derivatives on the circle, evaluated directly from the sums.
    cplx at(double theta) const;
    cplx d_theta(double theta) const;
    cplx d2_theta(double theta) const;
};

/// d_j = beta (beta + 1) ... (beta + j - 1) / j!. beta must lie in (0, 1).
FractionalPowerTaylor build_B(int n, double beta);
/// c_j = beta (1 - beta) ... (j - 1 - beta) / j!. beta in (0, 1), M > 0.
FractionalPowerTaylor build_A(int n, double beta, double M);

/// (1 - z)^beta on the principal branch.
cplx fractional_power(cplx z, double beta);

/// Fejer kernel (1/m) sin^2(m theta/2) / sin^2(theta/2); equals m at theta = 0.
double fejer(int m, double theta);
/// F_m(theta) + F_m(theta - pi/m)/2 + F_m(theta + pi/m)/2.
double shifted_fejer_G(int m, double theta);
TrigPolynomial fejer_trig(int m);
TrigPolynomial shifted_fejer_trig(int m);

/// Radius of the small arc around theta = 0 used by every bound check.
inline constexpr double kUpsilon = 0.3;

enum class AppendixBound {
    Poly2Re,        ///< Re B_n / (1/n + |t|)^{-beta},           |t| < upsilon
    Poly2Im,        ///< Im B_n sign(t) / |t|^{-beta},           0.01/n < |t| < upsilon
    Poly2ImSmall,   ///< Im B_n / t / n^{1+beta},                0 < |t| < 0.01/n
    DeriderFirst,   ///< |B_n'| / (|t|^{-1} n^beta  or  n^{1+beta})
    DeriderSecond,  ///< |B_n''| / (|t|^{-1} n^{1+beta}  or  n^{2+beta})
    Poly1Re,        ///< Re A_n / (1/n + |t|)^{beta}
    Poly1Im,        ///< -Im A_n sign(t) / |t|^{beta},           0.01/n < |t| < upsilon
    Poly1ImSmall,   ///< -Im A_n sign(t) / (|t| n^{1-beta}),     0 < |t| < 0.01/n
    DerDer,         ///< |A_n'| / (|t|^{beta-1}  or  n^{1-beta})
    Poly1Sign,      ///< -Im A_n sign(t) on the whole circle; positive when the sign claim holds
    Poly2Sign       ///< Im B_n sign(t) on 0.01/n < |t| < upsilon
};

std::string to_string(AppendixBound b);

struct BoundReport {
    std::string lemma;
    int n = 0;
    double beta = 0.0;
    double ratioMin = 0.0;
    double ratioMax = 0.0;
};

/// Angle grid for the appendix checks: log-spaced magnitudes in
/// [1e-4/n, upsilon] with both signs, plus a uniform sweep of |t| < upsilon.
std::vector<double> appendix_grid(int n, std::size_t points = 4000);

/// Min and max of the bound ratio over the grid points inside the bound's range.
/// Throws InvalidArgument when beta is outside the lemma's range.
BoundReport verify_appendix_A(AppendixBound which, int n, double beta,
                              const std::vector<double>& grid, double M = 1.0);

/// Every bound admissible for beta.
std::vector<BoundReport> verify_appendix_A_suite(int n, double beta, double M = 1.0);

/// int_0^a cos x / x^g dx and int_0^a sin x / x^g dx by adaptive quadrature.
struct TrifleIntegrals {
    double cosine;
    double sine;
};
TrifleIntegrals trifle_integrals(double gamma, double a);
/// int_0^inf sin x / x^g dx = Gamma(1 - g) cos(pi g / 2).
double trifle_sine_infinity(double gamma);

void write_bound_csv_header(std::ostream& os);
void write_bound_csv_row(std::ostream& os, const BoundReport& r);

}  // namespace opuc
