#pragma once

// Seeded generators and independent oracles shared by the unit and
// acceptance tests. The oracles deliberately avoid the library's own
// routes: dense Toeplitz solves instead of Levinson, direct sums instead of
// FFTs, companion-matrix roots instead of spectral factorization.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "opuc/measure.hpp"
#include "opuc/opuc.hpp"
#include "opuc/polynomial.hpp"
#include "opuc/trig.hpp"

namespace testing_support {

using opuc::cplx;
using opuc::ComplexPolynomial;
using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double a, double b) {
    return std::uniform_real_distribution<double>(a, b)(rng);
}

inline cplx random_in_disk(Rng& rng, double radius) {
    const double r = radius * std::sqrt(uniform(rng, 0.0, 1.0));
    return std::polar(r, uniform(rng, 0.0, opuc::kTwoPi));
}

inline opuc::VerblunskySequence random_verblunsky(Rng& rng, std::size_t count, double maxAbs) {
    std::vector<cplx> g(count);
    for (auto& v : g) v = random_in_disk(rng, maxAbs);
    return opuc::VerblunskySequence(std::move(g));
}

inline ComplexPolynomial random_polynomial(Rng& rng, std::size_t degree) {
    std::normal_distribution<double> gauss;
    std::vector<cplx> c(degree + 1);
    for (auto& v : c) v = {gauss(rng), gauss(rng)};
    return ComplexPolynomial(std::move(c));
}

/// |gamma_j| < maxAbs / (1 + j): summable parameters, so the zeros of
/// phi_n stay a resolvable distance from the circle.
inline opuc::VerblunskySequence random_decaying_verblunsky(Rng& rng, std::size_t count, double maxAbs) {
    std::vector<cplx> g(count);
    for (std::size_t j = 0; j < count; ++j) g[j] = random_in_disk(rng, maxAbs / (1.0 + static_cast<double>(j)));
    return opuc::VerblunskySequence(std::move(g));
}

/// prod (z - z_j) with all z_j in |z| < radius.
inline ComplexPolynomial random_inside_zero_polynomial(Rng& rng, std::size_t degree, double radius) {
    ComplexPolynomial p = ComplexPolynomial::constant(1.0);
    for (std::size_t j = 0; j < degree; ++j)
        p = p * ComplexPolynomial(std::vector<cplx>{-random_in_disk(rng, radius), 1.0});
    return p;
}

/// Strictly positive trig polynomial of degree m: c0 + sum (a_k cos + b_k sin)
/// with c0 exceeding the coefficient l1 norm.
inline opuc::TrigPolynomial random_positive_trig(Rng& rng, std::size_t m, bool even) {
    opuc::TrigPolynomial w;
    w.cosCoeffs.assign(m + 1, 0.0);
    w.sinCoeffs.assign(m + 1, 0.0);
    double l1 = 0.0;
    for (std::size_t k = 1; k <= m; ++k) {
        w.cosCoeffs[k] = uniform(rng, -1.0, 1.0) / static_cast<double>(k);
        if (!even) w.sinCoeffs[k] = uniform(rng, -1.0, 1.0) / static_cast<double>(k);
        l1 += std::abs(w.cosCoeffs[k]) + std::abs(w.sinCoeffs[k]);
    }
    w.cosCoeffs[0] = l1 * uniform(rng, 1.05, 2.0) + 0.01;
    return w;
}

/// Probability measure in the Steklov class: delta / (2 pi) floor, a smooth
/// positive density, and up to `maxAtoms` atoms.
inline opuc::CircleMeasure random_steklov_measure(Rng& rng, double delta, std::size_t grid,
                                                 int maxAtoms) {
    const int atoms = std::uniform_int_distribution<int>(0, maxAtoms)(rng);
    const double atomMass = atoms == 0 ? 0.0 : uniform(rng, 0.0, 1.0 - delta);
    const double smoothMass = 1.0 - delta - atomMass;
    const auto g = random_positive_trig(rng, 6, false);
    auto samples = g.samples(grid);
    const double mean = g.mean();
    std::vector<double> density(grid);
    for (std::size_t i = 0; i < grid; ++i)
        density[i] = (delta + smoothMass * samples[i] / mean) / opuc::kTwoPi;
    std::vector<opuc::Atom> a;
    std::vector<double> w(static_cast<std::size_t>(atoms));
    double total = 0.0;
    for (auto& x : w) total += (x = uniform(rng, 0.1, 1.0));
    for (int k = 0; k < atoms; ++k)
        a.push_back({opuc::kTwoPi * (k + uniform(rng, 0.05, 0.95)) / atoms, atomMass * w[k] / total});
    return opuc::CircleMeasure(std::move(density), std::move(a));
}

// ---------------------------------------------------------------------------
// Oracles

/// int f conj(g) d mu by direct summation over the grid plus atoms.
inline cplx direct_inner(const opuc::CircleMeasure& mu, const ComplexPolynomial& f,
                         const ComplexPolynomial& g) {
    const auto d = mu.density();
    const double h = opuc::kTwoPi / static_cast<double>(d.size());
    cplx acc{};
    for (std::size_t i = 0; i < d.size(); ++i) {
        const double t = h * static_cast<double>(i);
        acc += h * d[i] * f.on_circle(t) * std::conj(g.on_circle(t));
    }
    for (const auto& a : mu.atoms()) acc += a.mass * f.on_circle(a.theta) * std::conj(g.on_circle(a.theta));
    return acc;
}

/// Direct moments s_j = int e^{ij theta} d mu.
inline std::vector<cplx> direct_moments(const opuc::CircleMeasure& mu, std::size_t n) {
    std::vector<cplx> s(n + 1);
    for (std::size_t j = 0; j <= n; ++j)
        s[j] = direct_inner(mu, ComplexPolynomial::monomial(j), ComplexPolynomial::constant(1.0));
    return s;
}

/// Monic Phi_n from the Toeplitz normal equations <Phi_n, z^j> = 0, j < n,
/// solved with a dense Cholesky factorization.
inline ComplexPolynomial gram_schmidt_monic(const std::vector<cplx>& s, std::size_t n) {
    auto mom = [&](long k) { return k >= 0 ? s[static_cast<std::size_t>(k)] : std::conj(s[static_cast<std::size_t>(-k)]); };
    std::vector<cplx> c(n + 1, cplx{});
    c[n] = 1.0;
    if (n == 0) return ComplexPolynomial(c);
    // <z^k, z^j> = int e^{i(k-j) theta} d mu = s_{k-j}
    Eigen::MatrixXcd T(n, n);
    Eigen::VectorXcd b(n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) T(j, k) = mom(static_cast<long>(k) - static_cast<long>(j));
        b(j) = -mom(static_cast<long>(n) - static_cast<long>(j));
    }
    const Eigen::VectorXcd a = T.llt().solve(b);
    for (std::size_t k = 0; k < n; ++k) c[k] = a(k);
    return ComplexPolynomial(c);
}

/// Roots from companion-matrix eigenvalues, polished by Newton steps.
inline std::vector<cplx> polynomial_roots(const ComplexPolynomial& p) {
    ComplexPolynomial q = p;
    q.trim();
    const std::size_t d = q.degree();
    std::vector<cplx> roots;
    if (d == 0) return roots;
    Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(d, d);
    for (std::size_t i = 1; i < d; ++i) C(i, i - 1) = 1.0;
    for (std::size_t i = 0; i < d; ++i) C(i, d - 1) = -q[i] / q[d];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(C, false);
    const ComplexPolynomial dq = q.derivative();
    for (std::size_t i = 0; i < d; ++i) {
        cplx z = es.eigenvalues()(i);
        for (int it = 0; it < 3; ++it) {
            const cplx der = dq(z);
            if (std::abs(der) == 0.0) break;
            z -= q(z) / der;
        }
        roots.push_back(z);
    }
    return roots;
}

/// Fejer-Riesz by roots: lift w to z^m w(z), keep the roots outside the
/// disk, scale so that the modulus matches at theta = 0.
inline ComplexPolynomial factor_by_roots(const opuc::TrigPolynomial& w) {
    const auto c = w.complex_coeffs();
    const std::size_t m = w.degree();
    std::vector<cplx> lift(2 * m + 1);
    // w(theta) = sum_{k=-m}^{m} w_k e^{ik theta}; w_k = c_k, w_{-k} = conj(c_k)
    for (std::size_t k = 0; k <= m; ++k) {
        lift[m + k] = c[k];
        lift[m - k] = std::conj(c[k]);
    }
    lift[m] = c[0].real();
    const auto roots = polynomial_roots(ComplexPolynomial(lift));
    ComplexPolynomial q = ComplexPolynomial::constant(1.0);
    for (auto r : roots)
        if (std::abs(r) > 1.0) q = q * ComplexPolynomial(std::vector<cplx>{-r, 1.0});
    const double target = std::sqrt(w.value(0.0));
    q *= target / std::abs(q(1.0));
    q *= std::conj(q[0]) / std::abs(q[0]);
    return q;
}

}  // namespace testing_support
