#include "opuc/opuc.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "opuc/error.hpp"
#include "opuc/fft.hpp"
#include "opuc/kernels.hpp"
#include "opuc/measure.hpp"

namespace opuc {

VerblunskySequence::VerblunskySequence(std::vector<cplx> gammas) : gammas_(std::move(gammas)) {
    rhos_.reserve(gammas_.size());
    for (std::size_t j = 0; j < gammas_.size(); ++j) {
        const double a = std::abs(gammas_[j]);
        if (!(a < 1.0))
            throw InadmissibleInput("Verblunsky coefficient " + std::to_string(j) +
                                    " has modulus " + std::to_string(a) + " >= 1");
        rhos_.push_back(std::sqrt((1.0 - a) * (1.0 + a)));
    }
}

VerblunskySequence VerblunskySequence::head(std::size_t count) const {
    if (count > size()) throw InvalidArgument("head: count exceeds sequence length");
    return VerblunskySequence(std::vector<cplx>(gammas_.begin(), gammas_.begin() + count));
}

VerblunskySequence VerblunskySequence::concat(const VerblunskySequence& tail) const {
    std::vector<cplx> g(gammas_);
    g.insert(g.end(), tail.gammas_.begin(), tail.gammas_.end());
    return VerblunskySequence(std::move(g));
}

OrthogonalSystem szego_recursion(const VerblunskySequence& gammas, std::size_t upTo) {
    if (upTo > gammas.size())
        throw InvalidArgument("szego_recursion: upTo exceeds the number of parameters");
    OrthogonalSystem sys;
    sys.source = gammas.head(upTo);
    sys.phi.reserve(upTo + 1);
    sys.phi.push_back(ComplexPolynomial::constant(1.0));
    sys.phiStar.push_back(ComplexPolynomial::constant(1.0));
    sys.psi.push_back(ComplexPolynomial::constant(1.0));
    sys.psiStar.push_back(ComplexPolynomial::constant(1.0));

    auto step = [](const ComplexPolynomial& p, const ComplexPolynomial& ps, cplx g, double rho,
                   ComplexPolynomial& next, ComplexPolynomial& nextStar) {
        const std::size_t k = p.degree();
        std::vector<cplx> a(k + 2, cplx{}), b(k + 2, cplx{});
        const cplx gc = std::conj(g);
        for (std::size_t j = 0; j <= k; ++j) {
            a[j + 1] += p[j];
            a[j] -= gc * ps[j];
            b[j] += ps[j];
            b[j + 1] -= g * p[j];
        }
        const double inv = 1.0 / rho;
        for (auto& v : a) v *= inv;
        for (auto& v : b) v *= inv;
        next = ComplexPolynomial(std::move(a));
        nextStar = ComplexPolynomial(std::move(b));
    };

    for (std::size_t k = 0; k < upTo; ++k) {
        ComplexPolynomial p, ps, q, qs;
        step(sys.phi[k], sys.phiStar[k], gammas.gamma(k), gammas.rho(k), p, ps);
        step(sys.psi[k], sys.psiStar[k], -gammas.gamma(k), gammas.rho(k), q, qs);
        sys.phi.push_back(std::move(p));
        sys.phiStar.push_back(std::move(ps));
        sys.psi.push_back(std::move(q));
        sys.psiStar.push_back(std::move(qs));
    }
    return sys;
}

LevinsonResult levinson(std::span<const cplx> moments) {
    if (moments.empty()) throw InvalidArgument("levinson: need at least s_0");
    const std::size_t n = moments.size() - 1;
    if (n > kMaxMomentOrder)
        throw InvalidArgument("levinson: order " + std::to_string(n) + " exceeds cap " +
                              std::to_string(kMaxMomentOrder));
    const double s0 = moments[0].real();
    if (!(s0 > 0.0) || std::abs(moments[0].imag()) > 1e-12 * std::abs(s0))
        throw InadmissibleInput("levinson: s_0 must be real and positive");

    // a: coefficients of Phi_k, b: coefficients of Phi_k^*
    std::vector<cplx> a{1.0}, b{1.0};
    std::vector<cplx> g;
    std::vector<double> energy{s0};
    g.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        cplx num{};
        for (std::size_t j = 0; j <= k; ++j) num += a[j] * moments[j + 1];
        const double e = energy.back();
        const cplx gamma = std::conj(num) / e;
        const double ga = std::abs(gamma);
        if (!(ga < 1.0) || !std::isfinite(ga))
            throw InadmissibleInput("levinson: Toeplitz matrix T_" + std::to_string(k + 1) +
                                    " is not positive definite (|gamma_" + std::to_string(k) +
                                    "| = " + std::to_string(ga) + ")");
        std::vector<cplx> na(k + 2, cplx{}), nb(k + 2, cplx{});
        for (std::size_t j = 0; j <= k; ++j) {
            na[j + 1] += a[j];
            na[j] -= std::conj(gamma) * b[j];
            nb[j] += b[j];
            nb[j + 1] -= gamma * a[j];
        }
        a = std::move(na);
        b = std::move(nb);
        g.push_back(gamma);
        energy.push_back(e * (1.0 - ga) * (1.0 + ga));
    }
    return {VerblunskySequence(std::move(g)), ComplexPolynomial(std::move(a)), std::move(energy)};
}

VerblunskySequence verblunsky_from_moments(std::span<const cplx> moments) {
    return levinson(moments).gammas;
}

double orthonormal_value(std::span<const cplx> moments, cplx z) {
    const auto lev = levinson(moments);
    return std::abs(lev.monic(z)) / std::sqrt(lev.monicNormSq.back());
}

cplx cd_kernel(const OrthogonalSystem& system, std::size_t n, cplx xi, cplx z) {
    if (n >= system.size()) throw InvalidArgument("cd_kernel: index beyond system size");
    cplx acc{};
    for (std::size_t j = 0; j <= n; ++j) acc += std::conj(system.phi[j](xi)) * system.phi[j](z);
    return acc;
}

ComplexPolynomial cd_kernel_polynomial(const OrthogonalSystem& system, std::size_t n, cplx xi) {
    if (n >= system.size()) throw InvalidArgument("cd_kernel: index beyond system size");
    ComplexPolynomial k;
    k.resize(n);
    for (std::size_t j = 0; j <= n; ++j) k += system.phi[j] * std::conj(system.phi[j](xi));
    return k;
}

VerblunskySequence verblunsky_from_star(const ComplexPolynomial& p, std::size_t n) {
    for (std::size_t j = n + 1; j <= p.degree(); ++j)
        if (p[j] != cplx{}) throw InvalidArgument("verblunsky_from_star: degree exceeds n");
    if (!(p[0].real() > 0.0)) throw InadmissibleInput("verblunsky_from_star: need p(0) > 0");
    std::vector<cplx> gammas(n);
    ComplexPolynomial s(std::vector<cplx>(p.coeffs().begin(), p.coeffs().begin() + std::min(n, p.degree()) + 1));
    s.resize(n);
    for (std::size_t k = n; k-- > 0;) {
        // s = phi_{k+1}^* up to a positive factor; phi_{k+1}(0) = conj(s_{k+1}).
        const ComplexPolynomial f = star(s, k + 1);
        const cplx g = -std::conj(f[0] / s[0]);
        if (!(std::abs(g) < 1.0))
            throw InadmissibleInput("verblunsky_from_star: polynomial has a zero in the closed disk");
        gammas[k] = g;
        const ComplexPolynomial next = s + f * g;
        s = ComplexPolynomial(std::vector<cplx>(next.coeffs().begin(), next.coeffs().begin() + k + 1));
        s *= 1.0 / std::sqrt(1.0 - std::norm(g));
    }
    return VerblunskySequence(std::move(gammas));
}

double bernstein_szego_mass(const ComplexPolynomial& p, std::size_t n) {
    const auto g = verblunsky_from_star(p, n);
    double prod = p[0].real() * p[0].real();
    for (std::size_t j = 0; j < n; ++j) prod *= 1.0 - std::norm(g.gamma(j));
    return 1.0 / prod;
}

double monic_norm(const VerblunskySequence& gammas, std::size_t n) {
    if (n > gammas.size()) throw InvalidArgument("monic_norm: n exceeds sequence length");
    double p = 1.0;
    for (std::size_t j = 0; j < n; ++j) p *= gammas.rho(j);
    return p;
}

std::size_t default_grid(std::size_t degree) {
    return fft::next_pow2(std::max<std::size_t>(4096, 32 * degree));
}

CircleScan scan_circle(const ComplexPolynomial& p, std::size_t gridSize) {
    if (gridSize == 0) gridSize = default_grid(p.degree());
    const auto v = fft::evaluate_on_circle(p, gridSize);
    CircleScan s{std::abs(v[0]), std::abs(v[0]), 0};
    for (auto z : v) {
        s.minAbs = std::min(s.minAbs, std::abs(z));
        s.maxAbs = std::max(s.maxAbs, std::abs(z));
    }
    s.winding = s.minAbs > 0.0 ? kernels::winding_number(v) : -1;
    return s;
}

CircleMeasure bernstein_szego_density(const ComplexPolynomial& phiN, std::size_t gridSize) {
    if (gridSize == 0) gridSize = default_grid(phiN.degree());
    ComplexPolynomial p = phiN;
    p.trim();
    const auto v = fft::evaluate_on_circle(p, gridSize);
    double minAbs = std::abs(v[0]);
    for (auto z : v) minAbs = std::min(minAbs, std::abs(z));
    if (!(minAbs > 1e-300) ||
        kernels::winding_number(v) != static_cast<long>(p.degree()))
        throw InadmissibleInput(
            "bernstein_szego_density: polynomial has a zero on or outside the unit circle");
    std::vector<double> density(gridSize);
    for (std::size_t i = 0; i < gridSize; ++i) density[i] = 1.0 / (kTwoPi * std::norm(v[i]));
    return CircleMeasure(std::move(density));
}

}  // namespace opuc
