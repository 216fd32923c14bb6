#pragma once

// Orthogonal polynomials on the unit circle: Szego recursion, Verblunsky
// coefficients from moments, Christoffel-Darboux kernels and
// Bernstein-Szego densities.
//
// Conventions used throughout the library:
//   moments        s_j = int e^{ij theta} d mu,  s_{-j} = conj(s_j)
//   inner product  <f, g> = int f conj(g) d mu
//   monic          Phi_{k+1} = z Phi_k - conj(gamma_k) Phi_k^*,  Phi_k(0) = -conj(gamma_{k-1})

#include <cstddef>
#include <span>
#include <vector>

#include "opuc/polynomial.hpp"

namespace opuc {

class CircleMeasure;

/// Verblunsky (Schur) parameters gamma_0..gamma_{N-1}, all strictly inside the disk.
class VerblunskySequence {
  public:
    VerblunskySequence() = default;
    /// Throws InadmissibleInput if some |gamma_j| >= 1.
    explicit VerblunskySequence(std::vector<cplx> gammas);

    std::size_t size() const { return gammas_.size(); }
    std::span<const cplx> gammas() const { return gammas_; }
    std::span<const double> rhos() const { return rhos_; }
    cplx gamma(std::size_t j) const { return gammas_[j]; }
    double rho(std::size_t j) const { return rhos_[j]; }

    VerblunskySequence head(std::size_t count) const;
    VerblunskySequence concat(const VerblunskySequence& tail) const;

  private:
    std::vector<cplx> gammas_;
    std::vector<double> rhos_;
};

/// Orthonormal polynomials of the first and second kind together with their
/// reversed polynomials, phi_j, phi_j^*, psi_j, psi_j^* for j = 0..size()-1.
struct OrthogonalSystem {
    VerblunskySequence source;
    std::vector<ComplexPolynomial> phi;
    std::vector<ComplexPolynomial> phiStar;
    std::vector<ComplexPolynomial> psi;
    std::vector<ComplexPolynomial> psiStar;

    std::size_t size() const { return phi.size(); }
    /// Largest available index.
    std::size_t top() const { return phi.size() - 1; }
};

/// phi_j for j = 0..upTo from the first upTo parameters.
OrthogonalSystem szego_recursion(const VerblunskySequence& gammas, std::size_t upTo);

/// Levinson-type recursion on the Toeplitz moment matrix.
struct LevinsonResult {
    VerblunskySequence gammas;
    ComplexPolynomial monic;         ///< Phi_n
    std::vector<double> monicNormSq; ///< ||Phi_k||^2_mu, k = 0..n (includes s_0)
};

/// Maximum order accepted by the moment route.
inline constexpr std::size_t kMaxMomentOrder = 1024;

/// moments = s_0..s_n. Throws InadmissibleInput if some T_k is not positive
/// definite, InvalidArgument if n exceeds kMaxMomentOrder.
LevinsonResult levinson(std::span<const cplx> moments);
VerblunskySequence verblunsky_from_moments(std::span<const cplx> moments);

/// Inverse Szego recursion. For p of degree <= n with p(0) > 0 and no zeros
/// in the closed disk, d theta / (2 pi |p|^2) has phi_n^* = p; returns its
/// gamma_0..gamma_{n-1}. Throws InadmissibleInput when some |gamma| >= 1.
VerblunskySequence verblunsky_from_star(const ComplexPolynomial& p, std::size_t n);

/// Total mass of d theta / (2 pi |p|^2), i.e. 1 / (p(0)^2 prod rho_j^2).
double bernstein_szego_mass(const ComplexPolynomial& p, std::size_t n);

/// |phi_n(1)| of the (not necessarily normalized) measure with these moments;
/// uses ||Phi_n||^2 = s_0 prod rho_j^2.
double orthonormal_value(std::span<const cplx> moments, cplx z);

/// K_n(xi, z) = sum_{j<=n} conj(phi_j(xi)) phi_j(z).
cplx cd_kernel(const OrthogonalSystem& system, std::size_t n, cplx xi, cplx z);
/// K_n(xi, .) as a polynomial in z.
ComplexPolynomial cd_kernel_polynomial(const OrthogonalSystem& system, std::size_t n, cplx xi);

/// rho_0 * ... * rho_{n-1} = ||Phi_n||_mu for a probability measure.
double monic_norm(const VerblunskySequence& gammas, std::size_t n);

/// Sampled boundary behaviour of a polynomial: minimum modulus on the grid
/// and the winding number of p(e^{i theta}) (number of zeros in the disk).
struct CircleScan {
    double minAbs;
    double maxAbs;
    long winding;
};
CircleScan scan_circle(const ComplexPolynomial& p, std::size_t gridSize = 0);

/// Default grid max(4096, 32 * degree), rounded up to a power of two.
std::size_t default_grid(std::size_t degree);

/// d mu_N = d theta / (2 pi |phi_N|^2), sampled on a uniform grid. phiN is a
/// first-kind polynomial: all its zeros must lie in the open disk, otherwise
/// InadmissibleInput is thrown.
CircleMeasure bernstein_szego_density(const ComplexPolynomial& phiN, std::size_t gridSize = 0);

}  // namespace opuc
