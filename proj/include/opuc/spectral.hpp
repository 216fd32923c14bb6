#pragma once

// Fejer-Riesz factorization of strictly positive trigonometric polynomials
// and the boundary phase of the resulting outer polynomial.

#include <cstddef>
#include <span>

#include "opuc/approximants.hpp"
#include "opuc/polynomial.hpp"
#include "opuc/trig.hpp"

namespace opuc {

inline constexpr double kFactorizationTol = 1e-8;
inline constexpr std::size_t kMaxFactorizationGrid = std::size_t{1} << 22;

/// Q of degree m with |Q(e^{it})|^2 = w(t), no zeros in the closed disk and
/// Q(0) > 0; real coefficients when w is even.
///
/// log w is sampled on a power-of-two grid of at least 16m points, its
/// conjugate function is formed spectrally, the analytic completion is
/// exponentiated and the Taylor coefficients are read back. The grid is
/// doubled until the relative residual drops below 1e-11 or the cap is hit.
///
/// Throws InadmissibleInput if w is not strictly positive and
/// VerificationFailure if the residual stays above kFactorizationTol.
ComplexPolynomial fejer_riesz(const TrigPolynomial& w);

/// Same, from samples w(2 pi i / N) with N >= 2m + 1. Throws
/// InvalidArgument if the samples carry Fourier content above degree m
/// (relative 1e-10).
ComplexPolynomial fejer_riesz(std::span<const double> samples, std::size_t m);

/// max | |q|^2 - w | / w on a grid fine enough for degree deg q + deg w.
double factorization_residual(const ComplexPolynomial& q, const TrigPolynomial& w);

/// Continuous branch of arg Q(e^{i theta}) with phase(Q, 0) = 0, obtained
/// by summing principal-value increments from 0 to theta (steps are
/// refined until each increment is below pi/4). Throws InadmissibleInput
/// if Q vanishes along the path.
double phase(const ComplexPolynomial& q, double theta);

/// max over |theta| < upsilon of |phi'(theta)| / m, with phi' from central
/// differences at step 1e-3 / m.
double verify_phase_bound(const ComplexPolynomial& q, int m, double upsilon = kUpsilon);

}  // namespace opuc
