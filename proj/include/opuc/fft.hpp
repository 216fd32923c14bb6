#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "opuc/polynomial.hpp"

namespace opuc::fft {

enum class Sign { Forward = -1, Backward = +1 };

/// Unnormalized DFT: out_k = sum_j x_j exp(sign * 2 pi i jk / N).
std::vector<cplx> dft(std::span<const cplx> x, Sign sign);

/// Values p(e^{2 pi i k / N}), k = 0..N-1. Coefficients above N-1 are folded
/// (z^j = z^{j mod N} at the N-th roots of unity), so the result is exact for
/// any degree.
std::vector<cplx> evaluate_on_circle(const ComplexPolynomial& p, std::size_t n);

/// Fourier coefficients c_k = (1/N) sum_i f(theta_i) e^{-ik theta_i} of
/// uniform samples; index k is taken mod N.
std::vector<cplx> fourier_coefficients(std::span<const cplx> samples);
std::vector<cplx> fourier_coefficients(std::span<const double> samples);

/// Smallest power of two >= n.
std::size_t next_pow2(std::size_t n);

}  // namespace opuc::fft
