#pragma once

#include <cstddef>
#include <vector>

#include "opuc/polynomial.hpp"

namespace opuc {

/// Real trigonometric polynomial a_0 + sum_{k=1}^d (a_k cos k theta + b_k sin k theta).
/// cosCoeffs[0] is a_0; sinCoeffs[0] is unused and kept at zero.
struct TrigPolynomial {
    std::vector<double> cosCoeffs{0.0};
    std::vector<double> sinCoeffs{0.0};

    std::size_t degree() const { return cosCoeffs.size() - 1; }
    double value(double theta) const;
    double mean() const { return cosCoeffs[0]; }
    bool is_even(double tol = 0.0) const;

    /// c_k with value = Re c_0 + 2 Re sum_{k>=1} c_k e^{ik theta}, k = 0..degree.
    std::vector<cplx> complex_coeffs() const;
    static TrigPolynomial from_complex(const std::vector<cplx>& c);

    /// Samples on theta_i = 2 pi i / n (exact, via FFT).
    std::vector<double> samples(std::size_t n) const;

    TrigPolynomial& operator+=(const TrigPolynomial& rhs);
};

/// |p(e^{i theta})|^2 as a trigonometric polynomial of degree deg p.
TrigPolynomial modulus_squared(const ComplexPolynomial& p);

}  // namespace opuc
