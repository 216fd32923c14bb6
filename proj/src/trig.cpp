#include "opuc/trig.hpp"

#include <algorithm>
#include <cmath>

#include "opuc/fft.hpp"

namespace opuc {

double TrigPolynomial::value(double theta) const {
    double v = cosCoeffs[0];
    for (std::size_t k = 1; k < cosCoeffs.size(); ++k) {
        const double kt = static_cast<double>(k) * theta;
        v += cosCoeffs[k] * std::cos(kt) + sinCoeffs[k] * std::sin(kt);
    }
    return v;
}

bool TrigPolynomial::is_even(double tol) const {
    double scale = 0.0;
    for (double a : cosCoeffs) scale = std::max(scale, std::abs(a));
    return std::all_of(sinCoeffs.begin(), sinCoeffs.end(),
                       [&](double b) { return std::abs(b) <= tol * scale; });
}

std::vector<cplx> TrigPolynomial::complex_coeffs() const {
    std::vector<cplx> c(cosCoeffs.size());
    c[0] = cosCoeffs[0];
    for (std::size_t k = 1; k < c.size(); ++k) c[k] = cplx{cosCoeffs[k], -sinCoeffs[k]} * 0.5;
    return c;
}

TrigPolynomial TrigPolynomial::from_complex(const std::vector<cplx>& c) {
    TrigPolynomial t;
    t.cosCoeffs.assign(c.size(), 0.0);
    t.sinCoeffs.assign(c.size(), 0.0);
    t.cosCoeffs[0] = c[0].real();
    for (std::size_t k = 1; k < c.size(); ++k) {
        t.cosCoeffs[k] = 2.0 * c[k].real();
        t.sinCoeffs[k] = -2.0 * c[k].imag();
    }
    return t;
}

std::vector<double> TrigPolynomial::samples(std::size_t n) const {
    const auto c = complex_coeffs();
    std::vector<cplx> spec(n, cplx{});
    spec[0] += c[0];
    for (std::size_t k = 1; k < c.size(); ++k) {
        spec[k % n] += c[k];
        spec[(n - k % n) % n] += std::conj(c[k]);
    }
    const auto v = fft::dft(spec, fft::Sign::Backward);
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = v[i].real();
    return out;
}

TrigPolynomial& TrigPolynomial::operator+=(const TrigPolynomial& rhs) {
    const std::size_t d = std::max(cosCoeffs.size(), rhs.cosCoeffs.size());
    cosCoeffs.resize(d, 0.0);
    sinCoeffs.resize(d, 0.0);
    for (std::size_t k = 0; k < rhs.cosCoeffs.size(); ++k) {
        cosCoeffs[k] += rhs.cosCoeffs[k];
        sinCoeffs[k] += rhs.sinCoeffs[k];
    }
    return *this;
}

TrigPolynomial modulus_squared(const ComplexPolynomial& p) {
    const std::size_t d = p.degree();
    std::vector<cplx> r(d + 1, cplx{});
    // |p|^2 = sum_k r_k e^{ik theta} with r_k = sum_j p_{j+k} conj(p_j)
    for (std::size_t k = 0; k <= d; ++k)
        for (std::size_t j = 0; j + k <= d; ++j) r[k] += p[j + k] * std::conj(p[j]);
    r[0] = r[0].real();
    return TrigPolynomial::from_complex(r);
}

}  // namespace opuc
