#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace opuc {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

inline cplx unit(double theta) { return {std::cos(theta), std::sin(theta)}; }

/// Polynomial with complex coefficients in the monomial basis, c_0 + c_1 z + ...
///
/// The coefficient vector always has at least one entry. Trailing zeros are
/// kept unless trim() is called, so degree() is the formal degree.
class ComplexPolynomial {
  public:
    ComplexPolynomial() : c_(1, cplx{0.0, 0.0}) {}
    explicit ComplexPolynomial(std::vector<cplx> coeffs);
    ComplexPolynomial(std::initializer_list<cplx> coeffs);

    static ComplexPolynomial constant(cplx value) { return ComplexPolynomial({value}); }
    static ComplexPolynomial monomial(std::size_t power, cplx scale = 1.0);

    std::size_t degree() const { return c_.size() - 1; }
    std::span<const cplx> coeffs() const { return c_; }
    const cplx& operator[](std::size_t j) const { return c_[j]; }
    cplx coeff(std::size_t j) const { return j < c_.size() ? c_[j] : cplx{}; }
    cplx& operator[](std::size_t j) { return c_[j]; }

    cplx operator()(cplx z) const;
    cplx on_circle(double theta) const { return (*this)(unit(theta)); }

    /// d/dtheta of p(e^{i theta}).
    cplx theta_derivative(double theta) const;

    ComplexPolynomial derivative() const;

    /// Drop trailing coefficients with |c| <= tol (keeps at least c_0).
    ComplexPolynomial& trim(double tol = 0.0);

    /// Pads with zeros so that degree() >= deg.
    ComplexPolynomial& resize(std::size_t deg);

    bool all_finite() const;
    double max_abs_coeff() const;

    ComplexPolynomial& operator+=(const ComplexPolynomial& rhs);
    ComplexPolynomial& operator-=(const ComplexPolynomial& rhs);
    ComplexPolynomial& operator*=(cplx s);

  private:
    std::vector<cplx> c_;
};

ComplexPolynomial operator+(ComplexPolynomial lhs, const ComplexPolynomial& rhs);
ComplexPolynomial operator-(ComplexPolynomial lhs, const ComplexPolynomial& rhs);
ComplexPolynomial operator*(const ComplexPolynomial& lhs, const ComplexPolynomial& rhs);
ComplexPolynomial operator*(ComplexPolynomial p, cplx s);
ComplexPolynomial operator*(cplx s, ComplexPolynomial p);

/// n-th reciprocal p*(z) = z^n conj(p(1/conj z)). Throws InvalidArgument
/// if deg(p) > n.
ComplexPolynomial star(const ComplexPolynomial& p, std::size_t n);

/// Max |p_j - q_j| over the common coefficient range.
double coeff_distance(const ComplexPolynomial& p, const ComplexPolynomial& q);

}  // namespace opuc
