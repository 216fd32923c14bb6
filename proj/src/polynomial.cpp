#include "opuc/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "opuc/error.hpp"

namespace opuc {

ComplexPolynomial::ComplexPolynomial(std::vector<cplx> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) c_.push_back(cplx{});
}

ComplexPolynomial::ComplexPolynomial(std::initializer_list<cplx> coeffs) : c_(coeffs) {
    if (c_.empty()) c_.push_back(cplx{});
}

ComplexPolynomial ComplexPolynomial::monomial(std::size_t power, cplx scale) {
    std::vector<cplx> c(power + 1, cplx{});
    c[power] = scale;
    return ComplexPolynomial(std::move(c));
}

cplx ComplexPolynomial::operator()(cplx z) const {
    cplx acc = c_.back();
    for (std::size_t j = c_.size() - 1; j-- > 0;) acc = acc * z + c_[j];
    return acc;
}

cplx ComplexPolynomial::theta_derivative(double theta) const {
    // d/dtheta p(e^{it}) = i z p'(z)
    const cplx z = unit(theta);
    cplx acc{};
    for (std::size_t j = c_.size() - 1; j >= 1; --j) {
        acc = acc * z + static_cast<double>(j) * c_[j];
        if (j == 1) break;
    }
    return cplx{0.0, 1.0} * z * acc;
}

ComplexPolynomial ComplexPolynomial::derivative() const {
    if (c_.size() == 1) return ComplexPolynomial();
    std::vector<cplx> d(c_.size() - 1);
    for (std::size_t j = 1; j < c_.size(); ++j) d[j - 1] = static_cast<double>(j) * c_[j];
    return ComplexPolynomial(std::move(d));
}

ComplexPolynomial& ComplexPolynomial::trim(double tol) {
    while (c_.size() > 1 && std::abs(c_.back()) <= tol) c_.pop_back();
    return *this;
}

ComplexPolynomial& ComplexPolynomial::resize(std::size_t deg) {
    if (c_.size() < deg + 1) c_.resize(deg + 1, cplx{});
    return *this;
}

bool ComplexPolynomial::all_finite() const {
    return std::all_of(c_.begin(), c_.end(),
                       [](cplx v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); });
}

double ComplexPolynomial::max_abs_coeff() const {
    double m = 0.0;
    for (auto v : c_) m = std::max(m, std::abs(v));
    return m;
}

ComplexPolynomial& ComplexPolynomial::operator+=(const ComplexPolynomial& rhs) {
    resize(rhs.degree());
    for (std::size_t j = 0; j <= rhs.degree(); ++j) c_[j] += rhs.c_[j];
    return *this;
}

ComplexPolynomial& ComplexPolynomial::operator-=(const ComplexPolynomial& rhs) {
    resize(rhs.degree());
    for (std::size_t j = 0; j <= rhs.degree(); ++j) c_[j] -= rhs.c_[j];
    return *this;
}

ComplexPolynomial& ComplexPolynomial::operator*=(cplx s) {
    for (auto& v : c_) v *= s;
    return *this;
}

ComplexPolynomial operator+(ComplexPolynomial lhs, const ComplexPolynomial& rhs) { return lhs += rhs; }
ComplexPolynomial operator-(ComplexPolynomial lhs, const ComplexPolynomial& rhs) { return lhs -= rhs; }
ComplexPolynomial operator*(ComplexPolynomial p, cplx s) { return p *= s; }
ComplexPolynomial operator*(cplx s, ComplexPolynomial p) { return p *= s; }

ComplexPolynomial operator*(const ComplexPolynomial& lhs, const ComplexPolynomial& rhs) {
    std::vector<cplx> out(lhs.degree() + rhs.degree() + 1, cplx{});
    for (std::size_t i = 0; i <= lhs.degree(); ++i) {
        if (lhs[i] == cplx{}) continue;
        for (std::size_t j = 0; j <= rhs.degree(); ++j) out[i + j] += lhs[i] * rhs[j];
    }
    return ComplexPolynomial(std::move(out));
}

ComplexPolynomial star(const ComplexPolynomial& p, std::size_t n) {
    // Formal degree may exceed n only through trailing zeros.
    for (std::size_t j = n + 1; j <= p.degree(); ++j) {
        if (p[j] != cplx{})
            throw InvalidArgument("star: polynomial degree " + std::to_string(p.degree()) +
                                  " exceeds order " + std::to_string(n));
    }
    std::vector<cplx> out(n + 1, cplx{});
    for (std::size_t j = 0; j <= std::min(n, p.degree()); ++j) out[n - j] = std::conj(p[j]);
    return ComplexPolynomial(std::move(out));
}

double coeff_distance(const ComplexPolynomial& p, const ComplexPolynomial& q) {
    const std::size_t d = std::max(p.degree(), q.degree());
    double m = 0.0;
    for (std::size_t j = 0; j <= d; ++j) m = std::max(m, std::abs(p.coeff(j) - q.coeff(j)));
    return m;
}

}  // namespace opuc
