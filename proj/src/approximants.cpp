#include "opuc/approximants.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <ostream>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "opuc/error.hpp"
#include "opuc/measure.hpp"

namespace opuc {

namespace {

void require_open_unit(double beta, const char* who) {
    if (!(beta > 0.0 && beta < 1.0))
        throw InvalidArgument(std::string(who) + ": beta must lie in (0, 1)");
}

ComplexPolynomial weighted(const ComplexPolynomial& p, int power) {
    // coefficients (ij)^power a_j
    ComplexPolynomial q = p;
    for (std::size_t j = 0; j <= q.degree(); ++j) {
        const double jj = static_cast<double>(j);
        q[j] *= power == 1 ? cplx{0.0, jj} : cplx{-jj * jj, 0.0};
    }
    return q;
}

}  // namespace

ComplexPolynomial FractionalPowerTaylor::polynomial() const {
    std::vector<cplx> c(static_cast<std::size_t>(degree) + 1, cplx{});
    if (kind == TaylorKind::B) {
        for (int j = 0; j <= degree; ++j) c[j] = coeffs[j];
    } else {
        double constant = correctionM * std::pow(static_cast<double>(degree), -beta);
        for (int j = 1; j <= degree; ++j) {
            constant += coeffs[j];
            c[j] = -coeffs[j];
        }
        c[0] = constant;
    }
    return ComplexPolynomial(std::move(c));
}

cplx FractionalPowerTaylor::at(double theta) const { return polynomial().on_circle(theta); }

cplx FractionalPowerTaylor::d_theta(double theta) const {
    return weighted(polynomial(), 1).on_circle(theta);
}

cplx FractionalPowerTaylor::d2_theta(double theta) const {
    return weighted(polynomial(), 2).on_circle(theta);
}

FractionalPowerTaylor build_B(int n, double beta) {
    require_open_unit(beta, "build_B");
    if (n < 1) throw InvalidArgument("build_B: n must be >= 1");
    FractionalPowerTaylor t{TaylorKind::B, beta, n, 0.0, std::vector<double>(n + 1)};
    t.coeffs[0] = 1.0;
    for (int j = 1; j <= n; ++j) t.coeffs[j] = t.coeffs[j - 1] * (beta + j - 1) / j;
    return t;
}

FractionalPowerTaylor build_A(int n, double beta, double M) {
    require_open_unit(beta, "build_A");
    if (n < 1) throw InvalidArgument("build_A: n must be >= 1");
    if (!(M > 0.0)) throw InvalidArgument("build_A: correction M must be positive");
    FractionalPowerTaylor t{TaylorKind::A, beta, n, M, std::vector<double>(n + 1, 0.0)};
    t.coeffs[1] = beta;
    for (int j = 2; j <= n; ++j) t.coeffs[j] = t.coeffs[j - 1] * (j - 1 - beta) / j;
    return t;
}

cplx fractional_power(cplx z, double beta) { return std::pow(1.0 - z, beta); }

double fejer(int m, double theta) {
    if (m < 1) throw InvalidArgument("fejer: m must be >= 1");
    const double x = 0.5 * normalize_angle(theta);
    const double s = std::sin(x);
    double ratio;
    if (std::abs(x) < 1e-6) {
        const double mm = static_cast<double>(m);
        ratio = mm * (1.0 - (mm * mm - 1.0) * x * x / 6.0);
    } else {
        ratio = std::sin(m * x) / s;
    }
    return ratio * ratio / m;
}

double shifted_fejer_G(int m, double theta) {
    const double shift = kPi / m;
    return fejer(m, theta) + 0.5 * fejer(m, theta - shift) + 0.5 * fejer(m, theta + shift);
}

TrigPolynomial fejer_trig(int m) {
    if (m < 1) throw InvalidArgument("fejer: m must be >= 1");
    TrigPolynomial t;
    t.cosCoeffs.assign(m, 0.0);
    t.sinCoeffs.assign(m, 0.0);
    t.cosCoeffs[0] = 1.0;
    for (int k = 1; k < m; ++k) t.cosCoeffs[k] = 2.0 * (1.0 - static_cast<double>(k) / m);
    return t;
}

TrigPolynomial shifted_fejer_trig(int m) {
    TrigPolynomial t = fejer_trig(m);
    for (int k = 0; k < m; ++k) t.cosCoeffs[k] *= 1.0 + std::cos(k * kPi / m);
    return t;
}

std::string to_string(AppendixBound b) {
    switch (b) {
        case AppendixBound::Poly2Re: return "poly2_re";
        case AppendixBound::Poly2Im: return "poly2_im";
        case AppendixBound::Poly2ImSmall: return "poly2_im_small";
        case AppendixBound::DeriderFirst: return "derider_first";
        case AppendixBound::DeriderSecond: return "derider_second";
        case AppendixBound::Poly1Re: return "poly1_re";
        case AppendixBound::Poly1Im: return "poly1_im";
        case AppendixBound::Poly1ImSmall: return "poly1_im_small";
        case AppendixBound::DerDer: return "der_der";
        case AppendixBound::Poly1Sign: return "poly1_sign";
        case AppendixBound::Poly2Sign: return "poly2_sign";
    }
    return "unknown";
}

std::vector<double> appendix_grid(int n, std::size_t points) {
    std::vector<double> g;
    const double lo = std::log(1e-4 / n), hi = std::log(kUpsilon);
    const std::size_t half = points / 4;
    for (std::size_t i = 0; i < half; ++i) {
        const double t = std::exp(lo + (hi - lo) * (static_cast<double>(i) + 0.5) / half);
        g.push_back(t);
        g.push_back(-t);
    }
    for (std::size_t i = 1; i < half; ++i) {
        const double t = kUpsilon * static_cast<double>(i) / half;
        g.push_back(t);
        g.push_back(-t);
    }
    std::sort(g.begin(), g.end());
    return g;
}

BoundReport verify_appendix_A(AppendixBound which, int n, double beta,
                              const std::vector<double>& grid, double M) {
    const bool poly2 = which == AppendixBound::Poly2Re || which == AppendixBound::Poly2Im ||
                       which == AppendixBound::Poly2ImSmall || which == AppendixBound::Poly2Sign;
    if (poly2 && !(beta > 0.0 && beta < 0.5))
        throw InvalidArgument(to_string(which) + ": beta must lie in (0, 1/2)");
    require_open_unit(beta, to_string(which).c_str());

    const bool usesB = poly2 || which == AppendixBound::DeriderFirst ||
                       which == AppendixBound::DeriderSecond;
    const FractionalPowerTaylor poly = usesB ? build_B(n, beta) : build_A(n, beta, M);
    const ComplexPolynomial p = poly.polynomial();
    const ComplexPolynomial p1 = weighted(p, 1);
    const ComplexPolynomial p2 = weighted(p, 2);
    const double nn = static_cast<double>(n);
    const double small = 0.01 / nn;

    std::vector<double> thetas = grid;
    if (which == AppendixBound::Poly1Sign) {
        // whole circle, away from the endpoints
        thetas.clear();
        for (int i = 1; i < 4000; ++i) {
            const double t = kPi * i / 4000.0;
            thetas.push_back(t);
            thetas.push_back(-t);
        }
        for (double t : grid) thetas.push_back(t);
    }

    BoundReport r{to_string(which), n, beta, std::numeric_limits<double>::infinity(),
                  -std::numeric_limits<double>::infinity()};
    for (double t : thetas) {
        const double at = std::abs(t);
        if (at == 0.0) continue;
        const double sg = t > 0 ? 1.0 : -1.0;
        double ratio;
        switch (which) {
            case AppendixBound::Poly2Re:
                if (at >= kUpsilon) continue;
                ratio = p.on_circle(t).real() / std::pow(1.0 / nn + at, -beta);
                break;
            case AppendixBound::Poly2Im:
                if (at <= small || at >= kUpsilon) continue;
                ratio = p.on_circle(t).imag() * sg / std::pow(at, -beta);
                break;
            case AppendixBound::Poly2ImSmall:
                if (at >= small) continue;
                ratio = p.on_circle(t).imag() / t / std::pow(nn, 1.0 + beta);
                break;
            case AppendixBound::Poly2Sign:
                if (at <= small || at >= kUpsilon) continue;
                ratio = p.on_circle(t).imag() * sg;
                break;
            case AppendixBound::DeriderFirst:
                if (at >= kUpsilon) continue;
                ratio = std::abs(p1.on_circle(t)) /
                        (at > 1.0 / nn ? std::pow(nn, beta) / at : std::pow(nn, 1.0 + beta));
                break;
            case AppendixBound::DeriderSecond:
                if (at >= kUpsilon) continue;
                ratio = std::abs(p2.on_circle(t)) /
                        (at > 1.0 / nn ? std::pow(nn, beta + 1.0) / at : std::pow(nn, 2.0 + beta));
                break;
            case AppendixBound::Poly1Re:
                if (at >= kUpsilon) continue;
                ratio = p.on_circle(t).real() / std::pow(1.0 / nn + at, beta);
                break;
            case AppendixBound::Poly1Im:
                if (at <= small || at >= kUpsilon) continue;
                ratio = -p.on_circle(t).imag() * sg / std::pow(at, beta);
                break;
            case AppendixBound::Poly1ImSmall:
                if (at >= small) continue;
                ratio = -p.on_circle(t).imag() * sg / (at * std::pow(nn, 1.0 - beta));
                break;
            case AppendixBound::DerDer:
                if (at >= kUpsilon) continue;
                ratio = std::abs(p1.on_circle(t)) /
                        (at > small ? std::pow(at, beta - 1.0) : std::pow(nn, 1.0 - beta));
                break;
            case AppendixBound::Poly1Sign:
                ratio = -p.on_circle(t).imag() * sg;
                break;
            default:
                continue;
        }
        r.ratioMin = std::min(r.ratioMin, ratio);
        r.ratioMax = std::max(r.ratioMax, ratio);
    }
    return r;
}

std::vector<BoundReport> verify_appendix_A_suite(int n, double beta, double M) {
    const auto grid = appendix_grid(n);
    std::vector<AppendixBound> bounds{AppendixBound::DeriderFirst, AppendixBound::DeriderSecond,
                                      AppendixBound::Poly1Re,      AppendixBound::Poly1Im,
                                      AppendixBound::Poly1ImSmall, AppendixBound::DerDer,
                                      AppendixBound::Poly1Sign};
    if (beta < 0.5) {
        bounds.insert(bounds.begin(), {AppendixBound::Poly2Re, AppendixBound::Poly2Im,
                                       AppendixBound::Poly2ImSmall, AppendixBound::Poly2Sign});
    }
    std::vector<BoundReport> out;
    for (auto b : bounds) out.push_back(verify_appendix_A(b, n, beta, grid, M));
    return out;
}

namespace {

double gk(const std::function<double(double)>& f, double a, double b) {
    using boost::math::quadrature::gauss_kronrod;
    double err = 0.0;
    return gauss_kronrod<double, 31>::integrate(f, a, b, 15, 1e-14, &err);
}

double singular_piece(double gamma, double a, bool cosine) {
    // x = u^{1/(1-g)} removes the x^{-g} singularity at the origin
    const double e = 1.0 / (1.0 - gamma);
    auto f = [&](double u) {
        const double x = std::pow(u, e);
        return (cosine ? std::cos(x) : std::sin(x)) * e;
    };
    return gk(f, 0.0, std::pow(a, 1.0 - gamma));
}

double regular_piece(double gamma, double lo, double hi, bool cosine) {
    // split at multiples of pi so every piece has one sign
    double total = 0.0;
    double a = lo;
    for (double k = std::floor(lo / kPi) + 1.0; a < hi; k += 1.0) {
        const double b = std::min(hi, k * kPi);
        if (b <= a) continue;
        total += gk([&](double x) { return (cosine ? std::cos(x) : std::sin(x)) * std::pow(x, -gamma); },
                    a, b);
        a = b;
    }
    return total;
}

}  // namespace

TrifleIntegrals trifle_integrals(double gamma, double a) {
    require_open_unit(gamma, "trifle_integrals");
    if (!(a > 0.0)) throw InvalidArgument("trifle_integrals: a must be positive");
    const double head = std::min(a, 1.0);
    TrifleIntegrals r{singular_piece(gamma, head, true), singular_piece(gamma, head, false)};
    if (a > 1.0) {
        r.cosine += regular_piece(gamma, 1.0, a, true);
        r.sine += regular_piece(gamma, 1.0, a, false);
    }
    return r;
}

double trifle_sine_infinity(double gamma) {
    require_open_unit(gamma, "trifle_sine_infinity");
    return std::tgamma(1.0 - gamma) * std::cos(kPi * gamma / 2.0);
}

void write_bound_csv_header(std::ostream& os) { os << "lemma,n,beta,ratio_min,ratio_max\n"; }

void write_bound_csv_row(std::ostream& os, const BoundReport& r) {
    os << r.lemma << ',' << r.n << ',' << r.beta << ',' << r.ratioMin << ',' << r.ratioMax << '\n';
}

}  // namespace opuc
