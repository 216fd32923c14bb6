#include "opuc/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "opuc/error.hpp"
#include "opuc/fft.hpp"
#include "opuc/kernels.hpp"

namespace opuc {

namespace {

ComplexPolynomial factor_on_grid(const std::vector<double>& w, std::size_t m) {
    const std::size_t N = w.size();
    std::vector<double> u(N);
    for (std::size_t i = 0; i < N; ++i) u[i] = 0.5 * std::log(w[i]);
    const auto uk = fft::fourier_coefficients(u);

    // log Q(z) = u_0 + 2 sum_{k>=1} u_k z^k
    std::vector<cplx> logq(N, cplx{});
    logq[0] = uk[0].real();
    for (std::size_t k = 1; k < N / 2; ++k) logq[k] = 2.0 * uk[k];
    logq[N / 2] = uk[N / 2];
    auto vals = fft::dft(logq, fft::Sign::Backward);
    for (auto& v : vals) v = std::exp(v);
    const auto qk = fft::fourier_coefficients(vals);
    return ComplexPolynomial(std::vector<cplx>(qk.begin(), qk.begin() + (m + 1)));
}

}  // namespace

double factorization_residual(const ComplexPolynomial& q, const TrigPolynomial& w) {
    const std::size_t deg = std::max(q.degree(), w.degree());
    const std::size_t N = fft::next_pow2(std::max<std::size_t>(64, 16 * (deg + 1)));
    const auto qv = fft::evaluate_on_circle(q, N);
    const auto wv = w.samples(N);
    double r = 0.0;
    for (std::size_t i = 0; i < N; ++i) r = std::max(r, std::abs(std::norm(qv[i]) - wv[i]) / wv[i]);
    return r;
}

ComplexPolynomial fejer_riesz(const TrigPolynomial& w) {
    const std::size_t m = w.degree();
    const bool even = w.is_even(1e-14);
    std::size_t N = fft::next_pow2(std::max<std::size_t>(64, 16 * m));
    for (;; N *= 2) {
        const auto samples = w.samples(N);
        const double minW = *std::min_element(samples.begin(), samples.end());
        if (!(minW > 0.0))
            throw InadmissibleInput("fejer_riesz: w is not strictly positive (min " +
                                    std::to_string(minW) + ")");
        ComplexPolynomial q = factor_on_grid(samples, m);
        if (even)
            for (std::size_t j = 0; j <= m; ++j) q[j] = q[j].real();
        const double res = factorization_residual(q, w);
        if (res < 1e-11) return q;
        if (N >= kMaxFactorizationGrid) {
            if (res < kFactorizationTol) return q;
            throw VerificationFailure("fejer_riesz: residual " + std::to_string(res) +
                                      " above tolerance at grid " + std::to_string(N) +
                                      " (insufficient grid resolution)");
        }
    }
}

ComplexPolynomial fejer_riesz(std::span<const double> samples, std::size_t m) {
    const std::size_t N = samples.size();
    if (N < 2 * m + 1) throw InvalidArgument("fejer_riesz: need at least 2m + 1 samples");
    const auto c = fft::fourier_coefficients(samples);
    double scale = 0.0, excess = 0.0;
    for (std::size_t k = 0; k < N; ++k) {
        const std::size_t freq = std::min(k, N - k);
        if (freq <= m) scale = std::max(scale, std::abs(c[k]));
        else excess = std::max(excess, std::abs(c[k]));
    }
    if (excess > 1e-10 * scale)
        throw InvalidArgument("fejer_riesz: samples are not a trigonometric polynomial of degree " +
                              std::to_string(m));
    std::vector<cplx> ck(c.begin(), c.begin() + (m + 1));
    ck[0] = ck[0].real();
    return fejer_riesz(TrigPolynomial::from_complex(ck));
}

namespace {

double increment(const ComplexPolynomial& q, double a, double b, cplx qa, cplx qb, double floor,
                 int depth) {
    const double d = std::arg(qb / qa);
    if (std::abs(d) < kPi / 4) return d;
    // a jump that survives 40 bisections is a zero on the path
    if (depth > 40) throw InadmissibleInput("phase: polynomial vanishes on the circle");
    const double mid = 0.5 * (a + b);
    const cplx qm = q.on_circle(mid);
    if (!(std::abs(qm) > floor)) throw InadmissibleInput("phase: polynomial vanishes on the circle");
    return increment(q, a, mid, qa, qm, floor, depth + 1) + increment(q, mid, b, qm, qb, floor, depth + 1);
}

}  // namespace

double phase(const ComplexPolynomial& q, double theta) {
    const double floor = 1e-14 * std::max(q.max_abs_coeff(), 1e-300);
    const double h = kPi / (4.0 * (static_cast<double>(q.degree()) + 1.0));
    const int steps = std::max(1, static_cast<int>(std::ceil(std::abs(theta) / h)));
    double a = 0.0;
    cplx qa = q(1.0);
    if (!(std::abs(qa) > floor)) throw InadmissibleInput("phase: polynomial vanishes at z = 1");
    double acc = 0.0;
    for (int k = 1; k <= steps; ++k) {
        const double b = theta * k / steps;
        const cplx qb = q.on_circle(b);
        if (!(std::abs(qb) > floor)) throw InadmissibleInput("phase: polynomial vanishes on the circle");
        acc += increment(q, a, b, qa, qb, floor, 0);
        a = b;
        qa = qb;
    }
    return acc;
}

double verify_phase_bound(const ComplexPolynomial& q, int m, double upsilon) {
    if (m < 1) throw InvalidArgument("verify_phase_bound: m must be >= 1");
    const double h = 1e-3 / m;
    const auto count = static_cast<std::size_t>(std::floor(2.0 * upsilon / h));
    const auto d = kernels::tabulate(count, [&](std::size_t i) {
        const double t = -upsilon + h * (static_cast<double>(i) + 0.5);
        const cplx ratio = q.on_circle(t + h) / q.on_circle(t - h);
        return std::abs(std::arg(ratio)) / (2.0 * h);
    });
    return kernels::max_element(d).value / m;
}

}  // namespace opuc
