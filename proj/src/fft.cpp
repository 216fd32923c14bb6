#include "opuc/fft.hpp"

#include <fftw3.h>

#include <cstring>
#include <memory>

namespace opuc::fft {

namespace {

struct PlannerGuard {
    PlannerGuard() { fftw_make_planner_thread_safe(); }
};

void ensure_thread_safe_planner() {
    static PlannerGuard guard;
    (void)guard;
}

struct PlanDeleter {
    void operator()(fftw_plan_s* p) const { fftw_destroy_plan(p); }
};

}  // namespace

std::vector<cplx> dft(std::span<const cplx> x, Sign sign) {
    ensure_thread_safe_planner();
    const int n = static_cast<int>(x.size());
    std::vector<cplx> in(x.begin(), x.end());
    std::vector<cplx> out(x.size());
    if (x.empty()) return out;
    auto* pin = reinterpret_cast<fftw_complex*>(in.data());
    auto* pout = reinterpret_cast<fftw_complex*>(out.data());
    std::unique_ptr<fftw_plan_s, PlanDeleter> plan(
        fftw_plan_dft_1d(n, pin, pout, sign == Sign::Forward ? FFTW_FORWARD : FFTW_BACKWARD,
                         FFTW_ESTIMATE));
    fftw_execute(plan.get());
    return out;
}

std::vector<cplx> evaluate_on_circle(const ComplexPolynomial& p, std::size_t n) {
    std::vector<cplx> folded(n, cplx{});
    for (std::size_t j = 0; j <= p.degree(); ++j) folded[j % n] += p[j];
    return dft(folded, Sign::Backward);
}

std::vector<cplx> fourier_coefficients(std::span<const cplx> samples) {
    auto c = dft(samples, Sign::Forward);
    const double inv = 1.0 / static_cast<double>(samples.size());
    for (auto& v : c) v *= inv;
    return c;
}

std::vector<cplx> fourier_coefficients(std::span<const double> samples) {
    std::vector<cplx> z(samples.begin(), samples.end());
    return fourier_coefficients(std::span<const cplx>(z));
}

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

}  // namespace opuc::fft
