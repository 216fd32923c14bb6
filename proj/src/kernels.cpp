#include "opuc/kernels.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace opuc::kernels {

std::vector<cplx> evaluate_at(const ComplexPolynomial& p, std::span<const double> thetas) {
    std::vector<cplx> out(thetas.size());
    const auto n = static_cast<std::ptrdiff_t>(thetas.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = p(unit(thetas[i]));
    return out;
}

std::vector<cplx> evaluate_at_serial(const ComplexPolynomial& p, std::span<const double> thetas) {
    std::vector<cplx> out(thetas.size());
    for (std::size_t i = 0; i < thetas.size(); ++i) out[i] = p(unit(thetas[i]));
    return out;
}

double sum(std::span<const double> values) {
    std::array<double, kReductionChunks> partial{};
    const std::size_t n = values.size();
    const auto chunks = static_cast<std::ptrdiff_t>(kReductionChunks);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t c = 0; c < chunks; ++c) {
        const std::size_t lo = n * c / kReductionChunks;
        const std::size_t hi = n * (c + 1) / kReductionChunks;
        double acc = 0.0;
        for (std::size_t i = lo; i < hi; ++i) acc += values[i];
        partial[c] = acc;
    }
    double total = 0.0;
    for (double v : partial) total += v;
    return total;
}

double sum_serial(std::span<const double> values) {
    const std::size_t n = values.size();
    double total = 0.0;
    for (std::size_t c = 0; c < kReductionChunks; ++c) {
        double acc = 0.0;
        for (std::size_t i = n * c / kReductionChunks; i < n * (c + 1) / kReductionChunks; ++i) acc += values[i];
        total += acc;
    }
    return total;
}

Extremum max_element(std::span<const double> values) {
    auto it = std::max_element(values.begin(), values.end());
    return {*it, static_cast<std::size_t>(it - values.begin())};
}

Extremum min_element(std::span<const double> values) {
    auto it = std::min_element(values.begin(), values.end());
    return {*it, static_cast<std::size_t>(it - values.begin())};
}

std::vector<double> tabulate(std::size_t n, const std::function<double(std::size_t)>& f) {
    std::vector<double> out(n);
    const auto sn = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < sn; ++i) out[i] = f(static_cast<std::size_t>(i));
    return out;
}

std::vector<double> tabulate_serial(std::size_t n, const std::function<double(std::size_t)>& f) {
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
    return out;
}

std::vector<double> uniform_angles(std::size_t n) {
    std::vector<double> t(n);
    for (std::size_t i = 0; i < n; ++i) t[i] = kTwoPi * static_cast<double>(i) / static_cast<double>(n);
    return t;
}

long winding_number(std::span<const cplx> samples) {
    if (samples.empty()) return 0;
    double total = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const cplx a = samples[i];
        const cplx b = samples[(i + 1) % samples.size()];
        total += std::arg(b / a);
    }
    return std::lround(total / kTwoPi);
}

}  // namespace opuc::kernels
