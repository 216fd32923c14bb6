#pragma once

// Data-parallel grid kernels. Each parallel kernel has a serial twin with
// the same contract; the serial versions are the reference the tests and
// the benchmark compare against.
//
// Reductions are split into a fixed number of chunks independent of the
// thread count, so results are bit-identical for any OMP_NUM_THREADS.

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "opuc/polynomial.hpp"

namespace opuc::kernels {

inline constexpr std::size_t kReductionChunks = 64;

/// p(e^{i theta_k}) for arbitrary angles (Horner per point).
std::vector<cplx> evaluate_at(const ComplexPolynomial& p, std::span<const double> thetas);
std::vector<cplx> evaluate_at_serial(const ComplexPolynomial& p, std::span<const double> thetas);

/// Sum of values in deterministic chunk order.
double sum(std::span<const double> values);
double sum_serial(std::span<const double> values);

/// Largest and smallest entries, and their index.
struct Extremum {
    double value;
    std::size_t index;
};
Extremum max_element(std::span<const double> values);
Extremum min_element(std::span<const double> values);

/// out[i] = f(i) for i in [0, n), in parallel.
std::vector<double> tabulate(std::size_t n, const std::function<double(std::size_t)>& f);
std::vector<double> tabulate_serial(std::size_t n, const std::function<double(std::size_t)>& f);

/// Uniform grid theta_i = 2 pi i / n.
std::vector<double> uniform_angles(std::size_t n);

/// Net change of the argument of the sampled closed curve divided by 2 pi,
/// rounded. Samples are taken in order around the circle.
long winding_number(std::span<const cplx> samples);

}  // namespace opuc::kernels
