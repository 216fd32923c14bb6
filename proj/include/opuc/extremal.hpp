#pragma once

// Extremal problem sup |phi_n(1, mu)| over the Steklov class: the trivial
// upper bound, the equidistant-atom family that attains it as delta -> 0,
// and a local search over measures of the form
//   c / (2 pi) d theta + sum_j m_j delta(theta - theta_j).

#include <cstdint>
#include <ostream>
#include <vector>

#include <json.hpp>

#include "opuc/measure.hpp"
#include "opuc/polynomial.hpp"
#include "opuc/trig.hpp"

namespace opuc {

/// sqrt((n + 1) / delta).
double upper_bound(int n, double delta);

struct SmallDeltaMeasure {
    /// delta / (2 pi) d theta + sum_{k=1}^n mass delta(theta - 2 pi k / (n + 1)).
    CircleMeasure measure;
    /// (mass / (delta + mass)) (1 + z + ... + z^n) + (delta / (delta + mass)) z^n.
    ComplexPolynomial monic;
    double monicAtOne = 0.0;   ///< 1 + mass n / (delta + mass)
    double monicNormSq = 0.0;  ///< delta (1 + mass n / (delta + mass))
    double value = 0.0;        ///< phi_n(1) = monicAtOne / sqrt(monicNormSq)
};

SmallDeltaMeasure small_delta_measure(int n, double delta, double mass);

/// T_n with d|phi_n(1)|^2 = int T_n d(delta mu) to first order, from central
/// differences (step 1e-6, reduced on loss of positive definiteness) of
/// |phi_n(1)|^2 in s_0, Re s_j, Im s_j.
TrigPolynomial variational_gradient(const CircleMeasure& mu, int n);

struct SearchOptions {
    int restarts = 8;
    std::uint64_t seed = 1;
};

struct SearchResult {
    CircleMeasure measure;
    double value = 0.0;
    int bestRestart = 0;
    /// Objective after every accepted move of the winning restart.
    std::vector<double> history;
};

/// Coordinate ascent on atom positions and masses with the probability
/// constraint and density (1 - sum m_j) / (2 pi) >= delta / (2 pi).
/// Restart 0 starts from equidistant atoms; the others from seeded random
/// configurations. Restarts run in parallel.
SearchResult search_extremal(int n, double delta, int atomBudget, int iters,
                             const SearchOptions& options = {});

nlohmann::json to_json(const SearchResult& r, int n, double delta);
void write_search_csv_header(std::ostream& os);
void write_search_csv_row(std::ostream& os, int n, double delta, const SearchResult& r);

}  // namespace opuc
