#pragma once

// Polynomial entropy  int |phi_n|^2 log+ |phi_n| d mu  and its growth along
// the explicit Steklov construction.

#include <ostream>
#include <vector>

#include "opuc/construction.hpp"
#include "opuc/measure.hpp"
#include "opuc/polynomial.hpp"

namespace opuc {

/// Rejects phiN whose L2(mu) norm differs from 1 by more than 1e-6.
double polynomial_entropy(const ComplexPolynomial& phiN, const CircleMeasure& mu);

/// Same functional for the constructed sigma, integrated with the
/// spike-adapted quadrature (|phi_n| = |phi_n^*| on the circle).
double polynomial_entropy(const ConstructionOutput& out);

struct EntropyRow {
    int n = 0;
    double entropy = 0.0;
    double logN = 0.0;
    double envelope = 0.0;  ///< log max |phi_n| on the circle
    double certifiedDelta = 0.0;
};

struct EntropyScaling {
    std::vector<EntropyRow> rows;
    double slope = 0.0;  ///< least squares fit entropy ~ slope log n + intercept
    double intercept = 0.0;
    double residual = 0.0;  ///< root mean square of the fit residuals
    /// max over rows of envelope - log(n) / 2.
    double envelopeExcess = 0.0;
};

/// Builds and verifies the construction for each n (delta <= 0: certified).
EntropyScaling entropy_scaling_report(const std::vector<int>& nList, double delta,
                                      const ConstructionParams& params = {});

void write_entropy_csv(std::ostream& os, const EntropyScaling& s);

}  // namespace opuc
