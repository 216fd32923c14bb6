#pragma once

// Explicit orthonormal polynomial of size ~ sqrt(n) whose orthogonality
// measure satisfies a Steklov lower bound.
//
// phi_n^* = C_n f_n with f_n = P_m + Q_m + Q_m^* (star of order n), where
//   |Q_m|^2 = G_m + |B_{m, alpha/2}|^2      (Fejer-Riesz, Q_m(0) > 0)
//   P_m     = Q_m (1 - z)(1 - 0.1 A_{m, 1 - alpha})
// and the Caratheodory function
//   F(z) = C (rho (1 + eps - z)^{-1} + (1 + eps - z)^{-alpha}),  eps = 1/n.
// The measure is recovered on the circle as
//   sigma' = 2 Re F / (pi |phi_n + phi_n^* + F (phi_n^* - phi_n)|^2).

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "opuc/approximants.hpp"
#include "opuc/error.hpp"
#include "opuc/measure.hpp"
#include "opuc/opuc.hpp"
#include "opuc/polynomial.hpp"

namespace opuc {

struct ConstructionParams {
    int n = 128;
    double alpha = 0.75;
    double rho = 0.01;
    double delta1 = 1.0 / 64.0;
    double M = 1.0;
    /// Target Steklov constant; <= 0 means "use the certified value".
    double delta = 0.0;
    double upsilon = kUpsilon;
    /// 0 means max(8192, 64 n).
    std::size_t gridSize = 0;

    int m() const { return static_cast<int>(delta1 * n); }
    double epsilon() const { return 1.0 / n; }
    std::size_t grid() const;
    /// Throws InvalidArgument naming the offending field.
    void validate() const;
};

nlohmann::json to_json(const ConstructionParams& p);
ConstructionParams params_from_json(const nlohmann::json& j, ConstructionParams base = {});

/// Caratheodory function F with its normalization and boundary samples.
class HerglotzField {
  public:
    HerglotzField() = default;
    HerglotzField(double alpha, double rho, double epsilon, std::size_t gridSize);

    cplx operator()(cplx z) const;
    cplx unnormalized(cplx z) const;

    double normalization() const { return normalization_; }
    /// (rho / (1 + eps) + (1 + eps)^{-alpha})^{-1}, i.e. 1 / Re F_unnormalized(0).
    double closed_form_normalization() const;
    double alpha() const { return alpha_; }
    double rho() const { return rho_; }
    double epsilon() const { return epsilon_; }
    const std::vector<cplx>& samples() const { return samples_; }
    const std::vector<double>& real_part() const { return realPart_; }
    /// (1 / 2 pi) int Re F d theta on the grid.
    double mean_real_part() const;

  private:
    double alpha_ = 0.75, rho_ = 0.01, epsilon_ = 0.0, normalization_ = 1.0;
    std::vector<cplx> samples_;
    std::vector<double> realPart_;
};

HerglotzField build_F_tilde(const ConstructionParams& p);

/// Q_m with |Q_m|^2 = G_m + |B_{m, alpha/2}|^2 and Q_m(0) > 0.
ComplexPolynomial spectral_factor_Q(int m, double alpha);

/// Nodes and weights for integrals over [0, 2 pi).
struct CircleQuadrature {
    std::vector<double> nodes;
    std::vector<double> weights;
    std::size_t size() const { return nodes.size(); }
};

struct ConstructionOutput {
    ConstructionParams params;  ///< effective parameters (delta1 may have been halved)
    int m = 0;
    FractionalPowerTaylor A;  ///< A_{m, 1 - alpha}
    FractionalPowerTaylor B;  ///< B_{m, alpha / 2}
    ComplexPolynomial Q, P, f;
    ComplexPolynomial H;  ///< (1 - z)(1 - 0.1 A), so f = Q (H + 1) + Q^*
    double Cn = 0.0;
    ComplexPolynomial phiStar, phi;
    HerglotzField F;
    /// sigma' sampled on the construction grid. Near z = 1 the density has
    /// spikes of width O(n^{-2}) that the grid does not resolve; integrate
    /// spiky functionals with `quadrature` instead of grid sums.
    CircleMeasure sigma;
    /// Gauss-Kronrod nodes on every grid cell, bisected around the spikes.
    CircleQuadrature quadrature;
    std::vector<std::string> warnings;
};

/// phi_n^*(e^{i theta}) in O(m) operations through Q and H.
cplx phi_star_at(const ConstructionOutput& out, double theta);
/// 2 Re F / (pi |phi_n + phi_n^* + F (phi_n^* - phi_n)|^2).
double sigma_prime_at(const ConstructionOutput& out, double theta);
/// int sigma' d theta with the spike-adapted quadrature.
double sigma_mass(const ConstructionOutput& out);

/// Throws VerificationFailure naming the failing sub-invariant.
ConstructionOutput build_construction(ConstructionParams p);

/// Regression-locked constants measured over n in {128, ..., 2048} with the
/// default parameters.
struct RegressionBands {
    static constexpr double growthMin = 0.60;
    static constexpr double growthMax = 0.80;
};

inline constexpr double kCertifiedDeltaFloor = 1e-4;

struct ConditionReport {
    // 1. zero-free
    double minReBracket = 0.0;     ///< min Re[(1-z)(1-0.1A) + 1 + Q^*/Q]
    double minKeyTerm = 0.0;       ///< min of -0.1 Y sin(theta)
    double maxAbsA = 0.0;
    double minAbsPhiStar = 0.0;  ///< over the quadrature nodes
    long winding = -1;           ///< winding(Q) + winding(bracket)
    bool zeroFree = false;
    // 2. normalization
    double normalizationResidual = 0.0;  ///< |(1/2 pi) int |phi_n^*|^{-2} - 1| by quadrature
    bool normalized = false;
    // 3. growth at z = 1
    double growthRatio = 0.0;  ///< |phi_n^*(1)| / sqrt(n)
    bool growthInBand = false;
    // 4. Steklov inequality
    double C1 = 0.0;
    double certifiedDelta = 0.0;
    double targetDelta = 0.0;
    bool steklov = false;
    // diagnostics
    double maxFOverQ = 0.0;          ///< max |f_n| / |Q_m|
    double minAbsFAway = 0.0;        ///< min |f_n| on upsilon <= |theta| <= pi
    double minPhaseSlope = 0.0;      ///< min (n theta - 2 phi)' on |theta| < upsilon, over n
    double maxPhaseSlope = 0.0;
    double reFMean = 0.0;
    double sigmaMass = 0.0;

    bool all_pass() const { return zeroFree && normalized && growthInBand && steklov; }
    /// Name of the first failing condition, empty when all pass.
    std::string first_failure() const;
};

/// delta <= 0 certifies the largest admissible delta = C1^{-2} and requires
/// it to exceed kCertifiedDeltaFloor.
ConditionReport verify_lemma_conditions(const ConstructionOutput& out, double delta = 0.0);
nlohmann::json to_json(const ConditionReport& r);

/// Thrown by reconstruct_sigma; carries the worst grid point.
class SteklovViolation : public VerificationFailure {
  public:
    SteklovViolation(double theta, double value, double delta);
    double theta;
    double value;  ///< 2 pi sigma'(theta)
    double delta;
};

/// The reconstructed a.c. measure; checks 2 pi sigma' >= delta (1 - 1e-6)
/// on the grid. delta <= 0 uses the certified constant.
CircleMeasure reconstruct_sigma(const ConstructionOutput& out, double delta = 0.0);

/// Bernstein-Szego density at level head + tail of the concatenated
/// parameter sequence, on a grid of the given size.
std::vector<double> concatenated_density(const VerblunskySequence& head,
                                         const VerblunskySequence& tail, std::size_t gridSize);

/// Maximum relative deviation between the concatenated-parameter density
/// (head from phi_n, tail of the given length from Re F d theta / 2 pi) and
/// the reconstructed sigma'. tailLength must be >= n.
double concatenated_measure_check(const ConstructionOutput& out, std::size_t tailLength);

struct LowerBoundWitness {
    CircleMeasure sigma;
    double value = 0.0;  ///< |phi_n(1, sigma)|
    double delta = 0.0;
    ConditionReport report;
};

/// Throws VerificationFailure if any condition fails at delta.
LowerBoundWitness lower_bound_witness(int n, double delta, ConstructionParams p = {});

nlohmann::json to_json(const ConstructionOutput& out, const ConditionReport& report,
                       bool includeDensity = true);

}  // namespace opuc
