#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "opuc/opuc.hpp"
#include "opuc/polynomial.hpp"

namespace opuc {

struct Atom {
    double theta;  ///< radians, normalized to (-pi, pi]
    double mass;
};

/// Finite positive measure on the unit circle: an absolutely continuous part
/// sampled on the uniform grid theta_i = 2 pi i / N (density in mass per
/// radian) plus exact point masses.
class CircleMeasure {
  public:
    CircleMeasure() = default;
    /// Throws InvalidArgument on negative density/mass or repeated atom angles.
    CircleMeasure(std::vector<double> density, std::vector<Atom> atoms = {});

    /// c / (2 pi) d theta on an N-point grid.
    static CircleMeasure flat(std::size_t gridSize, double totalMass = 1.0);

    std::size_t grid_size() const { return density_.size(); }
    double angle(std::size_t i) const;
    std::span<const double> density() const { return density_; }
    std::span<const Atom> atoms() const { return atoms_; }

    double ac_mass() const;
    double total_mass() const;

    /// Adds a point mass; merges with an existing atom at the same angle.
    CircleMeasure& add_atom(double theta, double mass);
    /// (1 - t) mu + t delta(theta).
    CircleMeasure mix_with_atom(double theta, double t) const;
    CircleMeasure scaled(double factor) const;

  private:
    std::vector<double> density_;
    std::vector<Atom> atoms_;
};

double normalize_angle(double theta);

/// s_j = int e^{ij theta} d mu for j = 0..n. The a.c. part uses the
/// trapezoidal rule on the grid (exact for trigonometric polynomials of
/// degree < N), atoms are summed exactly.
std::vector<cplx> moments(const CircleMeasure& mu, std::size_t n);

/// <p, q>_mu.
cplx inner_product(const CircleMeasure& mu, const ComplexPolynomial& p, const ComplexPolynomial& q);

/// Steklov parameter delta in (0, 1].
class SteklovParams {
  public:
    explicit SteklovParams(double delta);
    double delta() const { return delta_; }

  private:
    double delta_;
};

/// Relative slack used when asserting membership in S_delta on a grid.
inline constexpr double kSteklovSlack = 1e-6;

/// min over the grid of density - delta / (2 pi). Atoms never lower it.
double steklov_margin(const CircleMeasure& mu, const SteklovParams& p);
bool in_steklov_class(const CircleMeasure& mu, const SteklovParams& p);

/// Monic Phi_n of (1 - t) mu + t delta(0), from the monic Phi_n of mu and
/// the orthonormal system of mu (needs indices up to n - 1).
ComplexPolynomial geronimus_insert(const ComplexPolynomial& monicN, const OrthogonalSystem& system,
                                   double t);

/// ||Phi_n||^2 under (1 - t) mu + t delta(0), given ||Phi_n||^2_mu.
/// n = system.top(); the system must reach index n.
double inserted_norm(double normSq, const OrthogonalSystem& system, std::size_t n, double t);

/// Derivatives at t = 0 of |Phi_n(1, mu(t))|^2 and |phi_n(1, mu(t))|^2.
struct InsertionDerivatives {
    double monic;
    double orthonormal;
};
InsertionDerivatives insertion_derivatives(const OrthogonalSystem& system, std::size_t n);

/// Monic Phi_n of mu + sum m_k delta(theta_k) when the insertion points are
/// mutual zeros of K_{n-1}. The single-point case with m = t / (1 - t)
/// coincides with geronimus_insert. Throws InadmissibleInput when
/// |K_{n-1}(xi_j, xi_l)| exceeds kKernelZeroTol * sqrt(K(xi_j,xi_j) K(xi_l,xi_l)).
inline constexpr double kKernelZeroTol = 1e-8;
ComplexPolynomial rakhmanov_multi_insert(const ComplexPolynomial& monicN,
                                         const OrthogonalSystem& system,
                                         std::span<const double> thetas,
                                         std::span<const double> masses);

// Serialization: {"delta_grid": [...], "atoms": [[theta, mass], ...]}.
nlohmann::json to_json(const CircleMeasure& mu);
CircleMeasure measure_from_json(const nlohmann::json& j);
/// CSV with header "theta,density".
void write_density_csv(std::ostream& os, const CircleMeasure& mu);

}  // namespace opuc
