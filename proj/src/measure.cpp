#include "opuc/measure.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

#include "opuc/error.hpp"
#include "opuc/fft.hpp"
#include "opuc/kernels.hpp"

namespace opuc {

double normalize_angle(double theta) {
    double t = std::remainder(theta, kTwoPi);  // [-pi, pi]
    if (t <= -kPi) t += kTwoPi;
    return t;
}

namespace {
constexpr double kAtomAngleTol = 1e-13;
}

CircleMeasure::CircleMeasure(std::vector<double> density, std::vector<Atom> atoms)
    : density_(std::move(density)) {
    if (density_.empty()) throw InvalidArgument("CircleMeasure: grid must be non-empty");
    for (double d : density_)
        if (!(d >= 0.0) || !std::isfinite(d))
            throw InvalidArgument("CircleMeasure: density must be finite and nonnegative");
    for (const auto& a : atoms) add_atom(a.theta, a.mass);
    // add_atom merges; a repeated angle in the constructor input is an error
    if (atoms_.size() != atoms.size())
        throw InvalidArgument("CircleMeasure: atoms must have distinct angles");
}

CircleMeasure CircleMeasure::flat(std::size_t gridSize, double totalMass) {
    if (gridSize == 0) throw InvalidArgument("CircleMeasure::flat: empty grid");
    return CircleMeasure(std::vector<double>(gridSize, totalMass / kTwoPi));
}

double CircleMeasure::angle(std::size_t i) const {
    return kTwoPi * static_cast<double>(i) / static_cast<double>(density_.size());
}

double CircleMeasure::ac_mass() const {
    return kernels::sum(density_) * kTwoPi / static_cast<double>(density_.size());
}

double CircleMeasure::total_mass() const {
    double m = ac_mass();
    for (const auto& a : atoms_) m += a.mass;
    return m;
}

CircleMeasure& CircleMeasure::add_atom(double theta, double mass) {
    if (!(mass >= 0.0) || !std::isfinite(mass) || !std::isfinite(theta))
        throw InvalidArgument("CircleMeasure: atom mass must be finite and nonnegative");
    const double t = normalize_angle(theta);
    for (auto& a : atoms_) {
        if (std::abs(normalize_angle(a.theta - t)) < kAtomAngleTol) {
            a.mass += mass;
            return *this;
        }
    }
    atoms_.push_back({t, mass});
    return *this;
}

CircleMeasure CircleMeasure::mix_with_atom(double theta, double t) const {
    CircleMeasure out = scaled(1.0 - t);
    out.add_atom(theta, t);
    return out;
}

CircleMeasure CircleMeasure::scaled(double factor) const {
    if (!(factor >= 0.0)) throw InvalidArgument("CircleMeasure::scaled: negative factor");
    CircleMeasure out = *this;
    for (auto& d : out.density_) d *= factor;
    for (auto& a : out.atoms_) a.mass *= factor;
    return out;
}

std::vector<cplx> moments(const CircleMeasure& mu, std::size_t n) {
    const std::size_t N = mu.grid_size();
    std::vector<cplx> d(mu.density().begin(), mu.density().end());
    const auto back = fft::dft(d, fft::Sign::Backward);
    const double w = kTwoPi / static_cast<double>(N);
    std::vector<cplx> s(n + 1);
    for (std::size_t j = 0; j <= n; ++j) s[j] = back[j % N] * w;
    for (const auto& a : mu.atoms()) {
        // e^{ij theta} by repeated multiplication drifts; use direct angles
        for (std::size_t j = 0; j <= n; ++j)
            s[j] += a.mass * unit(static_cast<double>(j) * a.theta);
    }
    s[0] = cplx{s[0].real(), 0.0};
    return s;
}

cplx inner_product(const CircleMeasure& mu, const ComplexPolynomial& p, const ComplexPolynomial& q) {
    const std::size_t N = mu.grid_size();
    const auto pv = fft::evaluate_on_circle(p, N);
    const auto qv = fft::evaluate_on_circle(q, N);
    const auto dens = mu.density();
    std::vector<double> re(N), im(N);
    for (std::size_t i = 0; i < N; ++i) {
        const cplx v = pv[i] * std::conj(qv[i]) * dens[i];
        re[i] = v.real();
        im[i] = v.imag();
    }
    const double w = kTwoPi / static_cast<double>(N);
    cplx acc{kernels::sum(re) * w, kernels::sum(im) * w};
    for (const auto& a : mu.atoms()) {
        const cplx z = unit(a.theta);
        acc += a.mass * p(z) * std::conj(q(z));
    }
    return acc;
}

SteklovParams::SteklovParams(double delta) : delta_(delta) {
    if (!(delta > 0.0 && delta <= 1.0))
        throw InvalidArgument("SteklovParams: delta must lie in (0, 1]");
}

double steklov_margin(const CircleMeasure& mu, const SteklovParams& p) {
    return kernels::min_element(mu.density()).value - p.delta() / kTwoPi;
}

bool in_steklov_class(const CircleMeasure& mu, const SteklovParams& p) {
    return steklov_margin(mu, p) >= -kSteklovSlack * p.delta() / kTwoPi;
}

namespace {

void check_weight(double t) {
    if (!(t >= 0.0 && t < 1.0)) throw InvalidArgument("mixing weight t must lie in [0, 1)");
}

double kernel_at_one(const OrthogonalSystem& sys, std::size_t n) {
    return cd_kernel(sys, n, 1.0, 1.0).real();
}

}  // namespace

ComplexPolynomial geronimus_insert(const ComplexPolynomial& monicN, const OrthogonalSystem& system,
                                   double t) {
    check_weight(t);
    const std::size_t n = monicN.degree();
    if (n == 0) return monicN;
    if (n - 1 >= system.size()) throw InvalidArgument("geronimus_insert: system too short");
    const ComplexPolynomial k = cd_kernel_polynomial(system, n - 1, 1.0);
    const double k11 = k(1.0).real();
    const cplx scale = t * monicN(1.0) / (1.0 - t + t * k11);
    return monicN - k * scale;
}

double inserted_norm(double normSq, const OrthogonalSystem& system, std::size_t n, double t) {
    check_weight(t);
    if (n >= system.size()) throw InvalidArgument("inserted_norm: system too short");
    const double kn = kernel_at_one(system, n);
    const double km = n == 0 ? 0.0 : kernel_at_one(system, n - 1);
    return normSq * (1.0 - t) * (1.0 - t + t * kn) / (1.0 - t + t * km);
}

InsertionDerivatives insertion_derivatives(const OrthogonalSystem& system, std::size_t n) {
    if (n >= system.size()) throw InvalidArgument("insertion_derivatives: system too short");
    const double kn = kernel_at_one(system, n);
    const double km = n == 0 ? 0.0 : kernel_at_one(system, n - 1);
    const double phi1 = std::norm(system.phi[n](1.0));
    const double prod = monic_norm(system.source, n);
    const double monic1 = phi1 * prod * prod;
    return {-2.0 * km * monic1, phi1 * (1.0 - kn - km)};
}

ComplexPolynomial rakhmanov_multi_insert(const ComplexPolynomial& monicN,
                                         const OrthogonalSystem& system,
                                         std::span<const double> thetas,
                                         std::span<const double> masses) {
    if (thetas.size() != masses.size())
        throw InvalidArgument("rakhmanov_multi_insert: points and masses differ in length");
    const std::size_t n = monicN.degree();
    if (n == 0 || thetas.empty()) return monicN;
    if (thetas.size() > n) throw InvalidArgument("rakhmanov_multi_insert: more points than n");
    if (n - 1 >= system.size()) throw InvalidArgument("rakhmanov_multi_insert: system too short");
    for (double m : masses)
        if (!(m >= 0.0)) throw InvalidArgument("rakhmanov_multi_insert: negative mass");

    std::vector<ComplexPolynomial> kpolys;
    std::vector<double> diag;
    for (double th : thetas) {
        kpolys.push_back(cd_kernel_polynomial(system, n - 1, unit(th)));
        diag.push_back(kpolys.back()(unit(th)).real());
    }
    for (std::size_t j = 0; j < thetas.size(); ++j)
        for (std::size_t l = j + 1; l < thetas.size(); ++l) {
            const double off = std::abs(kpolys[j](unit(thetas[l])));
            if (off > kKernelZeroTol * std::sqrt(diag[j] * diag[l]))
                throw InadmissibleInput("rakhmanov_multi_insert: K_{n-1}(xi_" + std::to_string(j) +
                                        ", xi_" + std::to_string(l) + ") does not vanish");
        }

    ComplexPolynomial out = monicN;
    for (std::size_t k = 0; k < thetas.size(); ++k) {
        const cplx c = masses[k] * monicN(unit(thetas[k])) / (1.0 + masses[k] * diag[k]);
        out -= kpolys[k] * c;
    }
    return out;
}

nlohmann::json to_json(const CircleMeasure& mu) {
    nlohmann::json atoms = nlohmann::json::array();
    for (const auto& a : mu.atoms()) atoms.push_back({a.theta, a.mass});
    return {{"delta_grid", std::vector<double>(mu.density().begin(), mu.density().end())},
            {"atoms", atoms}};
}

CircleMeasure measure_from_json(const nlohmann::json& j) {
    std::vector<double> density = j.at("delta_grid").get<std::vector<double>>();
    std::vector<Atom> atoms;
    for (const auto& a : j.at("atoms")) atoms.push_back({a.at(0).get<double>(), a.at(1).get<double>()});
    return CircleMeasure(std::move(density), std::move(atoms));
}

void write_density_csv(std::ostream& os, const CircleMeasure& mu) {
    os << "theta,density\n";
    os.precision(17);
    for (std::size_t i = 0; i < mu.grid_size(); ++i) os << mu.angle(i) << ',' << mu.density()[i] << '\n';
}

}  // namespace opuc
