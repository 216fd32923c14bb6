#include "opuc/construction.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>
#include <string>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "opuc/error.hpp"
#include "opuc/fft.hpp"
#include "opuc/kernels.hpp"
#include "opuc/spectral.hpp"
#include "opuc/trig.hpp"

namespace opuc {

std::size_t ConstructionParams::grid() const {
    if (gridSize != 0) return gridSize;
    return std::max<std::size_t>(8192, 64 * static_cast<std::size_t>(std::max(n, 0)));
}

void ConstructionParams::validate() const {
    auto fail = [](const std::string& what) { throw InvalidArgument("construction: " + what); };
    if (n < 4) fail("n must be >= 4");
    if (!(alpha > 0.0 && alpha < 1.0)) fail("alpha must lie in (0, 1)");
    if (!(rho > 0.0) || !std::isfinite(rho)) fail("rho must be positive");
    if (!(delta1 > 0.0 && delta1 < 0.5)) fail("delta1 must lie in (0, 1/2)");
    if (!(M > 0.0) || !std::isfinite(M)) fail("M must be positive");
    if (!(upsilon > 0.0 && upsilon < kPi)) fail("upsilon must lie in (0, pi)");
    if (!(delta <= 1.0) || std::isnan(delta)) fail("delta must be <= 1");
    if (grid() < 4 * static_cast<std::size_t>(n) + 4) fail("grid must hold at least 4(n + 1) points");
    if (m() < 1) fail("m = floor(delta1 n) must be >= 1");
    if (2 * m() + 1 >= n) fail("need 2m + 1 < n");
}

nlohmann::json to_json(const ConstructionParams& p) {
    return {{"n", p.n},         {"alpha", p.alpha},     {"rho", p.rho},
            {"delta1", p.delta1}, {"M", p.M},             {"delta", p.delta},
            {"upsilon", p.upsilon}, {"grid", p.grid()}};
}

ConstructionParams params_from_json(const nlohmann::json& j, ConstructionParams base) {
    if (j.contains("n")) base.n = j.at("n").get<int>();
    if (j.contains("alpha")) base.alpha = j.at("alpha").get<double>();
    if (j.contains("rho")) base.rho = j.at("rho").get<double>();
    if (j.contains("delta1")) base.delta1 = j.at("delta1").get<double>();
    if (j.contains("M")) base.M = j.at("M").get<double>();
    if (j.contains("delta") && j.at("delta").is_number()) base.delta = j.at("delta").get<double>();
    if (j.contains("upsilon")) base.upsilon = j.at("upsilon").get<double>();
    if (j.contains("grid")) base.gridSize = j.at("grid").get<std::size_t>();
    return base;
}

// ---------------------------------------------------------------------------

HerglotzField::HerglotzField(double alpha, double rho, double epsilon, std::size_t gridSize)
    : alpha_(alpha), rho_(rho), epsilon_(epsilon) {
    if (!(alpha > 0.0 && alpha < 1.0) || !(rho > 0.0) || !(epsilon > 0.0) || gridSize < 8)
        throw InvalidArgument("HerglotzField: need alpha in (0,1), rho > 0, eps > 0");
    samples_.resize(gridSize);
    for (std::size_t i = 0; i < gridSize; ++i)
        samples_[i] = unnormalized(unit(kTwoPi * static_cast<double>(i) / gridSize));
    std::vector<double> re(gridSize);
    for (std::size_t i = 0; i < gridSize; ++i) re[i] = samples_[i].real();
    normalization_ = static_cast<double>(gridSize) / kernels::sum(re);
    realPart_.resize(gridSize);
    for (std::size_t i = 0; i < gridSize; ++i) {
        samples_[i] *= normalization_;
        realPart_[i] = samples_[i].real();
    }
}

cplx HerglotzField::unnormalized(cplx z) const {
    const cplx w = 1.0 + epsilon_ - z;
    return rho_ / w + std::pow(w, -alpha_);
}

cplx HerglotzField::operator()(cplx z) const { return normalization_ * unnormalized(z); }

double HerglotzField::closed_form_normalization() const {
    return 1.0 / (rho_ / (1.0 + epsilon_) + std::pow(1.0 + epsilon_, -alpha_));
}

double HerglotzField::mean_real_part() const {
    return kernels::sum(realPart_) / static_cast<double>(realPart_.size());
}

HerglotzField build_F_tilde(const ConstructionParams& p) {
    return HerglotzField(p.alpha, p.rho, p.epsilon(), p.grid());
}

// ---------------------------------------------------------------------------

namespace {

struct PhaseSlope {
    double min, max;
};

// (n - 2 phi') / n on |theta| < upsilon, phi' = Re(z Q'(z) / Q(z)).
PhaseSlope phase_slope(const ComplexPolynomial& q, int n, double upsilon, std::size_t N) {
    const auto qv = fft::evaluate_on_circle(q, N);
    ComplexPolynomial zdq = q.derivative() * ComplexPolynomial::monomial(1);
    const auto dv = fft::evaluate_on_circle(zdq, N);
    PhaseSlope s{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
    for (std::size_t i = 0; i < N; ++i) {
        const double t = kTwoPi * static_cast<double>(i) / N;
        if (std::min(t, kTwoPi - t) >= upsilon) continue;
        const double dphi = (dv[i] / qv[i]).real();
        const double v = (n - 2.0 * dphi) / n;
        s.min = std::min(s.min, v);
        s.max = std::max(s.max, v);
    }
    return s;
}

double max_abs(const std::vector<cplx>& v) {
    double r = 0.0;
    for (auto z : v) r = std::max(r, std::abs(z));
    return r;
}

std::vector<double> sigma_density(const ConstructionOutput& out) {
    const std::size_t N = out.params.grid();
    const auto pv = fft::evaluate_on_circle(out.phi, N);
    const auto sv = fft::evaluate_on_circle(out.phiStar, N);
    const auto& F = out.F.samples();
    return kernels::tabulate(N, [&](std::size_t i) {
        const cplx denom = pv[i] + sv[i] + F[i] * (sv[i] - pv[i]);
        return 2.0 * F[i].real() / (kPi * std::norm(denom));
    });
}

constexpr int kMaxBisection = 24;
constexpr double kQuadratureTol = 1e-10;

using Pair = std::array<double, 2>;

// Adaptive Gauss-Kronrod (7, 15) on [a, b] for two integrands at once;
// appends the accepted Kronrod nodes.
template <class Eval>
void refine(const Eval& eval, double a, double b, int depth, std::vector<double>& nodes,
            std::vector<double>& weights) {
    using boost::math::quadrature::gauss;
    using boost::math::quadrature::gauss_kronrod;
    const auto& x = gauss_kronrod<double, 15>::abscissa();
    const auto& wk = gauss_kronrod<double, 15>::weights();
    const auto& wg = gauss<double, 7>::weights();
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);

    std::array<Pair, 15> v;
    v[0] = eval(c);
    for (std::size_t k = 1; k < 8; ++k) {
        v[2 * k - 1] = eval(c - h * x[k]);
        v[2 * k] = eval(c + h * x[k]);
    }
    bool accept = depth >= kMaxBisection;
    if (!accept) {
        accept = true;
        for (std::size_t q = 0; q < 2; ++q) {
            double K = wk[0] * v[0][q], G = wg[0] * v[0][q];
            for (std::size_t k = 1; k < 8; ++k) {
                const double s2 = v[2 * k - 1][q] + v[2 * k][q];
                K += wk[k] * s2;
                if (k % 2 == 0) G += wg[k / 2] * s2;
            }
            if (!(std::abs(K - G) * h <= kQuadratureTol * std::abs(K) * h + 1e-300)) accept = false;
        }
    }
    if (!accept) {
        refine(eval, a, c, depth + 1, nodes, weights);
        refine(eval, c, b, depth + 1, nodes, weights);
        return;
    }
    nodes.push_back(c);
    weights.push_back(h * wk[0]);
    for (std::size_t k = 1; k < 8; ++k) {
        nodes.push_back(c - h * x[k]);
        weights.push_back(h * wk[k]);
        nodes.push_back(c + h * x[k]);
        weights.push_back(h * wk[k]);
    }
}

CircleQuadrature build_quadrature(const ConstructionOutput& out) {
    const std::size_t N = out.params.grid();
    const double h = kTwoPi / static_cast<double>(N);
    std::vector<std::vector<double>> cellNodes(N), cellWeights(N);
    auto eval = [&](double t) -> Pair {
        const cplx s = phi_star_at(out, t);
        return {1.0 / std::norm(s), sigma_prime_at(out, t)};
    };
    // Where Q + Q^* nearly cancels, bracket = H + 1 + z^n conj(Q) / Q passes
    // within Re H of zero over an angle of about Re H / n, and it moves by
    // about n h across a cell. Cells that may hold such a spike are pre-split
    // so that the initial nodes see it.
    const double n = out.params.n;
    auto spike_pieces = [&](double t) {
        const cplx z = unit(t), q = out.Q(z), hz = out.H(z);
        const cplx b = hz + 1.0 + unit(n * t) * std::conj(q) / q;
        if (std::abs(b) >= 2.0 * n * h) return 1.0;
        const double width = std::max(hz.real(), 1e-12) / n;
        return std::min(std::ceil(2.0 * h / width), 4096.0);
    };
#pragma omp parallel for schedule(dynamic, 64)
    for (std::size_t i = 0; i < N; ++i) {
        const double a = h * static_cast<double>(i);
        const auto pieces = static_cast<std::size_t>(std::max(spike_pieces(a), spike_pieces(a + h)));
        const double step = h / static_cast<double>(pieces);
        for (std::size_t k = 0; k < pieces; ++k)
            refine(eval, a + step * static_cast<double>(k), a + step * static_cast<double>(k + 1), 0,
                   cellNodes[i], cellWeights[i]);
    }
    CircleQuadrature q;
    for (std::size_t i = 0; i < N; ++i) {
        q.nodes.insert(q.nodes.end(), cellNodes[i].begin(), cellNodes[i].end());
        q.weights.insert(q.weights.end(), cellWeights[i].begin(), cellWeights[i].end());
    }
    return q;
}

double integrate(const CircleQuadrature& q, const std::function<double(double)>& g) {
    const auto v = kernels::tabulate(q.size(), [&](std::size_t i) { return q.weights[i] * g(q.nodes[i]); });
    return kernels::sum(v);
}

}  // namespace

ComplexPolynomial spectral_factor_Q(int m, double alpha) {
    if (m < 1) throw InvalidArgument("spectral_factor_Q: m must be >= 1");
    TrigPolynomial w = shifted_fejer_trig(m);
    w += modulus_squared(build_B(m, alpha / 2.0).polynomial());
    return fejer_riesz(w);
}

ConstructionOutput build_construction(ConstructionParams p) {
    p.validate();
    const std::size_t N = p.grid();
    ConstructionOutput out;
    for (;;) {
        const int m = p.m();
        if (m < 1)
            throw VerificationFailure(
                "construction: phase monotonicity fails for every admissible delta1");
        out.m = m;
        out.A = build_A(m, 1.0 - p.alpha, p.M);
        out.B = build_B(m, p.alpha / 2.0);
        const ComplexPolynomial Apoly = out.A.polynomial();
        const double maxA = max_abs(fft::evaluate_on_circle(Apoly, N));
        if (!(maxA < 3.0))
            throw VerificationFailure("construction: |A_m| reaches " + std::to_string(maxA) +
                                      " >= 3 on the circle");

        out.Q = spectral_factor_Q(m, p.alpha);

        const ComplexPolynomial oneMinusZ(std::vector<cplx>{1.0, -1.0});
        out.P = out.Q * oneMinusZ * (ComplexPolynomial::constant(1.0) - Apoly * 0.1);
        out.f = out.P + out.Q + star(out.Q, static_cast<std::size_t>(p.n));
        if (!(scan_circle(out.f, N).minAbs > 0.0))
            throw VerificationFailure("construction: f_n vanishes on the circle");

        out.H = oneMinusZ * (ComplexPolynomial::constant(1.0) - Apoly * 0.1);
        out.Cn = std::sqrt(bernstein_szego_mass(out.f, static_cast<std::size_t>(p.n)));
        out.phiStar = out.f * out.Cn;
        out.phi = star(out.phiStar, static_cast<std::size_t>(p.n));

        const auto slope = phase_slope(out.Q, p.n, p.upsilon, N);
        if (slope.min > 0.5 && slope.max < 2.0) break;
        std::ostringstream msg;
        msg << "phase monotonicity failed at delta1 = " << p.delta1 << " (slope range ["
            << slope.min << ", " << slope.max << "]); halving delta1";
        out.warnings.push_back(msg.str());
        p.delta1 /= 2.0;
    }
    out.params = p;
    out.F = build_F_tilde(p);
    out.sigma = CircleMeasure(sigma_density(out));
    out.quadrature = build_quadrature(out);
    return out;
}

cplx phi_star_at(const ConstructionOutput& out, double theta) {
    const cplx z = unit(theta);
    const cplx q = out.Q(z);
    return out.Cn * (q * (out.H(z) + 1.0) + unit(out.params.n * theta) * std::conj(q));
}

double sigma_prime_at(const ConstructionOutput& out, double theta) {
    const cplx s = phi_star_at(out, theta);
    const cplx ph = unit(out.params.n * theta) * std::conj(s);
    const cplx F = out.F(unit(theta));
    return 2.0 * F.real() / (kPi * std::norm(ph + s + F * (s - ph)));
}

double sigma_mass(const ConstructionOutput& out) {
    return integrate(out.quadrature, [&](double t) { return sigma_prime_at(out, t); });
}

// ---------------------------------------------------------------------------

std::string ConditionReport::first_failure() const {
    if (!zeroFree) return "zero-free";
    if (!normalized) return "normalization";
    if (!growthInBand) return "growth";
    if (!steklov) return "steklov";
    return {};
}

ConditionReport verify_lemma_conditions(const ConstructionOutput& out, double delta) {
    const auto& p = out.params;
    const std::size_t N = p.grid();
    const int n = p.n;
    ConditionReport r;

    const auto qv = fft::evaluate_on_circle(out.Q, N);
    const auto hv = fft::evaluate_on_circle(out.H, N);
    const auto av = fft::evaluate_on_circle(out.A.polynomial(), N);
    const auto sv = fft::evaluate_on_circle(out.phiStar, N);
    const auto pv = fft::evaluate_on_circle(out.phi, N);
    const auto fv = fft::evaluate_on_circle(out.f, N);
    const auto& F = out.F.samples();

    r.minReBracket = std::numeric_limits<double>::infinity();
    r.minKeyTerm = std::numeric_limits<double>::infinity();
    r.minAbsFAway = std::numeric_limits<double>::infinity();
    double minAbsQ = std::numeric_limits<double>::infinity();
    std::vector<cplx> bracket(N);
    std::vector<double> c1(N);
    for (std::size_t i = 0; i < N; ++i) {
        const double t = kTwoPi * static_cast<double>(i) / N;
        bracket[i] = hv[i] + 1.0 + unit(n * t) * std::conj(qv[i]) / qv[i];
        r.minReBracket = std::min(r.minReBracket, bracket[i].real());
        r.minKeyTerm = std::min(r.minKeyTerm, -0.1 * av[i].imag() * std::sin(t));
        r.maxAbsA = std::max(r.maxAbsA, std::abs(av[i]));
        minAbsQ = std::min(minAbsQ, std::abs(qv[i]));
        r.maxFOverQ = std::max(r.maxFOverQ, std::abs(fv[i]) / std::abs(qv[i]));
        if (std::min(t, kTwoPi - t) >= p.upsilon)
            r.minAbsFAway = std::min(r.minAbsFAway, std::abs(fv[i]));
        c1[i] = (std::abs(sv[i]) + std::abs(F[i] * (pv[i] - sv[i]))) / std::sqrt(F[i].real());
    }
    // f = Q * bracket with both factors slowly varying on the grid, while f
    // itself has near-zeros of width O(n^{-2}) between grid points.
    r.winding = kernels::winding_number(qv) + kernels::winding_number(bracket);
    const auto absPhi = kernels::tabulate(out.quadrature.size(), [&](std::size_t i) {
        return std::abs(phi_star_at(out, out.quadrature.nodes[i]));
    });
    r.minAbsPhiStar = kernels::min_element(absPhi).value;
    r.zeroFree = r.minReBracket >= -1e-12 && minAbsQ > 0.0 && r.minAbsPhiStar > 0.0 &&
                 r.winding == 0 && r.maxAbsA < 3.0;

    const double inv = integrate(out.quadrature, [&](double t) {
        return 1.0 / std::norm(phi_star_at(out, t));
    });
    r.normalizationResidual = std::abs(inv / kTwoPi - 1.0);
    r.normalized = r.normalizationResidual < 1e-8;

    r.growthRatio = std::abs(out.phiStar(1.0)) / std::sqrt(static_cast<double>(n));
    r.growthInBand =
        r.growthRatio >= RegressionBands::growthMin && r.growthRatio <= RegressionBands::growthMax;

    r.C1 = kernels::max_element(c1).value;
    r.certifiedDelta = 1.0 / (r.C1 * r.C1);
    if (delta > 0.0) {
        r.targetDelta = delta;
        r.steklov = std::isfinite(r.C1) && delta <= r.certifiedDelta * (1.0 + 1e-12);
    } else {
        r.targetDelta = r.certifiedDelta;
        r.steklov = std::isfinite(r.C1) && r.certifiedDelta >= kCertifiedDeltaFloor;
    }

    const auto slope = phase_slope(out.Q, n, p.upsilon, N);
    r.minPhaseSlope = slope.min;
    r.maxPhaseSlope = slope.max;
    r.reFMean = out.F.mean_real_part();
    r.sigmaMass = sigma_mass(out);
    return r;
}

nlohmann::json to_json(const ConditionReport& r) {
    return {{"zero_free",
             {{"pass", r.zeroFree},
              {"min_re_bracket", r.minReBracket},
              {"min_key_term", r.minKeyTerm},
              {"max_abs_A", r.maxAbsA},
              {"min_abs_phi_star", r.minAbsPhiStar},
              {"winding", r.winding}}},
            {"normalization", {{"pass", r.normalized}, {"residual", r.normalizationResidual}}},
            {"growth",
             {{"pass", r.growthInBand},
              {"ratio", r.growthRatio},
              {"band", {RegressionBands::growthMin, RegressionBands::growthMax}}}},
            {"steklov",
             {{"pass", r.steklov},
              {"C1", r.C1},
              {"certified_delta", r.certifiedDelta},
              {"target_delta", r.targetDelta}}},
            {"diagnostics",
             {{"max_f_over_Q", r.maxFOverQ},
              {"min_abs_f_away_from_one", r.minAbsFAway},
              {"phase_slope", {r.minPhaseSlope, r.maxPhaseSlope}},
              {"re_F_mean", r.reFMean},
              {"sigma_mass", r.sigmaMass}}}};
}

// ---------------------------------------------------------------------------

SteklovViolation::SteklovViolation(double theta_, double value_, double delta_)
    : VerificationFailure("Steklov bound violated: 2 pi sigma' = " + std::to_string(value_) +
                          " < delta = " + std::to_string(delta_) +
                          " at theta = " + std::to_string(theta_)),
      theta(theta_), value(value_), delta(delta_) {}

CircleMeasure reconstruct_sigma(const ConstructionOutput& out, double delta) {
    if (delta <= 0.0) delta = verify_lemma_conditions(out, 0.0).certifiedDelta;
    const auto lo = kernels::min_element(out.sigma.density());
    const double value = kTwoPi * lo.value;
    if (!(value >= delta * (1.0 - 1e-6))) throw SteklovViolation(out.sigma.angle(lo.index), value, delta);
    return out.sigma;
}

std::vector<double> concatenated_density(const VerblunskySequence& head,
                                         const VerblunskySequence& tail, std::size_t gridSize) {
    const VerblunskySequence all = head.concat(tail);
    const auto sys = szego_recursion(all, all.size());
    // The recursion already guarantees zeros inside the disk; a sampled
    // winding test would misfire on zeros closer to the circle than the grid.
    const auto v = fft::evaluate_on_circle(sys.phiStar.back(), gridSize);
    std::vector<double> density(gridSize);
    for (std::size_t i = 0; i < gridSize; ++i) density[i] = 1.0 / (kTwoPi * std::norm(v[i]));
    return density;
}

double concatenated_measure_check(const ConstructionOutput& out, std::size_t tailLength) {
    const auto n = static_cast<std::size_t>(out.params.n);
    if (tailLength < n) throw InvalidArgument("concatenated_measure_check: tailLength must be >= n");
    if (tailLength > kMaxMomentOrder)
        throw InvalidArgument("concatenated_measure_check: tailLength exceeds the moment cap");
    const std::size_t N = out.params.grid();

    // Moments of d theta / (2 pi |phi_n^*|^2); the spikes need the adapted nodes.
    const auto& q = out.quadrature;
    const auto dens = kernels::tabulate(q.size(), [&](std::size_t i) {
        return q.weights[i] / (kTwoPi * std::norm(phi_star_at(out, q.nodes[i])));
    });
    std::vector<cplx> headMoments(n + 1);
#pragma omp parallel for schedule(static)
    for (std::size_t j = 0; j <= n; ++j) {
        cplx acc{};
        for (std::size_t i = 0; i < q.size(); ++i) acc += dens[i] * unit(static_cast<double>(j) * q.nodes[i]);
        headMoments[j] = acc;
    }
    const auto head = verblunsky_from_moments(headMoments).head(n);

    std::vector<double> tailDensity(out.F.real_part());
    for (auto& d : tailDensity) d /= kTwoPi;
    const auto tailMoments = moments(CircleMeasure(std::move(tailDensity)), tailLength);
    const auto tail = verblunsky_from_moments(tailMoments).head(tailLength);

    const auto joined = concatenated_density(head, tail, N);
    const auto sigma = out.sigma.density();
    double dev = 0.0;
    for (std::size_t i = 0; i < N; ++i) dev = std::max(dev, std::abs(joined[i] - sigma[i]) / sigma[i]);
    return dev;
}

LowerBoundWitness lower_bound_witness(int n, double delta, ConstructionParams p) {
    p.n = n;
    p.delta = delta;
    const auto out = build_construction(p);
    LowerBoundWitness w;
    w.report = verify_lemma_conditions(out, delta);
    if (!w.report.all_pass())
        throw VerificationFailure("lower_bound_witness: condition '" + w.report.first_failure() +
                                  "' fails at n = " + std::to_string(n));
    w.delta = w.report.targetDelta;
    w.sigma = reconstruct_sigma(out, w.delta);
    w.value = std::abs(out.phi(1.0));
    return w;
}

nlohmann::json to_json(const ConstructionOutput& out, const ConditionReport& report,
                       bool includeDensity) {
    auto coeffs = [](const ComplexPolynomial& q) {
        nlohmann::json a = nlohmann::json::array();
        for (auto c : q.coeffs()) a.push_back({c.real(), c.imag()});
        return a;
    };
    nlohmann::json j{{"config", to_json(out.params)},
                     {"m", out.m},
                     {"C_n", out.Cn},
                     {"F_normalization", out.F.normalization()},
                     {"F_normalization_closed_form", out.F.closed_form_normalization()},
                     {"phi_star_at_one", std::abs(out.phiStar(1.0))},
                     {"Q", coeffs(out.Q)},
                     {"conditions", to_json(report)},
                     {"warnings", out.warnings}};
    if (includeDensity) j["sigma"] = to_json(out.sigma);
    return j;
}

}  // namespace opuc
