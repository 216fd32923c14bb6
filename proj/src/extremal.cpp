#include "opuc/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "opuc/error.hpp"
#include "opuc/opuc.hpp"

namespace opuc {

double upper_bound(int n, double delta) {
    if (n < 0) throw InvalidArgument("upper_bound: n must be >= 0");
    if (!(delta > 0.0 && delta <= 1.0)) throw InvalidArgument("upper_bound: delta must lie in (0, 1]");
    return std::sqrt((n + 1.0) / delta);
}

SmallDeltaMeasure small_delta_measure(int n, double delta, double mass) {
    if (n < 0) throw InvalidArgument("small_delta_measure: n must be >= 0");
    if (!(delta > 0.0)) throw InvalidArgument("small_delta_measure: delta must be positive");
    if (!(mass > 0.0)) throw InvalidArgument("small_delta_measure: mass must be positive");
    SmallDeltaMeasure r;
    std::vector<Atom> atoms;
    for (int k = 1; k <= n; ++k) atoms.push_back({kTwoPi * k / (n + 1.0), mass});
    r.measure = CircleMeasure(std::vector<double>(std::max(64, 4 * (n + 1)), delta / kTwoPi), atoms);

    const double a = mass / (delta + mass);
    std::vector<cplx> c(static_cast<std::size_t>(n) + 1, a);
    c.back() += delta / (delta + mass);
    r.monic = ComplexPolynomial(std::move(c));
    r.monicAtOne = 1.0 + mass * n / (delta + mass);
    r.monicNormSq = delta * r.monicAtOne;
    r.value = r.monicAtOne / std::sqrt(r.monicNormSq);
    return r;
}

// ---------------------------------------------------------------------------

namespace {

double objective(const std::vector<cplx>& s) {
    const double v = orthonormal_value(s, 1.0);
    return v * v;
}

}  // namespace

TrigPolynomial variational_gradient(const CircleMeasure& mu, int n) {
    if (n < 0) throw InvalidArgument("variational_gradient: n must be >= 0");
    const auto base = moments(mu, static_cast<std::size_t>(n));
    (void)objective(base);  // rejects non positive definite input

    auto central = [&](std::size_t j, cplx dir) {
        for (double h = 1e-6; h >= 1e-10; h /= 4) {
            try {
                auto plus = base, minus = base;
                plus[j] += h * dir;
                minus[j] -= h * dir;
                return (objective(plus) - objective(minus)) / (2.0 * h);
            } catch (const InadmissibleInput&) {
            }
        }
        throw VerificationFailure("variational_gradient: perturbation leaves the positive definite cone");
    };

    TrigPolynomial t;
    t.cosCoeffs.assign(static_cast<std::size_t>(n) + 1, 0.0);
    t.sinCoeffs.assign(static_cast<std::size_t>(n) + 1, 0.0);
    t.cosCoeffs[0] = central(0, 1.0);
    for (std::size_t j = 1; j <= static_cast<std::size_t>(n); ++j) {
        t.cosCoeffs[j] = central(j, 1.0);
        t.sinCoeffs[j] = central(j, cplx{0.0, 1.0});
    }
    return t;
}

// ---------------------------------------------------------------------------

namespace {

struct State {
    std::vector<double> theta;
    std::vector<double> mass;
};

// Moments of (1 - sum m) / (2 pi) d theta + sum m_j delta(theta_j).
std::vector<cplx> state_moments(const State& s, int n) {
    std::vector<cplx> mom(static_cast<std::size_t>(n) + 1, cplx{});
    mom[0] = 1.0;
    for (std::size_t k = 0; k < s.theta.size(); ++k)
        for (int j = 1; j <= n; ++j) mom[j] += s.mass[k] * unit(j * s.theta[k]);
    return mom;
}

double value_of(const State& s, int n) {
    try {
        return orthonormal_value(state_moments(s, n), 1.0);
    } catch (const InadmissibleInput&) {
        return -1.0;
    }
}

struct RestartOutcome {
    State state;
    double value = 0.0;
    std::vector<double> history;
    bool diverged = false;
};

RestartOutcome ascend(State s, int n, double delta, int iters) {
    const double capacity = 1.0 - delta;
    RestartOutcome r;
    r.value = value_of(s, n);
    if (r.value < 0.0) {
        r.diverged = true;
        return r;
    }
    r.history.push_back(r.value);
    double stepTheta = kPi / (2.0 * (n + 1));
    double stepMass = capacity / (4.0 * std::max<std::size_t>(1, s.mass.size()));
    for (int it = 0; it < iters && (stepTheta > 1e-12 || stepMass > 1e-14); ++it) {
        bool improved = false;
        for (std::size_t k = 0; k < s.theta.size(); ++k) {
            for (double sign : {1.0, -1.0}) {
                State trial = s;
                trial.theta[k] = normalize_angle(trial.theta[k] + sign * stepTheta);
                const double v = value_of(trial, n);
                if (v > r.value) {
                    s = std::move(trial);
                    r.value = v;
                    r.history.push_back(v);
                    improved = true;
                    break;
                }
            }
            for (double sign : {1.0, -1.0}) {
                State trial = s;
                double total = 0.0;
                for (std::size_t q = 0; q < s.mass.size(); ++q)
                    if (q != k) total += s.mass[q];
                trial.mass[k] = std::clamp(trial.mass[k] + sign * stepMass, 0.0,
                                           std::max(0.0, capacity - total));
                if (trial.mass[k] == s.mass[k]) continue;
                const double v = value_of(trial, n);
                if (v > r.value) {
                    s = std::move(trial);
                    r.value = v;
                    r.history.push_back(v);
                    improved = true;
                    break;
                }
            }
        }
        if (!improved) {
            stepTheta /= 2.0;
            stepMass /= 2.0;
        }
    }
    r.state = std::move(s);
    return r;
}

State initial_state(int restart, int atoms, double delta, std::uint64_t seed) {
    State s;
    const double capacity = 1.0 - delta;
    if (restart == 0) {
        for (int k = 1; k <= atoms; ++k) {
            s.theta.push_back(kTwoPi * k / (atoms + 1.0));
            s.mass.push_back(capacity / atoms);
        }
        return s;
    }
    std::seed_seq seq{seed, static_cast<std::uint64_t>(restart)};
    std::mt19937_64 rng(seq);
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);
    std::exponential_distribution<double> expo(1.0);
    double total = 0.0;
    for (int k = 0; k < atoms; ++k) {
        s.theta.push_back(angle(rng));
        s.mass.push_back(expo(rng));
        total += s.mass.back();
    }
    for (double& m : s.mass) m *= capacity / total;
    return s;
}

}  // namespace

SearchResult search_extremal(int n, double delta, int atomBudget, int iters,
                             const SearchOptions& options) {
    if (n < 1) throw InvalidArgument("search_extremal: n must be >= 1");
    if (!(delta > 0.0 && delta <= 1.0)) throw InvalidArgument("search_extremal: delta must lie in (0, 1]");
    if (atomBudget < 0 || atomBudget > n)
        throw InvalidArgument("search_extremal: atom budget must lie in [0, n]");
    if (iters < 0 || options.restarts < 1)
        throw InvalidArgument("search_extremal: need iters >= 0 and at least one restart");

    const int restarts = atomBudget == 0 ? 1 : options.restarts;
    std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(restarts));
#pragma omp parallel for schedule(dynamic)
    for (int r = 0; r < restarts; ++r)
        outcomes[r] = ascend(initial_state(r, atomBudget, delta, options.seed), n, delta, iters);

    int best = -1;
    for (int r = 0; r < restarts; ++r)
        if (!outcomes[r].diverged && (best < 0 || outcomes[r].value > outcomes[best].value)) best = r;
    if (best < 0) throw VerificationFailure("search_extremal: every restart produced non positive definite moments");

    const auto& o = outcomes[best];
    double atomMass = 0.0;
    std::vector<Atom> atoms;
    for (std::size_t k = 0; k < o.state.theta.size(); ++k) {
        if (o.state.mass[k] <= 0.0) continue;
        atoms.push_back({o.state.theta[k], o.state.mass[k]});
        atomMass += o.state.mass[k];
    }
    CircleMeasure mu(std::vector<double>(static_cast<std::size_t>(std::max(64, 4 * (n + 1))),
                                         std::max(0.0, 1.0 - atomMass) / kTwoPi));
    for (const auto& a : atoms) mu.add_atom(a.theta, a.mass);

    SearchResult res;
    res.measure = std::move(mu);
    res.value = o.value;
    res.bestRestart = best;
    res.history = o.history;
    return res;
}

nlohmann::json to_json(const SearchResult& r, int n, double delta) {
    return {{"n", n},
            {"delta", delta},
            {"value", r.value},
            {"upper_bound", upper_bound(n, delta)},
            {"best_restart", r.bestRestart},
            {"accepted_moves", r.history.size()},
            {"measure", to_json(r.measure)}};
}

void write_search_csv_header(std::ostream& os) { os << "n,delta,search_value,upper_bound,ratio\n"; }

void write_search_csv_row(std::ostream& os, int n, double delta, const SearchResult& r) {
    const double ub = upper_bound(n, delta);
    os << n << ',' << delta << ',' << r.value << ',' << ub << ',' << r.value / ub << '\n';
}

}  // namespace opuc
