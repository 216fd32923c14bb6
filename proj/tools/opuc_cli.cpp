// steklov: command-line driver for the constructions, sweeps and checks.
//
// Exit codes: 0 ok, 2 invalid configuration, 3 failed verification.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "opuc/approximants.hpp"
#include "opuc/construction.hpp"
#include "opuc/entropy.hpp"
#include "opuc/error.hpp"
#include "opuc/extremal.hpp"
#include "opuc/spectral.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace opuc;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitVerification = 3;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string config;
    std::string out;
    std::string n;
    std::string delta;
    double alpha = 0, rho = 0, delta1 = 0, M = 0;
    std::size_t grid = 0;
    double mass = 0;
    int atoms = 0, iters = 0, restarts = 0;
    std::uint64_t seed = 0;
    std::string beta;
    std::string m;
};

std::vector<std::string> split(const std::string& s) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, ',');)
        if (!item.empty()) parts.push_back(item);
    return parts;
}

template <class T>
std::vector<T> parse_list(const json& v, const char* key) {
    try {
        if (v.is_array()) return v.get<std::vector<T>>();
        if (v.is_number()) return {v.get<T>()};
        std::vector<T> r;
        for (const auto& s : split(v.get<std::string>())) r.push_back(static_cast<T>(std::stod(s)));
        if (r.empty()) throw ConfigError(std::string("empty list for ") + key);
        return r;
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception&) {
        throw ConfigError(std::string("cannot parse ") + key + ": " + v.dump());
    }
}

/// Resolved configuration: config file first, explicit flags on top.
class Resolved {
  public:
    Resolved(const std::string& command, const CLI::App& sub, const Options& o) : command_(command) {
        if (!o.config.empty()) {
            std::ifstream in(o.config);
            if (!in) throw ConfigError("cannot open config file " + o.config);
            try {
                in >> cfg_;
            } catch (const json::exception& e) {
                throw ConfigError(std::string("config is not valid JSON: ") + e.what());
            }
            if (!cfg_.is_object()) throw ConfigError("config must be a JSON object");
        }
        auto set = [&](const char* flag, const char* key, auto value) {
            if (sub.count(flag) > 0) cfg_[key] = value;
        };
        set("--n", "n", o.n);
        set("--delta", "delta", o.delta);
        set("--alpha", "alpha", o.alpha);
        set("--rho", "rho", o.rho);
        set("--delta1", "delta1", o.delta1);
        set("--M", "M", o.M);
        set("--grid", "grid", o.grid);
        set("--mass", "mass", o.mass);
        set("--atoms", "atoms", o.atoms);
        set("--iters", "iters", o.iters);
        set("--restarts", "restarts", o.restarts);
        set("--seed", "seed", o.seed);
        set("--beta", "beta", o.beta);
        set("--m", "m", o.m);
        cfg_["command"] = command;
    }

    bool has(const char* key) const { return cfg_.contains(key); }

    template <class T>
    T get(const char* key, T fallback) const {
        if (!cfg_.contains(key)) return fallback;
        try {
            const auto& v = cfg_.at(key);
            if (v.is_string()) {
                if constexpr (std::is_arithmetic_v<T>) return static_cast<T>(std::stod(v.get<std::string>()));
            }
            return v.get<T>();
        } catch (const std::exception&) {
            throw ConfigError(std::string("invalid value for ") + key + ": " + cfg_.at(key).dump());
        }
    }

    template <class T>
    std::vector<T> list(const char* key, std::vector<T> fallback) const {
        if (!cfg_.contains(key)) return fallback;
        return parse_list<T>(cfg_.at(key), key);
    }

    /// Target delta; 0 stands for "auto" (certified).
    double delta(double fallback) const {
        if (!cfg_.contains("delta")) return fallback;
        const auto& v = cfg_.at("delta");
        if (v.is_string() && v.get<std::string>() == "auto") return 0.0;
        const double d = get<double>("delta", fallback);
        if (!(d > 0.0 && d <= 1.0)) throw ConfigError("delta must be 'auto' or lie in (0, 1]");
        return d;
    }

    ConstructionParams construction() const {
        ConstructionParams p;
        try {
            p = params_from_json(json{{"alpha", get<double>("alpha", p.alpha)},
                                      {"rho", get<double>("rho", p.rho)},
                                      {"delta1", get<double>("delta1", p.delta1)},
                                      {"M", get<double>("M", p.M)},
                                      {"grid", get<std::size_t>("grid", 0)}},
                                 p);
        } catch (const json::exception& e) {
            throw ConfigError(e.what());
        }
        p.delta = delta(0.0);
        return p;
    }

    json resolved(const ConstructionParams* p = nullptr) const {
        json j = cfg_;
        if (p != nullptr) {
            auto c = to_json(*p);
            c.erase("n");
            j["construction"] = c;
        }
        return j;
    }

  private:
    std::string command_;
    json cfg_ = json::object();
};

class Output {
  public:
    explicit Output(const std::string& dir) : dir_(dir) {
        if (!dir_.empty()) fs::create_directories(dir_);
    }

    /// Writes to DIR/name, or to stdout when no directory was given.
    void emit(const std::string& name, const std::string& content) const {
        if (dir_.empty()) {
            std::cout << content;
            return;
        }
        std::ofstream f(fs::path(dir_) / name, std::ios::binary);
        f << content;
    }

    bool to_files() const { return !dir_.empty(); }

    void sidecar(const json& config) const {
        if (!dir_.empty()) emit("run_config.json", config.dump(2) + "\n");
    }

  private:
    std::string dir_;
};

std::ostringstream csv_stream() {
    std::ostringstream os;
    os.precision(12);
    return os;
}

int cmd_construct(const Resolved& cfg, const Output& out) {
    auto p = cfg.construction();
    p.n = cfg.get<int>("n", p.n);
    const auto c = build_construction(p);
    const auto report = verify_lemma_conditions(c, p.delta);
    auto j = to_json(c, report, false);
    j["config"] = cfg.resolved(&c.params);
    j["all_pass"] = report.all_pass();
    out.emit("construct_n" + std::to_string(p.n) + ".json", j.dump(2) + "\n");
    for (const auto& w : c.warnings) std::cerr << "warning: " << w << "\n";
    if (!report.all_pass()) {
        std::cerr << "verification failed: " << report.first_failure() << "\n";
        return kExitVerification;
    }
    if (out.to_files()) {
        auto os = csv_stream();
        write_density_csv(os, reconstruct_sigma(c, report.targetDelta));
        out.emit("sigma_n" + std::to_string(p.n) + ".csv", os.str());
        out.sidecar(cfg.resolved(&c.params));
    }
    return 0;
}

int cmd_sweep(const Resolved& cfg, const Output& out) {
    const auto p = cfg.construction();
    const auto ns = cfg.list<int>("n", {128, 256, 512});
    auto os = csv_stream();
    os << "n,value,value_over_sqrt_n,growth_ratio,certified_delta,delta\n";
    int status = 0;
    for (int n : ns) {
        try {
            const auto w = lower_bound_witness(n, p.delta, p);
            os << n << ',' << w.value << ',' << w.value / std::sqrt(static_cast<double>(n)) << ','
               << w.report.growthRatio << ',' << w.report.certifiedDelta << ',' << w.delta << '\n';
        } catch (const VerificationFailure& e) {
            std::cerr << "n = " << n << ": " << e.what() << "\n";
            status = kExitVerification;
        }
    }
    out.emit("sweep.csv", os.str());
    out.sidecar(cfg.resolved(&p));
    return status;
}

int cmd_bounds(const Resolved& cfg, const Output& out) {
    const auto ns = cfg.list<int>("n", {3});
    const double delta = cfg.delta(0.5);
    if (delta == 0.0) throw ConfigError("bounds needs a numeric delta");
    const double mass = cfg.get<double>("mass", 1e6);
    auto os = csv_stream();
    os << "n,delta,mass,upper_bound,small_delta_value,ratio\n";
    for (int n : ns) {
        const double ub = upper_bound(n, delta);
        const auto sd = small_delta_measure(n, delta, mass);
        os << n << ',' << delta << ',' << mass << ',' << ub << ',' << sd.value << ',' << sd.value / ub << '\n';
    }
    out.emit("bounds.csv", os.str());
    out.sidecar(cfg.resolved());
    return 0;
}

int cmd_search(const Resolved& cfg, const Output& out) {
    const int n = cfg.get<int>("n", 8);
    const double delta = cfg.delta(0.1);
    if (delta == 0.0) throw ConfigError("search needs a numeric delta");
    SearchOptions opt;
    opt.seed = cfg.get<std::uint64_t>("seed", opt.seed);
    opt.restarts = cfg.get<int>("restarts", opt.restarts);
    const auto r = search_extremal(n, delta, cfg.get<int>("atoms", n), cfg.get<int>("iters", 200), opt);
    auto os = csv_stream();
    write_search_csv_header(os);
    write_search_csv_row(os, n, delta, r);
    out.emit("search.csv", os.str());
    if (out.to_files()) {
        auto j = to_json(r, n, delta);
        j["config"] = cfg.resolved();
        out.emit("search.json", j.dump(2) + "\n");
        out.sidecar(cfg.resolved());
    }
    return 0;
}

int cmd_entropy(const Resolved& cfg, const Output& out) {
    const auto p = cfg.construction();
    const auto ns = cfg.list<int>("n", {128, 256, 512, 1024, 2048});
    const auto s = entropy_scaling_report(ns, p.delta, p);
    auto os = csv_stream();
    write_entropy_csv(os, s);
    out.emit("entropy.csv", os.str());
    if (out.to_files()) {
        json j{{"slope", s.slope},
               {"intercept", s.intercept},
               {"residual", s.residual},
               {"envelope_excess", s.envelopeExcess},
               {"config", cfg.resolved(&p)}};
        out.emit("entropy_fit.json", j.dump(2) + "\n");
        out.sidecar(cfg.resolved(&p));
    } else {
        std::cerr << "slope " << s.slope << ", residual " << s.residual << "\n";
    }
    return 0;
}

int cmd_appendix(const Resolved& cfg, const Output& out) {
    const auto ns = cfg.list<int>("n", {64, 128, 256, 512});
    const auto betas = cfg.list<double>("beta", {0.3, 0.375, 0.5, 0.75});
    const auto ms = cfg.list<int>("m", {32, 64, 128, 256});
    const double M = cfg.get<double>("M", 1.0);
    const double alpha = cfg.get<double>("alpha", 0.75);
    auto os = csv_stream();
    write_bound_csv_header(os);
    for (int n : ns)
        for (double beta : betas)
            for (const auto& r : verify_appendix_A_suite(n, beta, M)) write_bound_csv_row(os, r);
    out.emit("appendix_a.csv", os.str());
    auto ob = csv_stream();
    ob << "m,alpha,max_phase_derivative_over_m\n";
    for (int m : ms) ob << m << ',' << alpha << ',' << verify_phase_bound(spectral_factor_Q(m, alpha), m) << '\n';
    out.emit("appendix_b.csv", ob.str());
    out.sidecar(cfg.resolved());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Orthogonal polynomials on the unit circle under a Steklov lower bound"};
    app.require_subcommand(1);
    Options o;

    struct Spec {
        const char* name;
        const char* help;
        int (*run)(const Resolved&, const Output&);
    };
    const std::vector<Spec> specs{
        {"construct", "build and verify the explicit construction for one n", cmd_construct},
        {"sweep", "lower-bound witnesses over a list of n (CSV)", cmd_sweep},
        {"bounds", "upper bound against the equidistant-atom family (CSV)", cmd_bounds},
        {"search", "local search over measures with atoms (CSV, JSON)", cmd_search},
        {"entropy", "polynomial entropy along the construction (CSV)", cmd_entropy},
        {"appendix", "approximant bound suites and the phase-derivative check (CSV)", cmd_appendix},
    };
    std::map<const CLI::App*, const Spec*> dispatch;
    for (const auto& s : specs) {
        auto* sub = app.add_subcommand(s.name, s.help);
        sub->add_option("--config", o.config, "JSON config file; flags override its keys");
        sub->add_option("--out", o.out, "output directory (default: stdout)");
        sub->add_option("--n", o.n, "degree, or comma-separated list for sweeps");
        sub->add_option("--delta", o.delta, "Steklov constant in (0, 1], or 'auto'");
        sub->add_option("--alpha", o.alpha, "exponent alpha in (0, 1)");
        sub->add_option("--rho", o.rho, "weight of the pole term in F");
        sub->add_option("--delta1", o.delta1, "m = floor(delta1 n)");
        sub->add_option("--M", o.M, "constant term correction of A_n");
        sub->add_option("--grid", o.grid, "number of grid points on the circle");
        sub->add_option("--mass", o.mass, "atom mass for the equidistant family");
        sub->add_option("--atoms", o.atoms, "atom budget for the search");
        sub->add_option("--iters", o.iters, "coordinate-ascent sweeps per restart");
        sub->add_option("--restarts", o.restarts, "number of restarts");
        sub->add_option("--seed", o.seed, "random seed");
        sub->add_option("--beta", o.beta, "comma-separated exponents for the approximant suites");
        sub->add_option("--m", o.m, "comma-separated degrees for the phase check");
        dispatch[sub] = &s;
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    for (const auto& [sub, spec] : dispatch) {
        if (!sub->parsed()) continue;
        try {
            const Resolved cfg(spec->name, *sub, o);
            const Output out(o.out);
            return spec->run(cfg, out);
        } catch (const ConfigError& e) {
            std::cerr << "config error: " << e.what() << "\n";
            return kExitConfig;
        } catch (const InvalidArgument& e) {
            std::cerr << "invalid parameters: " << e.what() << "\n";
            return kExitConfig;
        } catch (const VerificationFailure& e) {
            std::cerr << "verification failed: " << e.what() << "\n";
            return kExitVerification;
        } catch (const InadmissibleInput& e) {
            std::cerr << "verification failed: " << e.what() << "\n";
            return kExitVerification;
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitConfig;
        }
    }
    return kExitConfig;
}
