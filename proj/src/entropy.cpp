#include "opuc/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <string>

#include "opuc/error.hpp"
#include "opuc/fft.hpp"
#include "opuc/kernels.hpp"

namespace opuc {

double polynomial_entropy(const ComplexPolynomial& phiN, const CircleMeasure& mu) {
    const std::size_t N = mu.grid_size();
    std::vector<double> norm(N, 0.0), ent(N, 0.0);
    if (N > 0) {
        if (N < phiN.degree() + 1)
            throw InvalidArgument("polynomial_entropy: density grid is coarser than the degree");
        const auto v = fft::evaluate_on_circle(phiN, N);
        const auto rho = mu.density();
        for (std::size_t i = 0; i < N; ++i) {
            const double a = std::abs(v[i]);
            norm[i] = a * a * rho[i];
            ent[i] = a > 1.0 ? a * a * std::log(a) * rho[i] : 0.0;
        }
    }
    const double h = N > 0 ? kTwoPi / static_cast<double>(N) : 0.0;
    double l2 = h * kernels::sum(norm);
    double value = h * kernels::sum(ent);
    for (const auto& atom : mu.atoms()) {
        const double a = std::abs(phiN.on_circle(atom.theta));
        l2 += atom.mass * a * a;
        if (a > 1.0) value += atom.mass * a * a * std::log(a);
    }
    if (!(std::abs(l2 - 1.0) <= 1e-6))
        throw InadmissibleInput("polynomial_entropy: phi_n is not normalized in L2(mu) (norm^2 = " +
                                std::to_string(l2) + ")");
    return value;
}

double polynomial_entropy(const ConstructionOutput& out) {
    const auto& q = out.quadrature;
    std::vector<double> norm(q.size()), ent(q.size());
#pragma omp parallel for schedule(static)
    for (std::size_t i = 0; i < q.size(); ++i) {
        const double a = std::abs(phi_star_at(out, q.nodes[i]));
        const double w = q.weights[i] * sigma_prime_at(out, q.nodes[i]);
        norm[i] = a * a * w;
        ent[i] = a > 1.0 ? a * a * std::log(a) * w : 0.0;
    }
    const double l2 = kernels::sum(norm);
    if (!(std::abs(l2 - 1.0) <= 1e-6))
        throw InadmissibleInput("polynomial_entropy: phi_n is not normalized in L2(sigma) (norm^2 = " +
                                std::to_string(l2) + ")");
    return kernels::sum(ent);
}

EntropyScaling entropy_scaling_report(const std::vector<int>& nList, double delta,
                                      const ConstructionParams& params) {
    if (nList.size() < 2) throw InvalidArgument("entropy_scaling_report: need at least two sizes");
    EntropyScaling s;
    s.rows.resize(nList.size());
    std::vector<std::exception_ptr> errors(nList.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t k = 0; k < nList.size(); ++k) {
        try {
            ConstructionParams p = params;
            p.n = nList[k];
            p.delta = delta;
            const auto out = build_construction(p);
            const auto report = verify_lemma_conditions(out, delta);
            if (!report.all_pass())
                throw VerificationFailure("entropy_scaling_report: condition '" +
                                          report.first_failure() + "' fails at n = " +
                                          std::to_string(p.n));
            reconstruct_sigma(out, report.targetDelta);
            EntropyRow& row = s.rows[k];
            row.n = nList[k];
            row.entropy = polynomial_entropy(out);
            row.logN = std::log(static_cast<double>(row.n));
            const auto v = fft::evaluate_on_circle(out.phi, out.params.grid());
            double mx = 0.0;
            for (auto z : v) mx = std::max(mx, std::abs(z));
            row.envelope = std::log(mx);
            row.certifiedDelta = report.certifiedDelta;
        } catch (...) {
            errors[k] = std::current_exception();
        }
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);

    double mx = 0.0, my = 0.0;
    for (const auto& r : s.rows) {
        mx += r.logN;
        my += r.entropy;
    }
    mx /= s.rows.size();
    my /= s.rows.size();
    double sxx = 0.0, sxy = 0.0;
    for (const auto& r : s.rows) {
        sxx += (r.logN - mx) * (r.logN - mx);
        sxy += (r.logN - mx) * (r.entropy - my);
    }
    if (!(sxx > 0.0)) throw InvalidArgument("entropy_scaling_report: sizes must not all coincide");
    s.slope = sxy / sxx;
    s.intercept = my - s.slope * mx;
    double ss = 0.0;
    s.envelopeExcess = -std::numeric_limits<double>::infinity();
    for (const auto& r : s.rows) {
        const double e = r.entropy - (s.slope * r.logN + s.intercept);
        ss += e * e;
        s.envelopeExcess = std::max(s.envelopeExcess, r.envelope - 0.5 * r.logN);
    }
    s.residual = std::sqrt(ss / s.rows.size());
    return s;
}

void write_entropy_csv(std::ostream& os, const EntropyScaling& s) {
    os << "n,entropy,log_n,upper_envelope\n";
    for (const auto& r : s.rows) os << r.n << ',' << r.entropy << ',' << r.logN << ',' << r.envelope << '\n';
}

}  // namespace opuc
