#include "nilfold/grid.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <cmath>
#include <stdexcept>

namespace nilfold {
namespace grid {

Range parse_range(const std::string& spec) {
    auto c1 = spec.find(':');
    auto c2 = spec.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw std::invalid_argument("range spec must be min:max:steps, got " + spec);
    Range r;
    r.min = std::stod(spec.substr(0, c1));
    r.max = std::stod(spec.substr(c1 + 1, c2 - c1 - 1));
    r.steps = std::stoi(spec.substr(c2 + 1));
    if (r.steps < 0) throw std::invalid_argument("range steps must be >= 0");
    return r;
}

namespace {

SurfaceRow surface_row(const CubicCoeffs& c, double mu, double nu, double q0, double tol) {
    SurfaceRow row;
    row.mu = mu;
    row.nu = nu;
    row.q0 = q0;
    row.kappa = kappa_of(mu, nu, q0, c);
    EigQP e = eigenvalues_QP(mu, nu, q0, c);
    row.Q = e.Q;
    row.P = e.P;
    row.config = classify(e.eigenvalues).tag;
    row.on_fold = std::abs(mu - fold_mu(nu, q0, c)) <= tol;
    row.on_hopf = std::abs(mu - hopf_mu(nu, q0, c)) <= tol && e.Q < 0;
    return row;
}

int resolve_threads(int threads) {
#ifdef _OPENMP
    return threads > 0 ? threads : omp_get_max_threads();
#else
    (void)threads;
    return 1;
#endif
}

}  // namespace

std::vector<SurfaceRow> surface_sample_serial(const CubicCoeffs& c, const Range& mu,
                                              const Range& nu, const Range& q0, double tol) {
    std::vector<SurfaceRow> rows;
    rows.reserve(static_cast<std::size_t>(mu.size()) * nu.size() * q0.size());
    for (int i = 0; i < mu.size(); ++i)
        for (int j = 0; j < nu.size(); ++j)
            for (int k = 0; k < q0.size(); ++k)
                rows.push_back(surface_row(c, mu.at(i), nu.at(j), q0.at(k), tol));
    return rows;
}

std::vector<SurfaceRow> surface_sample(const CubicCoeffs& c, const Range& mu, const Range& nu,
                                       const Range& q0, double tol, int threads) {
    const long long total = static_cast<long long>(mu.size()) * nu.size() * q0.size();
    std::vector<SurfaceRow> rows(static_cast<std::size_t>(total));
    const int nt = resolve_threads(threads);
#pragma omp parallel for schedule(static) num_threads(nt)
    for (long long idx = 0; idx < total; ++idx) {
        int k = static_cast<int>(idx % q0.size());
        int j = static_cast<int>((idx / q0.size()) % nu.size());
        int i = static_cast<int>(idx / (static_cast<long long>(q0.size()) * nu.size()));
        rows[static_cast<std::size_t>(idx)] = surface_row(c, mu.at(i), nu.at(j), q0.at(k), tol);
    }
    return rows;
}

std::vector<EigenGridRow> eigengrid_serial(const Range& mu0, const Range& nu0, double tol) {
    std::vector<EigenGridRow> rows;
    rows.reserve(static_cast<std::size_t>(mu0.size()) * nu0.size());
    for (int i = 0; i < mu0.size(); ++i)
        for (int j = 0; j < nu0.size(); ++j) {
            EigenGridRow r{mu0.at(i), nu0.at(j), ConfigTag::QuadrupleZero};
            r.config = classify(versal_J0_eigenvalues(r.mu0, r.nu0), tol).tag;
            rows.push_back(r);
        }
    return rows;
}

std::vector<EigenGridRow> eigengrid(const Range& mu0, const Range& nu0, double tol, int threads) {
    const long long total = static_cast<long long>(mu0.size()) * nu0.size();
    std::vector<EigenGridRow> rows(static_cast<std::size_t>(total));
    const int nt = resolve_threads(threads);
#pragma omp parallel for schedule(static) num_threads(nt)
    for (long long idx = 0; idx < total; ++idx) {
        int j = static_cast<int>(idx % nu0.size());
        int i = static_cast<int>(idx / nu0.size());
        EigenGridRow r{mu0.at(i), nu0.at(j), ConfigTag::QuadrupleZero};
        r.config = classify(versal_J0_eigenvalues(r.mu0, r.nu0), tol).tag;
        rows[static_cast<std::size_t>(idx)] = r;
    }
    return rows;
}

std::vector<ReducedGridRow> reduced_grid_serial(const Range& beta, const Range& q0, double r) {
    std::vector<ReducedGridRow> rows;
    rows.reserve(static_cast<std::size_t>(beta.size()) * q0.size());
    for (int i = 0; i < beta.size(); ++i)
        for (int j = 0; j < q0.size(); ++j)
            rows.push_back({beta.at(i), q0.at(j), r,
                            reduced::classify_beta_q0(beta.at(i), q0.at(j), r)});
    return rows;
}

std::vector<ReducedGridRow> reduced_grid(const Range& beta, const Range& q0, double r,
                                         int threads) {
    const long long total = static_cast<long long>(beta.size()) * q0.size();
    std::vector<ReducedGridRow> rows(static_cast<std::size_t>(total));
    const int nt = resolve_threads(threads);
#pragma omp parallel for schedule(static) num_threads(nt)
    for (long long idx = 0; idx < total; ++idx) {
        int j = static_cast<int>(idx % q0.size());
        int i = static_cast<int>(idx / q0.size());
        rows[static_cast<std::size_t>(idx)] = {beta.at(i), q0.at(j), r,
                                               reduced::classify_beta_q0(beta.at(i), q0.at(j), r)};
    }
    return rows;
}

std::vector<ReducedCurveRow> reduced_curves(const Range& beta, double r) {
    std::vector<ReducedCurveRow> rows;
    rows.reserve(beta.size());
    for (int i = 0; i < beta.size(); ++i) {
        double b = beta.at(i);
        rows.push_back({b, reduced::alpha_fold(b, r), reduced::alpha_hopf(b, r), r});
    }
    return rows;
}

}  // namespace grid
}  // namespace nilfold
