#include "nilfold/reduced.hpp"

#include <cmath>
#include <stdexcept>

namespace nilfold {
namespace reduced {

ReducedParams reduce_params(double kappa, double mu, double nu, double a1, double r) {
    if (a1 == 0.0) throw std::invalid_argument("reduce_params: a1 must be nonzero");
    ReducedParams p;
    p.alpha = r * r / (2 * a1) + kappa - mu * mu / (2 * a1) - 9 * nu * nu * r / (16 * a1) +
              9 * mu * nu * nu / (16 * a1);
    p.beta = nu;
    p.r = r;
    return p;
}

std::vector<Equilibrium> equilibria(const ReducedParams& p) {
    // q0^2/2 + (r - 9/16 beta^2) q0 + alpha = 0
    const double b = p.r - 9.0 / 16 * p.beta * p.beta;
    const double disc = b * b - 2 * p.alpha;
    std::vector<Equilibrium> out;
    if (disc < 0) return out;
    double s = std::sqrt(disc);
    double r1 = -b - s, r2 = -b + s;
    auto make = [&](double q0) {
        Equilibrium e;
        e.q0 = q0;
        e.state = {q0, 0.0, 0.0, -0.75 * p.beta * q0};
        return e;
    };
    if (std::abs(r2 - r1) <= 1e-10) {
        out.push_back(make(0.5 * (r1 + r2)));
    } else {
        out.push_back(make(r1));
        out.push_back(make(r2));
    }
    return out;
}

Quartet eigenvalues(double beta, double q0, double r) {
    std::complex<double> inner = std::sqrt(std::complex<double>(r + beta * beta + q0, 0.0));
    std::complex<double> l1 = std::sqrt(-1.25 * beta + inner);
    std::complex<double> l2 = std::sqrt(-1.25 * beta - inner);
    return {l1, -l1, l2, -l2};
}

double hopf_curve(double beta, double r) { return -r - beta * beta; }
double fold_curve(double beta, double r) { return -r + 9.0 / 16 * beta * beta; }

std::array<double, 5> alpha_fold_coeffs(double r) {
    return {0.5 * r * r, 0.0, -9.0 / 16 * r, 0.0, 81.0 / 512};
}
std::array<double, 5> alpha_hopf_coeffs(double r) {
    return {0.5 * r * r, 0.0, -9.0 / 16 * r, 0.0, -17.0 / 16};
}

// alpha_fold == (r - 9/16 beta^2)^2 / 2 as a polynomial identity; evaluating
// it in that factored form makes the quadratic discriminant at the fold
// vanish exactly in floating point, so the substitution closure (a double
// root exactly at fold_curve) holds without tolerance games. alpha_hopf is
// written relative to it, which makes alpha_fold - alpha_hopf exactly
// 625/512 beta^4.
double alpha_fold(double beta, double r) {
    double t = r - 9.0 / 16 * beta * beta;
    return 0.5 * t * t;
}
double alpha_hopf(double beta, double r) {
    double b2 = beta * beta;
    return alpha_fold(beta, r) - 625.0 / 512 * b2 * b2;
}

int tangency_order(double r) {
    auto f = alpha_fold_coeffs(r);
    auto h = alpha_hopf_coeffs(r);
    for (int k = 0; k < 5; ++k)
        if (f[k] != h[k]) return k - 1;
    return 4;  // identical through beta^4
}

ConfigTag classify_beta_q0(double beta, double q0, double r, double tol) {
    return classify(eigenvalues(beta, q0, r), tol).tag;
}

AlphaBetaRegion classify_alpha_beta(const ReducedParams& p) {
    AlphaBetaRegion out;
    auto eq = equilibria(p);
    out.equilibrium_count = static_cast<int>(eq.size());
    for (const auto& e : eq) out.configs.push_back(classify_beta_q0(p.beta, e.q0, p.r));
    return out;
}

}  // namespace reduced
}  // namespace nilfold
