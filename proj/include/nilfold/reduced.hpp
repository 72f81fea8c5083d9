#pragma once

#include <array>
#include <optional>
#include <vector>

#include "nilfold/linsymp.hpp"
#include "nilfold/unfolding.hpp"

namespace nilfold {
namespace reduced {

// Two-parameter reduced families: r = 0 is the natural reduction
//   H_t = p2^2/2 - p1 q2 + alpha q1 + beta (q2^2/2 + 3/4 p2 q1) + q1^3/6,
// general r comes from the translation q1 -> q1 + (r - mu)/a1 and carries an
// extra r q1^2/2 term. The family is normalized to a1 = 1.
struct ReducedParams {
    double alpha = 0.0;
    double beta = 0.0;
    double r = 0.0;
};

// Parameter reduction of H_{kappa,mu,nu} (a2 = a3 = 0):
// alpha = r^2/(2 a1) + kappa - mu^2/(2 a1) - 9 nu^2 r/(16 a1) + 9 mu nu^2/(16 a1),
// beta = nu. Throws for a1 = 0.
ReducedParams reduce_params(double kappa, double mu, double nu, double a1, double r);

struct Equilibrium {
    double q0 = 0.0;
    std::array<double, 4> state{};
};

// 0, 1 or 2 real roots of q0^2/2 - 9/16 beta^2 q0 + r q0 + alpha = 0, each
// mapped to the state (q0, 0, 0, -3/4 beta q0). Roots closer than 1e-10 are
// reported once.
std::vector<Equilibrium> equilibria(const ReducedParams& p);

// Closed-form eigenvalues +-sqrt(-5/4 beta +- sqrt(r + beta^2 + q0)).
Quartet eigenvalues(double beta, double q0, double r);

// Bifurcation lines on the surface of equilibria.
double hopf_curve(double beta, double r);  // q0 = -r - beta^2
double fold_curve(double beta, double r);  // q0 = -r + 9/16 beta^2

// (alpha, beta)-projections. alpha_fold carries the +81/512 beta^4 term and
// alpha_hopf the -17/16 beta^4 term; both share r^2/2 - 9/16 r beta^2.
double alpha_fold(double beta, double r);
double alpha_hopf(double beta, double r);

// Ascending beta-coefficients [beta^0 .. beta^4] of the two alpha-curves.
std::array<double, 5> alpha_fold_coeffs(double r);
std::array<double, 5> alpha_hopf_coeffs(double r);

// Order of tangency of the two alpha-curves at beta = 0 (first differing
// beta-power minus one); 3 for every r.
int tangency_order(double r);

// Region classification.
struct AlphaBetaRegion {
    int equilibrium_count = 0;
    std::vector<ConfigTag> configs;  // one per equilibrium
};
ConfigTag classify_beta_q0(double beta, double q0, double r, double tol = 1e-9);
AlphaBetaRegion classify_alpha_beta(const ReducedParams& p);

}  // namespace reduced
}  // namespace nilfold
