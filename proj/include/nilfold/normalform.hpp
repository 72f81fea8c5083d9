#pragma once

#include <array>
#include <vector>

#include "nilfold/mat4.hpp"
#include "nilfold/polynomial.hpp"
#include "nilfold/unfolding.hpp"

namespace nilfold {
namespace normalform {

// Floating-point Hamiltonian graded by x-degree plus twice the beta power.
struct GradedHamiltonian {
    PolyD poly;
    int max_graded_degree = 6;
    bool normalized = false;
};

// S = q1 p2 - q2 p1, N = (q1^2+q2^2)/2, M = (p1^2+p2^2)/2, T = q1 p1 + q2 p2.
struct HopfBasis {
    PolyD S, N, M, T;
};
HopfBasis hopf_basis();
PolyQ hopf_S_exact();
PolyQ hopf_N_exact();
PolyQ hopf_M_exact();

// H(x + xstar) with x-constant terms dropped.
PolyD shift_to_equilibrium(const PolyD& H, const Vec4& xstar);

// H(P x); requires P symplectic within 1e-9.
PolyD apply_linear(const PolyD& H, const Mat4D& P);

struct NormalizeResult {
    GradedHamiltonian K;
    std::vector<PolyD> generators;
};

// Two-step graded normalization of a Hamiltonian whose quadratic part is
// omega~ S + N. Step 1 removes the im ad_S component per grade exactly
// (complex rotation eigenbasis, full ad_{H2} inverted on the image). Step 2
// works inside ker ad_S: at x-degree 2 it removes the T direction (keeping
// S, N, M), at x-degrees 4 and 6 it removes the full image of ad_N
// restricted to the kernel (keeping products of S and M).
NormalizeResult normalize(const GradedHamiltonian& H, const PolyD& S, const PolyD& N,
                          int max_graded_degree);

// Coefficient of M^2 = ((p1^2+p2^2)/2)^2 in the normalized Hamiltonian.
// Requires normalization through graded degree 4.
double extract_m2_coefficient(const GradedHamiltonian& K);

// Quadratic-part beta series and grade-4 kept coordinates.
struct Report {
    double omega = 0.0;                 // sqrt(-Q) of the pipeline point
    double omega_tilde = 0.0;           // S-coefficient of the quadratic part
    std::array<double, 3> S{};          // S-coefficient at beta^0, beta^1, beta^2
    std::array<double, 3> N{};          // N-coefficient (N = (q1^2+q2^2)/2)
    std::array<double, 3> M{};          // M-coefficient
    double M2 = 0.0, SM = 0.0, S2 = 0.0;
};
Report extract_report(const GradedHamiltonian& K);

// Full pipeline at a Hopf-surface point: build H_{kappa(mu_h+beta),mu_h+beta,nu}
// with the unfolding parameter beta carried symbolically, shift to the
// equilibrium, apply the Hopf transform, normalize, extract.
struct PipelineResult {
    double omega = 0.0;
    double mu_h = 0.0;
    NormalizeResult nf;
    Report report;
};
PipelineResult hopf_pipeline(double nu, double q0, const CubicCoeffs& c,
                             int max_graded_degree = 6);

}  // namespace normalform
}  // namespace nilfold
