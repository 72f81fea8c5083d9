#pragma once

#include <array>
#include <vector>

#include "nilfold/linsymp.hpp"
#include "nilfold/mat4.hpp"
#include "nilfold/polynomial.hpp"

namespace nilfold {

using Vec4 = std::array<double, 4>;

struct CubicCoeffs {
    double a1 = 1.0, a2 = 0.0, a3 = 0.0;
};

struct ParamsKMN {
    double kappa = 0.0, mu = 0.0, nu = 0.0;
};

struct EquilibriumRecord {
    Vec4 state{};
    double q0 = 0.0;
    int multiplicity = 1;
    Quartet eigenvalues{};
    ConfigTag config = ConfigTag::QuadrupleZero;
    double Q = 0.0, P = 0.0;
};

// Residual tolerances used throughout the module, all in one place.
struct Tolerances {
    double root_imag = 1e-10;      // accept a companion root as real
    double root_cluster = 1e-8;    // cluster nearby roots as multiple
    double newton_residual = 1e-12;
};

// Cubic-truncated Hamiltonian H_{kappa,mu,nu} with kernel-generator cubics.
PolyD hamiltonian(const ParamsKMN& p, const CubicCoeffs& c);

// The four equations of motion (explicit closed forms; cross-checked against
// Omega grad H in the tests).
Vec4 vector_field(const Vec4& x, const ParamsKMN& p, const CubicCoeffs& c);

// Jacobian of the vector field at x, via Omega * Hess H (independent of the
// closed-form eigenvalue formulas).
Mat4D jacobian(const Vec4& x, const ParamsKMN& p, const CubicCoeffs& c);

// Equilibrium state parametrized by q0 (independent of mu).
Vec4 equilibrium_from_q0(double q0, double mu, double nu, const CubicCoeffs& c);

// kappa(mu, nu, q0): the quintic-in-q0 graph of the surface of equilibria.
double kappa_of(double mu, double nu, double q0, const CubicCoeffs& c);

// Ascending coefficients (degree 0..5) of the equilibrium polynomial in q0
// for fixed (kappa, mu, nu); exact zeros are produced when a2/a3 vanish.
std::array<double, 6> equilibrium_poly_coeffs(const ParamsKMN& p, const CubicCoeffs& c);

// All real equilibria; companion-matrix roots of the exact-degree polynomial,
// Newton-polished and clustered. Throws std::invalid_argument("identically
// satisfied") for the zero polynomial.
std::vector<EquilibriumRecord> solve_equilibria(const ParamsKMN& p, const CubicCoeffs& c,
                                                const Tolerances& tol = {});

struct EigQP {
    double Q = 0.0, P = 0.0;
    Quartet eigenvalues{};
};
// Closed-form eigenvalues +-(sqrt2/4) sqrt(Q +- sqrt P).
EigQP eigenvalues_QP(double mu, double nu, double q0, const CubicCoeffs& c);

// Hopf surface: mu with P(mu,nu,q0) = 0.
double hopf_mu(double nu, double q0, const CubicCoeffs& c);

// omega = sqrt(-Q); requires Q < 0 (otherwise the P = 0 crossing is the
// real-double-pair transition, not a Hopf point).
double hopf_frequency(double nu, double q0, const CubicCoeffs& c);

// Symplectic transform bringing the linearization at the Hopf equilibrium to
// (omega/(2 sqrt 2))(p2 q1 - p1 q2) + (q1^2 + q2^2)/2.
Mat4D hopf_transform(double nu, double q0, const CubicCoeffs& c);

// Hamiltonian matrix of the Hopf target quadratic for given omega.
Mat4D hopf_target(double omega);

// Coefficient of M^2 in the normal form per the closed-form polynomial
// (leading term 320/3 a1^2), divided by omega^8.
double cm_coefficient(double nu, double q0, const CubicCoeffs& c);
// The closed-form polynomial itself (that is, omega^8 * C_m).
double cm_polynomial(double omega2, double q0, const CubicCoeffs& c);

// Fold surface: mu with d(kappa)/d(q0) = 0, and the second derivative.
double fold_mu(double nu, double q0, const CubicCoeffs& c);
double fold_second_derivative(double nu, double q0, const CubicCoeffs& c);

// lambda = -20 nu - 32 a2 q0 + 6 a3^2 q0^2 (= 2 Q). Positive on the
// hyperbolic branch, negative on the elliptic one. The nonzero eigenvalue
// pair on the fold surface is +-sqrt(lambda/8).
double fold_lambda(double nu, double q0, const CubicCoeffs& c);

// Frequency entering the fold transforms: omega = sqrt(|lambda| / 8).
double fold_omega(double nu, double q0, const CubicCoeffs& c);

enum class FoldBranch { Hyperbolic, Elliptic };

// Symplectic transform bringing the fold linearization to
//   1/2 p1^2 + omega/2 (p2^2 - q2^2)   (hyperbolic) or
//  -1/2 p1^2 + omega/2 (p2^2 + q2^2)   (elliptic).
Mat4D fold_transform(double nu, double q0, const CubicCoeffs& c, FoldBranch branch);
Mat4D fold_target(double omega, FoldBranch branch);

// Coefficient of q1^3 in the transformed Hamiltonian on the given branch of
// the fold surface. On the hyperbolic branch omega^3 C = -a1/6 + ...; the
// elliptic branch flips the overall sign and the omega^2 terms.
double fold_cubic_coefficient(double nu, double q0, const CubicCoeffs& c, FoldBranch branch);

// Tangency line of the fold and Hopf surfaces: nu(q0) with nilpotent
// degree-4 Jacobian.
double nilpotent_line(double q0, const CubicCoeffs& c);

}  // namespace nilfold
