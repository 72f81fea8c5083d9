#pragma once

#include <string>
#include <vector>

#include "nilfold/polynomial.hpp"
#include "nilfold/unfolding.hpp"

namespace nilfold {
namespace dynamics {

enum class Method { LeapfrogSplit, Rk4 };

struct Trajectory {
    std::vector<double> times;
    std::vector<Vec4> states;
    std::vector<double> energies;
    bool escaped = false;
    Method method_used = Method::Rk4;
    bool fell_back_to_rk4 = false;
};

// Integrates the Hamiltonian flow of H from x0 with fixed step dt up to time
// T. leapfrog-split requires H = V(q) + T(p) exactly (term-wise separable);
// otherwise it falls back to rk4 and reports it. States with a component
// beyond |x| > 10 (or non-finite) truncate the trajectory with escaped=true.
Trajectory integrate(const PolyD& H, const Vec4& x0, double dt, double T,
                     Method method = Method::Rk4);

// max-norm of Omega grad H at x.
double equilibrium_residual(const PolyD& H, const Vec4& x);

// The two pedagogical model systems.
// Example 1: H = p1^2/2 - q1^3/3 + mu q1 embedded with an inert (q2,p2) pair.
PolyD example1_hamiltonian(double mu);
// Example 2: H = q1 p2 - q2 p1 + (q1^2+q2^2)/2 + mu (p1^2+p2^2)/2.
PolyD example2_hamiltonian(double mu);

}  // namespace dynamics
}  // namespace nilfold
