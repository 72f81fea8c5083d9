#pragma once

#include <array>
#include <complex>
#include <string>

#include "nilfold/mat4.hpp"
#include "nilfold/polynomial.hpp"

namespace nilfold {

using Quartet = std::array<std::complex<double>, 4>;

// Eigenvalue configuration of a 4x4 Hamiltonian matrix. The nine tags cover
// every configuration of a quartet closed under negation and conjugation.
enum class ConfigTag {
    ComplexQuartet,
    TwoImagPairs,
    TwoRealPairs,
    ImagPairRealPair,
    DoubleImagPair,
    DoubleRealPair,
    ImagPairZeroPair,
    RealPairZeroPair,
    QuadrupleZero,
};

const char* config_name(ConfigTag t);

struct EigenConfig {
    ConfigTag tag;
    Quartet eigenvalues;
};

// 10-coefficient view of a quadratic Hamiltonian in the deterministic
// degree-2 monomial basis.
using QuadCoeffs = std::array<double, 10>;
QuadCoeffs quad_coeffs(const PolyD& h2);
PolyD quad_poly(const QuadCoeffs& c);

// Constant matrix P with P Omega A0 = Omega A1 P and P^T Omega P = Omega,
// where A0/A1 are the Hessians of the standard and Williamson forms.
Mat4Q williamson_to_standard();

// Versal deformation charts. J0 is the Hamiltonian matrix of
//   p2^2/2 - p1 q2 + mu0 q1^2/2 + nu0 (q2^2/2 + 3/4 p2 q1),
// J1 the one of p2^2/2 - p1 q2 + nu1 q1^2/2 + mu1 p2 q1.
template <class K>
Mat4<K> versal_J0(const K& mu0, const K& nu0) {
    Poly<K> h = Poly<K>::monomial(mono(0, 0, 0, 2), K(1) / K(2));
    h.add_term(mono(0, 1, 1, 0), K(-1));
    h.add_term(mono(2, 0, 0, 0), mu0 / K(2));
    h.add_term(mono(0, 2, 0, 0), nu0 / K(2));
    h.add_term(mono(1, 0, 0, 1), K(3) * nu0 / K(4));
    return hamiltonian_matrix(h);
}

template <class K>
Mat4<K> versal_J1(const K& mu1, const K& nu1) {
    Poly<K> h = Poly<K>::monomial(mono(0, 0, 0, 2), K(1) / K(2));
    h.add_term(mono(0, 1, 1, 0), K(-1));
    h.add_term(mono(2, 0, 0, 0), nu1 / K(2));
    h.add_term(mono(1, 0, 0, 1), mu1);
    return hamiltonian_matrix(h);
}

// Parameter change (mu0, nu0) = phi(mu1, nu1) that conjugates the charts:
// (nu1 - 16/25 mu1^2, 4/5 mu1). The second component is +4/5 mu1; the
// conjugation J1 S = S J0(phi) and the eigenvalue trace identity both force
// this sign.
template <class K>
std::pair<K, K> phi_map(const K& mu1, const K& nu1) {
    return {nu1 - K(16) * mu1 * mu1 / K(25), K(4) * mu1 / K(5)};
}

// S(mu1, nu1): identity plus the two -2/5 mu1 entries; symplectic exactly
// and conjugates J1 to J0 along phi.
template <class K>
Mat4<K> versal_S(const K& mu1, const K& nu1) {
    (void)nu1;
    Mat4<K> s = Mat4<K>::identity();
    s(2, 1) = K(-2) * mu1 / K(5);
    s(3, 0) = K(-2) * mu1 / K(5);
    return s;
}

// Closed-form eigenvalues of the two charts (principal complex branches,
// symmetrized to exact +- pairs).
Quartet versal_J0_eigenvalues(double mu0, double nu0);
Quartet versal_J1_eigenvalues(double mu1, double nu1);

// Eigenvalues of an infinitesimally symplectic matrix via the even
// characteristic quartic lambda^4 + b lambda^2 + c with b = -tr(A^2)/2 and
// c = det A. Throws std::invalid_argument when A is not Hamiltonian within
// tol (scaled by max |entry|).
Quartet quartic_eigenvalues(const Mat4D& A, double tol = 1e-9);

// Configuration classifier; tol is absolute on real/imaginary parts,
// scale-corrected by max |lambda| when that exceeds 1. Throws on a multiset
// that is not closed under negation/conjugation within tolerance.
EigenConfig classify(const Quartet& eigs, double tol = 1e-9);

}  // namespace nilfold
