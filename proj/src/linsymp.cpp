#include "nilfold/linsymp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nilfold {

const char* config_name(ConfigTag t) {
    switch (t) {
        case ConfigTag::ComplexQuartet: return "ComplexQuartet";
        case ConfigTag::TwoImagPairs: return "TwoImagPairs";
        case ConfigTag::TwoRealPairs: return "TwoRealPairs";
        case ConfigTag::ImagPairRealPair: return "ImagPairRealPair";
        case ConfigTag::DoubleImagPair: return "DoubleImagPair";
        case ConfigTag::DoubleRealPair: return "DoubleRealPair";
        case ConfigTag::ImagPairZeroPair: return "ImagPairZeroPair";
        case ConfigTag::RealPairZeroPair: return "RealPairZeroPair";
        case ConfigTag::QuadrupleZero: return "QuadrupleZero";
    }
    return "?";
}

QuadCoeffs quad_coeffs(const PolyD& h2) {
    auto basis = homogeneous_basis(2);
    QuadCoeffs c{};
    for (int i = 0; i < 10; ++i) c[i] = h2.coeff(basis[i]);
    return c;
}

PolyD quad_poly(const QuadCoeffs& c) {
    auto basis = homogeneous_basis(2);
    PolyD p;
    for (int i = 0; i < 10; ++i) p.add_term(basis[i], c[i]);
    return p;
}

Mat4Q williamson_to_standard() {
    Mat4Q p;
    p(0, 1) = 1;
    p(0, 3) = -1;
    p(1, 2) = 1;
    p(2, 3) = 1;
    p(3, 0) = -1;
    return p;
}

namespace {

// +-sqrt(z1), +-sqrt(z2) from the two lambda^2 roots; pairs are exact by
// construction and conjugate-closed because principal sqrt commutes with
// conjugation away from the negative real axis (on it both roots are real
// or pure imaginary anyway).
Quartet quartet_from_squares(std::complex<double> z1, std::complex<double> z2) {
    std::complex<double> l1 = std::sqrt(z1);
    std::complex<double> l2 = std::sqrt(z2);
    return {l1, -l1, l2, -l2};
}

}  // namespace

Quartet versal_J0_eigenvalues(double mu0, double nu0) {
    std::complex<double> disc = std::sqrt(std::complex<double>(mu0 + nu0 * nu0, 0.0));
    std::complex<double> z1 = -1.25 * nu0 + disc;
    std::complex<double> z2 = -1.25 * nu0 - disc;
    return quartet_from_squares(z1, z2);
}

Quartet versal_J1_eigenvalues(double mu1, double nu1) {
    std::complex<double> disc = std::sqrt(std::complex<double>(nu1, 0.0));
    return quartet_from_squares(-mu1 + disc, -mu1 - disc);
}

Quartet quartic_eigenvalues(const Mat4D& A, double tol) {
    double scale = std::max(1.0, A.max_abs());
    if (hamiltonian_defect(A) > tol * scale)
        throw std::invalid_argument("quartic_eigenvalues: matrix is not Hamiltonian");
    double b = -0.5 * (A * A).trace();
    double c = A.det();
    // lambda^2 roots of t^2 + b t + c
    std::complex<double> disc = std::sqrt(std::complex<double>(b * b - 4.0 * c, 0.0));
    std::complex<double> t1 = 0.5 * (-b + disc);
    std::complex<double> t2 = 0.5 * (-b - disc);
    return quartet_from_squares(t1, t2);
}

EigenConfig classify(const Quartet& eigs, double tol) {
    double scale = 0.0;
    for (const auto& l : eigs) scale = std::max(scale, std::abs(l));
    const double eff = tol * std::max(1.0, scale);

    // precondition: closed under negation and conjugation within tol
    for (const auto& l : eigs) {
        auto has = [&](std::complex<double> target) {
            for (const auto& m : eigs)
                if (std::abs(m - target) <= 4 * eff) return true;
            return false;
        };
        if (!has(-l) || !has(std::conj(l)))
            throw std::invalid_argument("classify: eigenvalue multiset is not symmetric");
    }

    int zeros = 0;
    for (const auto& l : eigs)
        if (std::abs(l) <= eff) ++zeros;
    if (zeros >= 4) return {ConfigTag::QuadrupleZero, eigs};
    if (zeros >= 2) {
        // surviving pair: the largest-magnitude eigenvalue decides
        std::complex<double> big = eigs[0];
        for (const auto& l : eigs)
            if (std::abs(l) > std::abs(big)) big = l;
        ConfigTag t = std::abs(big.real()) <= eff ? ConfigTag::ImagPairZeroPair
                                                  : ConfigTag::RealPairZeroPair;
        return {t, eigs};
    }

    bool any_complex = false, all_real = true, all_imag = true;
    for (const auto& l : eigs) {
        bool re = std::abs(l.imag()) <= eff;
        bool im = std::abs(l.real()) <= eff;
        if (!re) all_real = false;
        if (!im) all_imag = false;
        if (!re && !im) any_complex = true;
    }
    if (any_complex) return {ConfigTag::ComplexQuartet, eigs};
    if (all_real) {
        double lo = 1e300, hi = 0;
        for (const auto& l : eigs) {
            lo = std::min(lo, std::abs(l));
            hi = std::max(hi, std::abs(l));
        }
        return {hi - lo <= 2 * eff ? ConfigTag::DoubleRealPair : ConfigTag::TwoRealPairs, eigs};
    }
    if (all_imag) {
        double lo = 1e300, hi = 0;
        for (const auto& l : eigs) {
            lo = std::min(lo, std::abs(l));
            hi = std::max(hi, std::abs(l));
        }
        return {hi - lo <= 2 * eff ? ConfigTag::DoubleImagPair : ConfigTag::TwoImagPairs, eigs};
    }
    return {ConfigTag::ImagPairRealPair, eigs};
}

}  // namespace nilfold
