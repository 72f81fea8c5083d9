#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nilfold/polynomial.hpp"
#include "nilfold/qlinalg.hpp"

namespace nilfold {

// ---- canonical quadratic forms and the kernel generators ----------------

// Standard normal form H0 = p2^2/2 - p1 q2.
PolyQ standard_form();
// Williamson normal form H1 = p1^2/2 - q1 q2 - p1 q2.
PolyQ williamson_form();
// The four generators g1 = q1, g2 = q2^2/2 + 3/4 p2 q1, g3 cubic, g4 quartic.
std::vector<PolyQ> kernel_generators();

// ---- graded operators ----------------------------------------------------

// Matrix of ad_f restricted to the homogeneous x-polynomials of degree
// source_degree, in the deterministic monomial basis. Columns follow
// homogeneous_basis(source_degree), rows homogeneous_basis(target_degree).
struct GradedOperator {
    int source_degree = 0;
    int target_degree = 0;
    MatQ matrix;
};

GradedOperator ad_matrix(const PolyQ& f, int n);

std::vector<PolyQ> kernel_basis(const GradedOperator& op);
std::vector<PolyQ> image_basis(const GradedOperator& op);

// Coefficient vector of a homogeneous polynomial in the deterministic basis.
std::vector<Rational> poly_to_vector(const PolyQ& p, int degree);
PolyQ vector_to_poly(const std::vector<Rational>& v, int degree);

// ---- sl(2,R) triple -------------------------------------------------------

// Finds quadratics (M, T) with {N,M} = T, {N,T} = 2N, {M,T} = -2M for a
// nilpotent quadratic N, by the staged exact solve described in the README.
// Throws std::runtime_error("sl2 embedding not found") when the staged
// elimination fails.
std::pair<PolyQ, PolyQ> sl2_triple(const PolyQ& N);

// ---- normal-form complement report ----------------------------------------

struct ComplementReport {
    int degree = 0;
    int dim_space = 0;       // dim P_n
    int dim_span = 0;        // span of degree-n generator products
    int dim_image = 0;       // dim im ad_{H2} | P_n
    bool trivial_intersection = false;
    bool complement = false; // dim_span + dim_image == dim_space and trivial intersection
    std::vector<PolyQ> span_basis;
};

ComplementReport normal_form_complement(const PolyQ& N, int n,
                                        const std::vector<PolyQ>& generators);

// ---- Lie transform ---------------------------------------------------------

// exp(-ad_f) H = H + {H,f} + 1/2 {{H,f},f} + ... truncated to graded degree
// max_degree. Requires every term of f to have graded degree >= 3, which
// makes the series finite per grade. This equals H composed with the time-1
// Hamiltonian flow of f.
template <class K>
Poly<K> lie_transform(const Poly<K>& H, const Poly<K>& f, int max_degree) {
    if (!f.is_zero() && f.min_graded_degree() <= 2)
        throw std::invalid_argument("lie_transform: generator has terms of graded degree <= 2");
    Poly<K> out = H.truncate_graded(max_degree);
    Poly<K> term = out;
    for (int n = 1; !term.is_zero(); ++n) {
        term = poisson_bracket(term, f).truncate_graded(max_degree);
        term *= K(1) / K(n);
        out += term;
        if (n > 4 * (max_degree + 1)) break;  // unreachable for valid f
    }
    return out;
}

// Splits a homogeneous R of degree n as R + {H2, f} = residual with residual
// in the span of `complement`. The sign convention is fixed so that
// lie_transform(H2 + R, f, n) has degree-n part equal to the residual.
// Throws when the complement does not span a complement of im ad_{H2}.
struct HomologicalSolution {
    PolyQ generator;
    PolyQ residual;
};
HomologicalSolution homological_solve(const PolyQ& H2, const PolyQ& R, int n,
                                      const std::vector<PolyQ>& complement);

}  // namespace nilfold
