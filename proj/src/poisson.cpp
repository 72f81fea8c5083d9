#include "nilfold/poisson.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

namespace nilfold {

PolyQ standard_form() {
    PolyQ h = PolyQ::monomial(mono(0, 0, 0, 2), rat(1, 2));
    h.add_term(mono(0, 1, 1, 0), rat(-1));
    return h;
}

PolyQ williamson_form() {
    PolyQ h = PolyQ::monomial(mono(0, 0, 2, 0), rat(1, 2));
    h.add_term(mono(1, 1, 0, 0), rat(-1));
    h.add_term(mono(0, 1, 1, 0), rat(-1));
    return h;
}

std::vector<PolyQ> kernel_generators() {
    PolyQ g1 = PolyQ::variable(0);
    PolyQ g2 = PolyQ::monomial(mono(0, 2, 0, 0), rat(1, 2));
    g2.add_term(mono(1, 0, 0, 1), rat(3, 4));
    PolyQ g3 = PolyQ::monomial(mono(2, 0, 1, 0), rat(3, 2));
    g3.add_term(mono(1, 1, 0, 1), rat(3, 2));
    g3.add_term(mono(0, 3, 0, 0), rat(2, 3));
    PolyQ g4 = PolyQ::monomial(mono(2, 0, 2, 0), rat(3, 4));
    g4.add_term(mono(1, 1, 1, 1), rat(3, 2));
    g4.add_term(mono(1, 0, 0, 3), rat(-1, 2));
    g4.add_term(mono(0, 3, 1, 0), rat(2, 3));
    g4.add_term(mono(0, 2, 0, 2), rat(-1, 4));
    return {g1, g2, g3, g4};
}

std::vector<Rational> poly_to_vector(const PolyQ& p, int degree) {
    auto basis = homogeneous_basis(degree);
    std::vector<Rational> v(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) v[i] = p.coeff(basis[i]);
    return v;
}

PolyQ vector_to_poly(const std::vector<Rational>& v, int degree) {
    auto basis = homogeneous_basis(degree);
    PolyQ p;
    for (std::size_t i = 0; i < basis.size() && i < v.size(); ++i) p.add_term(basis[i], v[i]);
    return p;
}

GradedOperator ad_matrix(const PolyQ& f, int n) {
    if (!f.is_x_homogeneous()) throw std::invalid_argument("ad_matrix: f must be homogeneous");
    if (n < 0) throw std::invalid_argument("ad_matrix: negative degree");
    const int df = f.is_zero() ? 2 : f.max_degree();
    const int target = std::max(n + df - 2, 0);
    GradedOperator op;
    op.source_degree = n;
    op.target_degree = target;
    auto src = homogeneous_basis(n);
    auto dst = homogeneous_basis(target);
    std::map<Monomial, int> dst_index;
    for (std::size_t i = 0; i < dst.size(); ++i) dst_index[dst[i]] = static_cast<int>(i);
    op.matrix = MatQ(static_cast<int>(dst.size()), static_cast<int>(src.size()));
    for (std::size_t j = 0; j < src.size(); ++j) {
        PolyQ b = poisson_bracket(f, PolyQ::monomial(src[j], rat(1)));
        for (const auto& [m, c] : b.terms()) {
            auto it = dst_index.find(m);
            if (it == dst_index.end()) throw std::logic_error("ad_matrix: degree bookkeeping");
            op.matrix(it->second, static_cast<int>(j)) = c;
        }
    }
    return op;
}

std::vector<PolyQ> kernel_basis(const GradedOperator& op) {
    std::vector<PolyQ> out;
    for (const auto& v : kernel_vectors(op.matrix)) out.push_back(vector_to_poly(v, op.source_degree));
    return out;
}

std::vector<PolyQ> image_basis(const GradedOperator& op) {
    std::vector<PolyQ> out;
    for (int col : image_column_indices(op.matrix)) {
        std::vector<Rational> v(op.matrix.rows());
        for (int r = 0; r < op.matrix.rows(); ++r) v[r] = op.matrix(r, col);
        out.push_back(vector_to_poly(v, op.target_degree));
    }
    return out;
}

// ---- sl2 triple ------------------------------------------------------------

namespace {

// A multivariate polynomial in the unknowns c_0..c_{r-1} of degree <= 2,
// with rational coefficients: constant + linear + quadratic (upper triangle).
struct QuadExpr {
    Rational c0;
    std::vector<Rational> lin;
    std::vector<std::vector<Rational>> quad;  // quad[i][j], i <= j

    explicit QuadExpr(int r) : lin(r), quad(r, std::vector<Rational>(r)) {}
    bool is_zero() const {
        if (c0 != 0) return false;
        for (const auto& v : lin)
            if (v != 0) return false;
        for (const auto& row : quad)
            for (const auto& v : row)
                if (v != 0) return false;
        return true;
    }
    bool is_constant() const {
        QuadExpr z = *this;
        z.c0 = 0;
        return z.is_zero();
    }
    bool is_linear() const {
        for (const auto& row : quad)
            for (const auto& v : row)
                if (v != 0) return false;
        return true;
    }
    // substitute c_k = affine expression (constant + linear in the others)
    void substitute(int k, const QuadExpr& expr) {
        const int r = static_cast<int>(lin.size());
        // quadratic terms involving c_k: c_k*c_j and c_k^2
        // new = old(with c_k replaced); expr must be affine
        QuadExpr out(r);
        out.c0 = c0;
        out.lin = lin;
        out.quad = quad;
        // remove k-occurrences and re-add expanded
        out.lin[k] = 0;
        Rational lk = lin[k];
        // linear part: lk * expr
        out.c0 += lk * expr.c0;
        for (int j = 0; j < r; ++j) out.lin[j] += lk * expr.lin[j];
        // quadratic terms
        for (int i = 0; i < r; ++i)
            for (int j = i; j < r; ++j) {
                Rational q = quad[i][j];
                if (q == 0) continue;
                if (i != k && j != k) continue;
                out.quad[i][j] = 0;
                if (i == k && j == k) {
                    // q * expr^2
                    out.c0 += q * expr.c0 * expr.c0;
                    for (int a = 0; a < r; ++a) out.lin[a] += 2 * q * expr.c0 * expr.lin[a];
                    for (int a = 0; a < r; ++a)
                        for (int b = a; b < r; ++b) {
                            Rational t = q * expr.lin[a] * expr.lin[b];
                            if (a != b) t *= 2;
                            out.quad[a][b] += t;
                        }
                } else {
                    int other = (i == k) ? j : i;
                    // q * c_other * expr
                    out.lin[other] += q * expr.c0;
                    for (int a = 0; a < r; ++a) {
                        int lo = std::min(other, a), hi = std::max(other, a);
                        out.quad[lo][hi] += q * expr.lin[a];
                    }
                }
            }
        *this = out;
    }
    void eliminate_var(int k) {  // after substitution the variable is gone
        lin[k] = 0;
        for (std::size_t i = 0; i < quad.size(); ++i) {
            quad[i][k] = 0;
            quad[k][i] = 0;
        }
    }
};

}  // namespace

std::pair<PolyQ, PolyQ> sl2_triple(const PolyQ& N) {
    if (!N.is_x_homogeneous() || N.max_degree() != 2)
        throw std::invalid_argument("sl2_triple: N must be a quadratic form");
    // Stage 1: ad_N^2 M = 2N, linear in the 10 coefficients of M.
    GradedOperator ad2 = ad_matrix(N, 2);
    MatQ A2 = ad2.matrix * ad2.matrix;
    std::vector<Rational> rhs = poly_to_vector(N, 2);
    for (auto& v : rhs) v *= 2;
    auto particular = solve(A2, rhs);
    if (!particular) throw std::runtime_error("sl2 embedding not found");
    auto ker = kernel_vectors(A2);
    const int r = static_cast<int>(ker.size());

    PolyQ Mp = vector_to_poly(*particular, 2);
    std::vector<PolyQ> K(r);
    for (int i = 0; i < r; ++i) K[i] = vector_to_poly(ker[i], 2);

    // Residual R(c) = {M(c), {N, M(c)}} + 2 M(c) with M(c) = Mp + sum c_i K_i.
    PolyQ Tp = poisson_bracket(N, Mp);
    std::vector<PolyQ> U(r);
    for (int i = 0; i < r; ++i) U[i] = poisson_bracket(N, K[i]);

    auto basis = homogeneous_basis(2);
    const int nb = static_cast<int>(basis.size());
    std::vector<QuadExpr> eqs(nb, QuadExpr(r));
    auto accumulate = [&](const PolyQ& p, auto&& write) {
        for (const auto& [m, c] : p.terms()) {
            int idx = static_cast<int>(std::lower_bound(basis.begin(), basis.end(), m) - basis.begin());
            write(idx, c);
        }
    };
    PolyQ constant_part = poisson_bracket(Mp, Tp) + Mp * rat(2);
    accumulate(constant_part, [&](int idx, const Rational& c) { eqs[idx].c0 += c; });
    for (int i = 0; i < r; ++i) {
        PolyQ lin_i = poisson_bracket(Mp, U[i]) + poisson_bracket(K[i], Tp) + K[i] * rat(2);
        accumulate(lin_i, [&](int idx, const Rational& c) { eqs[idx].lin[i] += c; });
        for (int j = 0; j < r; ++j) {
            PolyQ quad_ij = poisson_bracket(K[i], U[j]);
            int lo = std::min(i, j), hi = std::max(i, j);
            accumulate(quad_ij, [&](int idx, const Rational& c) { eqs[idx].quad[lo][hi] += c; });
        }
    }

    // Stage 2: staged elimination. Repeatedly solve equations that are affine
    // in some unknown, substitute everywhere; afterwards set the remaining
    // free unknowns to zero and verify. The zero choice realizes the
    // minimal-support tie-break for the solution family.
    std::vector<std::optional<QuadExpr>> assigned(r);
    std::vector<bool> is_assigned(r, false);
    bool progress = true;
    while (progress) {
        progress = false;
        for (auto& e : eqs) {
            if (e.is_zero()) continue;
            if (e.is_constant()) throw std::runtime_error("sl2 embedding not found");
            if (!e.is_linear()) continue;
            int k = -1;
            for (int i = 0; i < r; ++i)
                if (!is_assigned[i] && e.lin[i] != 0) {
                    k = i;
                    break;
                }
            if (k < 0) continue;
            QuadExpr expr(r);
            Rational inv = e.lin[k];
            expr.c0 = -e.c0 / inv;
            for (int j = 0; j < r; ++j)
                if (j != k) expr.lin[j] = -e.lin[j] / inv;
            for (auto& other : eqs) other.substitute(k, expr);
            for (auto& a : assigned)
                if (a) a->substitute(k, expr);
            assigned[k] = expr;
            is_assigned[k] = true;
            progress = true;
            break;
        }
    }
    // set free unknowns to zero
    std::vector<Rational> cval(r);
    for (int k = 0; k < r; ++k)
        if (is_assigned[k]) cval[k] = assigned[k]->c0;  // free vars contribute 0
    // final M and verification
    PolyQ M = Mp;
    for (int i = 0; i < r; ++i) M += K[i] * cval[i];
    PolyQ T = poisson_bracket(N, M);
    PolyQ r1 = poisson_bracket(N, M) - T;
    PolyQ r2 = poisson_bracket(N, T) - N * rat(2);
    PolyQ r3 = poisson_bracket(M, T) + M * rat(2);
    if (!r1.is_zero() || !r2.is_zero() || !r3.is_zero())
        throw std::runtime_error("sl2 embedding not found");
    return {M, T};
}

// ---- complement report -----------------------------------------------------

namespace {

// all products of the generators with total degree n (generator i has degree i+1)
void product_rec(const std::vector<PolyQ>& gens, int idx, int remaining, PolyQ current,
                 std::vector<PolyQ>& out) {
    if (remaining == 0) {
        out.push_back(current);
        return;
    }
    if (idx >= static_cast<int>(gens.size())) return;
    int d = idx + 1;
    product_rec(gens, idx + 1, remaining, current, out);
    if (remaining >= d) product_rec(gens, idx, remaining - d, current * gens[idx], out);
}

}  // namespace

ComplementReport normal_form_complement(const PolyQ& N, int n, const std::vector<PolyQ>& generators) {
    ComplementReport rep;
    rep.degree = n;
    rep.dim_space = poly_space_dim(n);

    std::vector<PolyQ> products;
    product_rec(generators, 0, n, PolyQ(rat(1)), products);

    GradedOperator op = ad_matrix(N, n);
    auto img = image_basis(op);
    rep.dim_image = static_cast<int>(img.size());

    // Span matrix of the products.
    MatQ span(rep.dim_space, static_cast<int>(products.size()));
    for (std::size_t j = 0; j < products.size(); ++j) {
        auto v = poly_to_vector(products[j], n);
        for (int i = 0; i < rep.dim_space; ++i) span(i, static_cast<int>(j)) = v[i];
    }
    Rref span_r = rref(span);
    rep.dim_span = span_r.rank;
    for (int col : span_r.pivot_cols) rep.span_basis.push_back(products[col]);

    // rank [span | image] == dim_span + dim_image  <=>  trivial intersection.
    MatQ joint(rep.dim_space, rep.dim_span + rep.dim_image);
    for (int j = 0; j < rep.dim_span; ++j) {
        auto v = poly_to_vector(rep.span_basis[j], n);
        for (int i = 0; i < rep.dim_space; ++i) joint(i, j) = v[i];
    }
    for (int j = 0; j < rep.dim_image; ++j) {
        auto v = poly_to_vector(img[j], n);
        for (int i = 0; i < rep.dim_space; ++i) joint(i, rep.dim_span + j) = v[i];
    }
    rep.trivial_intersection = rank_of(joint) == rep.dim_span + rep.dim_image;
    rep.complement = rep.trivial_intersection && rep.dim_span + rep.dim_image == rep.dim_space;
    return rep;
}

// ---- homological equation ---------------------------------------------------

HomologicalSolution homological_solve(const PolyQ& H2, const PolyQ& R, int n,
                                      const std::vector<PolyQ>& complement) {
    if (!R.is_zero() && !R.is_homogeneous(n))
        throw std::invalid_argument("homological_solve: R must be homogeneous of degree n");
    GradedOperator op = ad_matrix(H2, n);
    if (op.target_degree != n)
        throw std::invalid_argument("homological_solve: H2 must be quadratic");
    const int dim = poly_space_dim(n);
    const int nc = static_cast<int>(complement.size());
    // Choose f, r with {H2, f} = residual - R, residual = sum r_i complement_i:
    //   A f - C r = -R.
    MatQ sys(dim, dim + nc);
    for (int j = 0; j < dim; ++j)
        for (int i = 0; i < dim; ++i) sys(i, j) = op.matrix(i, j);
    for (int j = 0; j < nc; ++j) {
        auto v = poly_to_vector(complement[j], n);
        for (int i = 0; i < dim; ++i) sys(i, dim + j) = -v[i];
    }
    std::vector<Rational> rhs = poly_to_vector(R, n);
    for (auto& v : rhs) v = -v;
    auto sol = solve(sys, rhs);
    if (!sol) throw std::invalid_argument("homological_solve: complement does not span a complement");
    HomologicalSolution out;
    out.generator = vector_to_poly(std::vector<Rational>(sol->begin(), sol->begin() + dim), n);
    PolyQ residual;
    for (int j = 0; j < nc; ++j) residual += complement[j] * (*sol)[dim + j];
    out.residual = residual;
    return out;
}

}  // namespace nilfold
