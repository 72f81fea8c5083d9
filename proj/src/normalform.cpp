#include "nilfold/normalform.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "nilfold/poisson.hpp"
#include "nilfold/qlinalg.hpp"

namespace nilfold {
namespace normalform {

PolyQ hopf_S_exact() {
    PolyQ s = PolyQ::monomial(mono(1, 0, 0, 1), rat(1));
    s.add_term(mono(0, 1, 1, 0), rat(-1));
    return s;
}
PolyQ hopf_N_exact() {
    PolyQ n = PolyQ::monomial(mono(2, 0, 0, 0), rat(1, 2));
    n.add_term(mono(0, 2, 0, 0), rat(1, 2));
    return n;
}
PolyQ hopf_M_exact() {
    PolyQ m = PolyQ::monomial(mono(0, 0, 2, 0), rat(1, 2));
    m.add_term(mono(0, 0, 0, 2), rat(1, 2));
    return m;
}
static PolyQ hopf_T_exact() {
    PolyQ t = PolyQ::monomial(mono(1, 0, 1, 0), rat(1));
    t.add_term(mono(0, 1, 0, 1), rat(1));
    return t;
}

HopfBasis hopf_basis() {
    return {hopf_S_exact().converted<double>(), hopf_N_exact().converted<double>(),
            hopf_M_exact().converted<double>(), hopf_T_exact().converted<double>()};
}

PolyD shift_to_equilibrium(const PolyD& H, const Vec4& xstar) {
    return H.shifted(xstar).drop_x_constants();
}

PolyD apply_linear(const PolyD& H, const Mat4D& P) {
    if (!is_symplectic(P, 1e-9))
        throw std::invalid_argument("apply_linear: matrix is not symplectic within 1e-9");
    return H.substituted_linear(P.as_rows());
}

namespace {

using Cplx = std::complex<double>;

// Complex rotation eigenbasis w = (w1, w1bar, z, zbar) with
// w1 = q1 + i q2, z = p1 + i p2. ad_S is diagonal there with eigenvalue
// i (e1 + e3 - e0 - e2) on a w-monomial.
std::array<std::array<Cplx, 4>, 4> to_w_matrix() {
    const Cplx I(0, 1);
    return {{{0.5, 0.5, 0, 0}, {-0.5 * I, 0.5 * I, 0, 0}, {0, 0, 0.5, 0.5}, {0, 0, -0.5 * I, 0.5 * I}}};
}
std::array<std::array<Cplx, 4>, 4> from_w_matrix() {
    const Cplx I(0, 1);
    return {{{1, I, 0, 0}, {1, -I, 0, 0}, {0, 0, 1, I}, {0, 0, 1, -I}}};
}

int s_weight(const Monomial& m) { return m.e[1] + m.e[3] - m.e[0] - m.e[2]; }

// Poisson bracket in the w variables: {w1, zbar} = {w1bar, z} = 2, rest 0.
PolyC poisson_bracket_w(const PolyC& f, const PolyC& g) {
    PolyC r;
    r += f.derivative(0) * g.derivative(3) * Cplx(2);
    r -= f.derivative(3) * g.derivative(0) * Cplx(2);
    r += f.derivative(1) * g.derivative(2) * Cplx(2);
    r -= f.derivative(2) * g.derivative(1) * Cplx(2);
    return r;
}

PolyD realified(const PolyC& p, double tol_scale) {
    PolyD out;
    double imax = 0;
    for (const auto& [m, c] : p.terms()) {
        imax = std::max(imax, std::abs(c.imag()));
        if (c.real() != 0.0) out.add_term(m, c.real());
    }
    if (imax > 1e-9 * std::max(1.0, tol_scale))
        throw std::logic_error("normalize: complex residue while realifying generator");
    return out;
}

// Step-1 generator for one (x-degree, beta-power) block: the unique solution
// of {omega~ S + N, f} = -R_im with f supported on the nonzero ad_S
// eigenspaces. Solved by a Neumann iteration around the diagonal ad_{omega~ S}.
PolyD step1_generator(const PolyD& block, double omega_tilde, const PolyC& Nw) {
    PolyC Rw = block.substituted_linear(to_w_matrix());
    PolyC Rim;
    for (const auto& [m, c] : Rw.terms())
        if (s_weight(m) != 0) Rim.add_term(m, c);
    if (Rim.is_zero()) return {};

    auto div_D = [&](const PolyC& p) {
        PolyC out;
        for (const auto& [m, c] : p.terms()) {
            int k = s_weight(m);
            if (k == 0) continue;
            double denom = omega_tilde * k;
            if (std::abs(denom) < 1e-12)
                throw std::domain_error("normalize: resonant small denominator at monomial " +
                                        mono_to_string(m));
            out.add_term(m, c / (Cplx(0, 1) * denom));
        }
        return out;
    };

    // f = D^-1(-R_im - ad_N f), iterated; ad_N is nilpotent on each block so
    // the iteration closes after a few passes.
    PolyC f = div_D(-Rim);
    const double scale = std::max(1.0, Rim.max_abs_coeff());
    for (int it = 0; it < 24; ++it) {
        PolyC resid = -Rim - poisson_bracket_w(Nw, f) * Cplx(1) -
                      [&] {
                          PolyC d;
                          for (const auto& [m, c] : f.terms())
                              d.add_term(m, c * Cplx(0, 1) * (omega_tilde * s_weight(m)));
                          return d;
                      }();
        resid = resid.chopped(1e-15 * scale);
        if (resid.max_abs_coeff() <= 1e-13 * scale) break;
        f += div_D(resid);
    }
    PolyC fx = f.substituted_linear(from_w_matrix());
    return realified(fx, fx.max_abs_coeff()).chopped(1e-16 * scale);
}

// Exact frame for one x-degree: kernel of ad_S split into kept directions
// and the image of ad_N, plus the im ad_S complement; inverse stored for
// coordinate extraction.
struct KernelFrame {
    int degree = 0;
    std::vector<PolyQ> kept;
    std::vector<PolyQ> removable_src;  // f with ad_N f = removable direction
    std::vector<PolyQ> removable;
    std::vector<PolyQ> im_s;
    std::vector<std::vector<double>> inv_rows;  // F^{-1} as doubles, row i = coords functional
    int dim = 0;

    std::vector<double> coordinates(const PolyD& p) const {
        auto basis = homogeneous_basis(degree);
        std::vector<double> v(basis.size());
        for (std::size_t i = 0; i < basis.size(); ++i) v[i] = p.coeff(basis[i]);
        std::vector<double> out(inv_rows.size());
        for (std::size_t i = 0; i < inv_rows.size(); ++i) {
            double s = 0;
            for (std::size_t j = 0; j < v.size(); ++j) s += inv_rows[i][j] * v[j];
            out[i] = s;
        }
        return out;
    }
};

const KernelFrame& kernel_frame(int m) {
    static std::map<int, KernelFrame> cache;
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;

    KernelFrame fr;
    fr.degree = m;
    fr.dim = poly_space_dim(m);
    PolyQ S = hopf_S_exact(), N = hopf_N_exact(), M = hopf_M_exact(), T = hopf_T_exact();

    if (m == 2) {
        fr.kept = {S, N, M};
        fr.removable_src = {M};
        fr.removable = {poisson_bracket(N, M)};  // = T
    } else {
        // kept: products S^a M^b with 2(a+b) = m (lowest-weight vectors)
        for (int a = m / 2; a >= 0; --a) {
            PolyQ p(rat(1));
            for (int i = 0; i < a; ++i) p = p * S;
            for (int i = 0; i < m / 2 - a; ++i) p = p * M;
            fr.kept.push_back(p);
        }
        GradedOperator adS = ad_matrix(S, m);
        auto ker = kernel_basis(adS);
        // removable = independent columns of ad_N restricted to the kernel
        MatQ img(fr.dim, static_cast<int>(ker.size()));
        std::vector<PolyQ> images;
        for (std::size_t j = 0; j < ker.size(); ++j) {
            PolyQ b = poisson_bracket(N, ker[j]);
            images.push_back(b);
            auto v = poly_to_vector(b, m);
            for (int i = 0; i < fr.dim; ++i) img(i, static_cast<int>(j)) = v[i];
        }
        for (int col : image_column_indices(img)) {
            fr.removable_src.push_back(ker[col]);
            fr.removable.push_back(images[col]);
        }
    }
    {
        GradedOperator adS = ad_matrix(hopf_S_exact(), m);
        fr.im_s = image_basis(adS);
    }
    const int total = static_cast<int>(fr.kept.size() + fr.removable.size() + fr.im_s.size());
    if (total != fr.dim) throw std::logic_error("kernel_frame: dimension mismatch");
    MatQ F(fr.dim, fr.dim);
    int col = 0;
    auto put = [&](const PolyQ& p) {
        auto v = poly_to_vector(p, m);
        for (int i = 0; i < fr.dim; ++i) F(i, col) = v[i];
        ++col;
    };
    for (const auto& p : fr.kept) put(p);
    for (const auto& p : fr.removable) put(p);
    for (const auto& p : fr.im_s) put(p);
    // exact inverse via RREF on [F | I]
    MatQ aug(fr.dim, 2 * fr.dim);
    for (int i = 0; i < fr.dim; ++i) {
        for (int j = 0; j < fr.dim; ++j) aug(i, j) = F(i, j);
        aug(i, fr.dim + i) = 1;
    }
    Rref rr = rref(std::move(aug));
    if (rr.rank != fr.dim) throw std::logic_error("kernel_frame: frame is singular");
    fr.inv_rows.assign(fr.dim, std::vector<double>(fr.dim));
    for (int i = 0; i < fr.dim; ++i)
        for (int j = 0; j < fr.dim; ++j) fr.inv_rows[i][j] = rr.mat(i, fr.dim + j).get_d();

    return cache.emplace(m, std::move(fr)).first->second;
}

void attach_beta(PolyD& p, int betapow) {
    PolyD out;
    for (const auto& [m, c] : p.terms()) {
        Monomial mb = m;
        mb.e[4] = static_cast<std::uint8_t>(betapow);
        out.add_term(mb, c);
    }
    p = out;
}

PolyD strip_beta(const PolyD& p) {
    PolyD out;
    for (const auto& [m, c] : p.terms()) {
        Monomial mb = m;
        mb.e[4] = 0;
        out.add_term(mb, c);
    }
    return out;
}

// Step-2 generator for one block: cancels the removable kernel component.
PolyD step2_generator(const PolyD& block, int m, int betapow) {
    if (m % 2 != 0 || m < 2 || m > 6) return {};
    const KernelFrame& fr = kernel_frame(m);
    auto coords = fr.coordinates(strip_beta(block));
    const std::size_t off = fr.kept.size();
    PolyD gen;
    for (std::size_t i = 0; i < fr.removable.size(); ++i) {
        double g = coords[off + i];
        if (g == 0.0) continue;
        PolyD src = fr.removable_src[i].converted<double>();
        PolyD shifted;
        for (const auto& [mm, cc] : src.terms()) {
            Monomial mb = mm;
            mb.e[4] = static_cast<std::uint8_t>(betapow);
            shifted.add_term(mb, cc);
        }
        gen += shifted * (-g);
    }
    return gen;
}

}  // namespace

NormalizeResult normalize(const GradedHamiltonian& H, const PolyD& S, const PolyD& N,
                          int max_graded_degree) {
    const int G = max_graded_degree;
    PolyD cur = H.poly.truncate_graded(G).drop_x_constants();

    // quadratic part must be omega~ S + N
    PolyD quad = cur.block_part(2, 0);
    double s_unit = S.coeff(mono(1, 0, 0, 1));
    if (s_unit == 0.0) throw std::invalid_argument("normalize: S must contain q1 p2");
    double omega_tilde = quad.coeff(mono(1, 0, 0, 1)) / s_unit;
    PolyD defect = quad - S * omega_tilde - N;
    if (defect.max_abs_coeff() > 1e-9 * std::max(1.0, quad.max_abs_coeff()))
        throw std::invalid_argument("normalize: quadratic part is not omega S + N");

    PolyC Nw = N.substituted_linear(to_w_matrix());

    NormalizeResult out;
    for (int g = 3; g <= G; ++g) {
        // step 1: kill the im ad_S component of every block of grade g
        PolyD gen1;
        PolyD part = cur.graded_part(g);
        for (int j = 0; 2 * j <= g; ++j) {
            int m = g - 2 * j;
            if (m < 1) continue;
            PolyD block = part.block_part(m, j);
            if (block.is_zero()) continue;
            PolyD f = step1_generator(block, omega_tilde, Nw);
            if (f.is_zero()) continue;
            attach_beta(f, j);
            gen1 += f;
        }
        if (!gen1.is_zero()) {
            cur = lie_transform(cur, gen1, G);
            out.generators.push_back(gen1);
        }
        // step 2: kill the removable kernel component
        PolyD gen2;
        part = cur.graded_part(g);
        for (int j = 0; 2 * j <= g; ++j) {
            int m = g - 2 * j;
            if (m < 2 || m % 2 != 0) continue;
            PolyD block = part.block_part(m, j);
            if (block.is_zero()) continue;
            PolyD f = step2_generator(block, m, j);
            gen2 += f;
        }
        if (!gen2.is_zero()) {
            cur = lie_transform(cur, gen2, G);
            out.generators.push_back(gen2);
        }
    }
    // chop floating junk per (x-degree, beta) block; magnitudes differ by
    // orders between blocks, so one global threshold would not do
    PolyD cleaned;
    for (int g = 2; g <= G; ++g)
        for (int j = 0; 2 * j <= g; ++j) {
            PolyD block = cur.block_part(g - 2 * j, j);
            cleaned += block.chopped(1e-13 * std::max(1e-30, block.max_abs_coeff()));
        }
    out.K.poly = cleaned;
    out.K.max_graded_degree = G;
    out.K.normalized = true;
    return out;
}

double extract_m2_coefficient(const GradedHamiltonian& K) {
    if (!K.normalized || K.max_graded_degree < 4)
        throw std::invalid_argument("extract_m2_coefficient: not normalized through degree 4");
    const KernelFrame& fr = kernel_frame(4);
    auto coords = fr.coordinates(strip_beta(K.poly.block_part(4, 0)));
    // kept order at degree 4: S^2, S M, M^2
    return coords[2];
}

Report extract_report(const GradedHamiltonian& K) {
    Report rep;
    const KernelFrame& f2 = kernel_frame(2);
    for (int j = 0; j <= 2; ++j) {
        PolyD block = K.poly.block_part(2, j);
        auto coords = f2.coordinates(strip_beta(block));
        rep.S[j] = coords[0];
        rep.N[j] = coords[1];
        rep.M[j] = coords[2];
    }
    rep.omega_tilde = rep.S[0];
    if (K.max_graded_degree >= 4 && K.normalized) {
        const KernelFrame& f4 = kernel_frame(4);
        auto coords = f4.coordinates(strip_beta(K.poly.block_part(4, 0)));
        rep.S2 = coords[0];
        rep.SM = coords[1];
        rep.M2 = coords[2];
    }
    return rep;
}

PipelineResult hopf_pipeline(double nu, double q0, const CubicCoeffs& c, int max_graded_degree) {
    PipelineResult res;
    res.omega = hopf_frequency(nu, q0, c);
    res.mu_h = hopf_mu(nu, q0, c);

    ParamsKMN p{kappa_of(res.mu_h, nu, q0, c), res.mu_h, nu};
    PolyD H = hamiltonian(p, c);
    // mu = mu_h + beta with kappa(mu) re-adjusted: kappa is linear in mu with
    // slope -q0, so the beta part is beta (q1^2/2 - q0 q1).
    PolyD betapart = PolyD::monomial(mono(2, 0, 0, 0, 1), 0.5);
    betapart.add_term(mono(1, 0, 0, 0, 1), -q0);
    H += betapart;

    Vec4 xstar = equilibrium_from_q0(q0, res.mu_h, nu, c);
    H = shift_to_equilibrium(H, xstar);
    H = apply_linear(H, hopf_transform(nu, q0, c));

    GradedHamiltonian gh{H.truncate_graded(max_graded_degree), max_graded_degree, false};
    HopfBasis basis = hopf_basis();
    res.nf = normalize(gh, basis.S, basis.N, max_graded_degree);
    res.report = extract_report(res.nf.K);
    res.report.omega = res.omega;
    return res;
}

}  // namespace normalform
}  // namespace nilfold
