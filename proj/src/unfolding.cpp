#include "nilfold/unfolding.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace nilfold {

PolyD hamiltonian(const ParamsKMN& p, const CubicCoeffs& c) {
    PolyD g2 = PolyD::monomial(mono(0, 2, 0, 0), 0.5);
    g2.add_term(mono(1, 0, 0, 1), 0.75);
    PolyD g3 = PolyD::monomial(mono(2, 0, 1, 0), 1.5);
    g3.add_term(mono(1, 1, 0, 1), 1.5);
    g3.add_term(mono(0, 3, 0, 0), 2.0 / 3.0);

    PolyD h = PolyD::monomial(mono(0, 0, 0, 2), 0.5);
    h.add_term(mono(0, 1, 1, 0), -1.0);
    h.add_term(mono(1, 0, 0, 0), p.kappa);
    h.add_term(mono(2, 0, 0, 0), p.mu / 2);
    h += g2 * p.nu;
    h.add_term(mono(3, 0, 0, 0), c.a1 / 6);
    h += (PolyD::variable(0) * g2) * c.a2;
    h += g3 * c.a3;
    return h;
}

Vec4 vector_field(const Vec4& x, const ParamsKMN& p, const CubicCoeffs& c) {
    const double q1 = x[0], q2 = x[1], p1 = x[2], p2 = x[3];
    Vec4 f;
    f[0] = 1.5 * c.a3 * q1 * q1 - q2;
    f[1] = p2 + 0.75 * p.nu * q1 + 0.75 * c.a2 * q1 * q1 + 1.5 * c.a3 * q1 * q2;
    f[2] = -p.kappa - 0.75 * p.nu * p2 - p.mu * q1 - 3.0 * c.a3 * p1 * q1 -
           1.5 * c.a2 * p2 * q1 - 0.5 * c.a1 * q1 * q1 - 1.5 * c.a3 * p2 * q2 -
           0.5 * c.a2 * q2 * q2;
    f[3] = p1 - 1.5 * c.a3 * p2 * q1 - p.nu * q2 - c.a2 * q1 * q2 - 2.0 * c.a3 * q2 * q2;
    return f;
}

Mat4D jacobian(const Vec4& x, const ParamsKMN& p, const CubicCoeffs& c) {
    // analytic derivative of the four displayed equations of motion; every
    // coefficient is a dyadic multiple of the inputs, so the entries are
    // exact at exactly-representable parameter points (the tests agree this
    // matches the Omega Hess H route)
    const double q1 = x[0], q2 = x[1], p1 = x[2], p2 = x[3];
    const double a1 = c.a1, a2 = c.a2, a3 = c.a3, nu = p.nu, mu = p.mu;
    Mat4D j;
    j(0, 0) = 3.0 * a3 * q1;
    j(0, 1) = -1.0;
    j(1, 0) = 0.75 * nu + 1.5 * a2 * q1 + 1.5 * a3 * q2;
    j(1, 1) = 1.5 * a3 * q1;
    j(1, 3) = 1.0;
    j(2, 0) = -mu - 3.0 * a3 * p1 - 1.5 * a2 * p2 - a1 * q1;
    j(2, 1) = -1.5 * a3 * p2 - a2 * q2;
    j(2, 2) = -3.0 * a3 * q1;
    j(2, 3) = -0.75 * nu - 1.5 * a2 * q1 - 1.5 * a3 * q2;
    j(3, 0) = -1.5 * a3 * p2 - a2 * q2;
    j(3, 1) = -nu - a2 * q1 - 4.0 * a3 * q2;
    j(3, 2) = 1.0;
    j(3, 3) = -1.5 * a3 * q1;
    return j;
}

Vec4 equilibrium_from_q0(double q0, double /*mu*/, double nu, const CubicCoeffs& c) {
    Vec4 s;
    s[0] = q0;
    s[1] = 1.5 * c.a3 * q0 * q0;
    s[2] = 0.375 * (c.a3 * nu * q0 * q0 + c.a2 * c.a3 * q0 * q0 * q0 +
                    3.0 * c.a3 * c.a3 * c.a3 * q0 * q0 * q0 * q0);
    s[3] = -0.75 * (nu * q0 + c.a2 * q0 * q0 + 3.0 * c.a3 * c.a3 * q0 * q0 * q0);
    return s;
}

double kappa_of(double mu, double nu, double q0, const CubicCoeffs& c) {
    const double a1 = c.a1, a2 = c.a2, a3 = c.a3;
    return 27.0 / 16 * std::pow(a3, 4) * std::pow(q0, 5) +
           45.0 / 16 * a2 * a3 * a3 * std::pow(q0, 4) +
           (9.0 / 4 * a3 * a3 * nu + 9.0 / 8 * a2 * a2) * std::pow(q0, 3) +
           (27.0 / 16 * a2 * nu - 0.5 * a1) * q0 * q0 + (9.0 / 16 * nu * nu - mu) * q0;
}

std::array<double, 6> equilibrium_poly_coeffs(const ParamsKMN& p, const CubicCoeffs& c) {
    const double a1 = c.a1, a2 = c.a2, a3 = c.a3;
    return {-p.kappa,
            9.0 / 16 * p.nu * p.nu - p.mu,
            27.0 / 16 * a2 * p.nu - 0.5 * a1,
            9.0 / 4 * a3 * a3 * p.nu + 9.0 / 8 * a2 * a2,
            45.0 / 16 * a2 * a3 * a3,
            27.0 / 16 * std::pow(a3, 4)};
}

namespace {

double poly_eval(const std::vector<double>& coeffs, double x) {
    double v = 0;
    for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) v = v * x + coeffs[i];
    return v;
}

double poly_eval_deriv(const std::vector<double>& coeffs, double x) {
    double v = 0;
    for (int i = static_cast<int>(coeffs.size()) - 1; i >= 1; --i) v = v * x + i * coeffs[i];
    return v;
}

}  // namespace

std::vector<EquilibriumRecord> solve_equilibria(const ParamsKMN& p, const CubicCoeffs& c,
                                                const Tolerances& tol) {
    auto arr = equilibrium_poly_coeffs(p, c);
    std::vector<double> coeffs(arr.begin(), arr.end());
    while (!coeffs.empty() && coeffs.back() == 0.0) coeffs.pop_back();
    if (coeffs.empty()) throw std::invalid_argument("identically satisfied");
    const int deg = static_cast<int>(coeffs.size()) - 1;

    std::vector<double> roots;
    if (deg >= 1) {
        // companion matrix of the monic polynomial
        Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(deg, deg);
        for (int i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
        for (int i = 0; i < deg; ++i) comp(i, deg - 1) = -coeffs[i] / coeffs[deg];
        Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
        double scale = 0;
        for (double v : coeffs) scale = std::max(scale, std::abs(v));
        for (int i = 0; i < deg; ++i) {
            std::complex<double> z = es.eigenvalues()[i];
            // complex Newton polish; plain Newton only halves the error per
            // step at a double root, so give it enough iterations
            for (int it = 0; it < 48; ++it) {
                std::complex<double> f(coeffs[deg]), fp(0);
                for (int k = deg - 1; k >= 0; --k) {
                    fp = fp * z + f;
                    f = f * z + coeffs[k];
                }
                if (std::abs(fp) < 1e-300) break;
                std::complex<double> step = f / fp;
                z -= step;
                if (std::abs(step) < 1e-16 * std::max(1.0, std::abs(z))) break;
            }
            if (std::abs(z.imag()) <= tol.root_imag * std::max(1.0, std::abs(z))) {
                double r = z.real();
                for (int it = 0; it < 24; ++it) {
                    double f = poly_eval(coeffs, r), df = poly_eval_deriv(coeffs, r);
                    if (std::abs(df) < 1e-300) break;
                    r -= f / df;
                }
                double resid = std::abs(poly_eval(coeffs, r));
                double rscale = scale * std::max(1.0, std::pow(std::abs(r), deg));
                if (resid <= 1e-9 * std::max(1e-30, rscale)) roots.push_back(r);
            }
        }
    }
    std::sort(roots.begin(), roots.end());

    std::vector<EquilibriumRecord> records;
    std::size_t i = 0;
    while (i < roots.size()) {
        std::size_t j = i + 1;
        while (j < roots.size() && std::abs(roots[j] - roots[j - 1]) <= tol.root_cluster) ++j;
        double q0 = 0;
        for (std::size_t k = i; k < j; ++k) q0 += roots[k];
        q0 /= static_cast<double>(j - i);
        EquilibriumRecord rec;
        rec.q0 = q0;
        rec.multiplicity = static_cast<int>(j - i);
        rec.state = equilibrium_from_q0(q0, p.mu, p.nu, c);
        EigQP e = eigenvalues_QP(p.mu, p.nu, q0, c);
        rec.Q = e.Q;
        rec.P = e.P;
        rec.eigenvalues = e.eigenvalues;
        rec.config = classify(e.eigenvalues).tag;
        records.push_back(rec);
        i = j;
    }
    return records;
}

EigQP eigenvalues_QP(double mu, double nu, double q0, const CubicCoeffs& c) {
    const double a1 = c.a1, a2 = c.a2, a3 = c.a3;
    EigQP out;
    out.Q = 3 * a3 * a3 * q0 * q0 - 16 * a2 * q0 - 10 * nu;
    out.P = -531 * std::pow(a3, 4) * std::pow(q0, 4) - 816 * a2 * a3 * a3 * std::pow(q0, 3) -
            492 * a3 * a3 * nu * q0 * q0 + 40 * a2 * a2 * q0 * q0 + 104 * a2 * nu * q0 +
            64 * nu * nu + 64 * a1 * q0 + 64 * mu;
    std::complex<double> sp = std::sqrt(std::complex<double>(out.P, 0.0));
    const double f = std::sqrt(2.0) / 4.0;
    std::complex<double> l1 = f * std::sqrt(std::complex<double>(out.Q, 0.0) + sp);
    std::complex<double> l2 = f * std::sqrt(std::complex<double>(out.Q, 0.0) - sp);
    out.eigenvalues = {l1, -l1, l2, -l2};
    return out;
}

double hopf_mu(double nu, double q0, const CubicCoeffs& c) {
    const double a1 = c.a1, a2 = c.a2, a3 = c.a3;
    return -a1 * q0 - nu * nu - 13.0 / 8 * a2 * nu * q0 - 5.0 / 8 * a2 * a2 * q0 * q0 +
           123.0 / 16 * a3 * a3 * nu * q0 * q0 + 51.0 / 4 * a2 * a3 * a3 * std::pow(q0, 3) +
           531.0 / 64 * std::pow(a3, 4) * std::pow(q0, 4);
}

double hopf_frequency(double nu, double q0, const CubicCoeffs& c) {
    double Q = eigenvalues_QP(0, nu, q0, c).Q;
    if (Q >= 0)
        throw std::domain_error("hopf_frequency: real double pair, not a Hopf point");
    return std::sqrt(-Q);
}

Mat4D hopf_target(double w) {
    const double s = w / (2.0 * std::sqrt(2.0));
    Mat4D j;
    j(0, 1) = -s;
    j(1, 0) = s;
    j(2, 0) = -1;
    j(2, 3) = -s;
    j(3, 1) = -1;
    j(3, 2) = s;
    return j;
}

Mat4D hopf_transform(double nu, double q0, const CubicCoeffs& c) {
    const double w = hopf_frequency(nu, q0, c);
    const double a2 = c.a2, a3 = c.a3;
    const double s2 = std::sqrt(2.0);
    const double w2 = w * w;
    // the transpose of this matrix is the transform
    double pt[4][4] = {
        {0, 1 / w, -3 * (4 * a2 * q0 - 87 * a3 * a3 * q0 * q0 + 6 * w2) / (40 * w),
         -9 * a3 * q0 / (2 * w)},
        {2 * s2 / w2, 6 * s2 * a3 * q0 / w2,
         -3 * a3 * q0 * (a2 * q0 - 63 * a3 * a3 * q0 * q0 - 16 * w2) / (10 * s2 * w2),
         -3 * (4 * a2 * q0 + 93 * a3 * a3 * q0 * q0 + 6 * w2) / (10 * s2 * w2)},
        {2 / w, 6 * a3 * q0 / w,
         -3 * a3 * q0 * (a2 * q0 - 63 * a3 * a3 * q0 * q0 + 4 * w2) / (20 * w),
         -(12 * a2 * q0 + 279 * a3 * a3 * q0 * q0 - 2 * w2) / (20 * w)},
        {0, 1 / s2, (-12 * a2 * q0 + 261 * a3 * a3 * q0 * q0 + 2 * w2) / (40 * s2),
         -9 * a3 * q0 / (2 * s2)}};
    Mat4D p;
    for (int r = 0; r < 4; ++r)
        for (int col = 0; col < 4; ++col) p(col, r) = pt[r][col];
    return p;
}

double cm_polynomial(double w2, double q0, const CubicCoeffs& c) {
    const double a1 = c.a1, a2 = c.a2, a3 = c.a3;
    const double a3_2 = a3 * a3, a3_4 = a3_2 * a3_2, a3_6 = a3_4 * a3_2, a3_8 = a3_4 * a3_4;
    const double w4 = w2 * w2, w6 = w4 * w2;
    return 320.0 / 3 * a1 * a1 - 288 * a1 * a2 * a2 * q0 + 972.0 / 5 * std::pow(a2, 4) * q0 * q0 -
           2808 * a1 * a2 * a3_2 * q0 * q0 + 18954.0 / 5 * std::pow(a2, 3) * a3_2 * std::pow(q0, 3) -
           8064 * a1 * a3_4 * std::pow(q0, 3) + 587331.0 / 20 * a2 * a2 * a3_4 * std::pow(q0, 4) +
           530712.0 / 5 * a2 * a3_6 * std::pow(q0, 5) + 762048.0 / 5 * a3_8 * std::pow(q0, 6) +
           16.0 / 3 * a1 * a2 * w2 - 36.0 / 5 * std::pow(a2, 3) * q0 * w2 -
           344 * a1 * a3_2 * q0 * w2 + 11907.0 / 50 * a2 * a2 * a3_2 * q0 * q0 * w2 +
           180513.0 / 50 * a2 * a3_4 * std::pow(q0, 3) * w2 +
           609093.0 / 50 * a3_6 * std::pow(q0, 4) * w2 - 36.0 / 5 * a2 * a2 * w4 -
           682.0 / 25 * a2 * a3_2 * q0 * w4 + 25959.0 / 100 * a3_4 * q0 * q0 * w4 +
           1328.0 / 75 * a3_2 * w6;
}

double cm_coefficient(double nu, double q0, const CubicCoeffs& c) {
    const double w = hopf_frequency(nu, q0, c);
    const double w2 = w * w;
    return cm_polynomial(w2, q0, c) / (w2 * w2 * w2 * w2);
}

double fold_mu(double nu, double q0, const CubicCoeffs& c) {
    const double a1 = c.a1, a2 = c.a2, a3 = c.a3;
    return 9.0 / 16 * nu * nu - a1 * q0 + 27.0 / 8 * a2 * nu * q0 + 27.0 / 8 * a2 * a2 * q0 * q0 +
           27.0 / 4 * a3 * a3 * nu * q0 * q0 + 45.0 / 4 * a2 * a3 * a3 * std::pow(q0, 3) +
           135.0 / 16 * std::pow(a3, 4) * std::pow(q0, 4);
}

double fold_second_derivative(double nu, double q0, const CubicCoeffs& c) {
    const double a1 = c.a1, a2 = c.a2, a3 = c.a3;
    return -a1 + 27.0 / 8 * a2 * nu + 27.0 / 4 * a2 * a2 * q0 + 27.0 / 2 * a3 * a3 * nu * q0 +
           135.0 / 4 * a2 * a3 * a3 * q0 * q0 + 135.0 / 4 * std::pow(a3, 4) * std::pow(q0, 3);
}

double fold_lambda(double nu, double q0, const CubicCoeffs& c) {
    return -20 * nu - 32 * c.a2 * q0 + 6 * c.a3 * c.a3 * q0 * q0;
}

double fold_omega(double nu, double q0, const CubicCoeffs& c) {
    return std::sqrt(std::abs(fold_lambda(nu, q0, c)) / 8.0);
}

Mat4D fold_target(double w, FoldBranch branch) {
    Mat4D j;
    if (branch == FoldBranch::Hyperbolic) {
        j(0, 2) = 1;
        j(1, 3) = w;
        j(3, 1) = w;
    } else {
        j(0, 2) = -1;
        j(1, 3) = w;
        j(3, 1) = -w;
    }
    return j;
}

Mat4D fold_transform(double nu, double q0, const CubicCoeffs& c, FoldBranch branch) {
    const double lambda = fold_lambda(nu, q0, c);
    if (lambda == 0) throw std::domain_error("fold_transform: nilpotent line");
    if ((branch == FoldBranch::Hyperbolic) != (lambda > 0))
        throw std::domain_error("fold_transform: branch does not match sign of lambda");
    const double w = fold_omega(nu, q0, c);
    const double a2 = c.a2, a3 = c.a3;
    const double w2 = w * w, sw = std::sqrt(w), w32 = w * sw;
    double pt[4][4];
    if (branch == FoldBranch::Hyperbolic) {
        double m[4][4] = {
            {-1 / w, -3 * a3 * q0 / w,
             3 * a3 * q0 * (a2 * q0 - 63 * a3 * a3 * q0 * q0 + 4 * w2) / (40 * w),
             3 * (4 * a2 * q0 + 93 * a3 * a3 * q0 * q0 - 4 * w2) / (40 * w)},
            {0, -1 / sw, -3 * (-4 * a2 * q0 + 87 * a3 * a3 * q0 * q0 + 4 * w2) / (40 * sw),
             9 * a3 * q0 / (2 * sw)},
            {0, 1 / w, -(12 * a2 * q0 - 261 * a3 * a3 * q0 * q0 + 28 * w2) / (40 * w),
             -9 * a3 * q0 / (2 * w)},
            {1 / w32, 3 * a3 * q0 / w32,
             3 * a3 * q0 * (-a2 * q0 + 63 * a3 * a3 * q0 * q0 + 36 * w2) / (40 * w32),
             (-12 * a2 * q0 - 279 * a3 * a3 * q0 * q0 - 28 * w2) / (40 * w32)}};
        std::copy(&m[0][0], &m[0][0] + 16, &pt[0][0]);
    } else {
        double m[4][4] = {
            {1 / w, 3 * a3 * q0 / w,
             -3 * a2 * a3 * q0 * q0 / (40 * w) + 189 * std::pow(a3, 3) * std::pow(q0, 3) / (40 * w) +
                 3 * a3 * q0 * w / 10,
             -3 * a2 * q0 / (10 * w) - 279 * a3 * a3 * q0 * q0 / (40 * w) - 3 * w / 10},
            {0, 1 / sw,
             -3 * a2 * q0 / (10 * sw) + 261 * a3 * a3 * q0 * q0 / (40 * sw) - 3 * w32 / 10,
             -9 * a3 * q0 / (2 * sw)},
            {0, 1 / w, -3 * a2 * q0 / (10 * w) + 261 * a3 * a3 * q0 * q0 / (40 * w) + 7 * w / 10,
             -9 * a3 * q0 / (2 * w)},
            {1 / w32, 3 * a3 * q0 / w32,
             -3 * a2 * a3 * q0 * q0 / (40 * w32) +
                 189 * std::pow(a3, 3) * std::pow(q0, 3) / (40 * w32) - 2.7 * a3 * q0 * sw,
             -3 * a2 * q0 / (10 * w32) - 279 * a3 * a3 * q0 * q0 / (40 * w32) + 0.7 * sw}};
        std::copy(&m[0][0], &m[0][0] + 16, &pt[0][0]);
    }
    Mat4D p;
    for (int r = 0; r < 4; ++r)
        for (int col = 0; col < 4; ++col) p(col, r) = pt[r][col];
    return p;
}

double fold_cubic_coefficient(double nu, double q0, const CubicCoeffs& c, FoldBranch branch) {
    const double lambda = fold_lambda(nu, q0, c);
    if (lambda == 0) throw std::domain_error("fold_cubic_coefficient: nilpotent line");
    if ((branch == FoldBranch::Hyperbolic) != (lambda > 0))
        throw std::domain_error("fold_cubic_coefficient: branch does not match sign of lambda");
    const double a1 = c.a1, a2 = c.a2, a3 = c.a3;
    const double w = fold_omega(nu, q0, c);
    const double w2 = w * w, w3 = w2 * w;
    const double base = -a1 / 6 + 9.0 / 40 * a2 * a2 * q0 + 351.0 / 160 * a2 * a3 * a3 * q0 * q0 +
                        63.0 / 10 * std::pow(a3, 4) * std::pow(q0, 3);
    const double wterms = -9.0 / 40 * a2 * w2 - 9.0 / 10 * a3 * a3 * q0 * w2;
    if (branch == FoldBranch::Hyperbolic) return (base + wterms) / w3;
    // elliptic branch: the transformed cubic works out to the negative of the
    // hyperbolic closed form with the omega^2 terms kept as-is (verified
    // against the transformed Hamiltonian in the tests).
    return (-base + wterms) / w3;
}

double nilpotent_line(double q0, const CubicCoeffs& c) {
    return -1.6 * c.a2 * q0 + 0.3 * c.a3 * c.a3 * q0 * q0;
}

}  // namespace nilfold
