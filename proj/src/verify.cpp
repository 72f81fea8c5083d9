#include "nilfold/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

#include "nilfold/linsymp.hpp"
#include "nilfold/mat4.hpp"
#include "nilfold/poisson.hpp"

namespace nilfold {
namespace verify {

namespace {

Mat4Q hessian_of(const PolyQ& h) { return hessian(h); }

// sorts a quartet by (re, im) for multiset comparison
void sort_quartet(Quartet& q) {
    std::sort(q.begin(), q.end(), [](const std::complex<double>& a, const std::complex<double>& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
}

}  // namespace

std::vector<CheckResult> run_battery(const Options& opts) {
    std::vector<CheckResult> out;
    auto push = [&](const std::string& name, bool pass, const std::string& detail = "") {
        out.push_back({name, pass, detail});
    };

    // --- matrix P -----------------------------------------------------------
    Mat4Q P = williamson_to_standard();
    if (opts.corrupt_matrix_P) P(0, 0) = rat(1, 7);
    push("symplecticity:matrix_P", is_symplectic(P));
    {
        Mat4Q A0 = hessian_of(standard_form());
        Mat4Q A1 = hessian_of(williamson_form());
        Mat4Q lhs = P * Mat4Q::omega() * A0;
        Mat4Q rhs = Mat4Q::omega() * A1 * P;
        push("conjugation:matrix_P", (lhs - rhs).is_zero());
    }
    push("determinant:matrix_P", P.det() == rat(1));

    // --- matrix S at 20 rational points --------------------------------------
    {
        bool sym = true, conj = true;
        for (int k = 1; k <= 20 && (sym || conj); ++k) {
            Rational mu1 = rat(k % 7 - 3, 7 + k);
            Rational nu1 = rat((k * 3) % 11 - 5, 9 + k);
            Mat4Q S = versal_S(mu1, nu1);
            if (!is_symplectic(S)) sym = false;
            auto [mu0, nu0] = phi_map(mu1, nu1);
            Mat4Q J1 = versal_J1(mu1, nu1);
            Mat4Q J0 = versal_J0(mu0, nu0);
            if (!((J1 * S) - (S * J0)).is_zero()) conj = false;
        }
        push("symplecticity:matrix_S", sym);
        push("conjugation:matrix_S", conj);
    }

    // --- phi-map eigenvalue correspondence on a 21x21 grid -------------------
    // The grid crosses the nu1 = 0 branch line where a naive double
    // evaluation loses half the digits to the square root of a cancellation
    // residue. The grid points are rational, so the characteristic
    // coefficients b = -tr(A^2)/2 and c = det A are computed exactly per
    // chart and the eigenvalues from those.
    {
        bool ok = true;
        double worst = 0;
        for (int i = 0; i <= 20 && ok; ++i)
            for (int j = 0; j <= 20; ++j) {
                Rational mu1 = rat(i - 10, 100);
                Rational nu1 = rat(j - 10, 100);
                auto [mu0, nu0] = phi_map(mu1, nu1);
                Mat4Q J1 = versal_J1(mu1, nu1);
                Mat4Q J0 = versal_J0(mu0, nu0);
                auto eigs_of = [](const Mat4Q& A) {
                    Rational b = (A * A).trace() / rat(-2);
                    Rational c = A.det();
                    std::complex<double> disc =
                        std::sqrt(std::complex<double>(b.get_d() * b.get_d() - 4 * c.get_d(), 0));
                    std::complex<double> l1 = std::sqrt(0.5 * (-b.get_d() + disc));
                    std::complex<double> l2 = std::sqrt(0.5 * (-b.get_d() - disc));
                    Quartet q{l1, -l1, l2, -l2};
                    sort_quartet(q);
                    return q;
                };
                Quartet e1 = eigs_of(J1);
                Quartet e0 = eigs_of(J0);
                double d = 0;
                for (int t = 0; t < 4; ++t) d = std::max(d, std::abs(e1[t] - e0[t]));
                worst = std::max(worst, d);
                if (d > 1e-10) {
                    ok = false;
                    break;
                }
            }
        std::ostringstream det;
        det << "max eigenvalue deviation " << worst;
        push("phi:eigenvalue_correspondence", ok, det.str());
    }

    // --- sl(2,R) triple -------------------------------------------------------
    {
        bool ok = true;
        std::string detail;
        try {
            auto [M, T] = sl2_triple(standard_form());
            PolyQ N = standard_form();
            ok = (poisson_bracket(N, M) - T).is_zero() &&
                 (poisson_bracket(N, T) - N * rat(2)).is_zero() &&
                 (poisson_bracket(M, T) + M * rat(2)).is_zero();
            detail = "M = " + poly_to_string(M);
        } catch (const std::exception& e) {
            ok = false;
            detail = e.what();
        }
        push("sl2:triple", ok, detail);
    }

    // --- complement property n = 1..4 ----------------------------------------
    {
        auto gens = kernel_generators();
        PolyQ H2 = standard_form();
        for (int n = 1; n <= 4; ++n) {
            ComplementReport rep = normal_form_complement(H2, n, gens);
            std::ostringstream det;
            det << "dim span " << rep.dim_span << " + dim im " << rep.dim_image << " = "
                << rep.dim_span + rep.dim_image << " of " << rep.dim_space;
            push("complement:n=" + std::to_string(n), rep.complement, det.str());
        }
    }

    return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

}  // namespace verify
}  // namespace nilfold
