#include <catch_amalgamated.hpp>

#include <cmath>
#include <set>

#include "nilfold/linsymp.hpp"
#include "nilfold/poisson.hpp"

#include "test_util.hpp"

using namespace nilfold;
using testutil::Lcg;
using testutil::quartet_distance;

namespace {

bool nilpotent_degree4(const Mat4Q& a) {
    Mat4Q a2 = a * a;
    Mat4Q a4 = a2 * a2;
    return a4.is_zero() && !(a2 * a).is_zero();
}

}  // namespace

TEST_CASE("hamiltonian_matrix of the two normal forms") {
    Mat4Q j_std = hamiltonian_matrix(standard_form());
    CHECK(nilpotent_degree4(j_std));
    Mat4Q j_will = hamiltonian_matrix(williamson_form());
    CHECK(nilpotent_degree4(j_will));  // similar to one 4x4 Jordan block at 0
    CHECK(hamiltonian_matrix(PolyQ{}).is_zero());
}

TEST_CASE("is_symplectic") {
    CHECK(is_symplectic(Mat4Q::identity()));
    CHECK(is_symplectic(williamson_to_standard()));
    Mat4D d = Mat4D::identity();
    d(0, 0) = 2.0;
    CHECK_FALSE(is_symplectic(d, 1e-12));
}

TEST_CASE("williamson_to_standard exact conditions") {
    Mat4Q P = williamson_to_standard();
    Mat4Q A0 = hessian(standard_form());
    Mat4Q A1 = hessian(williamson_form());
    CHECK((P * Mat4Q::omega() * A0 - Mat4Q::omega() * A1 * P).is_zero());
    CHECK(is_symplectic(P));
    CHECK(P.det() == rat(1));
    // quadratic-form transport: H_williamson(P x) = H_standard(x)
    std::array<std::array<Rational, 4>, 4> rows = P.as_rows();
    CHECK(williamson_form().substituted_linear(rows) == standard_form());
}

TEST_CASE("versal charts at the base point") {
    Mat4Q j0 = versal_J0(rat(0), rat(0));
    CHECK(nilpotent_degree4(j0));
    Quartet e = versal_J0_eigenvalues(0.0, 0.0);
    for (const auto& l : e) CHECK(std::abs(l) == 0.0);
}

TEST_CASE("closed-form eigenvalues match the matrices") {
    Lcg g(11);
    for (int trial = 0; trial < 60; ++trial) {
        double mu = g.uniform(-0.2, 0.2), nu = g.uniform(-0.2, 0.2);
        Quartet closed = versal_J0_eigenvalues(mu, nu);
        Quartet numeric = quartic_eigenvalues(versal_J0(mu, nu).converted<double>());
        CHECK(quartet_distance(closed, numeric) < 1e-12);
        Quartet closed1 = versal_J1_eigenvalues(mu, nu);
        Quartet numeric1 = quartic_eigenvalues(versal_J1(mu, nu).converted<double>());
        CHECK(quartet_distance(closed1, numeric1) < 1e-12);
    }
}

TEST_CASE("phi map") {
    auto [m0, n0] = phi_map(0.0, 0.0);
    CHECK(m0 == 0.0);
    CHECK(n0 == 0.0);

    // At (mu1, nu1) = (5/4, 1) the first component vanishes. The second is
    // +4/5 mu1 = +1: the sign is forced by the exact S-conjugation below and
    // by the trace identity tr J1^2 = tr J0^2 (the -4/5 variant breaks both).
    auto [a, b] = phi_map(rat(5, 4), rat(1));
    CHECK(a == rat(0));
    CHECK(b == rat(1));

    Lcg g(13);
    for (int trial = 0; trial < 40; ++trial) {
        double mu1 = g.uniform(-0.1, 0.1), nu1 = g.uniform(-0.1, 0.1);
        auto [mu0, nu0] = phi_map(mu1, nu1);
        // compare squared-eigenvalue pairs (stable away from nu1 = 0)
        if (std::abs(nu1) < 1e-3) continue;
        Quartet e1 = versal_J1_eigenvalues(mu1, nu1);
        Quartet e0 = versal_J0_eigenvalues(mu0, nu0);
        CHECK(quartet_distance(e1, e0) < 1e-10);
    }
}

TEST_CASE("versal S matrix exact conditions") {
    CHECK(versal_S(rat(0), rat(0)) == Mat4Q::identity());
    Rational mu1 = rat(1, 2), nu1 = rat(1, 3);
    Mat4Q S = versal_S(mu1, nu1);
    CHECK(is_symplectic(S));
    auto [mu0, nu0] = phi_map(mu1, nu1);
    Mat4Q lhs = versal_J1(mu1, nu1) * S;
    Mat4Q rhs = S * versal_J0(mu0, nu0);
    CHECK((lhs - rhs).is_zero());
}

TEST_CASE("quartic eigenvalues") {
    SECTION("nilpotent standard form") {
        Quartet e = quartic_eigenvalues(hamiltonian_matrix(standard_form()).converted<double>());
        for (const auto& l : e) CHECK(std::abs(l) == 0.0);
    }
    SECTION("linear Hopf model eigenvalues") {
        // H = q1 p2 - q2 p1 + (q1^2+q2^2)/2 + mu (p1^2+p2^2)/2 has eigenvalues
        // +-sqrt(-1 - mu +- 2 sqrt(mu))
        for (double mu : {-0.1, 0.0, 0.1}) {
            PolyD h = PolyD::monomial(mono(1, 0, 0, 1), 1.0);
            h.add_term(mono(0, 1, 1, 0), -1.0);
            h.add_term(mono(2, 0, 0, 0), 0.5);
            h.add_term(mono(0, 2, 0, 0), 0.5);
            h.add_term(mono(0, 0, 2, 0), 0.5 * mu);
            h.add_term(mono(0, 0, 0, 2), 0.5 * mu);
            Quartet numeric = quartic_eigenvalues(hamiltonian_matrix(h));
            std::complex<double> sq = std::sqrt(std::complex<double>(mu, 0.0));
            std::complex<double> l1 = std::sqrt(-1.0 - mu + 2.0 * sq);
            std::complex<double> l2 = std::sqrt(-1.0 - mu - 2.0 * sq);
            Quartet closed{l1, -l1, l2, -l2};
            CHECK(quartet_distance(numeric, closed) < 1e-12);
        }
    }
    SECTION("closure under negation is exact") {
        Quartet e = quartic_eigenvalues(versal_J0(0.07, -0.03).converted<double>());
        CHECK(e[1] == -e[0]);
        CHECK(e[3] == -e[2]);
    }
    SECTION("non-Hamiltonian input is rejected") {
        Mat4D bad = Mat4D::identity();
        CHECK_THROWS_AS(quartic_eigenvalues(bad), std::invalid_argument);
    }
}

TEST_CASE("classification tags") {
    auto tag_at = [](double mu0, double nu0) {
        return classify(versal_J0_eigenvalues(mu0, nu0)).tag;
    };
    // boundary curves of the linear chart
    double nu0 = 0.4;
    CHECK(tag_at(9.0 / 16 * nu0 * nu0, nu0) == ConfigTag::ImagPairZeroPair);
    CHECK(tag_at(9.0 / 16 * nu0 * nu0, -nu0) == ConfigTag::RealPairZeroPair);
    CHECK(tag_at(-nu0 * nu0, nu0) == ConfigTag::DoubleImagPair);
    CHECK(tag_at(-nu0 * nu0, -nu0) == ConfigTag::DoubleRealPair);
    CHECK(tag_at(0.0, 0.0) == ConfigTag::QuadrupleZero);

    CHECK(classify({std::complex<double>(1, 0), std::complex<double>(-1, 0),
                    std::complex<double>(0, 1), std::complex<double>(0, -1)})
              .tag == ConfigTag::ImagPairRealPair);
    CHECK(classify({std::complex<double>(1, 1), std::complex<double>(-1, -1),
                    std::complex<double>(1, -1), std::complex<double>(-1, 1)})
              .tag == ConfigTag::ComplexQuartet);

    // asymmetric multiset is rejected
    CHECK_THROWS_AS(classify({std::complex<double>(1, 0), std::complex<double>(2, 0),
                              std::complex<double>(0, 1), std::complex<double>(0, -1)}),
                    std::invalid_argument);
}

TEST_CASE("classification is scale invariant") {
    Lcg g(17);
    for (int trial = 0; trial < 40; ++trial) {
        double mu0 = g.uniform(-0.2, 0.2), nu0 = g.uniform(-0.2, 0.2);
        Quartet e = versal_J0_eigenvalues(mu0, nu0);
        ConfigTag t = classify(e).tag;
        for (double s : {10.0, 1e3}) {
            Quartet scaled = e;
            for (auto& l : scaled) l *= s;
            CHECK(classify(scaled).tag == t);
        }
    }
}

TEST_CASE("region boundaries on the 41x41 grid") {
    // Region tags change across mu0 = 9/16 nu0^2 and mu0 = -nu0^2 and
    // nowhere else, up to one grid cell.
    const int n = 41;
    auto value = [&](int i) { return -0.25 + 0.5 * i / (n - 1); };
    auto open_region = [&](double mu0, double nu0) {
        // strictly inside one of the four open regions?
        double b1 = mu0 - 9.0 / 16 * nu0 * nu0;
        double b2 = mu0 + nu0 * nu0;
        return std::min(std::abs(b1), std::abs(b2)) > 1e-6;
    };
    for (int i = 0; i + 1 < n; ++i)
        for (int j = 0; j < n; ++j) {
            double mu_a = value(i), mu_b = value(i + 1), nu0 = value(j);
            if (!open_region(mu_a, nu0) || !open_region(mu_b, nu0)) continue;
            ConfigTag ta = classify(versal_J0_eigenvalues(mu_a, nu0)).tag;
            ConfigTag tb = classify(versal_J0_eigenvalues(mu_b, nu0)).tag;
            double b1a = mu_a - 9.0 / 16 * nu0 * nu0, b1b = mu_b - 9.0 / 16 * nu0 * nu0;
            double b2a = mu_a + nu0 * nu0, b2b = mu_b + nu0 * nu0;
            bool crossed = (b1a < 0) != (b1b < 0) || (b2a < 0) != (b2b < 0);
            // tag changes exactly when one of the two curves is crossed
            CHECK((ta != tb) == crossed);
        }
}
