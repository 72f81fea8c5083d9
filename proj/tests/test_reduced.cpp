#include <catch_amalgamated.hpp>

#include <cmath>
#include <set>

#include "nilfold/grid.hpp"
#include "nilfold/reduced.hpp"

#include "test_util.hpp"

using namespace nilfold;
using testutil::Lcg;
using testutil::quartet_distance;
using namespace nilfold::reduced;

namespace {

}  // namespace

TEST_CASE("reduce_params") {
    CHECK_THROWS_AS(reduce_params(0, 0, 0, 0.0, 0.1), std::invalid_argument);
    for (double r : {-0.2, 0.0, 0.15}) {
        ReducedParams p = reduce_params(0, 0, 0, 2.0, r);
        CHECK(p.alpha == Catch::Approx(r * r / 4));
        CHECK(p.beta == 0.0);
    }
    // r = 0, a1 = 1 reduces to alpha = kappa - mu^2/2 + 9 mu nu^2/16
    ReducedParams p = reduce_params(0.03, -0.2, 0.1, 1.0, 0.0);
    CHECK(p.alpha == Catch::Approx(0.03 - 0.02 + 9 * (-0.2) * 0.01 / 16));
    CHECK(p.beta == 0.1);
}

TEST_CASE("reduction is compatible with the full family") {
    // equilibrium q0-sets of H_{kappa,mu,nu} (a2 = a3 = 0) and of H_r agree
    // under the translation q0 -> q0 + (r - mu)/a1
    Lcg g(55);
    for (int trial = 0; trial < 25; ++trial) {
        double kappa = g.uniform(-0.05, 0.05), mu = g.uniform(-0.2, 0.2), nu = g.uniform(-0.3, 0.3);
        double r = g.uniform(-0.2, 0.2);
        CubicCoeffs c{1.0, 0, 0};
        std::vector<double> full_roots;
        try {
            for (const auto& rec : solve_equilibria({kappa, mu, nu}, c))
                for (int m = 0; m < rec.multiplicity; ++m) full_roots.push_back(rec.q0);
        } catch (const std::invalid_argument&) {
            continue;
        }
        ReducedParams p = reduce_params(kappa, mu, nu, 1.0, r);
        std::vector<double> red_roots;
        for (const auto& e : equilibria(p)) red_roots.push_back(e.q0 + (r - mu));
        std::sort(full_roots.begin(), full_roots.end());
        std::sort(red_roots.begin(), red_roots.end());
        std::vector<double> dedup;
        for (double v : full_roots)
            if (dedup.empty() || std::abs(v - dedup.back()) > 1e-9) dedup.push_back(v);
        REQUIRE(dedup.size() == red_roots.size());
        for (std::size_t i = 0; i < dedup.size(); ++i)
            CHECK(dedup[i] == Catch::Approx(red_roots[i]).margin(1e-10));
    }
}

TEST_CASE("equilibria of the reduced family") {
    auto eq0 = equilibria({0, 0, 0});
    REQUIRE(eq0.size() == 1);  // double root at 0 reported once
    CHECK(eq0[0].q0 == 0.0);

    // beta = 1, r = 0, alpha = -17/16: the Hopf point q0 = -1 is a root
    auto eq = equilibria({-17.0 / 16, 1.0, 0.0});
    REQUIRE(eq.size() == 2);
    bool found = false;
    for (const auto& e : eq)
        if (std::abs(e.q0 + 1.0) < 1e-12) {
            found = true;
            CHECK(e.state[3] == Catch::Approx(0.75));
        }
    CHECK(found);

    // above the fold projection: no equilibria
    double beta = 0.6, r = 0.1;
    CHECK(equilibria({alpha_fold(beta, r) + 1e-3, beta, r}).empty());
    CHECK(equilibria({alpha_fold(beta, r) - 1e-3, beta, r}).size() == 2);
    CHECK(equilibria({alpha_fold(beta, r), beta, r}).size() == 1);
}

TEST_CASE("closed-form eigenvalues of the reduced family") {
    Quartet e = eigenvalues(0.0, 1.0, 0.0);
    Quartet expect{std::complex<double>(1, 0), std::complex<double>(-1, 0),
                   std::complex<double>(0, 1), std::complex<double>(0, -1)};
    CHECK(quartet_distance(e, expect) < 1e-14);

    // double imaginary pair at the Hopf point beta = 1, q0 = -1
    Quartet hopf = eigenvalues(1.0, -1.0, 0.0);
    double t = std::sqrt(5.0) / 2.0;
    Quartet expect2{std::complex<double>(0, t), std::complex<double>(0, -t),
                    std::complex<double>(0, t), std::complex<double>(0, -t)};
    CHECK(quartet_distance(hopf, expect2) < 1e-14);

    // agreement with the full-family closed form under (mu,nu) = (r,beta)
    Lcg g(7);
    for (int trial = 0; trial < 40; ++trial) {
        double beta = g.uniform(-0.3, 0.3), q0 = g.uniform(-0.3, 0.3), r = g.uniform(-0.2, 0.2);
        Quartet a = eigenvalues(beta, q0, r);
        Quartet b = eigenvalues_QP(r, beta, q0, {1, 0, 0}).eigenvalues;
        CHECK(quartet_distance(a, b) < 1e-10);
    }
}

TEST_CASE("eigenvalues agree with the Jacobian oracle") {
    Lcg g(99);
    for (int trial = 0; trial < 30; ++trial) {
        double beta = g.uniform(-0.25, 0.25), q0 = g.uniform(-0.25, 0.25), r = g.uniform(-0.2, 0.2);
        // H_r = H_{alpha, r, beta} with a = (1,0,0) for the alpha solving the
        // equilibrium equation at q0
        double alpha = 9.0 / 16 * beta * beta * q0 - 0.5 * q0 * q0 - r * q0;
        ParamsKMN p{alpha, r, beta};
        CubicCoeffs c{1, 0, 0};
        Vec4 state{q0, 0, 0, -0.75 * beta * q0};
        Quartet jac = quartic_eigenvalues(jacobian(state, p, c));
        CHECK(quartet_distance(jac, eigenvalues(beta, q0, r)) < 1e-10);
    }
}

TEST_CASE("bifurcation curves") {
    CHECK(hopf_curve(1.0, 0.0) == -1.0);
    CHECK(fold_curve(1.0, 0.0) == Catch::Approx(9.0 / 16));
    for (double r : {-0.1, 0.0, 0.1})
        for (double beta : {-0.5, 0.2, 1.0}) {
            CHECK(r + beta * beta + hopf_curve(beta, r) == Catch::Approx(0.0).margin(1e-15));
            // on the fold curve one eigenvalue pair vanishes
            Quartet e = eigenvalues(beta, fold_curve(beta, r), r);
            double minmag = 1e9;
            for (const auto& l : e) minmag = std::min(minmag, std::abs(l));
            CHECK(minmag < 1e-7);
        }
}

TEST_CASE("alpha projections") {
    CHECK(alpha_fold(1.0, 0.0) == Catch::Approx(81.0 / 512).epsilon(1e-15));
    CHECK(alpha_hopf(1.0, 0.0) == Catch::Approx(-17.0 / 16).epsilon(1e-15));

    // substitution closure: at alpha_fold the fold point is a double root
    for (double r : {-0.1, 0.0, 0.1})
        for (double beta : {-0.4, 0.3, 0.8}) {
            auto eq = equilibria({alpha_fold(beta, r), beta, r});
            REQUIRE(eq.size() == 1);
            CHECK(eq[0].q0 == Catch::Approx(fold_curve(beta, r)).margin(1e-12));
        }

    // identity alpha_fold - alpha_hopf = 625/512 beta^4, and ordering
    Lcg g(1);
    for (int trial = 0; trial < 60; ++trial) {
        double beta = g.uniform(-1, 1), r = g.uniform(-0.25, 0.25);
        double diff = alpha_fold(beta, r) - alpha_hopf(beta, r);
        double expect = 625.0 / 512 * std::pow(beta, 4);
        CHECK(diff == Catch::Approx(expect).epsilon(1e-14));
        CHECK(alpha_fold(beta, r) >= alpha_hopf(beta, r));
    }
    CHECK(alpha_fold(0.0, 0.2) == alpha_hopf(0.0, 0.2));
}

TEST_CASE("tangency order is 3 for every r") {
    CHECK(tangency_order(0.0) == 3);
    CHECK(tangency_order(0.1) == 3);
    CHECK(tangency_order(-0.25) == 3);
    CHECK(alpha_fold(1.0, 0.33) - alpha_hopf(1.0, 0.33) == Catch::Approx(625.0 / 512));
}

TEST_CASE("region classification") {
    CHECK(classify_beta_q0(0.0, 1.0, 0.0) == ConfigTag::ImagPairRealPair);
    // fold curve, beta > 0: surviving pair is imaginary. Boundary points
    // evaluated in floating point sit sqrt(eps)-close to the curve, so the
    // zero-pair detection needs a matching tolerance.
    CHECK(classify_beta_q0(0.4, fold_curve(0.4, 0.0), 0.0, 1e-7) == ConfigTag::ImagPairZeroPair);
    CHECK(classify_beta_q0(-0.4, fold_curve(-0.4, 0.0), 0.0, 1e-7) == ConfigTag::RealPairZeroPair);

    AlphaBetaRegion none = classify_alpha_beta({alpha_fold(0.5, 0.0) + 0.01, 0.5, 0.0});
    CHECK(none.equilibrium_count == 0);
    AlphaBetaRegion two = classify_alpha_beta({alpha_hopf(0.5, 0.0), 0.5, 0.0});
    CHECK(two.equilibrium_count == 2);
}

TEST_CASE("region adjacency matches the linear versal chart") {
    // The (beta, q0) chart of the reduced family realizes the same
    // configuration portrait as the (mu0, nu0) chart of the linear versal
    // deformation: same tag set, same adjacency graph, boundaries q0 ~ beta^2.
    const int n = 101;
    grid::Range r{-0.25, 0.25, n - 1};
    auto reduced_rows = grid::reduced_grid_serial(r, r, 0.0);
    auto linear_rows = grid::eigengrid_serial(r, r, 1e-9);

    auto tags_and_adjacency = [n](auto&& tag_at) {
        std::set<ConfigTag> tags;
        std::set<std::pair<ConfigTag, ConfigTag>> adj;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                ConfigTag t = tag_at(i, j);
                tags.insert(t);
                if (i + 1 < n) {
                    ConfigTag u = tag_at(i + 1, j);
                    if (t != u) adj.insert(std::minmax(t, u));
                }
                if (j + 1 < n) {
                    ConfigTag u = tag_at(i, j + 1);
                    if (t != u) adj.insert(std::minmax(t, u));
                }
            }
        return std::make_pair(tags, adj);
    };
    // reduced grid rows are (beta i, q0 j); linear rows are (mu0 i, nu0 j).
    // The correspondence maps q0 <-> mu0 and beta <-> nu0.
    auto red = tags_and_adjacency(
        [&](int i, int j) { return reduced_rows[static_cast<std::size_t>(i) * n + j].config; });
    auto lin = tags_and_adjacency(
        [&](int i, int j) { return linear_rows[static_cast<std::size_t>(j) * n + i].config; });
    CHECK(red.first == lin.first);
    CHECK(red.second == lin.second);
}
