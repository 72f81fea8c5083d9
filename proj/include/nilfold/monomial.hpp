#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace nilfold {

// Monomial in the canonical variables (q1, q2, p1, p2) plus the auxiliary
// grading symbol beta used by the normal-form pipeline. beta has no bracket
// action and counts as degree 2 in the graded degree.
//
// Ordering is graded lexicographic: first by graded degree, then
// lexicographically on the exponent tuple with variable order
// q1 < q2 < p1 < p2 < beta. This makes every basis, matrix and printed
// polynomial deterministic.
struct Monomial {
    std::array<std::uint8_t, 5> e{0, 0, 0, 0, 0};

    int degree() const { return e[0] + e[1] + e[2] + e[3]; }
    int beta_power() const { return e[4]; }
    int graded_degree() const { return degree() + 2 * e[4]; }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
    friend bool operator<(const Monomial& a, const Monomial& b) {
        int ga = a.graded_degree(), gb = b.graded_degree();
        if (ga != gb) return ga < gb;
        return a.e < b.e;
    }
};

inline Monomial mono(int a, int b, int c, int d, int beta = 0) {
    Monomial m;
    m.e = {static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b),
           static_cast<std::uint8_t>(c), static_cast<std::uint8_t>(d),
           static_cast<std::uint8_t>(beta)};
    return m;
}

// dim P_n for 4 variables: C(n+3,3). Degrees 1..4 give 4, 10, 20, 35.
inline int poly_space_dim(int n) { return (n + 1) * (n + 2) * (n + 3) / 6; }

// Deterministic basis of the homogeneous x-polynomials of degree n
// (beta = 0), listed in increasing monomial order.
inline std::vector<Monomial> homogeneous_basis(int n) {
    std::vector<Monomial> out;
    out.reserve(poly_space_dim(n));
    for (int a = 0; a <= n; ++a)
        for (int b = 0; b <= n - a; ++b)
            for (int c = 0; c <= n - a - b; ++c) out.push_back(mono(a, b, c, n - a - b - c));
    std::sort(out.begin(), out.end());
    return out;
}

inline std::string mono_to_string(const Monomial& m) {
    static const char* names[5] = {"q1", "q2", "p1", "p2", "beta"};
    std::string s;
    for (int i = 0; i < 5; ++i) {
        if (m.e[i] == 0) continue;
        if (!s.empty()) s += " ";
        s += names[i];
        if (m.e[i] > 1) s += "^" + std::to_string(static_cast<int>(m.e[i]));
    }
    return s.empty() ? std::string("1") : s;
}

}  // namespace nilfold
