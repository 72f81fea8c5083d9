#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "nilfold/polynomial.hpp"
#include "nilfold/rational.hpp"

namespace nilfold {

// 4x4 matrix over Rational or double. Row/column order follows the
// coordinate order (q1, q2, p1, p2).
template <class K>
struct Mat4 {
    std::array<K, 16> a{};

    K& operator()(int r, int c) { return a[4 * r + c]; }
    const K& operator()(int r, int c) const { return a[4 * r + c]; }

    static Mat4 zero() { return Mat4{}; }
    static Mat4 identity() {
        Mat4 m;
        for (int i = 0; i < 4; ++i) m(i, i) = K(1);
        return m;
    }
    // Omega = ((0, E), (-E, 0)).
    static Mat4 omega() {
        Mat4 m;
        m(0, 2) = K(1);
        m(1, 3) = K(1);
        m(2, 0) = K(-1);
        m(3, 1) = K(-1);
        return m;
    }

    Mat4 transpose() const {
        Mat4 m;
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) m(c, r) = (*this)(r, c);
        return m;
    }

    friend Mat4 operator*(const Mat4& x, const Mat4& y) {
        Mat4 m;
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) {
                K s(0);
                for (int k = 0; k < 4; ++k) s += x(r, k) * y(k, c);
                m(r, c) = s;
            }
        return m;
    }
    friend Mat4 operator+(Mat4 x, const Mat4& y) {
        for (int i = 0; i < 16; ++i) x.a[i] += y.a[i];
        return x;
    }
    friend Mat4 operator-(Mat4 x, const Mat4& y) {
        for (int i = 0; i < 16; ++i) x.a[i] -= y.a[i];
        return x;
    }
    friend Mat4 operator*(Mat4 x, const K& s) {
        for (auto& v : x.a) v *= s;
        return x;
    }
    friend bool operator==(const Mat4& x, const Mat4& y) { return x.a == y.a; }

    std::array<K, 4> apply(const std::array<K, 4>& v) const {
        std::array<K, 4> out{};
        for (int r = 0; r < 4; ++r) {
            K s(0);
            for (int c = 0; c < 4; ++c) s += (*this)(r, c) * v[c];
            out[r] = s;
        }
        return out;
    }

    K det() const {
        // cofactor expansion along the first row (exact for Rational);
        // K-typed lambda avoids returning gmp expression templates
        auto m2 = [&](int r0, int r1, int c0, int c1) -> K {
            K v = (*this)(r0, c0) * (*this)(r1, c1);
            v -= (*this)(r0, c1) * (*this)(r1, c0);
            return v;
        };
        auto m3 = [&](int r0, int r1, int r2, int c0, int c1, int c2) -> K {
            K v = (*this)(r0, c0) * m2(r1, r2, c1, c2);
            v -= (*this)(r0, c1) * m2(r1, r2, c0, c2);
            v += (*this)(r0, c2) * m2(r1, r2, c0, c1);
            return v;
        };
        K v = (*this)(0, 0) * m3(1, 2, 3, 1, 2, 3);
        v -= (*this)(0, 1) * m3(1, 2, 3, 0, 2, 3);
        v += (*this)(0, 2) * m3(1, 2, 3, 0, 1, 3);
        v -= (*this)(0, 3) * m3(1, 2, 3, 0, 1, 2);
        return v;
    }

    K trace() const { return (*this)(0, 0) + (*this)(1, 1) + (*this)(2, 2) + (*this)(3, 3); }

    double max_abs() const {
        double v = 0;
        for (const auto& x : a) v = std::max(v, detail::coeff_abs(x));
        return v;
    }

    bool is_zero() const {
        for (const auto& x : a)
            if (!detail::coeff_is_zero(x)) return false;
        return true;
    }

    template <class K2>
    Mat4<K2> converted() const {
        Mat4<K2> m;
        for (int i = 0; i < 16; ++i) {
            if constexpr (std::is_same_v<K, Rational>)
                m.a[i] = K2(a[i].get_d());
            else
                m.a[i] = K2(a[i]);
        }
        return m;
    }

    std::array<std::array<K, 4>, 4> as_rows() const {
        std::array<std::array<K, 4>, 4> r;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) r[i][j] = (*this)(i, j);
        return r;
    }
};

using Mat4Q = Mat4<Rational>;
using Mat4D = Mat4<double>;

// Hessian of a (possibly inhomogeneous) polynomial's quadratic part.
template <class K>
Mat4<K> hessian(const Poly<K>& h) {
    Mat4<K> m;
    for (int i = 0; i < 4; ++i) {
        Poly<K> di = h.derivative(i);
        for (int j = 0; j < 4; ++j) {
            Poly<K> dij = di.derivative(j);
            m(i, j) = dij.coeff(Monomial{});
        }
    }
    return m;
}

// Hamiltonian matrix A = Omega * Hess(H2) of a quadratic Hamiltonian.
template <class K>
Mat4<K> hamiltonian_matrix(const Poly<K>& h2) {
    return Mat4<K>::omega() * hessian(h2);
}

// ||P^T Omega P - Omega||_max <= tol; tol = 0 demands exact equality.
template <class K>
bool is_symplectic(const Mat4<K>& P, double tol = 0.0) {
    Mat4<K> r = P.transpose() * Mat4<K>::omega() * P - Mat4<K>::omega();
    if (tol == 0.0) return r.is_zero();
    return r.max_abs() <= tol;
}

// A is infinitesimally symplectic iff Omega*A is symmetric.
template <class K>
double hamiltonian_defect(const Mat4<K>& A) {
    Mat4<K> s = Mat4<K>::omega() * A;
    return (s - s.transpose()).max_abs();
}

}  // namespace nilfold
