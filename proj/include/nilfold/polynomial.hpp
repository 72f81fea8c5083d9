#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "nilfold/monomial.hpp"
#include "nilfold/rational.hpp"

namespace nilfold {

namespace detail {
inline bool coeff_is_zero(const Rational& c) { return c == 0; }
inline bool coeff_is_zero(double c) { return c == 0.0; }
inline bool coeff_is_zero(const std::complex<double>& c) { return c == 0.0; }
inline double coeff_abs(const Rational& c) { return std::abs(c.get_d()); }
inline double coeff_abs(double c) { return std::abs(c); }
inline double coeff_abs(const std::complex<double>& c) { return std::abs(c); }
}  // namespace detail

// Sparse polynomial over K in (q1,q2,p1,p2) and the grading symbol beta.
// K is Rational for exact structural work, double for the numeric pipeline,
// complex<double> for the rotation-eigenbasis solves. Terms with zero
// coefficient are never stored.
template <class K>
class Poly {
  public:
    using coeff_type = K;
    using term_map = std::map<Monomial, K>;

    Poly() = default;
    explicit Poly(K constant) {
        if (!detail::coeff_is_zero(constant)) terms_[Monomial{}] = std::move(constant);
    }

    static Poly monomial(const Monomial& m, K c) {
        Poly p;
        if (!detail::coeff_is_zero(c)) p.terms_[m] = std::move(c);
        return p;
    }
    static Poly variable(int i, K c = K(1)) {
        Monomial m;
        m.e[i] = 1;
        return monomial(m, std::move(c));
    }

    const term_map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    K coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? K(0) : it->second;
    }
    void set_coeff(const Monomial& m, K c) {
        if (detail::coeff_is_zero(c))
            terms_.erase(m);
        else
            terms_[m] = std::move(c);
    }
    void add_term(const Monomial& m, const K& c) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            if (!detail::coeff_is_zero(c)) terms_.emplace(m, c);
        } else {
            it->second += c;
            if (detail::coeff_is_zero(it->second)) terms_.erase(it);
        }
    }

    Poly& operator+=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, K(-c));
        return *this;
    }
    Poly& operator*=(const K& s) {
        if (detail::coeff_is_zero(s)) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_) c *= s;
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const K& s) { return a *= s; }
    friend Poly operator*(const K& s, Poly a) { return a *= s; }
    Poly operator-() const {
        Poly r = *this;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m;
                for (int i = 0; i < 5; ++i) m.e[i] = ma.e[i] + mb.e[i];
                r.add_term(m, ca * cb);
            }
        return r;
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

    // d/d(var i), i in 0..4.
    Poly derivative(int i) const {
        Poly r;
        for (const auto& [m, c] : terms_) {
            if (m.e[i] == 0) continue;
            Monomial mm = m;
            mm.e[i] -= 1;
            r.add_term(mm, c * K(static_cast<int>(m.e[i])));
        }
        return r;
    }

    int max_degree() const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }
    int min_degree() const {
        int d = terms_.empty() ? 0 : 1000;
        for (const auto& [m, c] : terms_) d = std::min(d, m.degree());
        return d;
    }
    int min_graded_degree() const {
        int d = terms_.empty() ? 0 : 1000;
        for (const auto& [m, c] : terms_) d = std::min(d, m.graded_degree());
        return d;
    }
    bool is_homogeneous(int n) const {
        for (const auto& [m, c] : terms_)
            if (m.degree() != n || m.beta_power() != 0) return false;
        return true;
    }
    bool is_x_homogeneous() const {
        if (terms_.empty()) return true;
        int n = terms_.begin()->first.degree();
        for (const auto& [m, c] : terms_)
            if (m.degree() != n || m.beta_power() != 0) return false;
        return true;
    }

    // Part of x-degree d (any beta power).
    Poly x_degree_part(int d) const {
        Poly r;
        for (const auto& [m, c] : terms_)
            if (m.degree() == d) r.terms_[m] = c;
        return r;
    }
    Poly graded_part(int g) const {
        Poly r;
        for (const auto& [m, c] : terms_)
            if (m.graded_degree() == g) r.terms_[m] = c;
        return r;
    }
    Poly block_part(int xdeg, int betapow) const {
        Poly r;
        for (const auto& [m, c] : terms_)
            if (m.degree() == xdeg && m.beta_power() == betapow) r.terms_[m] = c;
        return r;
    }
    Poly truncate_graded(int gmax) const {
        Poly r;
        for (const auto& [m, c] : terms_)
            if (m.graded_degree() <= gmax) r.terms_[m] = c;
        return r;
    }
    Poly drop_x_constants() const {
        Poly r;
        for (const auto& [m, c] : terms_)
            if (m.degree() > 0) r.terms_[m] = c;
        return r;
    }

    double max_abs_coeff() const {
        double v = 0;
        for (const auto& [m, c] : terms_) v = std::max(v, detail::coeff_abs(c));
        return v;
    }
    Poly chopped(double eps) const {
        Poly r;
        for (const auto& [m, c] : terms_)
            if (detail::coeff_abs(c) > eps) r.terms_[m] = c;
        return r;
    }

    template <class V>
    V eval(const std::array<V, 4>& x, const V& beta = V(0)) const {
        V total(0);
        for (const auto& [m, c] : terms_) {
            V t(1);
            for (int i = 0; i < 4; ++i)
                for (int k = 0; k < m.e[i]; ++k) t *= x[i];
            for (int k = 0; k < m.e[4]; ++k) t *= beta;
            total += convert_coeff<V>(c) * t;
        }
        return total;
    }

    // Substitutes x -> x + a (phase variables only; beta untouched).
    Poly shifted(const std::array<K, 4>& a) const {
        Poly result;
        for (const auto& [m, c] : terms_) {
            Poly term = Poly::monomial(mono(0, 0, 0, 0, m.e[4]), c);
            for (int i = 0; i < 4; ++i) {
                if (m.e[i] == 0) continue;
                Poly factor = Poly::variable(i) + Poly(a[i]);
                for (int k = 0; k < m.e[i]; ++k) term = term * factor;
            }
            result += term;
        }
        return result;
    }

    // Substitutes x -> M x. Coefficients may change field (e.g. double
    // polynomial through a complex matrix).
    template <class K2>
    Poly<K2> substituted_linear(const std::array<std::array<K2, 4>, 4>& M) const {
        std::array<Poly<K2>, 4> newvar;
        for (int i = 0; i < 4; ++i) {
            Poly<K2> v;
            for (int j = 0; j < 4; ++j) {
                if (detail::coeff_is_zero(M[i][j])) continue;
                v += Poly<K2>::variable(j, M[i][j]);
            }
            newvar[i] = v;
        }
        Poly<K2> result;
        for (const auto& [m, c] : terms_) {
            Poly<K2> term = Poly<K2>::monomial(mono(0, 0, 0, 0, m.e[4]), convert_coeff<K2>(c));
            for (int i = 0; i < 4; ++i)
                for (int k = 0; k < m.e[i]; ++k) term = term * newvar[i];
            result += term;
        }
        return result;
    }

    template <class K2>
    Poly<K2> converted() const {
        Poly<K2> r;
        for (const auto& [m, c] : terms_) r.add_term(m, convert_coeff<K2>(c));
        return r;
    }

  private:
    template <class To, class From>
    static To convert_coeff(const From& c) {
        if constexpr (std::is_same_v<To, From>) return c;
        else if constexpr (std::is_same_v<From, Rational>) return To(c.get_d());
        else return To(c);
    }

    term_map terms_;
};

using PolyQ = Poly<Rational>;
using PolyD = Poly<double>;
using PolyC = Poly<std::complex<double>>;

// Canonical Poisson bracket {f,g} = sum_i df/dq_i dg/dp_i - df/dp_i dg/dq_i.
// beta is inert. Mixing coefficient fields is a type error by construction.
template <class K>
Poly<K> poisson_bracket(const Poly<K>& f, const Poly<K>& g) {
    Poly<K> r;
    for (int i = 0; i < 2; ++i) {
        const int q = i, p = i + 2;
        r += f.derivative(q) * g.derivative(p);
        r -= f.derivative(p) * g.derivative(q);
    }
    return r;
}

template <class K>
Poly<K> ad_apply(const Poly<K>& f, const Poly<K>& g) {
    return poisson_bracket(f, g);
}

// ---- text format ------------------------------------------------------
//
// Golden-file format: terms joined by " + ", each `c * q1^a q2^b p1^c p2^d`
// with exact rational c printed as num/den. Exponent factors with power 0
// are omitted; the constant monomial prints as just the coefficient.
// Round-trips exactly for PolyQ.

inline std::string poly_to_string(const PolyQ& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [m, c] : p.terms()) {
        if (out.empty()) {
            out += rat_to_string(c);
        } else {
            Rational a = c;
            if (a < 0) a = -a;
            out += c < 0 ? " - " : " + ";
            out += rat_to_string(a);
        }
        std::string vars = mono_to_string(m);
        if (vars != "1") out += " * " + vars;
    }
    return out;
}

inline std::string poly_to_string(const PolyD& p, int precision = 17) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    out.precision(precision);
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        if (first) {
            out << c;
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ") << std::abs(c);
        }
        std::string vars = mono_to_string(m);
        if (vars != "1") out << " * " << vars;
    }
    return out.str();
}

PolyQ poly_parse(const std::string& text);

}  // namespace nilfold
