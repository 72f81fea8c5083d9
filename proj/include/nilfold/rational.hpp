#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace nilfold {

// Exact rational coefficients. mpq_class keeps values canonical
// (lowest terms, positive denominator), which is exactly the invariant
// the rest of the exact-algebra code relies on.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Parses "num", "num/den" or a plain integer string. Round-trips exactly
// with rat_to_string.
inline Rational rat_parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            Rational r{mpz_class(s)};
            return r;
        }
        mpz_class num(s.substr(0, slash));
        mpz_class den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        Rational r(num, den);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("bad rational literal: " + s);
    }
}

inline std::string rat_to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline double rat_to_double(const Rational& r) { return r.get_d(); }

}  // namespace nilfold
