#include "nilfold/polynomial.hpp"

#include <cctype>

namespace nilfold {

namespace {

struct Cursor {
    const std::string& s;
    std::size_t i = 0;
    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool consume(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
};

int var_index(const std::string& name) {
    if (name == "q1") return 0;
    if (name == "q2") return 1;
    if (name == "p1") return 2;
    if (name == "p2") return 3;
    if (name == "beta") return 4;
    return -1;
}

}  // namespace

PolyQ poly_parse(const std::string& text) {
    Cursor c{text};
    PolyQ out;
    if (c.eof()) throw std::invalid_argument("poly_parse: empty input");
    {
        Cursor probe = c;
        if (probe.consume('0') && probe.eof()) return out;
    }
    bool first = true;
    while (!c.eof()) {
        int sign = 1;
        if (!first || c.peek() == '+' || c.peek() == '-') {
            if (c.consume('+')) {
            } else if (c.consume('-')) {
                sign = -1;
            } else if (!first) {
                throw std::invalid_argument("poly_parse: expected + or - between terms");
            }
        }
        first = false;
        c.skip_ws();
        // coefficient: integer or num/den (optional leading sign handled above)
        std::size_t start = c.i;
        if (c.i < text.size() && (text[c.i] == '+' || text[c.i] == '-')) ++c.i;
        while (c.i < text.size() &&
               (std::isdigit(static_cast<unsigned char>(text[c.i])) || text[c.i] == '/'))
            ++c.i;
        Rational coeff(1);
        bool have_coeff = c.i > start;
        if (have_coeff) coeff = rat_parse(text.substr(start, c.i - start));
        coeff *= sign;

        Monomial m;
        bool expect_var = !have_coeff;
        if (have_coeff) expect_var = c.consume('*');
        while (true) {
            c.skip_ws();
            std::size_t vs = c.i;
            while (c.i < text.size() && std::isalnum(static_cast<unsigned char>(text[c.i]))) ++c.i;
            if (c.i == vs) {
                if (expect_var) throw std::invalid_argument("poly_parse: expected variable");
                break;
            }
            int vi = var_index(text.substr(vs, c.i - vs));
            if (vi < 0) throw std::invalid_argument("poly_parse: unknown variable " +
                                                    text.substr(vs, c.i - vs));
            int exp = 1;
            if (c.consume('^')) {
                c.skip_ws();
                std::size_t es = c.i;
                while (c.i < text.size() && std::isdigit(static_cast<unsigned char>(text[c.i])))
                    ++c.i;
                if (c.i == es) throw std::invalid_argument("poly_parse: expected exponent");
                exp = std::stoi(text.substr(es, c.i - es));
            }
            m.e[vi] = static_cast<std::uint8_t>(m.e[vi] + exp);
            expect_var = false;
            c.skip_ws();
            if (c.peek() == '+' || c.peek() == '-' || c.eof()) break;
        }
        out.add_term(m, coeff);
    }
    return out;
}

}  // namespace nilfold
