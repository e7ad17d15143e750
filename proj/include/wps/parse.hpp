// Text grammar for polynomials: rational coefficients, `*` optional, `^`
// powers, parentheses. Variable identifiers are matched against the weight
// system's declared names; the Setup conventions x_{i,j} / x_i / y_i / z_i
// are accepted through brace-and-underscore normalization.
#pragma once

#include <cctype>
#include <string>

#include "wps/errors.hpp"
#include "wps/polynomial.hpp"
#include "wps/weights.hpp"

namespace wps {

namespace detail {

inline std::string squash_name(const std::string& s) {
    std::string out;
    for (char c : s)
        if (c != '_' && c != '{' && c != '}' && c != ',') out.push_back(c);
    return out;
}

class PolyParser {
public:
    PolyParser(const std::string& src, const WeightSystem& W) : src_(src), W_(W) {}

    Polynomial parse() {
        Polynomial p = parse_expr();
        skip_ws();
        if (pos_ != src_.size()) fail("trailing input");
        return p;
    }

private:
    Polynomial parse_expr() {
        skip_ws();
        bool neg = false;
        if (peek() == '+' || peek() == '-') neg = (get() == '-');
        Polynomial acc = parse_term();
        if (neg) acc *= Q(-1);
        for (;;) {
            skip_ws();
            if (peek() == '+' || peek() == '-') {
                bool minus = (get() == '-');
                Polynomial t = parse_term();
                if (minus) acc -= t; else acc += t;
            } else {
                return acc;
            }
        }
    }

    Polynomial parse_term() {
        Polynomial acc = parse_factor();
        for (;;) {
            skip_ws();
            char c = peek();
            if (c == '*') {
                get();
                acc = acc * parse_factor();
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '(' ||
                       std::isdigit(static_cast<unsigned char>(c))) {
                acc = acc * parse_factor();  // implicit multiplication
            } else {
                return acc;
            }
        }
    }

    Polynomial parse_factor() {
        skip_ws();
        char c = peek();
        Polynomial base(W_.var_count());
        if (c == '(') {
            get();
            base = parse_expr();
            skip_ws();
            if (get() != ')') fail("expected ')'");
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            base = Polynomial(W_.var_count(), parse_number());
        } else if (std::isalpha(static_cast<unsigned char>(c))) {
            base = Polynomial::variable(W_.var_count(), parse_varname());
        } else {
            fail("expected factor");
        }
        skip_ws();
        if (peek() == '^') {
            get();
            skip_ws();
            bool neg = false;
            if (peek() == '-') { neg = true; get(); }
            long e = parse_integer();
            if (neg || e < 0) fail("negative exponent");
            base = base.pow(static_cast<int>(e));
        }
        return base;
    }

    Q parse_number() {
        Z num(parse_digits());
        skip_ws();
        if (peek() == '/') {
            size_t save = pos_;
            get();
            skip_ws();
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                Z den(parse_digits());
                Q q(num, den);
                q.canonicalize();
                return q;
            }
            pos_ = save;  // '/' belonged to something else
        }
        return Q(num);
    }

    long parse_integer() { return std::stol(parse_digits()); }

    std::string parse_digits() {
        std::string s;
        while (std::isdigit(static_cast<unsigned char>(peek()))) s.push_back(get());
        if (s.empty()) fail("expected number");
        return s;
    }

    int parse_varname() {
        std::string name;
        name.push_back(get());
        int braces = 0;
        for (;;) {
            char c = peek();
            if (c == '{') ++braces;
            if (c == '}') { if (braces == 0) break; --braces; }
            bool inner = std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
                         c == '{' || c == '}' || (braces > 0 && c == ',');
            if (!inner) break;
            name.push_back(get());
        }
        int idx = W_.var_index(name);
        if (idx < 0) {
            std::string sq = squash_name(name);
            for (int i = 0; i < W_.var_count(); ++i)
                if (squash_name(W_.name(i)) == sq) { idx = i; break; }
        }
        if (idx < 0) fail("unknown variable '" + name + "'");
        return idx;
    }

    char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }
    char get() { return pos_ < src_.size() ? src_[pos_++] : '\0'; }
    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError("polynomial parse error at position " + std::to_string(pos_) + ": " + why);
    }

    const std::string& src_;
    const WeightSystem& W_;
    size_t pos_ = 0;
};

}  // namespace detail

inline Polynomial parse_polynomial(const std::string& text, const WeightSystem& W) {
    return detail::PolyParser(text, W).parse();
}

inline std::string monomial_to_string(const Monomial& m, const WeightSystem& W) {
    std::string out;
    for (size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += W.name(static_cast<int>(i));
        if (m[i] > 1) out += "^" + std::to_string(m[i]);
    }
    return out.empty() ? "1" : out;
}

// Deterministic rendering: terms in descending canonical key order.
inline std::string to_string(const Polynomial& p, const WeightSystem& W) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        bool first = out.empty();
        Q abs_c = c < 0 ? Q(-c) : c;
        if (!first) out += c < 0 ? " - " : " + ";
        else if (c < 0) out += "-";
        std::string mono = monomial_to_string(m, W);
        if (mono == "1") out += to_string(abs_c);
        else if (abs_c == 1) out += mono;
        else out += to_string(abs_c) + "*" + mono;
    }
    return out;
}

}  // namespace wps
