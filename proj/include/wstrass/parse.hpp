#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "mpoly.hpp"
#include "poly.hpp"
#include "rational.hpp"

namespace wstrass {

namespace detail {

// Recursive descent over
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := ('+' | '-') unary | power
//   power   := primary ('^' integer)?
//   primary := integer | variable | '(' expr ')'
// Division is accepted only by a nonzero constant, so "1/2*x" is a literal.
class PolyParser {
public:
    PolyParser(std::string_view src, const std::vector<std::string>& vars) : src_(src), vars_(vars) {}

    MPoly parse() {
        MPoly p = expr();
        skip_ws();
        if (pos_ != src_.size())
            fail("unexpected '" + std::string(1, src_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    MPoly expr() {
        MPoly acc = term();
        for (;;) {
            if (eat('+'))
                acc = acc + term();
            else if (eat('-'))
                acc = acc - term();
            else
                return acc;
        }
    }

    MPoly term() {
        MPoly acc = unary();
        for (;;) {
            if (eat('*')) {
                acc = acc * unary();
            } else if (eat('/')) {
                const std::size_t at = pos_;
                MPoly d = unary();
                if (d.degree() > 0)
                    throw ParseError("division by a non-constant expression", at);
                if (d.is_zero())
                    throw ParseError("division by zero", at);
                acc = acc * (Rational(1) / d.coeff(MPoly::Exponents(vars_.size(), 0)));
            } else {
                return acc;
            }
        }
    }

    MPoly unary() {
        if (eat('-'))
            return -unary();
        if (eat('+'))
            return unary();
        return power();
    }

    MPoly power() {
        MPoly base = primary();
        if (eat('^')) {
            skip_ws();
            if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
                fail("exponent must be a nonnegative integer");
            const std::size_t at = pos_;
            const Integer e = integer();
            if (e > 1000)
                throw ParseError("exponent too large", at);
            skip_ws();
            if (pos_ < src_.size() && src_[pos_] == '^')
                fail("chained exponents are not supported; use parentheses");
            return base.pow(static_cast<unsigned>(e.get_ui()));
        }
        return base;
    }

    Integer integer() {
        const std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
        return Integer(std::string(src_.substr(start, pos_ - start)));
    }

    MPoly primary() {
        skip_ws();
        if (pos_ >= src_.size())
            fail("unexpected end of input");
        const char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)))
            return MPoly::constant(vars_.size(), Rational(integer()));
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                ++pos_;
            const std::string name(src_.substr(start, pos_ - start));
            for (std::size_t i = 0; i < vars_.size(); ++i)
                if (vars_[i] == name)
                    return MPoly::variable(vars_.size(), i);
            throw ParseError("unknown variable '" + name + "'", start);
        }
        if (eat('(')) {
            MPoly inner = expr();
            if (!eat(')'))
                fail("expected ')'");
            return inner;
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view src_;
    const std::vector<std::string>& vars_;
    std::size_t pos_ = 0;
};

} // namespace detail

/// Expanded polynomial in the given variables. Throws ParseError with a
/// character position on malformed or non-polynomial input.
inline MPoly parse_poly(std::string_view source, const std::vector<std::string>& variables) {
    if (variables.empty())
        throw ParseError("no variables given", 0);
    return detail::PolyParser(source, variables).parse();
}

inline UniPoly parse_univariate(std::string_view source, const std::string& var = "x") {
    return parse_poly(source, {var}).to_univariate(0);
}

inline std::string print_poly(const MPoly& p, const std::vector<std::string>& variables) {
    return p.to_string(variables);
}

} // namespace wstrass
