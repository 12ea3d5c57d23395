#pragma once

#include <gmpxx.h>

#include <string>

#include "errors.hpp"

namespace wstrass {

/// Arbitrary-precision integers and rationals. mpq_class keeps values in
/// lowest terms with a positive denominator after every arithmetic operation.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0)
        throw DomainError("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// "p/q" form, always with an explicit denominator. Used in machine output.
inline std::string to_fraction_string(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Human form: "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& r) {
    return r.get_str();
}

inline Rational parse_rational(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0 || s.empty())
        throw DomainError("not a rational number: '" + s + "'");
    if (r.get_den() == 0)
        throw DomainError("zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline Rational pow(const Rational& base, unsigned long e) {
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
    return r;
}

} // namespace wstrass
