#pragma once

#include <string>
#include <utility>

#include "errors.hpp"
#include "poly.hpp"
#include "series.hpp"

namespace wstrass {

/// Element of Q(x), kept as num/den with gcd(num, den) = 1 and den monic.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(UniPoly::constant(1)) {}
    RationalFunction(UniPoly num) : num_(std::move(num)), den_(UniPoly::constant(1)) {}
    RationalFunction(const Rational& c) : RationalFunction(UniPoly::constant(c)) {}
    RationalFunction(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero())
            throw DomainError("rational function with zero denominator");
        normalize();
    }

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RationalFunction operator-() const { return RationalFunction(-num_, den_, Normalized{}); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        if (a.den_ == b.den_)
            return RationalFunction(a.num_ + b.num_, a.den_);
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return a + (-b);
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        if (a.is_zero() || b.is_zero())
            return {};
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero())
            throw DomainError("rational function division by zero");
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    RationalFunction derivative() const {
        return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    Rational operator()(const Rational& x) const {
        Rational d = den_(x);
        if (d == 0)
            throw DomainError("rational function has a pole at " + x.get_str());
        return num_(x) / d;
    }

    /// Taylor expansion of r(x0 + t). The denominator must not vanish at x0.
    TruncatedSeries expand_at(const Rational& x0, std::size_t precision) const {
        const UniPoly shift{x0, 1};
        TruncatedSeries n = TruncatedSeries::from_poly(num_.compose(shift), precision);
        TruncatedSeries d = TruncatedSeries::from_poly(den_.compose(shift), precision);
        if (d[0] == 0)
            throw DomainError("rational function has a pole at " + x0.get_str());
        return n * d.inverse();
    }

    std::string to_string(const std::string& var = "x") const {
        if (den_.degree() == 0)
            return num_.to_string(var);
        return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
    }

private:
    struct Normalized {};
    RationalFunction(UniPoly num, UniPoly den, Normalized) : num_(std::move(num)), den_(std::move(den)) {}

    void normalize() {
        if (num_.is_zero()) {
            den_ = UniPoly::constant(1);
            return;
        }
        UniPoly g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        Rational lc = den_.lc();
        if (lc != 1) {
            Rational inv = 1 / lc;
            num_ *= inv;
            den_ *= inv;
        }
    }

    UniPoly num_;
    UniPoly den_;
};

inline bool is_zero(const RationalFunction& r) { return r.is_zero(); }

} // namespace wstrass
