#pragma once

#include "jucys/errors.hpp"
#include "jucys/polyq.hpp"

namespace jucys {

// Rational function in hbar over Q, kept in canonical form: gcd(num, den) = 1
// and den monic; zero is 0/1.
class RatFunc {
public:
    RatFunc() : num_(), den_(PolyQ::constant(1)) {}
    RatFunc(Rat v) : num_(PolyQ::constant(std::move(v))), den_(PolyQ::constant(1)) {}  // NOLINT
    RatFunc(PolyQ num, PolyQ den);
    static RatFunc hbar() { return RatFunc(PolyQ::variable(), PolyQ::constant(1)); }

    const PolyQ& num() const { return num_; }
    const PolyQ& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    Rat eval(const Rat& h) const;  // throws pole_error at denominator roots
    std::string to_string() const;

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
    RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
    RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }
    RatFunc& operator/=(const RatFunc& b) { return *this = *this / b; }
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

private:
    void reduce();
    PolyQ num_, den_;
};

}  // namespace jucys
