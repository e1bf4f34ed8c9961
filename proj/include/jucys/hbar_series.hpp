#pragma once

#include <limits>
#include <map>
#include <string>

#include "jucys/rational.hpp"

namespace jucys {

// Laurent series in hbar with rational coefficients, truncated at a tracked
// exponent cap: coefficients for exponents <= cap are exact, higher ones are
// dropped.  Exact Laurent polynomials use the kExact sentinel cap, so the same
// type serves both the polynomial-hbar ring (strictly monotone) and the
// truncated ring (atlantes).  Caps combine by knowledge: add intersects, and a
// product of a mod-h^{Ma+1} value with one of valuation vb is exact only to
// min(Ma + vb, Mb + va).
class HSeries {
public:
    static constexpr int kExact = std::numeric_limits<int>::max() / 4;

    HSeries() : cap_(kExact) {}
    explicit HSeries(Rat v, int cap = kExact) : cap_(cap) { set(0, std::move(v)); }
    static HSeries monomial(Rat v, int exponent, int cap = kExact);
    static HSeries hbar(int cap = kExact) { return monomial(Rat(1), 1, cap); }

    int cap() const { return cap_; }
    bool exact() const { return cap_ == kExact; }
    bool is_zero() const { return c_.empty(); }
    // +kExact for the zero series
    int valuation() const { return c_.empty() ? kExact : c_.begin()->first; }
    Rat coeff(int e) const;
    const std::map<int, Rat>& coeffs() const { return c_; }

    HSeries truncated(int cap) const;

    friend HSeries operator+(const HSeries& a, const HSeries& b);
    friend HSeries operator-(const HSeries& a, const HSeries& b);
    friend HSeries operator-(const HSeries& a);
    friend HSeries operator*(const HSeries& a, const HSeries& b);
    friend HSeries operator*(const Rat& s, const HSeries& a);
    HSeries& operator+=(const HSeries& b) { return *this = *this + b; }
    HSeries& operator-=(const HSeries& b) { return *this = *this - b; }
    HSeries& operator*=(const HSeries& b) { return *this = *this * b; }
    friend bool operator==(const HSeries& a, const HSeries& b) {
        return a.c_ == b.c_ && a.cap_ == b.cap_;
    }

    std::string to_string() const;

private:
    void set(int e, Rat v);
    std::map<int, Rat> c_;
    int cap_;
};

// exp(a) truncated at a's cap; requires valuation(a) >= 1.
HSeries hseries_exp(const HSeries& a);

}  // namespace jucys
