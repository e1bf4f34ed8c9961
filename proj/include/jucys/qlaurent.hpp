#pragma once

#include <map>
#include <string>
#include <utility>

#include "jucys/rational.hpp"

namespace jucys {

// Exact Laurent polynomials in the two commuting symbols q = e^hbar and hbar,
// treated as algebraically independent.  Exponent pair key = (q power, hbar
// power).  This is the verification ring for the difference-operator curves:
// identities must cancel monomial by monomial in (q, hbar).
class QLaurent {
public:
    QLaurent() = default;
    explicit QLaurent(Rat v) { set(0, 0, std::move(v)); }
    static QLaurent monomial(Rat v, long qexp, long hexp);
    static QLaurent qpow(long e) { return monomial(Rat(1), e, 0); }
    static QLaurent hpow(long e) { return monomial(Rat(1), 0, e); }

    bool is_zero() const { return c_.empty(); }
    Rat coeff(long qexp, long hexp) const;
    const std::map<std::pair<long, long>, Rat>& coeffs() const { return c_; }

    friend QLaurent operator+(const QLaurent& a, const QLaurent& b);
    friend QLaurent operator-(const QLaurent& a, const QLaurent& b);
    friend QLaurent operator-(const QLaurent& a);
    friend QLaurent operator*(const QLaurent& a, const QLaurent& b);
    QLaurent& operator+=(const QLaurent& b) { return *this = *this + b; }
    QLaurent& operator-=(const QLaurent& b) { return *this = *this - b; }
    QLaurent& operator*=(const QLaurent& b) { return *this = *this * b; }
    friend bool operator==(const QLaurent& a, const QLaurent& b) { return a.c_ == b.c_; }

    std::string to_string() const;

private:
    void set(long qe, long he, Rat v);
    std::map<std::pair<long, long>, Rat> c_;
};

}  // namespace jucys
