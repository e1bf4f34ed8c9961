#pragma once

#include <string>
#include <vector>

#include "jucys/rational.hpp"

namespace jucys {

// Dense univariate polynomial over Q; coefficient of degree i at index i,
// normalized so the leading coefficient is nonzero (zero polynomial = {}).
class PolyQ {
public:
    PolyQ() = default;
    PolyQ(std::initializer_list<Rat> coeffs) : c_(coeffs) { normalize(); }
    explicit PolyQ(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { normalize(); }
    static PolyQ constant(Rat v);
    static PolyQ variable();  // x

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const Rat& operator[](int i) const { return c_[i]; }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Rat(0); }
    Rat leading() const;

    Rat eval(const Rat& x) const;
    std::string to_string(const std::string& var = "h") const;

    friend PolyQ operator+(const PolyQ& a, const PolyQ& b);
    friend PolyQ operator-(const PolyQ& a, const PolyQ& b);
    friend PolyQ operator*(const PolyQ& a, const PolyQ& b);
    friend PolyQ operator*(const Rat& s, const PolyQ& a);
    friend bool operator==(const PolyQ& a, const PolyQ& b) { return a.c_ == b.c_; }

    // euclidean division: *this = q * d + r with deg r < deg d
    std::pair<PolyQ, PolyQ> divmod(const PolyQ& d) const;

private:
    void normalize();
    std::vector<Rat> c_;
};

PolyQ poly_gcd(PolyQ a, PolyQ b);  // monic gcd

}  // namespace jucys
