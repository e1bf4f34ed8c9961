#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace jucys {

// Exact arithmetic everywhere: rationals are GMP mpq, integers are GMP mpz.
// Everything user-facing serializes rationals as canonical "p/q" strings
// (or "p" when the denominator is 1), never as floats.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat rat(const Int& num, const Int& den = 1) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline std::string rat_str(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rat rat_parse(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::domain_error("bad rational: " + s);
    if (r.get_den() == 0) throw std::domain_error("zero denominator: " + s);
    r.canonicalize();
    return r;
}

inline Int factorial(long n) {
    Int f = 1;
    for (long i = 2; i <= n; ++i) f *= i;
    return f;
}

inline Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return b;
}

// (2k-1)!! with the usual convention (-1)!! = 1.
inline Int odd_double_factorial(long k) {
    Int f = 1;
    for (long i = 1; i <= k; ++i) f *= 2 * i - 1;
    return f;
}

}  // namespace jucys
