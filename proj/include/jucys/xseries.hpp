#pragma once

#include <limits>
#include <map>
#include <stdexcept>

#include "jucys/rings.hpp"

namespace jucys {

// Laurent series in one variable x with coefficients in R, with an explicit
// trusted window: the stored coefficients equal the represented object's for
// every exponent in [trust_lo, trust_hi]; outside the window nothing is
// claimed.  Wave functions supported in x^{>=0} use (-inf, N]; the x^{-1}
// expansions use [-N, +inf).  Operator application shifts and intersects the
// window (MulX(-r) on a series trusted to x^N yields trust only to x^{N-r}).
template <CoeffRing R>
struct XSeries {
    static constexpr int kInf = std::numeric_limits<int>::max() / 4;

    std::map<int, R> c;
    int trust_lo = -kInf;
    int trust_hi = kInf;

    R at(int e) const {
        auto it = c.find(e);
        return it == c.end() ? Ring<R>::zero() : it->second;
    }

    void set(int e, R v) {
        if (Ring<R>::is_zero(v))
            c.erase(e);
        else
            c[e] = std::move(v);
    }

    void add(int e, const R& v) {
        if (Ring<R>::is_zero(v)) return;
        auto [it, fresh] = c.emplace(e, v);
        if (!fresh) {
            it->second = it->second + v;
            if (Ring<R>::is_zero(it->second)) c.erase(it);
        }
    }
};

// Truncated product for power series supported in x^{>=0}; cap = min of the
// operands' trust_hi (both must be (-inf, N\] shaped).
template <CoeffRing R>
XSeries<R> xs_mul(const XSeries<R>& a, const XSeries<R>& b) {
    XSeries<R> r;
    r.trust_hi = std::min(a.trust_hi, b.trust_hi);
    for (auto& [ea, va] : a.c)
        for (auto& [eb, vb] : b.c) {
            if (ea + eb > r.trust_hi) continue;
            r.add(ea + eb, va * vb);
        }
    return r;
}

// exp for power series with strictly positive x-valuation.
template <CoeffRing R>
XSeries<R> xs_exp(const XSeries<R>& a) {
    for (auto& [e, v] : a.c)
        if (e < 1) throw std::domain_error("xs_exp: argument must have positive x-valuation");
    XSeries<R> acc, pw;
    acc.trust_hi = a.trust_hi;
    pw.trust_hi = a.trust_hi;
    acc.set(0, Ring<R>::one());
    pw.set(0, Ring<R>::one());
    Rat kfac = 1;
    for (int k = 1; k <= a.trust_hi && !pw.c.empty(); ++k) {
        pw = xs_mul(pw, a);
        kfac *= k;
        R inv = Ring<R>::from_rat(Rat(1) / kfac);
        for (auto& [e, v] : pw.c) acc.add(e, v * inv);
    }
    return acc;
}

}  // namespace jucys
