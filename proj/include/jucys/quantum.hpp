#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "jucys/characters.hpp"
#include "jucys/partition.hpp"
#include "jucys/xseries.hpp"

namespace jucys {

// A primitive symbol acting exactly on monomials x^m:
//   MulX(k):  x^m -> x^{m+k}            (k may be negative)
//   Diff:     x^m -> m x^{m-1}
//   Euler:    x^m -> m x^m              (D = x d/dx)
//   Diag(f):  x^m -> f(m) x^m           (diagonal rational function of D,
//                                        q-shift e^{c hbar D}, or e^{(hbar D)^r})
template <CoeffRing R>
struct Prim {
    enum class Kind { MulX, Diff, Euler, Diag };
    Kind kind;
    int k = 0;
    std::function<R(long)> diag;
    std::string label;

    int xshift() const {
        if (kind == Kind::MulX) return k;
        if (kind == Kind::Diff) return -1;
        return 0;
    }

    static Prim mulx(int k) { return {Kind::MulX, k, {}, "x^" + std::to_string(k)}; }
    static Prim diff() { return {Kind::Diff, 0, {}, "d/dx"}; }
    static Prim euler() { return {Kind::Euler, 0, {}, "D"}; }
    static Prim diag(std::function<R(long)> f, std::string label) {
        return {Kind::Diag, 0, std::move(f), std::move(label)};
    }
};

// coeff * (prims[0] . prims[1] . ... . prims.back()), rightmost applied first.
template <CoeffRing R>
struct OpTerm {
    R coeff;
    std::vector<Prim<R>> prims;
    int xshift() const {
        int s = 0;
        for (auto& p : prims) s += p.xshift();
        return s;
    }
};

template <CoeffRing R>
struct OperatorExpr {
    std::string name;
    std::vector<OpTerm<R>> terms;
};

template <CoeffRing R>
OperatorExpr<R> op_sum(OperatorExpr<R> a, const OperatorExpr<R>& b) {
    for (auto& t : b.terms) a.terms.push_back(t);
    return a;
}

template <CoeffRing R>
OperatorExpr<R> op_scale(const R& s, OperatorExpr<R> a) {
    for (auto& t : a.terms) t.coeff = t.coeff * s;
    return a;
}

// composition a . b (b applied first)
template <CoeffRing R>
OperatorExpr<R> op_compose(const OperatorExpr<R>& a, const OperatorExpr<R>& b) {
    OperatorExpr<R> c;
    c.name = a.name + "." + b.name;
    for (auto& ta : a.terms)
        for (auto& tb : b.terms) {
            OpTerm<R> t;
            t.coeff = ta.coeff * tb.coeff;
            t.prims = ta.prims;
            t.prims.insert(t.prims.end(), tb.prims.begin(), tb.prims.end());
            c.terms.push_back(std::move(t));
        }
    return c;
}

// Exact action, monomial by monomial.  The trusted window of the result is
// the intersection over terms of the input window shifted by the term's net
// x-shift: a term containing MulX(-r) shrinks the upper edge by r.
template <CoeffRing R>
XSeries<R> apply(const OperatorExpr<R>& op, const XSeries<R>& f) {
    constexpr int kInf = XSeries<R>::kInf;
    XSeries<R> out;
    if (op.terms.empty()) {
        out.c.clear();
        return out;
    }
    long lo = -static_cast<long>(kInf), hi = kInf;
    for (auto& term : op.terms) {
        long s = term.xshift();
        long tlo = f.trust_lo <= -kInf ? -static_cast<long>(kInf) : f.trust_lo + s;
        long thi = f.trust_hi >= kInf ? kInf : f.trust_hi + s;
        lo = std::max(lo, tlo);
        hi = std::min(hi, thi);
    }
    out.trust_lo = static_cast<int>(std::max(lo, -static_cast<long>(kInf)));
    out.trust_hi = static_cast<int>(std::min(hi, static_cast<long>(kInf)));

    for (auto& term : op.terms) {
        for (auto& [e0, v0] : f.c) {
            long e = e0;
            R v = v0;
            bool dead = false;
            for (auto it = term.prims.rbegin(); it != term.prims.rend(); ++it) {
                switch (it->kind) {
                    case Prim<R>::Kind::MulX:
                        e += it->k;
                        break;
                    case Prim<R>::Kind::Diff:
                        v = v * Ring<R>::from_rat(Rat(static_cast<long>(e)));
                        e -= 1;
                        break;
                    case Prim<R>::Kind::Euler:
                        v = v * Ring<R>::from_rat(Rat(static_cast<long>(e)));
                        break;
                    case Prim<R>::Kind::Diag:
                        v = v * it->diag(e);
                        break;
                }
                if (Ring<R>::is_zero(v)) {
                    dead = true;
                    break;
                }
            }
            if (!dead) out.add(static_cast<int>(e), term.coeff * v);
        }
    }
    // coefficients outside the trusted window are meaningless; drop them
    for (auto it = out.c.begin(); it != out.c.end();)
        it = (it->first < out.trust_lo || it->first > out.trust_hi) ? out.c.erase(it) : std::next(it);
    return out;
}

struct AnnihilationReport {
    bool ok = true;
    std::string flavor;
    int window_lo = 0, window_hi = 0;  // exponent window actually checked
    std::optional<int> first_failure_exponent;
    std::string first_failure_value;
};

// Asserts the residual op(wave) vanishes identically in the coefficient ring
// on [want_lo, want_hi] intersected with the residual's trusted window; the
// wave must have been built with enough margin to cover the request.
template <CoeffRing R>
AnnihilationReport verify_annihilation(const OperatorExpr<R>& op, const XSeries<R>& wave,
                                       int want_lo, int want_hi, std::string flavor = {}) {
    XSeries<R> res = apply(op, wave);
    AnnihilationReport rep;
    rep.flavor = std::move(flavor);
    if (want_lo < res.trust_lo || want_hi > res.trust_hi)
        throw std::domain_error("verify_annihilation: requested window exceeds the trusted one");
    rep.window_lo = want_lo;
    rep.window_hi = want_hi;
    for (auto& [e, v] : res.c) {
        if (e < want_lo || e > want_hi || Ring<R>::is_zero(v)) continue;
        rep.ok = false;
        if (!rep.first_failure_exponent) {
            rep.first_failure_exponent = e;
            rep.first_failure_value = Ring<R>::str(v);
        }
    }
    return rep;
}

}  // namespace jucys
