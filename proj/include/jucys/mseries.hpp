#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "jucys/partition.hpp"
#include "jucys/rings.hpp"

namespace jucys {

// Monomial in t_1..t_V as the exponent vector (index i = variable t_{i+1}).
using Mono = std::vector<int>;

inline int weighted_degree(const Mono& m) {
    int d = 0;
    for (std::size_t i = 0; i < m.size(); ++i) d += static_cast<int>(i + 1) * m[i];
    return d;
}

// Multivariate polynomials in t_1..t_V over R, truncated at weighted degree
// cap with deg t_k = k.  Monomial keys always have length V (the number of
// variables is cap itself in the usual usage, since t_k with k > cap cannot
// appear).  The map ordering makes iteration and serialization deterministic.
template <CoeffRing R>
class MSeries {
public:
    MSeries() : nvars_(0), cap_(0) {}
    MSeries(int nvars, int cap) : nvars_(nvars), cap_(cap) {
        if (nvars < 0 || cap < 0) throw std::domain_error("MSeries: bad shape");
    }

    int nvars() const { return nvars_; }
    int cap() const { return cap_; }
    bool compatible(const MSeries& o) const { return nvars_ == o.nvars_ && cap_ == o.cap_; }
    const std::map<Mono, R>& terms() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    R coeff(const Mono& m) const {
        auto it = c_.find(m);
        return it == c_.end() ? Ring<R>::zero() : it->second;
    }

    void add_term(const Mono& m, const R& v) {
        if (static_cast<int>(m.size()) != nvars_) throw std::domain_error("MSeries: bad monomial");
        if (weighted_degree(m) > cap_ || Ring<R>::is_zero(v)) return;
        auto [it, fresh] = c_.emplace(m, v);
        if (!fresh) {
            it->second = it->second + v;
            if (Ring<R>::is_zero(it->second)) c_.erase(it);
        }
    }

    static MSeries constant(int nvars, int cap, const R& v) {
        MSeries s(nvars, cap);
        s.add_term(Mono(nvars, 0), v);
        return s;
    }

    MSeries operator+(const MSeries& o) const {
        require(o);
        MSeries s = *this;
        for (auto& [m, v] : o.c_) s.add_term(m, v);
        return s;
    }

    MSeries operator-(const MSeries& o) const {
        require(o);
        MSeries s = *this;
        for (auto& [m, v] : o.c_) s.add_term(m, Ring<R>::zero() - v);
        return s;
    }

    MSeries operator*(const MSeries& o) const {
        require(o);
        MSeries s(nvars_, cap_);
        for (auto& [ma, va] : c_) {
            int da = weighted_degree(ma);
            for (auto& [mb, vb] : o.c_) {
                if (da + weighted_degree(mb) > cap_) continue;
                Mono m(nvars_);
                for (int i = 0; i < nvars_; ++i) m[i] = ma[i] + mb[i];
                s.add_term(m, va * vb);
            }
        }
        return s;
    }

    MSeries scaled(const R& v) const {
        MSeries s(nvars_, cap_);
        for (auto& [m, w] : c_) s.add_term(m, w * v);
        return s;
    }

    // truncate to a smaller weighted-degree window
    MSeries truncated(int newcap) const {
        MSeries s(nvars_, cap_);
        s.cap_ = std::min(cap_, newcap);
        for (auto& [m, v] : c_)
            if (weighted_degree(m) <= s.cap_) s.c_[m] = v;
        return s;
    }

    int min_degree() const {
        int d = cap_ + 1;
        for (auto& [m, v] : c_) d = std::min(d, weighted_degree(m));
        return d;
    }

    std::string to_string(const std::string& var = "t") const {
        if (c_.empty()) return "0";
        std::string s;
        for (auto& [m, v] : c_) {
            if (!s.empty()) s += " + ";
            s += "(" + Ring<R>::str(v) + ")";
            for (int i = 0; i < nvars_; ++i) {
                if (m[i] == 0) continue;
                s += "*" + var + std::to_string(i + 1);
                if (m[i] > 1) s += "^" + std::to_string(m[i]);
            }
        }
        return s;
    }

private:
    void require(const MSeries& o) const {
        if (!compatible(o)) throw std::domain_error("MSeries: incompatible shapes");
    }
    int nvars_;
    int cap_;
    std::map<Mono, R> c_;
};

// exp(a), a with min weighted degree >= 1.
template <CoeffRing R>
MSeries<R> mseries_exp(const MSeries<R>& a) {
    if (a.min_degree() < 1) throw std::domain_error("mseries_exp: constant term must vanish");
    MSeries<R> acc = MSeries<R>::constant(a.nvars(), a.cap(), Ring<R>::one());
    MSeries<R> pw = acc;
    Rat kfac = 1;
    for (int k = 1; k <= a.cap(); ++k) {
        pw = pw * a;
        if (pw.is_zero()) break;
        kfac *= k;
        acc = acc + pw.scaled(Ring<R>::from_rat(Rat(1) / kfac));
    }
    return acc;
}

// log(a), a with constant term 1.
template <CoeffRing R>
MSeries<R> mseries_log(const MSeries<R>& a) {
    Mono zero(a.nvars(), 0);
    R c0 = a.coeff(zero);
    if (!Ring<R>::is_zero(c0 - Ring<R>::one()))
        throw std::domain_error("mseries_log: constant term must be 1");
    MSeries<R> x = a;
    x.add_term(zero, Ring<R>::zero() - Ring<R>::one());
    if (!x.is_zero() && x.min_degree() < 1)
        throw std::domain_error("mseries_log: nonunital part must have positive degree");
    MSeries<R> acc(a.nvars(), a.cap());
    MSeries<R> pw = x;
    for (int k = 1; k <= a.cap() && !pw.is_zero(); ++k) {
        acc = acc + pw.scaled(Ring<R>::from_rat(rat(k % 2 == 1 ? 1 : -1, k)));
        pw = pw * x;
    }
    return acc;
}

// p_mu -> prod (mu_i t_{mu_i}) as an MSeries monomial; used to turn
// schur_in_p output into t-polynomials via p_k = k t_k.
template <CoeffRing R>
MSeries<R> ppoly_to_tseries(const std::map<Partition, Rat>& ppoly, int nvars, int cap) {
    MSeries<R> s(nvars, cap);
    for (auto& [mu, coeff] : ppoly) {
        if (mu.size() > cap) continue;
        bool fits = mu.empty() || mu.part(0) <= nvars;
        if (!fits) continue;
        Mono m(nvars, 0);
        Rat scale = coeff;
        for (int part : mu.parts()) {
            m[part - 1]++;
            scale *= part;
        }
        s.add_term(m, Ring<R>::from_rat(scale));
    }
    return s;
}

}  // namespace jucys
