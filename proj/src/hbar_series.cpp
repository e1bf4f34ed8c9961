#include "jucys/hbar_series.hpp"

#include <stdexcept>

namespace jucys {

void HSeries::set(int e, Rat v) {
    if (v == 0 || e > cap_) return;
    c_[e] = std::move(v);
}

HSeries HSeries::monomial(Rat v, int exponent, int cap) {
    HSeries s;
    s.cap_ = cap;
    s.set(exponent, std::move(v));
    return s;
}

Rat HSeries::coeff(int e) const {
    if (e > cap_) throw std::domain_error("HSeries::coeff beyond truncation cap");
    auto it = c_.find(e);
    return it == c_.end() ? Rat(0) : it->second;
}

HSeries HSeries::truncated(int cap) const {
    HSeries s;
    s.cap_ = std::min(cap_, cap);
    for (auto& [e, v] : c_)
        if (e <= s.cap_) s.c_[e] = v;
    return s;
}

HSeries operator+(const HSeries& a, const HSeries& b) {
    HSeries s;
    s.cap_ = std::min(a.cap_, b.cap_);
    for (auto& [e, v] : a.c_)
        if (e <= s.cap_) s.c_[e] = v;
    for (auto& [e, v] : b.c_) {
        if (e > s.cap_) continue;
        auto [it, fresh] = s.c_.emplace(e, v);
        if (!fresh) {
            it->second += v;
            if (it->second == 0) s.c_.erase(it);
        }
    }
    return s;
}

HSeries operator-(const HSeries& a) {
    HSeries s = a;
    for (auto& [e, v] : s.c_) v = -v;
    return s;
}

HSeries operator-(const HSeries& a, const HSeries& b) { return a + (-b); }

HSeries operator*(const HSeries& a, const HSeries& b) {
    HSeries s;
    if (a.c_.empty() || b.c_.empty()) {
        // zero is exact; keep the weaker of the caps for knowledge bookkeeping
        s.cap_ = std::min(a.cap_, b.cap_);
        return s;
    }
    long capa = static_cast<long>(a.cap_) + b.valuation();
    long capb = static_cast<long>(b.cap_) + a.valuation();
    s.cap_ = static_cast<int>(std::min({capa, capb, static_cast<long>(HSeries::kExact)}));
    for (auto& [ea, va] : a.c_)
        for (auto& [eb, vb] : b.c_) {
            if (ea + eb > s.cap_) continue;
            auto [it, fresh] = s.c_.emplace(ea + eb, va * vb);
            if (!fresh) {
                it->second += va * vb;
                if (it->second == 0) s.c_.erase(it);
            }
        }
    return s;
}

std::string HSeries::to_string() const {
    if (c_.empty()) return "0";
    std::string s;
    for (auto& [e, v] : c_) {
        if (!s.empty()) s += " + ";
        s += rat_str(v);
        if (e != 0) s += "*h^" + std::to_string(e);
    }
    if (!exact()) s += " + O(h^" + std::to_string(cap_ + 1) + ")";
    return s;
}

HSeries operator*(const Rat& s, const HSeries& a) {
    HSeries r;
    r.cap_ = a.cap_;
    if (s != 0)
        for (auto& [e, v] : a.c_) r.c_[e] = s * v;
    return r;
}

HSeries hseries_exp(const HSeries& a) {
    if (!a.is_zero() && a.valuation() < 1)
        throw std::domain_error("hseries_exp: positive valuation required");
    if (!a.is_zero() && a.exact())
        throw std::domain_error("hseries_exp: a finite truncation cap is required");
    HSeries acc(Rat(1), a.cap());
    HSeries pw(Rat(1), a.cap());
    Rat kfac = 1;
    for (int k = 1; !pw.is_zero(); ++k) {
        pw *= a;
        if (pw.is_zero()) break;
        kfac *= k;
        acc += (Rat(1) / kfac) * pw;
    }
    return acc;
}

}  // namespace jucys
