#include "jucys/qlaurent.hpp"

namespace jucys {

void QLaurent::set(long qe, long he, Rat v) {
    if (v == 0) return;
    c_[{qe, he}] = std::move(v);
}

QLaurent QLaurent::monomial(Rat v, long qexp, long hexp) {
    QLaurent s;
    s.set(qexp, hexp, std::move(v));
    return s;
}

Rat QLaurent::coeff(long qexp, long hexp) const {
    auto it = c_.find({qexp, hexp});
    return it == c_.end() ? Rat(0) : it->second;
}

QLaurent operator+(const QLaurent& a, const QLaurent& b) {
    QLaurent s = a;
    for (auto& [k, v] : b.c_) {
        auto [it, fresh] = s.c_.emplace(k, v);
        if (!fresh) {
            it->second += v;
            if (it->second == 0) s.c_.erase(it);
        }
    }
    return s;
}

QLaurent operator-(const QLaurent& a) {
    QLaurent s = a;
    for (auto& [k, v] : s.c_) v = -v;
    return s;
}

QLaurent operator-(const QLaurent& a, const QLaurent& b) { return a + (-b); }

QLaurent operator*(const QLaurent& a, const QLaurent& b) {
    QLaurent s;
    for (auto& [ka, va] : a.c_)
        for (auto& [kb, vb] : b.c_) {
            std::pair<long, long> k{ka.first + kb.first, ka.second + kb.second};
            auto [it, fresh] = s.c_.emplace(k, va * vb);
            if (!fresh) {
                it->second += va * vb;
                if (it->second == 0) s.c_.erase(it);
            }
        }
    return s;
}

std::string QLaurent::to_string() const {
    if (c_.empty()) return "0";
    std::string s;
    for (auto& [k, v] : c_) {
        if (!s.empty()) s += " + ";
        s += rat_str(v);
        if (k.first != 0) s += "*q^" + std::to_string(k.first);
        if (k.second != 0) s += "*h^" + std::to_string(k.second);
    }
    return s;
}

}  // namespace jucys
