#include "jucys/polyq.hpp"

#include <stdexcept>

namespace jucys {

void PolyQ::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PolyQ PolyQ::constant(Rat v) {
    PolyQ p;
    if (v != 0) p.c_ = {std::move(v)};
    return p;
}

PolyQ PolyQ::variable() { return PolyQ({Rat(0), Rat(1)}); }

Rat PolyQ::leading() const {
    if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
}

Rat PolyQ::eval(const Rat& x) const {
    Rat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::string PolyQ::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
        if (c_[i] == 0) continue;
        if (!s.empty()) s += " + ";
        if (i == 0 || c_[i] != 1) s += rat_str(c_[i]);
        if (i > 0) {
            if (c_[i] != 1) s += "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

PolyQ operator+(const PolyQ& a, const PolyQ& b) {
    std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return PolyQ(std::move(c));
}

PolyQ operator-(const PolyQ& a, const PolyQ& b) {
    std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return PolyQ(std::move(c));
}

PolyQ operator*(const PolyQ& a, const PolyQ& b) {
    if (a.is_zero() || b.is_zero()) return PolyQ();
    std::vector<Rat> c(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return PolyQ(std::move(c));
}

PolyQ operator*(const Rat& s, const PolyQ& a) {
    std::vector<Rat> c = a.c_;
    for (auto& v : c) v *= s;
    return PolyQ(std::move(c));
}

std::pair<PolyQ, PolyQ> PolyQ::divmod(const PolyQ& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rat> rem = c_;
    std::vector<Rat> quot(rem.size() > d.c_.size() ? rem.size() - d.c_.size() + 1 : 1, Rat(0));
    int dd = d.degree();
    for (int i = static_cast<int>(rem.size()) - 1; i >= dd; --i) {
        if (rem[i] == 0) continue;
        Rat f = rem[i] / d.c_.back();
        quot[i - dd] = f;
        for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= f * d.c_[j];
    }
    return {PolyQ(std::move(quot)), PolyQ(std::move(rem))};
}

PolyQ poly_gcd(PolyQ a, PolyQ b) {
    while (!b.is_zero()) {
        PolyQ r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return (Rat(1) / a.leading()) * a;
}

}  // namespace jucys
