#pragma once

#include <string>

#include "jucys/hbar_series.hpp"
#include "jucys/qlaurent.hpp"
#include "jucys/ratfunc.hpp"
#include "jucys/rational.hpp"

namespace jucys {

// Uniform access to the coefficient rings the series layer is generic over:
// Q, Q(hbar), truncated/exact Laurent hbar-series, and (q, hbar) Laurent
// polynomials.
template <class R>
struct Ring;

template <>
struct Ring<Rat> {
    static Rat zero() { return Rat(0); }
    static Rat one() { return Rat(1); }
    static Rat from_rat(const Rat& v) { return v; }
    static bool is_zero(const Rat& v) { return v == 0; }
    static std::string str(const Rat& v) { return rat_str(v); }
};

template <>
struct Ring<RatFunc> {
    static RatFunc zero() { return RatFunc(); }
    static RatFunc one() { return RatFunc(Rat(1)); }
    static RatFunc from_rat(const Rat& v) { return RatFunc(v); }
    static bool is_zero(const RatFunc& v) { return v.is_zero(); }
    static std::string str(const RatFunc& v) { return v.to_string(); }
};

template <>
struct Ring<HSeries> {
    static HSeries zero() { return HSeries(); }
    static HSeries one() { return HSeries(Rat(1)); }
    static HSeries from_rat(const Rat& v) { return HSeries(v); }
    static bool is_zero(const HSeries& v) { return v.is_zero(); }
    static std::string str(const HSeries& v) { return v.to_string(); }
};

template <>
struct Ring<QLaurent> {
    static QLaurent zero() { return QLaurent(); }
    static QLaurent one() { return QLaurent(Rat(1)); }
    static QLaurent from_rat(const Rat& v) { return QLaurent(v); }
    static bool is_zero(const QLaurent& v) { return v.is_zero(); }
    static std::string str(const QLaurent& v) { return v.to_string(); }
};

template <class R>
concept CoeffRing = requires(R a, R b, Rat r) {
    { Ring<R>::zero() } -> std::same_as<R>;
    { Ring<R>::one() } -> std::same_as<R>;
    { Ring<R>::from_rat(r) } -> std::same_as<R>;
    { Ring<R>::is_zero(a) } -> std::same_as<bool>;
    { a + b } -> std::convertible_to<R>;
    { a - b } -> std::convertible_to<R>;
    { a* b } -> std::convertible_to<R>;
};

}  // namespace jucys
