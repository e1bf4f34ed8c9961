#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jucys/mseries.hpp"

namespace jucys {

// Finite sum of normal-ordered current-mode monomials: key = sorted modes (all
// nonzero; ascending order puts the negative, creation-type modes first, which
// is exactly the normal order :...: with positive modes to the right).  On
// Q[t_1..t_N] the modes act by J_n = d/dt_n (n > 0) and J_{-n} = n t_n (n > 0);
// J_0 = 0 and never appears in a key.
template <CoeffRing R>
struct BosonOp {
    std::map<std::vector<int>, R> terms;

    void add(const std::vector<int>& modes, const R& v) {
        if (Ring<R>::is_zero(v)) return;
        std::vector<int> key = modes;
        std::sort(key.begin(), key.end());
        auto [it, fresh] = terms.emplace(std::move(key), v);
        if (!fresh) {
            it->second = it->second + v;
            if (Ring<R>::is_zero(it->second)) terms.erase(it);
        }
    }

    BosonOp operator+(const BosonOp& o) const {
        BosonOp s = *this;
        for (auto& [k, v] : o.terms) s.add(k, v);
        return s;
    }

    BosonOp operator-(const BosonOp& o) const {
        BosonOp s = *this;
        for (auto& [k, v] : o.terms) s.add(k, Ring<R>::zero() - v);
        return s;
    }

    BosonOp scaled(const R& v) const {
        BosonOp s;
        for (auto& [k, w] : terms) s.add(k, w * v);
        return s;
    }

    friend bool operator==(const BosonOp& a, const BosonOp& b) { return a.terms == b.terms; }

    std::string to_string() const {
        if (terms.empty()) return "0";
        std::string s;
        for (auto& [modes, v] : terms) {
            if (!s.empty()) s += " + ";
            s += "(" + Ring<R>::str(v) + ")";
            if (modes.empty()) s += " 1";
            for (int m : modes) s += " J[" + std::to_string(m) + "]";
        }
        return s;
    }
};

template <CoeffRing R>
MSeries<R> apply_mode(int mode, const MSeries<R>& f) {
    MSeries<R> out(f.nvars(), f.cap());
    if (mode == 0) return out;
    int var = std::abs(mode) - 1;
    if (var >= f.nvars()) return out;  // beyond the variable window: acts as zero
    for (auto& [m, v] : f.terms()) {
        Mono key = m;
        if (mode > 0) {
            if (key[var] == 0) continue;
            R scaled = v * Ring<R>::from_rat(Rat(key[var]));
            key[var]--;
            out.add_term(key, scaled);
        } else {
            key[var]++;
            out.add_term(key, v * Ring<R>::from_rat(Rat(-mode)));
        }
    }
    return out;
}

// Normal-ordered action: rightmost (positive) modes act first.
template <CoeffRing R>
MSeries<R> boson_apply(const BosonOp<R>& op, const MSeries<R>& f) {
    MSeries<R> out(f.nvars(), f.cap());
    for (auto& [modes, coeff] : op.terms) {
        MSeries<R> cur = f;
        for (auto it = modes.rbegin(); it != modes.rend() && !cur.is_zero(); ++it)
            cur = apply_mode(*it, cur);
        out = out + cur.scaled(coeff);
    }
    return out;
}

// Naive unordered composition of the same mode word (J_0 still acting as 0);
// used only to check that normal ordering is immaterial where no contraction
// can occur (all-negative or all-positive words).
template <CoeffRing R>
MSeries<R> boson_apply_unordered(const std::vector<int>& word, const MSeries<R>& f) {
    MSeries<R> cur = f;
    for (auto it = word.rbegin(); it != word.rend(); ++it) cur = apply_mode(*it, cur);
    return cur;
}

// L_m = (1/2) sum_{a+b=m} :J_a J_b:  with modes bounded by N.
BosonOp<Rat> build_L(int m, int N);
// M_m = (1/3) sum_{a+b+c=m} :J_a J_b J_c:.
BosonOp<Rat> build_M(int m, int N);

// Boson image of x^{-n} P(D) under the residue formula
//   (x^2 d/dx)^m x^k  ->  Res_x x^{-k} :(J(x) + d/dx)^m J(x):/(m+1),
// with J(x) = sum_j J_j x^{-j-1}.  The w_{1+infty} element is first expanded
// in the basis (x^2 d/dx)^m x^{-n-m} = x^{-n} prod_{j=1}^m (D-n-j).  This
// convention is pinned by the calibration pairs: build_Y(m, D-(m+1)/2) = L_m
// and build_Y(m, D^2-(m+1)D+(1+m)(2+m)/6) = M_m.  A constant P contributes
// c J_n, which for n = 0 is zero (J_0 = 0): the zero mode of a plain constant
// dies.  P is given by its coefficient list in D, degree <= 3.
BosonOp<Rat> build_Y(int n, const std::vector<Rat>& p_coeffs, int N);

// R_n = sum_{k=0}^{n} (-beta)^k sum_{i_1<...<i_k<=n} Y_{x^{-n}(D-i_1)...(D-i_k)},
// n <= 3.
BosonOp<Rat> build_R(int n, const Rat& beta, int N);

template <CoeffRing R>
BosonOp<R> lift_op(const BosonOp<Rat>& op) {
    BosonOp<R> out;
    for (auto& [k, v] : op.terms) out.add(k, Ring<R>::from_rat(v));
    return out;
}

// ---------------------------------------------------------------------------
// The double monotone tau-function and its linear constraints
// ---------------------------------------------------------------------------

struct TauMM {
    int N = 0;
    Rat beta;
    std::vector<Rat> ttilde;  // ttilde_1..ttilde_N
    MSeries<Rat> series;      // in t_1..t_N, weighted degree <= N, constant term 1
};

// sum_{|lambda| <= N} s_lambda(t) s_lambda(ttilde) prod_boxes (1 - beta c)^{-1}.
// Throws pole_error when 1 - beta c vanishes for a box with |lambda| <= N.
TauMM build_tau_mm(int N, const Rat& beta, std::vector<Rat> ttilde);

struct ConstraintReport {
    bool ok = true;
    int checked_degree = 0;
    std::string first_failure;
};

// R_n tau = n ttilde_n tau, all coefficients up to weighted degree N - n.
ConstraintReport verify_constraints(const TauMM& tau, int n);

// (hbar^2 M_0 - hbar L_0 + t_1) tau = 0 to degree N for the single monotone
// specialization beta = hbar, ttilde_k = delta_{k1}/hbar.
ConstraintReport verify_cut_and_join(int N, const Rat& hbar);

// Dimension of the space of degree <= 3 series with the R_1, R_2 constraints
// imposed through degree 3 - n (constant term free); the proposition says 1.
int constraint_solution_dimension(const Rat& beta, const std::vector<Rat>& ttilde);

}  // namespace jucys
