#pragma once

#include <vector>

#include "jucys/quantum.hpp"

namespace jucys {

// ---------------------------------------------------------------------------
// Wave functions.  Every flavor normalizes to 1 at x^0.
// ---------------------------------------------------------------------------

// Coefficients of exp(sum_k ttilde_k x^k / hbar) through x^N, in any ring that
// can represent ttilde_k / hbar (the ring elements are passed in directly).
template <CoeffRing R>
XSeries<R> exp_principal(const std::vector<R>& ttilde_over_h, int N) {
    XSeries<R> arg;
    arg.trust_hi = N;
    for (std::size_t k = 0; k < ttilde_over_h.size(); ++k)
        arg.set(static_cast<int>(k + 1), ttilde_over_h[k]);
    return xs_exp(arg);
}

// Monotone wave: Psi = sum_j h_j(ttilde/hbar) x^j prod_{l=0}^{j-1} (1-l hbar)^{-1},
// h_j the x^j coefficient of exp(sum ttilde_k x^k / hbar).  Ring: Q(hbar).
XSeries<RatFunc> wave_monotone(const std::vector<Rat>& ttilde, int N);

// Monotone r-orbifold specialization ttilde_k = delta_{k,r}/r.
XSeries<RatFunc> wave_monotone_orbifold(int r, int N);

// Strictly monotone r-orbifold wave, a series in x^{-1}:
//   sum_n x^{-rn} / (n! hbar^n r^n) prod_{j=1}^{rn-1} (1 + j hbar).
// Ring: exact Laurent polynomials in hbar.
XSeries<HSeries> wave_strict_monotone(int r, int N);

// Atlantes wave: sum_n x^n/(n! hbar^n) exp(hbar^r sum_{j=1}^{n-1} j^r),
// exponentials resolved in the hbar-series ring truncated at cap M.
XSeries<HSeries> wave_atlantes(int r, int N, int M);

// Double Hurwitz wave: coefficient of x^m is q^{m(m-1)/2} [x^m] exp(sum ttilde_k x^k/hbar),
// q = e^hbar an independent symbol.
XSeries<QLaurent> wave_double_hurwitz(const std::vector<Rat>& ttilde, int N);

// One-parameter deformation ttilde_k = c^{k-1}.
XSeries<QLaurent> wave_deformation(const Rat& c, int N);

// Simple Hurwitz wave  sum_m x^m q^{m(m-1)/2} / (m! hbar^m).
XSeries<QLaurent> wave_simple_hurwitz(int N);

// ---------------------------------------------------------------------------
// Quantum curve operators
// ---------------------------------------------------------------------------

// General monotone curve: sum_k k ttilde_k x^k prod_{j=0}^{k-1} (1-hbar(D+j))^{-1} - hbar D.
OperatorExpr<RatFunc> op_monotone_general(const std::vector<Rat>& ttilde);

// Polynomial presentation (l = length of the ttilde support):
//   sum_k k ttilde_k x^k prod_{j=1}^{l-k} (1-hbar(D-j)) - hbar D prod_{j=1}^{l} (1-hbar(D-j)).
OperatorExpr<RatFunc> op_monotone_polynomial(const std::vector<Rat>& ttilde);

// Monotone r-orbifold curve x(x^{r-1} + prod_{j=1}^{r}(1+xy+hbar(j-1)) y), y = -hbar d/dx.
OperatorExpr<RatFunc> op_monotone_orbifold(int r);

// Strictly monotone curve.  The conjugated form x^{1/hbar}((-hbar d/dx)^r +
// hbar x d/dx + 1) x^{-1/hbar} is resolved algebraically before use:
// conjugation by x^{1/hbar} sends -hbar d/dx to -hbar d/dx + x^{-1} and
// hbar x d/dx to hbar x d/dx - 1, so the operator applied here is
//   (-hbar d/dx + x^{-1})^r + hbar x d/dx,
// which acts within integer Laurent exponents (no x^{1/hbar} ever appears).
OperatorExpr<HSeries> op_strict_monotone(int r);

// Atlantes curve y - x e^{y^r} with y = hbar D; e^{(hbar D)^r} acts on x^m as
// exp(hbar^r m^r), truncated at cap M.
OperatorExpr<HSeries> op_atlantes(int r, int M);

// Double Hurwitz curve: sum_k k ttilde_k q^{k(k-1)/2} x^k e^{hbar k D} - hbar D.
OperatorExpr<QLaurent> op_double_hurwitz(const std::vector<Rat>& ttilde);

// Deformed curve 1 - (e^{-y} x^{-1} - 2c + c^2 x e^{y}) y, y = hbar D.
OperatorExpr<QLaurent> op_deformation(const Rat& c);

// Simple Hurwitz curve in the same ring: e^{-y} x^{-1} y - 1.
OperatorExpr<QLaurent> op_simple_hurwitz();

// ---------------------------------------------------------------------------
// Cross-validation helpers
// ---------------------------------------------------------------------------

// x^n coefficient of the monotone wave computed through the Schur sum: the
// principal specialization keeps only one-row shapes, giving
// s_{(n)}(ttilde/hbar) prod_{boxes} (1 - hbar c)^{-1}.  Evaluated through the
// character table, independently of the exp-series route.
RatFunc monotone_wave_coefficient_via_schur(const std::vector<Rat>& ttilde, int n);

}  // namespace jucys
