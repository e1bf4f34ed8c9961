#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jucys/blocks.hpp"
#include "jucys/partition.hpp"
#include "jucys/rational.hpp"

namespace jucys {

enum class FiberMode { Full, PointwiseFibers };

struct HurwitzProblem {
    Partition mu, nu;
    std::vector<BlockSpec> blocks;
    FiberMode mode = FiberMode::Full;
};

// Disconnected Hurwitz number by the character formula:
//   (1/(Z_mu Z_nu)) sum_{lambda |- n} chi_lambda(mu) chi_lambda(nu) prod egv_lambda(block_i),
// with 1/(prod mu_i prod nu_i) in place of 1/(Z_mu Z_nu) in pointwise-fibers mode.
Rat hurwitz_number(const HurwitzProblem& problem);

// Coefficient of q^n prod_a w_a^{c_a} prod_b z_b^{d_b} p_mu(t) p_nu(ttilde) in
// the hypergeometric tau-function: sum over lambda of
// chi chi / (Z Z) * prod_a sigma_{c_a}(contents) * prod_b h_{d_b}(contents).
Rat hypergeometric_coefficient(int n, const std::vector<int>& wpows, const std::vector<int>& zpows,
                               const Partition& mu, const Partition& nu);

// ---------------------------------------------------------------------------
// Connected numbers
// ---------------------------------------------------------------------------

// A family of Hurwitz problems with a single varying count.  SingleBlock
// families insert one block of growing order b (the marker is plain w^b);
// MultiCopy families insert m identical blocks (marker w^m/m!, since the m
// branch points distribute over components with multinomial interleaving).
enum class Family {
    Monotone,        // one h_b block, nu = (r^{n/r})
    StrictMonotone,  // one sigma_b block, nu = (r^{n/r})
    SimpleHurwitz,   // m copies of the 2-cycle class sum, nu = (1^n)
    CompletedCycles, // m copies of the completed r-cycle, nu = (1^n)
    Atlantes,        // m copies of p_r(J), nu = (1^n)
};

struct ConnectedTable {
    Family family;
    int r = 1;        // orbifold order (Monotone/StrictMonotone) or cycle order
    int nmax = 0;
    int bmax = 0;     // max block order b (single-block) or copy count m (multi-copy)
    // (mu, b-or-m) -> connected number, in the Z_mu Z_nu normalization
    std::map<std::pair<Partition, int>, Rat> connected;

    int rh_weight(int b) const;          // total Riemann-Hurwitz count for key b
    int nu_length(int n) const;          // l(nu) for degree n
    Rat at(const Partition& mu, int b) const;  // 0 when absent
    // Key b for target genus g, or nullopt if 2g-2+l(mu)+l(nu) is not realizable.
    std::optional<int> key_for_genus(int g, const Partition& mu) const;
};

// Assembles the disconnected generating series sum h p_mu w^b over n <= nmax,
// b <= bmax and takes its formal logarithm.
ConnectedTable connected_numbers(Family family, int nmax, int bmax, int r = 1);

// ---------------------------------------------------------------------------
// ELSV-adjacent series
// ---------------------------------------------------------------------------

// K_1..K_L from exp(-sum K_l U^l) = sum_k (2k+1)!! U^k.
std::vector<Rat> elsv_k_coefficients(int L);

// Quasipolynomiality of connected monotone numbers: on the grid, the ratio
//   aut(mu) * h_conn(mu) / prod binom(2 mu_i, mu_i) * correction(2|mu|)
// must be a polynomial of degree <= D in each variable, checked by vanishing
// (D+1)-st finite differences.  The correction polynomial (in 2d, d = |mu|)
// handles the unstable (g,l) = (0,1), (0,2) cases, where the raw ratio is a
// rational function with denominator 2d(2d-1) resp. 2d; pass {1} for none.
struct QuasiPolyReport {
    bool ok = true;
    int degree_bound = 0;
    std::vector<std::pair<std::vector<int>, Rat>> table;  // grid point -> ratio
    std::string first_failure;                            // empty when ok
};

QuasiPolyReport quasipolynomiality_check(const ConnectedTable& monotone, int g, int ell,
                                         int degree_bound, int grid_max,
                                         const std::vector<Rat>& correction_in_2d = {Rat(1)});

// ---------------------------------------------------------------------------
// Operator identities at the eigenvalue level
// ---------------------------------------------------------------------------

// Verifies, as truncated series in z, that
//   sum_{k>=1} z^k p_k(contents of boxes 2..n)/k!  ==  E0(z)/zeta(z) - |lambda|,
// where E0(z) = sum_r z^r/r! sum_i [(lambda_i-i+1/2)^r - (-i+1/2)^r] and
// zeta(z) = e^{z/2} - e^{-z/2}.
bool lascoux_thibon_check(const Partition& lambda, int order);

// Newton relation on eigenvalues: sum h_b(c) z^b * sum sigma_b(c) (-z)^b = 1
// through order `order`, for the reduced contents of lambda.
bool newton_eigenvalue_check(const Partition& lambda, int order);

}  // namespace jucys
