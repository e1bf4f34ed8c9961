#pragma once

#include <map>
#include <vector>

#include "jucys/blocks.hpp"
#include "jucys/partition.hpp"
#include "jucys/rational.hpp"
#include "jucys/symmetric_group.hpp"

namespace jucys {

// A central element of Q(S_n) in the class basis.  Zero coefficients are not
// stored.  Serializes as {"cycle-type": "p/q", ...}.
struct ClassAlgebraElement {
    int n = 0;
    std::map<Partition, Rat> coeff;

    Rat at(const Partition& alpha) const;
    bool is_zero() const;
    static ClassAlgebraElement identity(int n);
    static ClassAlgebraElement class_sum(int n, const Partition& alpha);
};

ClassAlgebraElement operator+(const ClassAlgebraElement& a, const ClassAlgebraElement& b);
ClassAlgebraElement operator-(const ClassAlgebraElement& a, const ClassAlgebraElement& b);
ClassAlgebraElement operator*(const Rat& s, const ClassAlgebraElement& a);
bool operator==(const ClassAlgebraElement& a, const ClassAlgebraElement& b);

// Convolution product via the precomputed structure constants.
ClassAlgebraElement class_product(const ClassAlgebraElement& a, const ClassAlgebraElement& b);

enum class SymBasis { Sigma, H, P };

// Expansion of sigma_b / h_b / p_b of the Jucys elements J_2,...,J_n in the
// class basis, by direct multiplication in the group algebra: monotone (resp.
// strictly monotone) sequences of larger legs are walked depth-first and the
// partial dense products are shared along the tree.  The result is checked to
// be central before projecting.
ClassAlgebraElement jucys_symmetric(int n, SymBasis basis, int b, bool force = false);

// The block as an explicit central element; this is the brute-force side of
// every flavor.  CompletedCycle is supported for r <= 2 only (r = 1 is n id,
// r = 2 is the transposition class sum); larger r is spectral-only.
ClassAlgebraElement block_class_element(const BlockSpec& block, int n, bool force = false);

enum class AutomorphismMode { Full, PointwiseFibers };

// (1/n!) [C_{(1^n)}] C_mu C_nu prod blocks, by explicit group-algebra
// convolution; PointwiseFibers rescales by Z_mu Z_nu / (prod mu_i prod nu_i).
Rat brute_hurwitz(const Partition& mu, const Partition& nu, const std::vector<BlockSpec>& blocks,
                  AutomorphismMode mode = AutomorphismMode::Full, bool force = false);

}  // namespace jucys
