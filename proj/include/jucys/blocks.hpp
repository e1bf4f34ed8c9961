#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jucys/partition.hpp"
#include "jucys/rational.hpp"

namespace jucys {

// One block of a Hurwitz problem: a central element of Q(S_n) inserted into
// the factorization count.  The first five flavors are the constrained
// transposition families; ClassSum and CompletedCycle insert a single
// ramification; HyperW/HyperZ are the hypergeometric weight factors
// prod (1 + c w) and prod 1/(1 - c z) over the boxes.
struct BlockSpec {
    enum class Flavor {
        StrictMonotone,  // sigma_b(J_2..J_n)
        Monotone,        // h_b(J_2..J_n)
        Atlantes,        // p_b(J_2..J_n)
        FreeSingle,      // sum of C_alpha with l(alpha) = n - b
        FreeGroup,       // signed sum over tuples of nontrivial classes
        ClassSum,        // C_alpha
        CompletedCycle,  // spectrally defined completed r-cycle
        HyperW,          // prod over boxes of (1 + content * w)
        HyperZ,          // prod over boxes of 1 / (1 - content * z)
    };

    Flavor flavor;
    int b = 0;        // order b (Jucys flavors, FreeSingle/FreeGroup) or r (CompletedCycle)
    Partition alpha;  // ClassSum only
    Rat param;        // HyperW / HyperZ only

    static BlockSpec strict_monotone(int b);
    static BlockSpec monotone(int b);
    static BlockSpec atlantes(int b);
    static BlockSpec free_single(int b);
    static BlockSpec free_group(int b);
    static BlockSpec class_sum(Partition alpha);
    static BlockSpec completed_cycle(int r);
    static BlockSpec hyper_w(Rat w);
    static BlockSpec hyper_z(Rat z);

    // Contribution b_i to the Riemann-Hurwitz count 2g-2+l(mu)+l(nu); nullopt
    // for the hypergeometric factors, which carry no single ramification order.
    std::optional<int> rh_weight(int n) const;

    std::string to_string() const;
};

// Eigenvalue of the block on the irreducible lambda (exact).  Jucys flavors
// evaluate the symmetric polynomial on the contents of boxes 2..n (the single
// zero of box (1,1) is dropped; symmetric functions ignore zero entries, so
// this matches both J_2..J_n and the full-box hypergeometric products).
// Throws pole_error when a HyperZ factor vanishes.
Rat block_eigenvalue(const BlockSpec& block, const Partition& lambda);

// (1/r!) sum_i [(lambda_i - i + 1/2)^r - (-i + 1/2)^r].
Rat completed_cycle_eigenvalue(int r, const Partition& lambda);

}  // namespace jucys
