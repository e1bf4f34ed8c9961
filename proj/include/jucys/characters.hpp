#pragma once

#include <map>

#include "jucys/partition.hpp"
#include "jucys/rational.hpp"

namespace jucys {

// Irreducible character chi_lambda(mu) of S_n, |lambda| = |mu|, by recursive
// border-strip removal (Murnaghan-Nakayama).  Results are memoized behind a
// lock; the function is observationally pure and safe to call concurrently.
long long character(const Partition& lambda, const Partition& mu);

// A polynomial in the power sums p_1, p_2, ...: map from the index partition
// mu (meaning p_mu = prod p_{mu_i}) to its rational coefficient.
using PPoly = std::map<Partition, Rat>;

// s_lambda = sum_{mu |- |lambda|} chi_lambda(mu) p_mu / Z_mu.
PPoly schur_in_p(const Partition& lambda);

// Eigenvalue of the class sum C_alpha on the irreducible lambda:
// |C_alpha| chi_lambda(alpha) / dim lambda.
Rat class_sum_eigenvalue(const Partition& lambda, const Partition& alpha);

}  // namespace jucys
