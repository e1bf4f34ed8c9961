#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "jucys/partition.hpp"

namespace jucys {

// A permutation of {0,...,n-1} as its image array.
using Perm = std::vector<std::uint8_t>;

Perm perm_identity(int n);
Perm perm_mul(const Perm& a, const Perm& b);  // (a*b)(i) = a(b(i))
Perm perm_inverse(const Perm& a);
Partition cycle_type(const Perm& a);

// Fully enumerated S_n with class data and brute-forced structure constants.
// Everything here is plain counting over explicit permutations; no character
// theory enters.  Instances are immutable once built.
class SymmetricGroup {
public:
    explicit SymmetricGroup(int n);

    int n() const { return n_; }
    long long order() const { return order_; }

    const std::vector<Perm>& elements() const { return elements_; }  // lex order
    int rank(const Perm& p) const;                                   // inverse of elements()[.]

    const std::vector<Partition>& classes() const { return classes_; }  // reverse-lex
    int num_classes() const { return static_cast<int>(classes_.size()); }
    int class_index(const Partition& alpha) const;
    int identity_class() const { return identity_class_; }
    int type_of(int rank) const { return type_of_[rank]; }

    // rank -> rank table for right multiplication by the transposition (x y),
    // 0-based x < y < n.
    const std::vector<int>& right_transposition(int x, int y) const;

    // c[a][b][g] = #{(u,v) in C_a x C_b : u v = rep_g}; so
    // C_a C_b = sum_g c[a][b][g] C_g.
    long long structure_constant(int a, int b, int g) const { return sc_[a][b][g]; }

private:
    int n_;
    long long order_;
    std::vector<Perm> elements_;
    std::vector<Partition> classes_;
    std::map<Partition, int> class_index_;
    int identity_class_;
    std::vector<int> type_of_;
    std::vector<std::vector<std::vector<int>>> rtrans_;  // [x][y] -> table
    std::vector<std::vector<std::vector<long long>>> sc_;
};

// Shared per-n instances, guarded by the enumeration limit (default 7).
// Throws resource_error beyond the limit unless force is set.
const SymmetricGroup& symmetric_group(int n, bool force = false);
int enumeration_limit();
void set_enumeration_limit(int limit);

}  // namespace jucys
