#pragma once

#include <compare>
#include <string>
#include <vector>

#include "jucys/rational.hpp"

namespace jucys {

// An integer partition: weakly decreasing positive parts.  Immutable value
// object; the empty partition (size 0) is valid.  Partitions index conjugacy
// classes and irreducible representations of S_n as well as ramification
// profiles.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    // e.g. Partition::of({3,1,1}); parts may be given in any order, zeros dropped.
    static Partition of(std::initializer_list<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int part(int i) const { return parts_[i]; }

    // multiplicity of the part k
    int multiplicity(int k) const;

    auto operator<=>(const Partition&) const = default;

    std::string to_string() const;  // "3,1,1"; empty partition -> ""

private:
    std::vector<int> parts_;
    int size_ = 0;
};

// All partitions of n, each exactly once, in reverse lexicographic order:
// (n) first, (1^n) last.  This is the canonical order used everywhere.
std::vector<Partition> partitions_of(int n);

// p(n), counted independently of the enumeration (Euler pentagonal recurrence).
Int partition_count(int n);

// Contents {j - i : box (i,j)}, as a sorted multiset (ascending).  Symmetric
// function evaluations are filling-independent, so no tableau order is kept.
std::vector<int> content_multiset(const Partition& lambda);

// Contents of boxes 2..n: the full multiset with one zero (box (1,1)) removed.
// This is the variable set for symmetric functions of J_2,...,J_n.
std::vector<int> reduced_contents(const Partition& lambda);

Partition conjugate(const Partition& lambda);

// Z_mu = prod mu_i * prod_k m_k! where m_k is the multiplicity of the part k.
Int centralizer_size(const Partition& mu);

// |C_mu| = n! / Z_mu.
Int class_size(const Partition& mu);

// dim lambda via the hook length formula.
Int dimension(const Partition& lambda);

Rat product_of_parts(const Partition& mu);  // prod mu_i (empty product = 1)

}  // namespace jucys
