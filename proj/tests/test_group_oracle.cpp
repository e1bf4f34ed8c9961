#include "doctest.h"

#include <functional>

#include "jucys/errors.hpp"
#include "jucys/group_oracle.hpp"
#include "jucys/symmetric_group.hpp"

using namespace jucys;

namespace {

Partition hook2(int n) {  // (2, 1^{n-2})
    std::vector<int> p{2};
    p.insert(p.end(), n - 2, 1);
    return Partition(p);
}

}  // namespace

TEST_CASE("permutation basics") {
    Perm a{1, 0, 2};  // (12) in 0-based images
    Perm b{0, 2, 1};
    CHECK(cycle_type(a) == Partition::of({2, 1}));
    CHECK(cycle_type(perm_mul(a, b)) == Partition::of({3}));
    CHECK(perm_mul(a, perm_inverse(a)) == perm_identity(3));
}

TEST_CASE("structure constants: total mass and identity coefficient") {
    for (int n = 2; n <= 5; ++n) {
        const auto& sg = symmetric_group(n);
        for (int a = 0; a < sg.num_classes(); ++a)
            for (int b = 0; b < sg.num_classes(); ++b) {
                Int mass = 0;
                for (int g = 0; g < sg.num_classes(); ++g)
                    mass += Int(sg.structure_constant(a, b, g)) * class_size(sg.classes()[g]);
                CHECK(mass == class_size(sg.classes()[a]) * class_size(sg.classes()[b]));
                // [C_{1^n}] C_a C_b = |C_a| delta_{a, b^{-1}} and classes are self-inverse in S_n
                long long idc = sg.structure_constant(a, b, sg.identity_class());
                if (a == b)
                    CHECK(Int(idc) == class_size(sg.classes()[a]));
                else
                    CHECK(idc == 0);
            }
    }
}

TEST_CASE("class_product examples") {
    auto id3 = ClassAlgebraElement::identity(3);
    auto t3 = ClassAlgebraElement::class_sum(3, Partition::of({2, 1}));
    CHECK(class_product(id3, t3) == t3);

    // C_(2) * C_(2) in S_2 = C_(1,1)
    auto t2 = ClassAlgebraElement::class_sum(2, Partition::of({2}));
    CHECK(class_product(t2, t2) == ClassAlgebraElement::identity(2));

    // C_(2,1)^2 in S_3 = 3 C_(1^3) + 3 C_(3)
    auto sq = class_product(t3, t3);
    CHECK(sq.at(Partition::of({1, 1, 1})) == 3);
    CHECK(sq.at(Partition::of({3})) == 3);
    CHECK(sq.at(Partition::of({2, 1})) == 0);

    CHECK_THROWS_AS(class_product(t2, t3), std::domain_error);
}

TEST_CASE("Jucys correspondence: sigma_b(J) = sum of classes with l(alpha) = n - b") {
    for (int n = 2; n <= 6; ++n)
        for (int b = 0; b <= n - 1; ++b) {
            auto lhs = jucys_symmetric(n, SymBasis::Sigma, b);
            ClassAlgebraElement rhs;
            rhs.n = n;
            for (const auto& alpha : partitions_of(n))
                if (alpha.length() == n - b) rhs.coeff[alpha] = 1;
            CHECK(lhs == rhs);
        }
}

TEST_CASE("h_b(J) examples: the W tables") {
    // W_0 = 1, W_1 = C_(2,1^{n-2})
    for (int n : {4, 5, 6}) {
        CHECK(jucys_symmetric(n, SymBasis::H, 0) == ClassAlgebraElement::identity(n));
        CHECK(jucys_symmetric(n, SymBasis::H, 1) ==
              ClassAlgebraElement::class_sum(n, hook2(n)));
        // sigma_1 = p_1 = h_1
        CHECK(jucys_symmetric(n, SymBasis::Sigma, 1) == jucys_symmetric(n, SymBasis::P, 1));
    }

    // W_2 in S_5: 2 C_(3,1,1) + C_(2,2,1) + 10 C_(1^5)
    auto w2 = jucys_symmetric(5, SymBasis::H, 2);
    CHECK(w2.at(Partition::of({3, 1, 1})) == 2);
    CHECK(w2.at(Partition::of({2, 2, 1})) == 1);
    CHECK(w2.at(Partition(std::vector<int>(5, 1))) == 10);
    CHECK(w2.coeff.size() == 3);
}

TEST_CASE("free-group expansion matches h_b(J) for n <= 6, b <= 3") {
    for (int n = 2; n <= 6; ++n)
        for (int b = 0; b <= 3; ++b)
            CHECK(block_class_element(BlockSpec::free_group(b), n) ==
                  jucys_symmetric(n, SymBasis::H, b));
}

TEST_CASE("free-single equals sigma (Jucys lemma restated as blocks)") {
    for (int n = 2; n <= 6; ++n)
        for (int b = 0; b <= n - 1; ++b)
            CHECK(block_class_element(BlockSpec::free_single(b), n) ==
                  block_class_element(BlockSpec::strict_monotone(b), n));
}

TEST_CASE("hyper blocks as class elements") {
    // hyper_w(w) = sum_b w^b sigma_b(J)
    Rat w = rat(1, 3);
    auto hw = block_class_element(BlockSpec::hyper_w(w), 4);
    ClassAlgebraElement expect;
    expect.n = 4;
    Rat wp = 1;
    for (int b = 0; b <= 3; ++b) {
        expect = expect + wp * jucys_symmetric(4, SymBasis::Sigma, b);
        wp *= w;
    }
    CHECK(hw == expect);

    // hyper_z(z) * prod_k (1 - z J_k) = 1
    Rat z = rat(1, 5);
    auto hz = block_class_element(BlockSpec::hyper_z(z), 4);
    ClassAlgebraElement prod;
    prod.n = 4;
    Rat zp = 1;
    for (int b = 0; b <= 3; ++b) {
        prod = prod + zp * jucys_symmetric(4, SymBasis::Sigma, b);
        zp *= -z;
    }
    CHECK(class_product(hz, prod) == ClassAlgebraElement::identity(4));

    // a pole: z = 1 makes 1 - z*content vanish at content 1
    CHECK_THROWS_AS(block_class_element(BlockSpec::hyper_z(Rat(1)), 4), pole_error);
}

TEST_CASE("brute_hurwitz basics") {
    // empty blocks: delta_{mu,nu} / Z_mu
    CHECK(brute_hurwitz(Partition::of({2, 1}), Partition::of({2, 1}), {}) == rat(1, 2));
    CHECK(brute_hurwitz(Partition::of({3}), Partition::of({2, 1}), {}) == 0);

    // mu=(2), nu=(1,1), one monotone block b=1: the single tuple (12).id.(12)
    CHECK(brute_hurwitz(Partition::of({2}), Partition::of({1, 1}),
                        {BlockSpec::monotone(1)}) == rat(1, 2));

    // strictly monotone b=2 equals free single b=2 on mu=(3), nu=(1^3)
    Rat sm = brute_hurwitz(Partition::of({3}), Partition::of({1, 1, 1}),
                           {BlockSpec::strict_monotone(2)});
    Rat fs = brute_hurwitz(Partition::of({3}), Partition::of({1, 1, 1}),
                           {BlockSpec::free_single(2)});
    CHECK(sm == fs);
    CHECK(sm == rat(1, 3));  // the two 3-cycles over a fixed pairing: |C_3| F / n!, F = 1 each

    // symmetry in mu <-> nu
    for (int b : {1, 2, 3})
        CHECK(brute_hurwitz(Partition::of({3, 1}), Partition::of({2, 2}),
                            {BlockSpec::monotone(b)}) ==
              brute_hurwitz(Partition::of({2, 2}), Partition::of({3, 1}),
                            {BlockSpec::monotone(b)}));
}

TEST_CASE("raw tuple enumeration cross-check (independent of the class machinery)") {
    // count monotone / strictly monotone transposition tuples directly
    auto tuple_count = [](int n, const Partition& mu, const Partition& nu, int b, bool strict) {
        const auto& sg = symmetric_group(n);
        long long count = 0;
        // iterate over all (g, h) with types mu, nu and all monotone tuples
        std::vector<std::pair<int, int>> trans;  // (x, y), x < y, 0-based
        for (int y = 1; y < n; ++y)
            for (int x = 0; x < y; ++x) trans.emplace_back(x, y);
        for (const Perm& g : sg.elements()) {
            if (!(cycle_type(g) == mu)) continue;
            for (const Perm& h : sg.elements()) {
                if (!(cycle_type(h) == nu)) continue;
                Perm base = perm_mul(g, h);
                std::function<void(const Perm&, int, int)> rec = [&](const Perm& cur, int lasty, int depth) {
                    if (depth == b) {
                        if (cur == perm_identity(n)) ++count;
                        return;
                    }
                    for (auto [x, y] : trans) {
                        if (strict ? y <= lasty : y < lasty) continue;
                        Perm nxt = cur;
                        std::swap(nxt[x], nxt[y]);  // right multiply by (x y)
                        rec(nxt, y, depth + 1);
                    }
                };
                rec(base, 0, 0);
            }
        }
        return Rat(count) / Rat(factorial(n));
    };

    for (int n = 2; n <= 4; ++n)
        for (const auto& mu : partitions_of(n))
            for (const auto& nu : partitions_of(n))
                for (int b = 0; b <= 3; ++b) {
                    CHECK(tuple_count(n, mu, nu, b, false) ==
                          brute_hurwitz(mu, nu, {BlockSpec::monotone(b)}));
                    CHECK(tuple_count(n, mu, nu, b, true) ==
                          brute_hurwitz(mu, nu, {BlockSpec::strict_monotone(b)}));
                }
}

TEST_CASE("resource guard") {
    CHECK_THROWS_AS(symmetric_group(8), resource_error);
    CHECK_NOTHROW(symmetric_group(7));
}
