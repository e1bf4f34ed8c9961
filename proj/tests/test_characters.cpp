#include "doctest.h"

#include "jucys/characters.hpp"
#include "jucys/partition.hpp"

using namespace jucys;

TEST_CASE("classical character values") {
    // trivial and sign representations
    for (int n = 1; n <= 7; ++n)
        for (const auto& mu : partitions_of(n)) {
            CHECK(character(Partition::of({n}), mu) == 1);
            int sign = (n - mu.length()) % 2 == 0 ? 1 : -1;
            CHECK(character(Partition(std::vector<int>(n, 1)), mu) == sign);
        }
    CHECK(character(Partition::of({2, 1}), Partition::of({3})) == -1);
    CHECK(character(Partition::of({2, 1}), Partition::of({2, 1})) == 0);
    CHECK(character(Partition::of({2, 1}), Partition::of({1, 1, 1})) == 2);
    CHECK_THROWS_AS(character(Partition::of({2}), Partition::of({3})), std::domain_error);
}

TEST_CASE("character at identity equals hook-length dimension") {
    for (int n = 1; n <= 8; ++n)
        for (const auto& lambda : partitions_of(n))
            CHECK(Int(character(lambda, Partition(std::vector<int>(n, 1)))) == dimension(lambda));
}

TEST_CASE("row and column orthogonality") {
    for (int n = 1; n <= 7; ++n) {
        auto ps = partitions_of(n);
        for (const auto& la : ps)
            for (const auto& lb : ps) {
                Rat acc = 0;
                for (const auto& mu : ps)
                    acc += rat(Int(character(la, mu)) * character(lb, mu), centralizer_size(mu));
                CHECK(acc == (la == lb ? 1 : 0));
            }
        for (const auto& mu : ps)
            for (const auto& nu : ps) {
                Int acc = 0;
                for (const auto& la : ps) acc += Int(character(la, mu)) * character(la, nu);
                CHECK(acc == (mu == nu ? centralizer_size(mu) : 0));
            }
    }
}

TEST_CASE("schur_in_p small shapes") {
    auto p1 = Partition::of({1});
    auto s1 = schur_in_p(p1);
    CHECK(s1.size() == 1);
    CHECK(s1.at(p1) == 1);

    auto s2 = schur_in_p(Partition::of({2}));
    CHECK(s2.at(Partition::of({1, 1})) == rat(1, 2));
    CHECK(s2.at(Partition::of({2})) == rat(1, 2));

    auto s21 = schur_in_p(Partition::of({2, 1}));
    CHECK(s21.at(Partition::of({1, 1, 1})) == rat(1, 3));
    CHECK(s21.at(Partition::of({3})) == rat(-1, 3));
    CHECK(s21.find(Partition::of({2, 1})) == s21.end());
}

TEST_CASE("Cauchy identity: sum_lambda s_lambda(t) s_lambda(ttilde) = exp(sum k t_k ttilde_k)") {
    // evaluate both sides as polynomials in t with rational ttilde, truncated
    // at weighted degree N; the left side runs over |lambda| <= N
    const int N = 6;
    std::vector<Rat> tt = {rat(1, 2), rat(-1, 3), rat(2), rat(0), rat(1, 5), rat(7)};  // ttilde_1..ttilde_6

    // representation of a truncated polynomial keyed by the p-index partition
    std::map<Partition, Rat> lhs, rhs;
    for (int n = 0; n <= N; ++n)
        for (const auto& lambda : partitions_of(n)) {
            auto sp = schur_in_p(lambda);
            // s_lambda(ttilde): evaluate p_k -> k ttilde_k
            Rat sval = 0;
            for (auto& [mu, c] : sp) {
                Rat pm = 1;
                for (int part : mu.parts()) pm *= Rat(part) * tt[part - 1];
                sval += c * pm;
            }
            for (auto& [mu, c] : sp) lhs[mu] += c * sval;
        }
    // exp(sum_k k t_k ttilde_k) = prod_k exp(k t_k ttilde_k): coefficient of
    // p_mu(t) (with p_k = k t_k) is prod ttilde_{mu_i} / (aut factors) ... easier:
    // expand exp directly in the p_mu basis: exp(sum_k p_k ttilde_k) since k t_k = p_k.
    // Coefficient of p_mu = prod ttilde_{mu_i} / prod m_j! .
    for (int n = 0; n <= N; ++n)
        for (const auto& mu : partitions_of(n)) {
            Rat c = 1;
            for (int part : mu.parts()) c *= tt[part - 1];
            int run = 1;
            for (int i = 1; i <= mu.length(); ++i) {
                if (i < mu.length() && mu.part(i) == mu.part(i - 1))
                    ++run;
                else {
                    c /= Rat(factorial(run));
                    run = 1;
                }
            }
            rhs[mu] = c;
        }
    for (auto& [mu, c] : rhs) {
        Rat l = lhs.count(mu) ? lhs[mu] : Rat(0);
        CHECK(l == c);
    }
}
