#include "doctest.h"

#include <algorithm>

#include "jucys/partition.hpp"

using namespace jucys;

TEST_CASE("partitions_of: counts and canonical order") {
    CHECK(partitions_of(0).size() == 1);
    CHECK(partitions_of(0)[0].empty());
    CHECK(partitions_of(4).size() == 5);
    CHECK(partitions_of(8).size() == 22);

    // reverse lexicographic: (n) first, (1^n) last, strictly decreasing in lex
    auto ps = partitions_of(6);
    CHECK(ps.front() == Partition::of({6}));
    CHECK(ps.back() == Partition(std::vector<int>(6, 1)));
    for (std::size_t i = 0; i + 1 < ps.size(); ++i) CHECK(ps[i].parts() > ps[i + 1].parts());

    // count agrees with the pentagonal recurrence up to 30
    for (int n = 0; n <= 30; ++n) {
        if (n <= 12) CHECK(Int(static_cast<long>(partitions_of(n).size())) == partition_count(n));
    }
    CHECK(partition_count(30) == 5604);
}

TEST_CASE("content multisets") {
    CHECK(content_multiset(Partition::of({3, 1})) == std::vector<int>{-1, 0, 1, 2});
    CHECK(content_multiset(Partition::of({1})) == std::vector<int>{0});
    CHECK(content_multiset(Partition::of({2, 2})) == std::vector<int>{-1, 0, 0, 1});
    CHECK(reduced_contents(Partition::of({2, 2})) == std::vector<int>{-1, 0, 1});

    // conjugation negates contents
    for (const auto& lambda : partitions_of(7)) {
        auto c = content_multiset(lambda);
        auto cc = content_multiset(conjugate(lambda));
        std::transform(cc.begin(), cc.end(), cc.begin(), std::negate<int>());
        std::sort(cc.begin(), cc.end());
        CHECK(c == cc);
    }
}

TEST_CASE("centralizer, class size, dimension") {
    CHECK(centralizer_size(Partition::of({2, 1})) == 2);
    CHECK(centralizer_size(Partition::of({1, 1, 1})) == 6);
    CHECK(centralizer_size(Partition::of({3, 3, 2})) == 36);

    CHECK(class_size(Partition::of({2, 1})) == 3);
    CHECK(class_size(Partition(std::vector<int>(5, 1))) == 1);
    CHECK(class_size(Partition::of({3, 2})) == 20);

    CHECK(dimension(Partition::of({2, 1})) == 2);
    CHECK(dimension(Partition::of({6})) == 1);
    CHECK(dimension(Partition::of({2, 2})) == 2);

    for (int n = 1; n <= 10; ++n)
        for (const auto& mu : partitions_of(n))
            CHECK(class_size(mu) * centralizer_size(mu) == factorial(n));

    // Burnside: sum of dim^2 = n!
    for (int n = 1; n <= 8; ++n) {
        Int sum = 0;
        for (const auto& lambda : partitions_of(n)) sum += dimension(lambda) * dimension(lambda);
        CHECK(sum == factorial(n));
    }
}

TEST_CASE("partition validation") {
    CHECK_THROWS_AS(Partition({1, 2}), std::domain_error);
    CHECK_THROWS_AS(Partition({2, 0}), std::domain_error);
    CHECK(Partition::of({0, 3, 1}) == Partition({3, 1}));  // zeros dropped, sorted
}
