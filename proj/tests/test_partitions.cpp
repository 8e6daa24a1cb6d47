#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "schur/partition.hpp"

using namespace schur;

namespace {

Partition p(std::vector<int> parts) { return Partition(std::move(parts)); }

} // namespace

TEST_SUITE("partitions") {

TEST_CASE("construction strips zeros and validates order") {
    CHECK(p({4, 4, 3, 0, 0}).parts() == std::vector<int>{4, 4, 3});
    CHECK(p({4, 0, 3}).parts() == std::vector<int>{4, 3});
    CHECK(p({0, 0}).empty());
    CHECK(Partition{}.empty());
    CHECK_THROWS_AS(p({4, 3, 4}), std::invalid_argument);
    CHECK_THROWS_AS(p({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(p({3, -1}), std::invalid_argument);
}

TEST_CASE("part access pads with zeros") {
    const Partition q = p({4, 4, 3});
    CHECK(q.part(0) == 4);
    CHECK(q.part(2) == 3);
    CHECK(q.part(3) == 0);
    CHECK(q.part(100) == 0);
    CHECK(q.length() == 3);
    CHECK(q.size() == 11);
}

TEST_CASE("lexicographic comparison is a total order") {
    CHECK(p({4, 4, 3}) == p({4, 4, 3, 0}));
    CHECK(p({4, 3}) < p({4, 4}));
    CHECK(p({4}) < p({4, 1}));
    CHECK(Partition{} < p({1}));
}

TEST_CASE("transpose matches known diagrams") {
    CHECK(transpose(p({4, 4, 3})) == p({3, 3, 3, 2}));
    CHECK(transpose(p({4, 2, 2, 2, 2})) == p({5, 5, 1, 1}));
    CHECK(transpose(p({1, 1, 1})) == p({3}));
    CHECK(transpose(Partition{}).empty());
}

TEST_CASE("transpose is an involution") {
    for (int n = 0; n <= 10; ++n)
        for (const Partition& q : list_partitions(n)) CHECK(transpose(transpose(q)) == q);
}

TEST_CASE("dominance on equal sizes") {
    CHECK(dominates(p({4, 2, 1}), p({4, 4})));
    CHECK_FALSE(dominates(p({4, 4}), p({4, 2, 1})));
    CHECK(dominates(p({2, 2}), p({3, 1})));
    CHECK(dominates(p({1, 1, 1, 1}), p({4})));
    CHECK_FALSE(dominates(p({4}), p({1, 1, 1, 1})));
    for (const Partition& q : list_partitions(6)) CHECK(dominates(q, q));
}

TEST_CASE("dominance extends to unequal sizes") {
    // Prefix sums are compared only up to the length of the left argument.
    CHECK(dominates(Partition{}, p({1})));
    CHECK_FALSE(dominates(p({1}), Partition{}));
    CHECK(dominates(p({2, 2}), p({5})));
    CHECK(dominates(p({1}), p({3, 2})));
    CHECK_FALSE(dominates(p({3, 3}), p({3, 2})));
}

TEST_CASE("transpose reverses dominance on equal sizes") {
    for (int n = 1; n <= 8; ++n) {
        const auto all = list_partitions(n);
        for (const Partition& a : all)
            for (const Partition& b : all)
                CHECK(dominates(a, b) == dominates(transpose(b), transpose(a)));
    }
}

TEST_CASE("sorting pointwise-bounded sequences preserves dominance") {
    // For natural sequences a (length r) and b (length s), r <= s and
    // a_i <= b_i imply sort(a) is dominated by sort(b).
    std::mt19937 rng(20260814);
    std::uniform_int_distribution<int> len(0, 8), value(0, 9);
    for (int trial = 0; trial < 10000; ++trial) {
        const int s = len(rng);
        std::uniform_int_distribution<int> shorter(0, s);
        const int r = shorter(rng);
        std::vector<int> a, b;
        for (int i = 0; i < s; ++i) b.push_back(value(rng));
        for (int i = 0; i < r; ++i)
            a.push_back(std::uniform_int_distribution<int>(0, b[static_cast<std::size_t>(i)])(rng));
        std::sort(a.rbegin(), a.rend());
        std::sort(b.rbegin(), b.rend());
        REQUIRE(dominates(Partition(a), Partition(b)));
    }
}

TEST_CASE("union_of merges part multisets") {
    CHECK(union_of(p({2, 1}), p({2, 2})) == p({2, 2, 2, 1}));
    CHECK(union_of(p({3}), Partition{}) == p({3}));
    CHECK(union_of(Partition{}, Partition{}).empty());
    CHECK(union_of(p({4, 1}), p({3, 3})) == p({4, 3, 3, 1}));
    for (const Partition& a : list_partitions(5))
        for (const Partition& b : list_partitions(4))
            CHECK(union_of(a, b) == union_of(b, a));
}

TEST_CASE("containment of diagrams") {
    CHECK(is_contained_in(p({2}), p({4, 4, 3})));
    CHECK(is_contained_in(Partition{}, p({1})));
    CHECK(is_contained_in(p({4, 4, 3}), p({4, 4, 3})));
    CHECK_FALSE(is_contained_in(p({5}), p({4, 4})));
    CHECK_FALSE(is_contained_in(p({1, 1, 1}), p({2, 2})));
}

TEST_CASE("list_partitions is complete, exact, and ordered") {
    CHECK(list_partitions(0).size() == 1);
    CHECK(list_partitions(0).front().empty());
    const auto four = list_partitions(4);
    REQUIRE(four.size() == 5);
    CHECK(four[0] == p({4}));
    CHECK(four[1] == p({3, 1}));
    CHECK(four[2] == p({2, 2}));
    CHECK(four[3] == p({2, 1, 1}));
    CHECK(four[4] == p({1, 1, 1, 1}));
    CHECK(list_partitions(5).size() == 7);
    CHECK(list_partitions(10).size() == 42);
    CHECK_THROWS_AS(list_partitions(-1), std::invalid_argument);

    for (int n = 1; n <= 10; ++n) {
        const auto all = list_partitions(n);
        std::set<Partition> seen;
        for (std::size_t i = 0; i < all.size(); ++i) {
            CHECK(all[i].size() == n);
            seen.insert(all[i]);
            if (i) CHECK(all[i] < all[i - 1]); // decreasing lexicographic
        }
        CHECK(seen.size() == all.size());
    }
}

} // TEST_SUITE
