#include <doctest.h>

#include "orbit_duality/errors.hpp"
#include "orbit_duality/oracles.hpp"
#include "orbit_duality/partition.hpp"

using namespace orbit_duality;
using P = Partition;

TEST_CASE("partition canonical form") {
    CHECK(P{1, 3, 0, 2} == P{3, 2, 1});
    CHECK(P{}.empty());
    CHECK(P{3, 3, 1}.size() == 7);
    CHECK(P{3, 3, 1}.multiplicity(3) == 2);
    CHECK(P{3}[5] == 0);
    CHECK_THROWS_AS(P({2, -1}), DomainError);
}

TEST_CASE("partition text round trip") {
    CHECK(to_string(P{3, 3, 1}) == "[3,3,1]");
    CHECK(to_string(P{}) == "[]");
    CHECK(parse_partition("[3,3,1]") == P{3, 3, 1});
    CHECK(parse_partition(" [ 4 , 2 ] ") == P{4, 2});
    CHECK(parse_partition("[]") == P{});
    for (int s = 0; s <= 9; ++s)
        for (const auto& p : partitions_of(s)) CHECK(parse_partition(to_string(p)) == p);
    CHECK_THROWS_AS(parse_partition("[1,2]"), DomainError);
    CHECK_THROWS_AS(parse_partition("3,1"), DomainError);
    CHECK_THROWS_AS(parse_partition("[3,x]"), DomainError);
    CHECK_THROWS_AS(parse_partition("[3,]"), DomainError);
    CHECK_THROWS_AS(parse_partition("[3,0]"), DomainError);
}

TEST_CASE("transpose") {
    CHECK(transpose(P{3, 1}) == P{2, 1, 1});
    CHECK(transpose(P{}) == P{});
    CHECK(transpose(P{4, 4}) == P{2, 2, 2, 2});
    for (int s = 0; s <= 10; ++s)
        for (const auto& p : partitions_of(s)) CHECK(transpose(transpose(p)) == p);
}

TEST_CASE("part_sum and disjoint_union") {
    CHECK(part_sum(P{3, 1}, P{2, 2}) == P{5, 3});
    CHECK(part_sum(P{3, 2}, P{}) == P{3, 2});
    CHECK(part_sum(P{2}, P{2}) == P{4});
    CHECK(disjoint_union(P{3, 1}, P{2, 2}) == P{3, 2, 2, 1});
    CHECK(disjoint_union(P{5}, P{}) == P{5});
    CHECK(disjoint_union(P{2, 2}, P{2}) == P{2, 2, 2});
    CHECK(scale(P{3, 1}, 2) == P{6, 2});
    // sum and union are exchanged by transpose
    for (const auto& p : partitions_of(5))
        for (const auto& q : partitions_of(4))
            CHECK(transpose(part_sum(p, q)) == disjoint_union(transpose(p), transpose(q)));
}

TEST_CASE("plus_one and minus_one") {
    CHECK(plus_one(P{3, 2}) == P{4, 2});
    CHECK(plus_one(P{1}) == P{2});
    CHECK(plus_one(P{2, 2, 2}) == P{3, 2, 2});
    CHECK(minus_one(P{3, 2}) == P{3, 1});
    CHECK(minus_one(P{3, 1}) == P{3});
    CHECK(minus_one(plus_one(P{2, 1, 1, 1})) == P{3, 1, 1});
    CHECK_THROWS_WITH_AS(plus_one(P{}), doctest::Contains("undefined on empty partition"), DomainError);
    CHECK_THROWS_AS(minus_one(P{}), DomainError);
}

TEST_CASE("is_type") {
    CHECK(is_type(P{3, 3, 3}, TypeLetter::B));
    CHECK(is_type(P{2, 1, 1}, TypeLetter::C));
    CHECK_FALSE(is_type(P{2, 1, 1}, TypeLetter::D));
    CHECK(is_type(P{}, TypeLetter::C));
    CHECK(is_type(P{}, TypeLetter::D));
    CHECK_FALSE(is_type(P{}, TypeLetter::B));
    CHECK(is_very_even(P{4, 4, 2, 2}));
    CHECK_FALSE(is_very_even(P{3, 1}));
    CHECK_FALSE(is_very_even(P{}));
    for (int s = 0; s <= 12; ++s)
        for (const auto& p : partitions_of(s))
            for (auto x : {TypeLetter::A, TypeLetter::B, TypeLetter::C, TypeLetter::D})
                CHECK(is_type(p, x) == oracle::has_type(p, x));
}

TEST_CASE("collapse") {
    CHECK(collapse(P{4, 3, 2, 2}, TypeLetter::B) == P{3, 3, 3, 1, 1});
    CHECK(collapse(P{3, 3}, TypeLetter::C) == P{3, 3});
    CHECK(collapse(P{2, 1, 1}, TypeLetter::D) == P{1, 1, 1, 1});
    CHECK_THROWS_WITH_AS(collapse(P{2}, TypeLetter::B), doctest::Contains("size parity incompatible"), DomainError);
    CHECK_THROWS_AS(collapse(P{3}, TypeLetter::C), DomainError);
    CHECK(collapse(P{5}, TypeLetter::A) == P{5});
    // greedy against the brute-force maximum
    for (int s = 0; s <= 10; ++s)
        for (const auto& p : partitions_of(s))
            for (auto x : {TypeLetter::B, TypeLetter::C, TypeLetter::D}) {
                if ((x == TypeLetter::B) != (s % 2 == 1)) continue;
                auto want = oracle::maximal_dominated(p, x);
                REQUIRE(want);
                CHECK(collapse(p, x) == *want);
            }
}

TEST_CASE("dominance order") {
    CHECK(dominance_le(P{2, 2}, P{4}));
    CHECK_FALSE(dominance_le(P{4, 1, 1}, P{3, 3}));
    CHECK_FALSE(dominance_le(P{3, 3}, P{4, 1, 1}));
    // prefix sums 2,4,6 against 3,4,5: third prefix fails
    CHECK_FALSE(dominance_le(P{2, 2, 2}, P{3, 1, 1, 1}));
    CHECK(dominance_le(P{2, 2, 1, 1}, P{3, 1, 1, 1}));
    CHECK(dominance_le(P{3, 1}, P{3, 1}));
    CHECK_THROWS_AS(dominance_le(P{2}, P{3}), DomainError);
    for (const auto& p : partitions_of(7))
        for (const auto& q : partitions_of(7)) CHECK(dominance_le(p, q) == oracle::dominated_by(p, q));
}

TEST_CASE("partitions_of counts") {
    CHECK(partitions_of(0).size() == 1);
    CHECK(partitions_of(5).size() == 7);
    CHECK(partitions_of(12).size() == 77);
    CHECK(partitions_of(20).size() == 627);
}
