#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cylhecke/partition.hpp"

using namespace cylhecke;

TEST_CASE("basic accessors") {
    Partition p{4, 2, 1};
    CHECK(p.weight() == 7);
    CHECK(p.length() == 3);
    CHECK(p.part(1) == 4);
    CHECK(p.part(5) == 0);
    CHECK(Partition().empty());
    CHECK(Partition().weight() == 0);
}

TEST_CASE("trailing zeros are dropped, bad input rejected") {
    CHECK(Partition({3, 1, 0, 0}) == Partition({3, 1}));
    CHECK_THROWS(Partition({1, 2}));
    CHECK_THROWS(Partition({2, -1}));
}

TEST_CASE("conjugation is an involution") {
    for (int m = 0; m <= 9; ++m)
        for (auto& p : partitions_of(m)) CHECK(p.conjugate().conjugate() == p);
    CHECK(Partition({4, 2, 1}).conjugate() == Partition({3, 2, 1, 1}));
}

TEST_CASE("containment and box") {
    CHECK(Partition({3, 2}).contains(Partition({2, 2})));
    CHECK_FALSE(Partition({3, 2}).contains(Partition({1, 1, 1})));
    CHECK(Partition({2, 2}).fits_in_box(2, 2));
    CHECK_FALSE(Partition({3}).fits_in_box(2, 2));
}

TEST_CASE("enumeration counts match the partition numbers") {
    int expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int m = 0; m <= 10; ++m) CHECK(partitions_of(m).size() == size_t(expected[m]));
    CHECK(partitions_in_box(2, 2).size() == 6);  // {}, 1, 2, 11, 21, 22
}

TEST_CASE("string round trip") {
    Partition p{5, 3, 3, 1};
    CHECK(p.to_string() == "[5,3,3,1]");
    CHECK(Partition::parse(p.to_string()) == p);
    CHECK(Partition::parse("[]") == Partition());
}

TEST_CASE("z_lambda") {
    CHECK(z_of(Partition()) == 1);
    CHECK(z_of(Partition({1, 1, 1})) == 6);
    CHECK(z_of(Partition({3})) == 3);
    CHECK(z_of(Partition({2, 1})) == 2);
    CHECK(z_of(Partition({2, 2, 1})) == 8);
}

TEST_CASE("compositions of a partition") {
    auto comps = compositions_of(Partition({2, 1, 1}));
    CHECK(comps.size() == 3);
}
