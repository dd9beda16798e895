#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cylhecke/maya.hpp"

using namespace cylhecke;

TEST_CASE("empty partition: ones exactly up to the charge") {
    for (long long c : {-3LL, 0LL, 2LL}) {
        MayaDiagram m(Partition(), c);
        CHECK(m.bit(c));
        CHECK_FALSE(m.bit(c + 1));
        CHECK(m.bit(c - 5));
    }
}

TEST_CASE("(2,1) at charge 0 has ones at 2, 0, -2, -3, ...") {
    MayaDiagram m(Partition({2, 1}), 0);
    CHECK(m.bit(2));
    CHECK_FALSE(m.bit(1));
    CHECK(m.bit(0));
    CHECK_FALSE(m.bit(-1));
    CHECK(m.bit(-2));
    CHECK(m.bit(-3));
    CHECK(m.bit(-4));
    CHECK_FALSE(m.bit(3));
}

TEST_CASE("both charge formulas agree on every constructed diagram") {
    for (int m = 0; m <= 10; ++m)
        for (auto& lam : partitions_of(m))
            for (long long c : {-3LL, -1LL, 0LL, 1LL, 3LL}) {
                MayaDiagram d(lam, c);
                CHECK(charge_formula_a(d) == c);
                CHECK(charge_formula_b(d) == c);
            }
}

TEST_CASE("window decode inverts the encoding (weight <= 10, |c| <= 3)") {
    for (int m = 0; m <= 10; ++m)
        for (auto& lam : partitions_of(m))
            for (long long c = -3; c <= 3; ++c) {
                MayaDiagram d(lam, c);
                long long lo = d.n_minus() - 2, hi = d.n_plus() + 2;
                std::vector<int> bits;
                for (long long i = lo; i <= hi; ++i) bits.push_back(d.bit(i) ? 1 : 0);
                auto back = partition_from_maya_window(bits, lo);
                REQUIRE(back.has_value());
                CHECK(back->partition() == lam);
                CHECK(back->charge() == c);
            }
}

TEST_CASE("malformed window rejected") {
    CHECK_FALSE(partition_from_maya_window({0, 2, 1}, 0).has_value());
}

TEST_CASE("figure-style window decode") {
    // lambda = (6,6,5,3,2,2,2,2,1) at charge 0: reconstruct from its own bits
    Partition lam({6, 6, 5, 3, 2, 2, 2, 2, 1});
    MayaDiagram d(lam, 0);
    std::vector<int> bits;
    long long lo = d.n_minus() - 1;
    for (long long i = lo; i <= d.n_plus() + 1; ++i) bits.push_back(d.bit(i) ? 1 : 0);
    auto back = partition_from_maya_window(bits, lo);
    REQUIRE(back.has_value());
    CHECK(back->partition() == lam);
}

TEST_CASE("finite window strings for box partitions") {
    // P+_{k,n} labels <-> strings of length n with k ones
    int k = 2, n = 4;
    for (auto& lam : partitions_in_box(k, n - k)) {
        auto ones = window_ones_from_partition(lam, k);
        for (int p : ones) {
            CHECK(p >= 1);
            CHECK(p <= n);
        }
        CHECK(partition_from_window_ones(ones) == lam);
    }
}
