#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cylhecke/abacus.hpp"

using namespace cylhecke;

TEST_CASE("n-cores are fixed points") {
    // (2,1) is a 2-core: hook lengths are 3, 1, 1
    auto cd = core_decompose(Partition({2, 1}), 2);
    CHECK(cd.core == Partition({2, 1}));
    CHECK(cd.n_weight == 0);
    CHECK(cd.sign == 1);
    CHECK(cd.removal_rows.empty());
    // while for n=3 the whole rim peels off in one hook of two rows
    auto cd3 = core_decompose(Partition({2, 1}), 3);
    CHECK(cd3.core == Partition());
    CHECK(cd3.n_weight == 1);
    CHECK(cd3.sign == -1);
}

TEST_CASE("(3,2) with n=4: one hook of two rows, sign -1") {
    auto cd = core_decompose(Partition({3, 2}), 4);
    CHECK(cd.core == Partition({1}));
    CHECK(cd.n_weight == 1);
    REQUIRE(cd.removal_rows.size() == 1);
    CHECK(cd.removal_rows[0] == 2);
    CHECK(cd.sign == -1);
}

TEST_CASE("(4,4) with n=4: core empty, weight 2, sign +1") {
    auto cd = core_decompose(Partition({4, 4}), 4);
    CHECK(cd.core == Partition());
    CHECK(cd.n_weight == 2);
    CHECK(cd.sign == 1);
    // the bottom-up removal order peels two horizontal hooks
    auto bu = core_decompose(Partition({4, 4}), 4, RemovalOrder::BottomUp);
    REQUIRE(bu.removal_rows.size() == 2);
    CHECK(bu.removal_rows[0] == 1);
    CHECK(bu.removal_rows[1] == 1);
}

TEST_CASE("weight bookkeeping and order independence (weight <= 12)") {
    for (int m = 0; m <= 12; ++m)
        for (auto& lam : partitions_of(m))
            for (int n = 2; n <= 5; ++n) {
                auto a = core_decompose(lam, n, RemovalOrder::TopDown);
                auto b = core_decompose(lam, n, RemovalOrder::BottomUp);
                CHECK(a.core == b.core);
                CHECK(a.n_weight == b.n_weight);
                CHECK(a.sign == b.sign);
                CHECK(lam.weight() == a.core.weight() + static_cast<long long>(a.n_weight) * n);
            }
}

TEST_CASE("natural numbering permutation sign equals the hook sign") {
    for (int m = 0; m <= 12; ++m)
        for (auto& lam : partitions_of(m))
            for (int n = 2; n <= 5; ++n)
                CHECK(natural_numbering_sign(lam, n) == core_decompose(lam, n).sign);
}

TEST_CASE("cores are n-cores") {
    for (int m = 0; m <= 10; ++m)
        for (auto& lam : partitions_of(m))
            for (int n = 2; n <= 4; ++n) {
                auto cd = core_decompose(lam, n);
                CHECK(core_decompose(cd.core, n).n_weight == 0);
            }
}
