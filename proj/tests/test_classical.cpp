#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cylhecke/classical.hpp"
#include "cylhecke/partition.hpp"

using namespace cylhecke;

namespace {
long long factorial(int m) {
    long long f = 1;
    for (int i = 2; i <= m; ++i) f *= i;
    return f;
}
}  // namespace

TEST_CASE("trivial representation is constant 1") {
    for (int m = 1; m <= 7; ++m)
        for (auto& alpha : partitions_of(m))
            CHECK(classical_character(Partition({m}), alpha.parts()) == 1);
}

TEST_CASE("hand values") {
    CHECK(classical_character(Partition({1, 1, 1}), {3}) == 1);
    CHECK(classical_character(Partition({2, 1}), {1, 1, 1}) == 2);
    CHECK(classical_character(Partition({2, 1}), {3}) == -1);
    CHECK_THROWS(classical_character(Partition({2, 1}), {2}));
}

TEST_CASE("value independent of content order") {
    for (auto& lam : partitions_of(5))
        for (auto& alpha : partitions_of(5))
            for (auto& comp : compositions_of(alpha))
                CHECK(classical_character(lam, comp) == classical_character(lam, alpha.parts()));
}

TEST_CASE("column orthogonality for m <= 6") {
    for (int m = 1; m <= 6; ++m) {
        auto labels = partitions_of(m);
        for (auto& lam : labels)
            for (auto& mu : labels) {
                long long sum = 0;
                for (auto& alpha : labels) {
                    long long cls = factorial(m) / z_of(alpha);
                    sum += cls * classical_character(lam, alpha.parts()) *
                           classical_character(mu, alpha.parts());
                }
                CHECK(sum == (lam == mu ? factorial(m) : 0));
            }
    }
}

TEST_CASE("hook length dimensions") {
    CHECK(hook_length_dimension(Partition()) == 1);
    CHECK(hook_length_dimension(Partition({2, 1})) == 2);
    CHECK(hook_length_dimension(Partition({2, 2})) == 2);
    CHECK(hook_length_dimension(Partition({4, 3, 2, 1})) == 768);
    // dimension equals the character at the identity class
    for (int m = 1; m <= 7; ++m)
        for (auto& lam : partitions_of(m)) {
            std::vector<int> ones(m, 1);
            CHECK(classical_character(lam, ones) == hook_length_dimension(lam));
        }
    // sum of squares is m!
    for (int m = 1; m <= 8; ++m) {
        long long s = 0;
        for (auto& lam : partitions_of(m)) {
            long long f = hook_length_dimension(lam);
            s += f * f;
        }
        CHECK(s == factorial(m));
    }
}

TEST_CASE("littlewood-richardson basics") {
    for (auto& lam : partitions_of(4)) {
        CHECK(lr_coefficient(lam, lam, Partition()) == 1);
        CHECK(lr_coefficient(lam, Partition(), lam) == 1);
    }
    CHECK(lr_coefficient(Partition({2, 1}), Partition({1}), Partition({1, 1})) == 1);
    CHECK(lr_coefficient(Partition({2, 1}), Partition({1}), Partition({2})) == 1);
    CHECK(lr_coefficient(Partition({3, 2, 1}), Partition({2, 1}), Partition({2, 1})) == 2);
}

TEST_CASE("lr symmetry in mu and nu, |mu|+|nu| <= 8") {
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; a + b <= 8 && b <= 4; ++b)
            for (auto& mu : partitions_of(a))
                for (auto& nu : partitions_of(b))
                    for (auto& lam : partitions_of(a + b))
                        CHECK(lr_coefficient(lam, mu, nu) == lr_coefficient(lam, nu, mu));
}
