#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cylhecke/characters.hpp"
#include "cylhecke/classical.hpp"
#include "cylhecke/symfunc.hpp"

using namespace cylhecke;

TEST_CASE("brh weights: hand values") {
    CHECK(brh_weight(BrhStats{{{1, 1}}}) == TPoly(1));
    CHECK(brh_weight(BrhStats{{{2, 1}}}) == TPoly(-1));
    // the paper's two-component hook pair (2,4),(4,2): (t-1) t^4
    CHECK(brh_weight(BrhStats{{{2, 4}, {4, 2}}}) == t_minus_one() * TPoly::t(4));
    CHECK(brh_weight(BrhStats{}) == TPoly(1));
}

TEST_CASE("small irreducible characters") {
    CHECK(hecke_character(Partition({1}), {1}) == TPoly(1));
    CHECK(hecke_character(Partition({2}), {2}) == TPoly::t());
    CHECK(hecke_character(Partition({1, 1}), {2}) == TPoly(-1));
    CHECK(hecke_character(Partition({2, 1}), {2, 1}) == t_minus_one());
    CHECK_THROWS(hecke_character(Partition({2, 1}), {2}));
}

TEST_CASE("m = 2 table") {
    auto tab = character_table(2);
    REQUIRE(tab.labels.size() == 2);
    // labels in canonical order: (1,1) then (2)
    CHECK(tab.labels[0] == Partition({1, 1}));
    CHECK(tab.labels[1] == Partition({2}));
    // chi^{(1,1)}: (1,1) -> 1, (2) -> -1 ; chi^{(2)}: (1,1) -> 1, (2) -> t
    CHECK(tab.values[0][0] == TPoly(1));
    CHECK(tab.values[0][1] == TPoly(-1));
    CHECK(tab.values[1][0] == TPoly(1));
    CHECK(tab.values[1][1] == TPoly::t());
}

TEST_CASE("content order invariance, m <= 6") {
    for (int m = 1; m <= 6; ++m)
        for (auto& lam : partitions_of(m))
            for (auto& alpha : partitions_of(m)) {
                TPoly ref = hecke_character(lam, alpha.parts());
                for (auto& comp : compositions_of(alpha))
                    CHECK(hecke_character(lam, comp) == ref);
            }
}

TEST_CASE("t = 1 degeneration matches the classical oracle, m <= 6") {
    for (int m = 1; m <= 6; ++m)
        for (auto& lam : partitions_of(m))
            for (auto& alpha : partitions_of(m))
                CHECK(hecke_character(lam, alpha.parts()).eval_at_one() ==
                      classical_character(lam, alpha.parts()));
}

TEST_CASE("dimension: content (1^m) gives the hook length count, m <= 8") {
    for (int m = 1; m <= 8; ++m)
        for (auto& lam : partitions_of(m)) {
            std::vector<int> ones(m, 1);
            TPoly v = hecke_character(lam, ones);
            CHECK(v.is_constant());
            CHECK(v.constant_value() == hook_length_dimension(lam));
        }
}

TEST_CASE("dual Frobenius identity, m <= 5 here (acceptance runs m <= 6)") {
    for (int m = 1; m <= 5; ++m) {
        int nv = m;
        for (auto& lam : partitions_of(m)) {
            MonomialExpansion lhs(nv);
            for (auto& mu : partitions_of(m)) {
                TPoly coef = hecke_character(lam, mu.parts()) * t_minus_one().pow(mu.length());
                lhs += monomial_sym(mu, nv) * coef;
            }
            CHECK(lhs == schur_in_tminus1_alphabet(lam, nv));
        }
    }
}

TEST_CASE("skew characters: examples and LR consistency") {
    CHECK(skew_hecke_character(Partition({2, 1}), Partition({1}), {2}) == t_minus_one());
    // mu not inside lambda -> 0
    CHECK(skew_hecke_character(Partition({2}), Partition({1, 1}), {1}).is_zero());
    // mu = empty reduces to the irreducible character
    for (auto& lam : partitions_of(4))
        for (auto& alpha : partitions_of(4))
            CHECK(skew_hecke_character(lam, Partition(), alpha.parts()) ==
                  hecke_character(lam, alpha.parts()));
    // chi^{lambda/mu} = sum_nu c^lambda_{mu nu} chi^nu for |lambda| <= 8
    for (int w = 2; w <= 8; ++w)
        for (auto& lam : partitions_of(w))
            for (int wm = 1; wm < w; ++wm)
                for (auto& mu : partitions_of(wm)) {
                    if (!lam.contains(mu)) continue;
                    for (auto& alpha : partitions_of(w - wm)) {
                        TPoly direct = skew_hecke_character(lam, mu, alpha.parts());
                        TPoly viaLR;
                        for (auto& nu : partitions_of(w - wm)) {
                            long long c = lr_coefficient(lam, mu, nu);
                            if (c) viaLR += hecke_character(nu, alpha.parts()) * TPoly(c);
                        }
                        CHECK(direct == viaLR);
                    }
                }
}

TEST_CASE("parallel table equals the serial reference") {
    for (int m : {5, 7}) {
        auto a = character_table(m, false);
        auto b = character_table(m, true);
        REQUIRE(a.labels == b.labels);
        CHECK(a.values == b.values);
    }
}
