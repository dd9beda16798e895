#include "cylhecke/characters.hpp"

#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cylhecke {

TPoly brh_weight(const BrhStats& stats) {
    if (stats.hooks.empty()) return TPoly(1);
    TPoly w = t_minus_one().pow(stats.num_components() - 1);
    for (auto& h : stats.hooks) {
        TPoly f = TPoly::t(h.cols - 1);
        if (h.rows % 2 == 0) f = -f;
        w *= f;
    }
    return w;
}

std::map<Partition, TPoly> hecke_character_column(const Partition& mu,
                                                  const std::vector<int>& alpha) {
    std::map<Partition, TPoly> frontier;
    frontier[mu] = TPoly(1);
    for (int a : alpha) {
        if (a < 0) throw std::invalid_argument("hecke character: negative content part");
        if (a == 0) continue;
        std::map<Partition, TPoly> next;
        for (auto& [shape, coef] : frontier)
            for (auto& [bigger, stats] : enumerate_brh_additions(shape, a)) {
                TPoly w = coef * brh_weight(stats);
                auto [it, fresh] = next.try_emplace(bigger, TPoly());
                it->second += w;
            }
        frontier = std::move(next);
    }
    return frontier;
}

TPoly skew_hecke_character(const Partition& lambda, const Partition& mu,
                           const std::vector<int>& alpha) {
    long long total = 0;
    for (int a : alpha) total += a;
    if (!lambda.contains(mu) || lambda.weight() != mu.weight() + total) return TPoly();
    // frontier restricted to shapes inside lambda
    std::map<Partition, TPoly> frontier;
    frontier[mu] = TPoly(1);
    BrhBounds box{lambda.length(), lambda.first()};
    for (int a : alpha) {
        if (a < 0) throw std::invalid_argument("hecke character: negative content part");
        if (a == 0) continue;
        std::map<Partition, TPoly> next;
        for (auto& [shape, coef] : frontier)
            for (auto& [bigger, stats] : enumerate_brh_additions(shape, a, box)) {
                if (!lambda.contains(bigger)) continue;
                TPoly w = coef * brh_weight(stats);
                auto [it, fresh] = next.try_emplace(bigger, TPoly());
                it->second += w;
            }
        frontier = std::move(next);
    }
    auto it = frontier.find(lambda);
    return it == frontier.end() ? TPoly() : it->second;
}

TPoly hecke_character(const Partition& lambda, const std::vector<int>& alpha) {
    long long total = 0;
    for (int a : alpha) total += a;
    if (total != lambda.weight())
        throw std::invalid_argument("hecke_character: |alpha| != |lambda|");
    return skew_hecke_character(lambda, Partition(), alpha);
}

CharacterTable character_table(int m, bool parallel) {
    if (m < 0) throw std::invalid_argument("character_table: m must be >= 0");
    CharacterTable tab;
    tab.m = m;
    tab.labels = partitions_of(m);
    const int n = static_cast<int>(tab.labels.size());
    tab.values.assign(n, std::vector<TPoly>(n));
    // one frontier sweep per content column fills the whole column
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
    for (int c = 0; c < n; ++c) {
        auto col = hecke_character_column(Partition(), tab.labels[c].parts());
        for (int r = 0; r < n; ++r) {
            auto it = col.find(tab.labels[r]);
            if (it != col.end()) tab.values[r][c] = it->second;
        }
    }
    return tab;
}

}  // namespace cylhecke
