#include "cylhecke/classical.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "cylhecke/brh.hpp"

namespace cylhecke {

namespace {

long long mn_recurse(const Partition& lambda, std::vector<int> alpha,
                     std::map<std::pair<Partition, std::vector<int>>, long long>& memo) {
    if (alpha.empty()) return lambda.empty() ? 1 : 0;
    auto key = std::make_pair(lambda, alpha);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    int m = alpha.back();
    alpha.pop_back();
    long long v = 0;
    for (auto& [mu, st] : enumerate_brh_removals(lambda, m)) {
        if (st.num_components() != 1) continue;  // unbroken hooks only
        int sign = st.hooks[0].rows % 2 == 1 ? 1 : -1;
        v += sign * mn_recurse(mu, alpha, memo);
    }
    memo[key] = v;
    return v;
}

}  // namespace

long long classical_character(const Partition& lambda, const std::vector<int>& alpha) {
    long long total = 0;
    for (int a : alpha) {
        if (a < 0) throw std::invalid_argument("classical_character: negative content part");
        total += a;
    }
    if (total != lambda.weight())
        throw std::invalid_argument("classical_character: |alpha| != |lambda|");
    std::vector<int> content;
    for (int a : alpha)
        if (a > 0) content.push_back(a);
    std::map<std::pair<Partition, std::vector<int>>, long long> memo;
    return mn_recurse(lambda, content, memo);
}

long long hook_length_dimension(const Partition& lambda) {
    long long m = lambda.weight();
    if (m == 0) return 1;
    Partition conj = lambda.conjugate();
    // f^lambda = m! / prod hooks, computed with overflow-free interleaving
    std::vector<long long> hooks;
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda.part(i); ++j)
            hooks.push_back(lambda.part(i) - j + conj.part(j) - i + 1);
    __int128 num = 1;
    size_t hi = 0;
    for (long long f = 1; f <= m; ++f) {
        num *= f;
        while (hi < hooks.size() && num % hooks[hi] == 0) num /= hooks[hi++];
    }
    while (hi < hooks.size()) {
        if (num % hooks[hi] != 0) throw std::logic_error("hook_length_dimension: inexact");
        num /= hooks[hi++];
    }
    return static_cast<long long>(num);
}

namespace {

// DFS fill of lambda/mu with content nu, rows weakly increasing, columns
// strictly increasing, reverse reading word a lattice word.
struct LrCounter {
    const Partition* lambda;
    const Partition* mu;
    std::vector<int> remaining;          // how many of each value may still be placed
    std::vector<int> placed;             // how many of each value placed so far
    std::vector<std::vector<int>> fill;  // fill[i][j], 0-based, 0 = empty
    long long count = 0;

    // cells visited in reverse reading order: row by row, right to left
    void run(int i, int j) {
        int rows = lambda->length();
        if (i == rows) {
            ++count;
            return;
        }
        if (j < mu->part(i + 1)) {  // row exhausted, move on
            run(i + 1, i + 1 < rows ? lambda->part(i + 2) - 1 : 0);
            return;
        }
        for (int v = 1; v <= static_cast<int>(remaining.size()); ++v) {
            if (remaining[v - 1] == 0) continue;
            // lattice condition on the reverse reading word (right-to-left, top-to-bottom)
            if (v > 1 && placed[v - 1] + 1 > placed[v - 2]) continue;
            // weakly increasing along the row (cells to the right already filled)
            if (j + 1 <= lambda->part(i + 1) - 1 && fill[i][j + 1] != 0 && v > fill[i][j + 1]) continue;
            // strictly increasing down the column
            if (i > 0 && j < lambda->part(i) && j >= mu->part(i) && fill[i - 1][j] >= v) continue;
            fill[i][j] = v;
            remaining[v - 1]--;
            placed[v - 1]++;
            run(i, j - 1);
            fill[i][j] = 0;
            remaining[v - 1]++;
            placed[v - 1]--;
        }
    }
};

}  // namespace

long long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (lambda.weight() != mu.weight() + nu.weight()) return 0;
    if (!lambda.contains(mu)) return 0;
    if (nu.empty()) return 1;
    LrCounter c;
    c.lambda = &lambda;
    c.mu = &mu;
    c.remaining.assign(nu.length(), 0);
    c.placed.assign(nu.length(), 0);
    for (int i = 1; i <= nu.length(); ++i) c.remaining[i - 1] = nu.part(i);
    c.fill.assign(lambda.length(), {});
    for (int i = 0; i < lambda.length(); ++i) c.fill[i].assign(lambda.part(i + 1), 0);
    c.run(0, lambda.first() - 1);
    return c.count;
}

}  // namespace cylhecke
