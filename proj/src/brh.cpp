#include "cylhecke/brh.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cylhecke/maya.hpp"

namespace cylhecke {

std::optional<BrhStats> brh_stats_of_skew(const Partition& lambda, const Partition& mu) {
    if (!lambda.contains(mu)) return std::nullopt;
    std::set<std::pair<int, int>> cells;
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = mu.part(i) + 1; j <= lambda.part(i); ++j) cells.insert({i, j});
    // no 2x2 block anywhere in the skew shape
    for (auto& [i, j] : cells)
        if (cells.count({i, j + 1}) && cells.count({i + 1, j}) && cells.count({i + 1, j + 1}))
            return std::nullopt;
    // edge-connected components; with no 2x2 present each one is a rim hook
    BrhStats stats;
    std::set<std::pair<int, int>> seen;
    for (auto& cell : cells) {
        if (seen.count(cell)) continue;
        std::vector<std::pair<int, int>> stack{cell}, comp;
        seen.insert(cell);
        while (!stack.empty()) {
            auto [i, j] = stack.back();
            stack.pop_back();
            comp.push_back({i, j});
            for (auto [di, dj] : {std::pair{1, 0}, {-1, 0}, {0, 1}, {0, -1}}) {
                std::pair<int, int> nb{i + di, j + dj};
                if (cells.count(nb) && !seen.count(nb)) {
                    seen.insert(nb);
                    stack.push_back(nb);
                }
            }
        }
        std::set<int> rows, cols;
        for (auto& [i, j] : comp) {
            rows.insert(i);
            cols.insert(j);
        }
        stats.hooks.push_back({static_cast<int>(rows.size()), static_cast<int>(cols.size())});
    }
    std::sort(stats.hooks.begin(), stats.hooks.end(),
              [](const BrhHook& a, const BrhHook& b) { return std::pair(a.rows, a.cols) < std::pair(b.rows, b.cols); });
    return stats;
}

namespace {

struct MoveContext {
    std::set<long long> ones;     // 1-positions of mu's Maya string in the window
    long long lo = 0, hi = 0;     // window [lo, hi]; below lo all ones, above hi all zeros
    long long charge = 0;
    std::optional<BrhBounds> bounds;
    std::vector<std::pair<Partition, BrhStats>>* out = nullptr;
};

Partition decode(const MoveContext& ctx, const std::set<long long>& ones) {
    std::vector<int> parts;
    long long j = 1;
    for (auto it = ones.rbegin(); it != ones.rend(); ++it, ++j)
        parts.push_back(static_cast<int>(*it - ctx.charge - 1 + j));
    // positions below lo stay filled, contributing zero parts only
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return Partition(std::move(parts));
}

// hooks chosen so far are disjoint increasing intervals [i, j); place the
// next hook starting strictly above `min_start`
void extend(MoveContext& ctx, std::set<long long>& ones, long long min_start, int remaining,
            std::vector<BrhHook>& hooks) {
    if (remaining == 0) {
        Partition lam = decode(ctx, ones);
        if (ctx.bounds && !lam.fits_in_box(ctx.bounds->max_rows, ctx.bounds->max_cols)) return;
        BrhStats st;
        st.hooks = hooks;
        std::sort(st.hooks.begin(), st.hooks.end(), [](const BrhHook& a, const BrhHook& b) {
            return std::pair(a.rows, a.cols) < std::pair(b.rows, b.cols);
        });
        ctx.out->push_back({std::move(lam), std::move(st)});
        return;
    }
    for (long long i = std::max(min_start, ctx.lo); i <= ctx.hi; ++i) {
        if (!ones.count(i)) continue;
        if (ctx.bounds && i < ctx.charge - ctx.bounds->max_rows + 1) continue;
        int between = 0;  // 1-letters strictly inside (i, j)
        for (long long j = i + 1; j <= i + remaining; ++j) {
            if (ones.count(j)) {
                ++between;
                continue;
            }
            if (ctx.bounds && j > ctx.charge + ctx.bounds->max_cols) break;
            // hook from i to j: length j - i, r(h) = between + 1
            int len = static_cast<int>(j - i);
            BrhHook h{between + 1, len - between};
            ones.erase(i);
            ones.insert(j);
            hooks.push_back(h);
            extend(ctx, ones, j + 1, remaining - len, hooks);
            hooks.pop_back();
            ones.erase(j);
            ones.insert(i);
        }
    }
}

std::vector<std::pair<Partition, BrhStats>> enumerate_moves(const Partition& mu, int r,
                                                            std::optional<BrhBounds> bounds) {
    std::vector<std::pair<Partition, BrhStats>> out;
    if (r == 0) {
        out.push_back({mu, BrhStats{}});
        return out;
    }
    MoveContext ctx;
    ctx.charge = 0;
    MayaDiagram m(mu, ctx.charge);
    ctx.lo = m.n_minus() - r;  // deep enough that no hook can start below
    ctx.hi = m.n_plus() + r;
    ctx.bounds = bounds;
    ctx.out = &out;
    for (long long i = ctx.lo; i <= ctx.hi; ++i)
        if (m.bit(i)) ctx.ones.insert(i);
    std::set<long long> ones = ctx.ones;
    std::vector<BrhHook> hooks;
    extend(ctx, ones, ctx.lo, r, hooks);
    std::sort(out.begin(), out.end(),
              [](auto& a, auto& b) { return a.first < b.first; });
    return out;
}

}  // namespace

std::vector<std::pair<Partition, BrhStats>> enumerate_brh_additions(
    const Partition& mu, int r, std::optional<BrhBounds> bounds) {
    return enumerate_moves(mu, r, bounds);
}

std::vector<std::pair<Partition, BrhStats>> enumerate_brh_removals(const Partition& mu, int r) {
    // removing a BRH from mu = adding one to some lambda below it; enumerate
    // lambda directly by validating mu/lambda over all lambda <= mu of the
    // right weight. Weight r keeps this a small search: walk candidates via
    // the Maya moves in reverse (0 -> 1 swaps), reusing the forward engine
    // on the complement would obscure the stats, so validate geometrically.
    std::vector<std::pair<Partition, BrhStats>> out;
    long long target = mu.weight() - r;
    if (target < 0) return out;
    if (r == 0) {
        out.push_back({mu, BrhStats{}});
        return out;
    }
    for (auto& lam : partitions_of_in_box(static_cast<int>(target), mu.length(), mu.first())) {
        if (!mu.contains(lam)) continue;
        if (auto st = brh_stats_of_skew(mu, lam)) out.push_back({lam, std::move(*st)});
    }
    return out;
}

}  // namespace cylhecke
