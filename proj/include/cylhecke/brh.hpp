#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cylhecke/partition.hpp"

namespace cylhecke {

// One connected rim hook inside a broken rim hook: the number of rows and
// columns it occupies. Its length is rows + cols - 1.
struct BrhHook {
    int rows = 0;
    int cols = 0;
    int length() const { return rows + cols - 1; }
    bool operator==(const BrhHook&) const = default;
};

// Statistics of a broken rim hook: the per-hook (r(h), c(h)) pairs.
struct BrhStats {
    std::vector<BrhHook> hooks;
    int num_components() const { return static_cast<int>(hooks.size()); }
    int total_length() const {
        int len = 0;
        for (auto& h : hooks) len += h.length();
        return len;
    }
    int rows_used() const {
        int r = 0;
        for (auto& h : hooks) r += h.rows;
        return r;
    }
    int cols_used() const {
        int c = 0;
        for (auto& h : hooks) c += h.cols;
        return c;
    }
    bool operator==(const BrhStats&) const = default;
};

// Geometric validation: decompose lambda/mu into edge-connected components
// and check the broken-rim-hook conditions (each component a rim hook, i.e.
// no 2x2 block anywhere; components meet in at most a corner). Returns the
// stats, hooks ordered top-left to bottom-right, or nullopt if invalid.
std::optional<BrhStats> brh_stats_of_skew(const Partition& lambda, const Partition& mu);

struct BrhBounds {
    int max_rows;
    int max_cols;
};

// All partitions lambda >= mu with lambda/mu a broken rim hook of length r,
// enumerated through the Maya encoding (disjoint 1->0 interval moves), with
// full statistics. r = 0 yields (mu, empty stats).
std::vector<std::pair<Partition, BrhStats>> enumerate_brh_additions(
    const Partition& mu, int r, std::optional<BrhBounds> bounds = std::nullopt);

// All partitions lambda <= mu with mu/lambda a broken rim hook of length r.
std::vector<std::pair<Partition, BrhStats>> enumerate_brh_removals(const Partition& mu, int r);

}  // namespace cylhecke
