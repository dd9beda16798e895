#include "cylhecke/cylshape.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "cylhecke/abacus.hpp"

namespace cylhecke {

bool cyl_shape_valid(const Partition& lambda, int d, const Partition& mu, int k, int n) {
    CylindricLoop lam{lambda, d, k, n}, mu0{mu, 0, k, n};
    for (int i = 1; i <= k; ++i)
        if (mu0.col(i) > lam.col(i)) return false;
    return true;
}

namespace {

using Cell = std::pair<long long, long long>;

// materialized cells of lambda/d/mu for rows in [row_lo, row_hi]
std::set<Cell> cyl_cells(const Partition& lambda, int d, const Partition& mu, int k, int n,
                         long long row_lo, long long row_hi) {
    CylindricLoop lam{lambda, d, k, n}, mu0{mu, 0, k, n};
    std::set<Cell> cells;
    for (long long i = row_lo; i <= row_hi; ++i)
        for (long long j = mu0.col(i) + 1; j <= lam.col(i); ++j) cells.insert({i, j});
    return cells;
}

}  // namespace

std::optional<CylBrhStats> cyl_brh_stats(const Partition& lambda, int d, const Partition& mu,
                                         int k, int n) {
    if (!cyl_shape_valid(lambda, d, mu, k, n)) return std::nullopt;
    const long long row_lo = 1 - 2 * n, row_hi = k + 2 * n;
    auto cells = cyl_cells(lambda, d, mu, k, n, row_lo, row_hi);
    // no 2x2 block anywhere in the lift
    for (auto& [i, j] : cells)
        if (cells.count({i, j + 1}) && cells.count({i + 1, j}) && cells.count({i + 1, j + 1}))
            return std::nullopt;
    // canonical representative of a cell's orbit: row shifted into [1, k]
    auto canon = [&](const Cell& c) -> Cell {
        long long i = c.first, j = c.second;
        long long m = (i - 1 >= 0) ? (i - 1) / k : -((k - i) / k);
        return {i - m * k, j + m * (n - k)};
    };
    // fundamental domain cells
    std::set<Cell> fund;
    for (auto& c : cells)
        if (c.first >= 1 && c.first <= k) fund.insert(c);
    // connected components of the quotient graph: adjacency wraps through canon
    CylBrhStats stats;
    std::set<Cell> seen;
    for (auto& start_cell : fund) {
        if (seen.count(start_cell)) continue;
        std::vector<Cell> stack{start_cell};
        std::set<Cell> hook;  // fundamental cells of this cylindric hook
        seen.insert(start_cell);
        hook.insert(start_cell);
        while (!stack.empty()) {
            auto [i, j] = stack.back();
            stack.pop_back();
            for (auto [di, dj] : {std::pair{1, 0}, {-1, 0}, {0, 1}, {0, -1}}) {
                Cell nb = canon({i + di, j + dj});
                if (fund.count(nb) && !seen.count(nb)) {
                    seen.insert(nb);
                    hook.insert(nb);
                    stack.push_back(nb);
                }
            }
        }
        // reconstruct one connected plane lift of the hook
        std::set<Cell> lift{*hook.begin()};
        std::vector<Cell> lstack{*hook.begin()};
        while (!lstack.empty()) {
            auto [i, j] = lstack.back();
            lstack.pop_back();
            for (auto [di, dj] : {std::pair{1, 0}, {-1, 0}, {0, 1}, {0, -1}}) {
                Cell nb{i + di, j + dj};
                if (cells.count(nb) && hook.count(canon(nb)) && !lift.count(nb)) {
                    lift.insert(nb);
                    lstack.push_back(nb);
                }
            }
        }
        // a lift larger than the orbit count joins two copies: the hook
        // winds around the whole cylinder (length >= n), which is excluded
        if (lift.size() != hook.size()) return std::nullopt;
        std::set<long long> rows, cols;
        for (auto& [i, j] : hook) rows.insert(i);  // canonical rows = window residues
        for (auto& [i, j] : lift) cols.insert(j);
        stats.hooks.push_back({static_cast<int>(rows.size()), static_cast<int>(cols.size())});
    }
    std::sort(stats.hooks.begin(), stats.hooks.end(), [](const BrhHook& a, const BrhHook& b) {
        return std::pair(a.rows, a.cols) < std::pair(b.rows, b.cols);
    });
    return stats;
}

std::vector<std::pair<Partition, CylBrhStats>> enumerate_cylindric_brh(const Partition& mu, int r,
                                                                       int d, int k, int n) {
    if (r < 0 || r >= n) throw std::invalid_argument("enumerate_cylindric_brh: need 0 <= r < n");
    if (!mu.fits_in_box(k, n - k))
        throw std::invalid_argument("enumerate_cylindric_brh: mu outside the box");
    std::vector<std::pair<Partition, CylBrhStats>> out;
    if (d == 0) {
        for (auto& [lam, st] : enumerate_brh_additions(mu, r, BrhBounds{k, n - k})) {
            CylBrhStats cst;
            cst.hooks = st.hooks;
            out.push_back({lam, std::move(cst)});
        }
        return out;
    }
    if (d != 1) throw std::invalid_argument("enumerate_cylindric_brh: d must be 0 or 1");
    long long target = mu.weight() + r - n;
    if (target < 0) return out;
    for (auto& lam : partitions_of_in_box(static_cast<int>(target), k, n - k)) {
        auto st = cyl_brh_stats(lam, 1, mu, k, n);
        if (!st) continue;
        int len = 0;
        for (auto& h : st->hooks) len += h.length();
        if (len != r) continue;  // pure-shift shapes of the wrong span
        out.push_back({lam, std::move(*st)});
    }
    return out;
}

MonomialExpansion cyl_schur_tableaux(const Partition& lambda, int d, const Partition& mu, int k,
                                     int n, int nvars) {
    if (!cyl_shape_valid(lambda, d, mu, k, n))
        throw std::invalid_argument("cyl_schur_tableaux: invalid cylindric shape");
    CylindricLoop lam{lambda, d, k, n}, mu0{mu, 0, k, n};
    // fundamental domain cells in row-major order
    std::vector<Cell> order;
    std::map<Cell, int> pos;
    for (long long i = 1; i <= k; ++i)
        for (long long j = mu0.col(i) + 1; j <= lam.col(i); ++j) {
            pos[{i, j}] = static_cast<int>(order.size());
            order.push_back({i, j});
        }
    auto in_domain = [&](const Cell& c) { return pos.count(c) > 0; };
    // each constraint is checked when its later (row-major) endpoint is
    // placed; Rel says how the later cell's value compares to the earlier one
    enum class Rel { Geq, Greater, Less };
    struct Constraint {
        int earlier;
        Rel rel;
    };
    std::vector<std::vector<Constraint>> checks(order.size());
    auto add_pair = [&](const Cell& earlier, const Cell& later, Rel rel) {
        checks[pos.at(later)].push_back({pos.at(earlier), rel});
    };
    for (auto& [i, j] : order) {
        if (in_domain({i, j - 1})) add_pair({i, j - 1}, {i, j}, Rel::Geq);
        if (i >= 2 && in_domain({i - 1, j})) add_pair({i - 1, j}, {i, j}, Rel::Greater);
    }
    // wrap constraint between row k and the shifted copy of row 1:
    // value(1, j+n-k) > value(k, j) whenever both cells exist
    for (long long j = mu0.col(k + 1) + 1; j <= lam.col(k + 1); ++j) {
        Cell copy{1, j + (n - k)}, above{static_cast<long long>(k), j};
        if (!in_domain(copy) || !in_domain(above)) continue;
        if (k == 1)
            add_pair(above, copy, Rel::Greater);  // copy sits later in the same row
        else
            add_pair(copy, above, Rel::Less);  // row-k cell is placed later
    }
    MonomialExpansion out(nvars);
    std::vector<int> values(order.size(), 0);
    std::vector<int> content(nvars, 0);
    std::function<void(size_t)> fill = [&](size_t idx) {
        if (idx == order.size()) {
            out.add_term(content, TPoly(1));
            return;
        }
        for (int v = 1; v <= nvars; ++v) {
            bool ok = true;
            for (auto& c : checks[idx]) {
                int other = values[c.earlier];
                if (c.rel == Rel::Geq && v < other) ok = false;
                if (c.rel == Rel::Greater && v <= other) ok = false;
                if (c.rel == Rel::Less && v >= other) ok = false;
                if (!ok) break;
            }
            if (!ok) continue;
            values[idx] = v;
            content[v - 1]++;
            fill(idx + 1);
            content[v - 1]--;
        }
        values[idx] = 0;
    };
    fill(0);
    return out;
}

std::vector<std::pair<Partition, int>> mcnamara_terms(const Partition& lambda, int d, int k,
                                                      int n) {
    std::vector<std::pair<Partition, int>> out;
    long long w = lambda.weight() + static_cast<long long>(d) * n;
    for (auto& nu : partitions_of_in_box(static_cast<int>(w), static_cast<int>(w), n - k)) {
        auto cd = core_decompose(nu, n);
        if (cd.core != lambda || cd.n_weight != d) continue;
        int sign = core_decompose(nu.conjugate(), n).sign;
        if (((n - k - 1) * d) % 2 != 0) sign = -sign;
        out.push_back({nu, sign});
    }
    return out;
}

}  // namespace cylhecke
