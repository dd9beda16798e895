#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cylhecke/brh.hpp"
#include "cylhecke/partition.hpp"
#include "cylhecke/symfunc.hpp"

namespace cylhecke {

// Cylindric loop lambda[d] on the (k, n) cylinder: the quasi-periodic column
// bound lambda[d]_{i+k} = lambda[d]_i - (n-k) with lambda[d]_{d+j} =
// lambda_j + d for 1 <= j <= k.
struct CylindricLoop {
    Partition base;
    int shift = 0;
    int k = 0, n = 0;

    long long col(long long i) const {
        // write i - shift = j + m k with j in [1, k]
        long long x = i - shift;
        long long m = (x - 1 >= 0) ? (x - 1) / k : -((k - x) / k);
        long long j = x - m * k;
        return base.part(static_cast<int>(j)) + shift - m * (n - k);
    }
};

// true when mu[0] <= lambda[d] columnwise (the skew shape exists)
bool cyl_shape_valid(const Partition& lambda, int d, const Partition& mu, int k, int n);

// Statistics of a cylindric broken rim hook lambda/d/mu: distinct hooks up
// to the (k, -(n-k)) shift, where rows are counted as residues in the
// fundamental window 1..k and columns as those met by cells in that window.
struct CylBrhStats {
    std::vector<BrhHook> hooks;
    int num_components() const { return static_cast<int>(hooks.size()); }
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
    bool operator==(const CylBrhStats&) const = default;
};

// Geometric decomposition of lambda/d/mu; nullopt when the shape is not a
// valid cylindric broken rim hook (2x2 block, or a hook winding the full
// cylinder).
std::optional<CylBrhStats> cyl_brh_stats(const Partition& lambda, int d, const Partition& mu,
                                         int k, int n);

// All lambda in P+_{k,n} with lambda/d/mu a cylindric broken rim hook of
// length r (0 <= r < n; d = 0 or 1), with stats.
std::vector<std::pair<Partition, CylBrhStats>> enumerate_cylindric_brh(const Partition& mu, int r,
                                                                       int d, int k, int n);

// Cylindric skew Schur polynomial s_{lambda/d/mu}(y_1..y_nvars): weighted
// count of cylindric tableaux over the fundamental domain. Throws on an
// invalid shape.
MonomialExpansion cyl_schur_tableaux(const Partition& lambda, int d, const Partition& mu, int k,
                                     int n, int nvars);

// Terms of the skew-Schur expansion of s_{lambda/d/mu}: partitions nu of
// n-weight d, n-core lambda, nu_1 <= n-k, with sign eps(nu'/lambda').
std::vector<std::pair<Partition, int>> mcnamara_terms(const Partition& lambda, int d, int k,
                                                      int n);

}  // namespace cylhecke
