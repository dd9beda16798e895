#pragma once

#include <map>
#include <string>
#include <vector>

#include "cylhecke/partition.hpp"
#include "cylhecke/qseries.hpp"

namespace cylhecke {

// Element of the small quantum cohomology of Gr_k(C^n) in the Schubert
// basis: partition in P+_{k,n} -> polynomial in q.
struct QClass {
    int k = 0, n = 0;
    std::map<Partition, QSeries> coef;

    void add(const Partition& p, const QSeries& c) {
        auto [it, fresh] = coef.try_emplace(p, QSeries(c.cap()));
        it->second += c;
        if (it->second.is_zero()) coef.erase(it);
    }
    bool operator==(const QClass& o) const { return k == o.k && n == o.n && coef == o.coef; }
};

// Rim hook projection of the Schur class s_lambda: zero when the partition
// has more than k rows or its n-core leaves the box, otherwise
// (-1)^{(k-1)d} q^d sgn(lambda) s_core.
QClass rim_hook_project(const Partition& lambda, int k, int n, int q_cap);

// Quantum product of two Schubert classes: classical LR expansion followed
// by the rim hook projection.
QClass quantum_product(const Partition& mu, const Partition& nu, int k, int n);

// 3-point genus-0 Gromov-Witten invariant C^{lambda,d}_{mu nu}.
long long gw_invariant(const Partition& lambda, int d, const Partition& mu, const Partition& nu,
                       int k, int n);

struct GwEntry {
    Partition lambda, mu, nu;
    int d = 0;
    long long value = 0;
};

// All nonzero C^{lambda,d}_{mu nu} with d <= dmax over P+_{k,n}^3.
std::vector<GwEntry> gw_table(int k, int n, int dmax);

// Associativity of the induced product, checked on all basis triples.
bool quantum_product_associative(int k, int n);

struct TheoremReport {
    bool pass = true;
    long long checked = 0;
    std::string witness;  // first failing (alpha, beta)
};

// Coproduct expansion of the cylindric character chi^{lambda[d]}: for every
// alpha of weight m1 and beta of weight m2 (m1 + m2 = |lambda| + dn) the
// concatenated value must equal the double sum of Gromov-Witten invariants
// against the factor characters. Exact TPoly identities.
TheoremReport verify_theorem_main(const Partition& lambda, int d, int k, int n, int m1, int m2);

}  // namespace cylhecke
