#pragma once

#include <map>

#include "cylhecke/maya.hpp"
#include "cylhecke/partition.hpp"
#include "cylhecke/six_vertex.hpp"
#include "cylhecke/tpoly.hpp"

namespace cylhecke {

// Truncated element of the charge-c fermionic Fock space: a finite TPoly
// combination of Maya basis states sigma(lambda, c), restricted to
// partitions of weight <= cap. Operators silently drop terms above the cap.
struct FockVector {
    long long charge = 0;
    int cap = 0;
    std::map<Partition, TPoly> terms;

    static FockVector unit(const Partition& lambda, long long charge, int cap) {
        FockVector v;
        v.charge = charge;
        v.cap = cap;
        if (lambda.weight() <= cap) v.terms.emplace(lambda, TPoly(1));
        return v;
    }
    void add(const Partition& lambda, const TPoly& c) {
        if (c.is_zero() || lambda.weight() > cap) return;
        auto [it, fresh] = terms.try_emplace(lambda, TPoly());
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
    TPoly coefficient(const Partition& lambda) const {
        auto it = terms.find(lambda);
        return it == terms.end() ? TPoly() : it->second;
    }
    bool operator==(const FockVector& o) const {
        return charge == o.charge && terms == o.terms;
    }
};

enum class HalfVertex { Normal, Inverse };

// Coefficient A_r(t) (or its inverse-variant) of the half-vertex operator:
// broken rim hook additions of total length r with weights
//   Normal:  (t-1)^{#b} prod_h (-1)^{r(h)-1} t^{c(h)-1}
//   Inverse: (1-t)^{#b} prod_h (-1)^{r(h)-1} t^{r(h)-1}
FockVector fermionic_a_apply(const FockVector& v, int r, HalfVertex variant);

// Same operator assembled directly from the deformed fermion bilinears
// E_{ij}(t) = (1-t) psi^-_i(t) psi^+_j(t) over interleaved index tuples
// i1<j1<...<is<js; a slow reference used to cross-check the sign
// conventions of the BRH route for small r.
FockVector fermionic_a_direct(const FockVector& v, int r);

// Rim hook projection onto the finite wedge space: sigma(lambda, k) maps to
// q^{d} (-1)^{(k-1)d} sgn(w_lambda) v_{core} when the core fits the box and
// l(lambda) <= k, else 0. The charge of v must equal k.
StateVector fermionic_projection(const FockVector& v, int k, int n, int q_cap);

// Matrix element of the infinite-row transfer operator with the given
// weights between two Maya states, evaluated over the finite window outside
// which every vertex has weight 1. The row configuration between two fixed
// strings is unique; returns the product of vertex weights (or 0).
template <class R>
R infinite_row_element(const MayaDiagram& bottom, const MayaDiagram& top,
                       const SixVertexWeights<R>& w, long long lo, long long hi) {
    int h = 0;  // both outer horizontal edges carry 0
    R weight(1);
    for (long long pos = lo; pos <= hi; ++pos) {
        int N = top.bit(pos) ? 1 : 0;
        int S = bottom.bit(pos) ? 1 : 0;
        if (h == 0 && N == 0) {
            if (S != 0) return R(0);
            weight = weight * w[0];
        } else if (h == 0 && N == 1) {
            if (S == 1) {
                weight = weight * w[2];
            } else {
                weight = weight * w[5];
                h = 1;
            }
        } else if (h == 1 && N == 0) {
            if (S == 0) {
                weight = weight * w[3];
            } else {
                weight = weight * w[4];
                h = 0;
            }
        } else {
            if (S != 1) return R(0);
            weight = weight * w[1];
        }
    }
    return h == 0 ? weight : R(0);
}

}  // namespace cylhecke
