#pragma once

#include <string>
#include <vector>

#include "cylhecke/cylshape.hpp"
#include "cylhecke/partition.hpp"
#include "cylhecke/tpoly.hpp"

namespace cylhecke {

// Cylindric skew Hecke character chi_t^{lambda/d/mu}(alpha) on the (k, n)
// cylinder, by the cylindric Murnaghan-Nakayama recursion: content consumed
// right to left; parts above n reduce with sign (-1)^{k-1}, a part equal to
// n contributes the scalar (-1)^k (1 + t + ... + t^{n-k-1}).
// Zero when the weight rule |lambda| + dn = |mu| + |alpha| fails.
TPoly cyl_char_mn(const Partition& lambda, int d, const Partition& mu,
                  const std::vector<int>& alpha, int k, int n);

// Same character through the rim-hook expansion into irreducible Hecke
// characters (mu = empty only): signed sum over partitions with n-core
// lambda and n-weight d.
TPoly cyl_char_virtual(const Partition& lambda, int d, const std::vector<int>& alpha, int k,
                       int n);

// Same character as the q^d coefficient of the normalized transfer matrix
// element on V_{n-k} between conjugate labels, divided by (t-1)^{l(alpha)}
// (the division must be exact; anything else is a hard failure).
TPoly cyl_char_transfer(const Partition& lambda, int d, const Partition& mu,
                        const std::vector<int>& alpha, int k, int n);

// t = 1 degeneration: the unbroken-hook integer recursion (independent of
// the TPoly evaluators).
long long cyl_char_classical(const Partition& lambda, int d, const Partition& mu,
                             const std::vector<int>& alpha, int k, int n);

struct CharSchurReport {
    bool pass = true;
    std::string first_difference;
};

// Coefficientwise comparison of the character-side monomial expansion of
// the cylinder partition function against the cylindric Schur function
// evaluated on the (t-1)X alphabet, up to total degree `max_degree` in
// `nvars` variables.
CharSchurReport verify_char_to_schur(const Partition& lambda, int k, int n, int nvars,
                                     int max_degree);

}  // namespace cylhecke
