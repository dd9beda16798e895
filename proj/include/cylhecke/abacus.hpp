#pragma once

#include <vector>

#include "cylhecke/partition.hpp"

namespace cylhecke {

// Result of stripping a maximal number of n-rim-hooks from a partition.
struct CoreDecomposition {
    Partition core;          // the unique n-core
    int n_weight = 0;        // number of removed n-rim-hooks (d)
    std::vector<int> removal_rows;  // r(h_i) for each removed hook, in removal order
    int sign = 1;            // (-1)^{sum (r(h_i)-1)}
};

enum class RemovalOrder { TopDown, BottomUp };

// Abacus / beta-number n-core decomposition. The removal order is
// irrelevant for the result (tested); both orders are provided so the
// invariance can be exercised.
CoreDecomposition core_decompose(const Partition& lambda, int n,
                                 RemovalOrder order = RemovalOrder::TopDown);

// Sign of the bead permutation w_lambda from the natural numbering of the
// abacus: beads are numbered row by row starting from the lowest row with a
// gap, dropped down their runners, and the resulting relabelling of the
// core's natural numbering is w_lambda. Independent route to the same sign
// as CoreDecomposition::sign.
int natural_numbering_sign(const Partition& lambda, int n);

}  // namespace cylhecke
