#pragma once

#include <optional>
#include <set>
#include <vector>

#include "cylhecke/partition.hpp"

namespace cylhecke {

// Maya diagram: infinite binary string with sigma_i = 1 for i << 0 and
// sigma_i = 0 for i >> 0, stored canonically as (charge, partition).
// The 1-letters sit exactly at positions c + 1 + lambda_j - j, j >= 1.
class MayaDiagram {
public:
    MayaDiagram(Partition lambda, long long charge)
        : lambda_(std::move(lambda)), charge_(charge) {}

    const Partition& partition() const { return lambda_; }
    long long charge() const { return charge_; }

    // below n_minus the string is all ones; from n_plus on it is all zeros
    long long n_minus() const { return charge_ - lambda_.length(); }
    long long n_plus() const { return charge_ + 1 + lambda_.first(); }

    bool bit(long long i) const {
        if (i <= n_minus()) return true;
        if (i >= n_plus()) return false;
        // 1 iff i = c + 1 + lambda_j - j for some j <= length
        for (int j = 1; j <= lambda_.length(); ++j)
            if (i == charge_ + 1 + lambda_.part(j) - j) return true;
        return false;
    }

    // positions of 1-letters at or above n_minus + 1 - extra, descending
    std::vector<long long> one_positions(int extra = 0) const {
        std::vector<long long> pos;
        for (int j = 1; j <= lambda_.length(); ++j) pos.push_back(charge_ + 1 + lambda_.part(j) - j);
        for (int j = lambda_.length() + 1; j <= lambda_.length() + extra; ++j)
            pos.push_back(charge_ + 1 - j);
        return pos;
    }

    bool operator==(const MayaDiagram& o) const {
        return lambda_ == o.lambda_ && charge_ == o.charge_;
    }

private:
    Partition lambda_;
    long long charge_;
};

inline MayaDiagram maya_from_partition(const Partition& lambda, long long charge) {
    return MayaDiagram(lambda, charge);
}

// Rebuild (partition, charge) from an explicit window of bits.
// The window [lo, hi] must contain the transition region: bits below lo are
// taken to be 1 and bits above hi to be 0; the encoding is rejected if the
// window itself contradicts that (leading 0 at lo-boundary handled fine, but
// a window is malformed when bit counts disagree between the two charge
// formulas, which cannot happen for a genuine Maya string).
std::optional<MayaDiagram> partition_from_maya_window(const std::vector<int>& bits, long long lo);

// Both expressions of the charge formula evaluated on the decoded string:
//   c = n_minus + #{i > n_minus : sigma_i = 1}
//   c = n_plus  - #{i <= n_plus : sigma_i = 0}
long long charge_formula_a(const MayaDiagram& m);
long long charge_formula_b(const MayaDiagram& m);

// Partition encoded by a finite set of 1-positions inside the window
// [1, n] with all positions below the window full (finite Maya string of
// charge k = |ones|): lambda_j = i_{k+1-j} - (k+1-j).
Partition partition_from_window_ones(const std::vector<int>& ones);
// Inverse: positions of the k 1-letters of lambda in [1, n], ascending.
std::vector<int> window_ones_from_partition(const Partition& lambda, int k);

}  // namespace cylhecke
